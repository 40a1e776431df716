#include "triarea/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iterator>
#include <random>
#include <set>

namespace triarea {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::equal_area: return "equal_area";
    case CertKind::min_area: return "min_area";
    case CertKind::orthogonal_pairs: return "orthogonal_pairs";
  }
  return "?";
}

namespace {

Triple tri_sorted(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::string istr(long long v) { return std::to_string(v); }

template <class P>
bool all_distinct(std::vector<P> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

void verify_certificate(const GeneratedSet& gs) {
  if (!gs.certificate) return;
  const Certificate& cert = *gs.certificate;
  auto bad = [&](const std::string& m) { fail(Err::invariant_violated, "certificate: " + m); };

  bool lines_mode = !gs.lines.empty();
  int n = static_cast<int>(gs.size());
  if (lines_mode) {
    if (!all_distinct(gs.lines)) bad("line set contains duplicates");
  } else if (gs.dim == 2) {
    if (!all_distinct(gs.points2)) bad("point set contains duplicates");
  } else {
    if (!all_distinct(gs.points3)) bad("point set contains duplicates");
  }

  switch (cert.kind) {
    case CertKind::equal_area:
    case CertKind::min_area: {
      if (cert.triples.empty()) bad("no certified triples");
      if (!(cert.target_key > Rat(0))) bad("target key must be positive");
      for (const Triple& t : cert.triples) {
        if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < n))
          bad("triple indices out of order or range");
        Rat key;
        if (lines_mode) {
          auto p01 = intersect(gs.lines[t[0]], gs.lines[t[1]]);
          auto p02 = intersect(gs.lines[t[0]], gs.lines[t[2]]);
          auto p12 = intersect(gs.lines[t[1]], gs.lines[t[2]]);
          if (!p01 || !p02 || !p12) bad("certified line triple has a parallel pair");
          if (*p01 == *p02) bad("certified line triple is concurrent");
          key = area_key_2d(*p01, *p02, *p12);
        } else if (gs.dim == 2) {
          key = area_key_2d(gs.points2[t[0]], gs.points2[t[1]], gs.points2[t[2]]);
        } else {
          key = quad_sq_area_3d(gs.points3[t[0]], gs.points3[t[1]], gs.points3[t[2]]);
        }
        if (key != cert.target_key) bad("certified triple has the wrong area key");
      }
      std::vector<Triple> ts(cert.triples);
      std::sort(ts.begin(), ts.end());
      if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) bad("duplicate certified triple");
      break;
    }
    case CertKind::orthogonal_pairs: {
      if (gs.dim != 3 || lines_mode) bad("orthogonal pairs need a spatial point set");
      if (cert.pairs.empty()) bad("no certified pairs");
      if (!(0 <= cert.origin_index && cert.origin_index < n)) bad("origin index out of range");
      const Point3& o = gs.points3[cert.origin_index];
      for (const auto& pr : cert.pairs) {
        if (!(0 <= pr[0] && pr[0] < pr[1] && pr[1] < n)) bad("pair indices out of order or range");
        if (pr[0] == cert.origin_index || pr[1] == cert.origin_index)
          bad("certified pair touches the origin point");
        const Point3 &p = gs.points3[pr[0]], &q = gs.points3[pr[1]];
        if (!dot(p - o, q - o).is_zero()) bad("certified pair is not orthogonal");
        if (!cert.target_key.is_zero() && quad_sq_area_3d(o, p, q) != cert.target_key)
          bad("certified pair spans the wrong area key with the origin");
      }
      auto ps(cert.pairs);
      std::sort(ps.begin(), ps.end());
      if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) bad("duplicate certified pair");
      break;
    }
  }
}

GeneratedSet gen_grid(int w, int h) {
  if (static_cast<long long>(w) * h < 3) fail(Err::too_few_points, "grid needs at least 3 points");
  if (w < 2 || w > 64 || h < 2 || h > 64) fail(Err::bad_n, "grid sides must be in [2, 64]");
  GeneratedSet gs;
  gs.dim = 2;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) gs.points2.push_back({Rat(x), Rat(y)});
  Certificate cert;
  cert.kind = CertKind::min_area;
  cert.target_key = Rat(1);
  for (int y = 0; y + 1 < h; ++y) {
    for (int x = 0; x + 1 < w; ++x) {
      int p00 = y * w + x, p10 = p00 + 1, p01 = p00 + w, p11 = p01 + 1;
      cert.triples.push_back({p00, p10, p01});
      cert.triples.push_back({p00, p10, p11});
      cert.triples.push_back({p00, p01, p11});
      cert.triples.push_back({p10, p01, p11});
    }
  }
  cert.provenance = "gen_grid(w=" + istr(w) + ",h=" + istr(h) + ")";
  gs.certificate = std::move(cert);
  gs.params = {{"w", istr(w)}, {"h", istr(h)}};
  return gs;
}

GeneratedSet gen_erdos_purdy_lattice(int n) {
  if (n < 4) fail(Err::too_few_points, "lattice section needs at least 4 points");
  if (n > 4096) fail(Err::bad_n, "point count must be in [4, 4096]");
  int rows = std::max(1, static_cast<int>(std::ceil(std::sqrt(std::log2(static_cast<double>(n))))));
  int cols = (n + rows - 1) / rows;
  GeneratedSet gs;
  gs.dim = 2;
  for (int y = 0; y < rows && static_cast<int>(gs.points2.size()) < n; ++y)
    for (int x = 0; x < cols && static_cast<int>(gs.points2.size()) < n; ++x)
      gs.points2.push_back({Rat(x), Rat(y)});
  gs.params = {{"n", istr(n)}, {"rows", istr(rows)}, {"cols", istr(cols)}};
  return gs;
}

GeneratedSet gen_two_rows(int n, TwoRowsMode mode) {
  if (n < 4) fail(Err::too_few_points, "two-rows needs at least 4 points");
  if (n % 2 != 0) fail(Err::odd_n, "two-rows needs an even point count");
  if (n > 200) fail(Err::bad_n, "two-rows supports at most 200 points");
  int m = n / 2;
  GeneratedSet gs;
  gs.dim = 2;
  if (mode == TwoRowsMode::acute) {
    // Bottom row at integers, top row offset by 1/2 at height 7/8. Bases of
    // length 1 with the apex over the midpoint give the minimum area and an
    // acute triangle; all other minimum-area triangles are obtuse or right.
    Rat h(7, 8), half(1, 2);
    for (int i = 0; i < m; ++i) gs.points2.push_back({Rat(i), Rat(0)});
    for (int i = 0; i < m; ++i) gs.points2.push_back({Rat(i) + half, h});
    Certificate cert;
    cert.kind = CertKind::min_area;
    cert.target_key = h;
    for (int i = 0; i + 1 < m; ++i) cert.triples.push_back({i, i + 1, m + i});
    for (int i = 0; i + 1 < m; ++i) cert.triples.push_back(tri_sorted(i + 1, m + i, m + i + 1));
    cert.provenance = "gen_two_rows(n=" + istr(n) + ",mode=acute)";
    gs.certificate = std::move(cert);
    gs.params = {{"n", istr(n)}, {"mode", "acute"}};
  } else {
    // Aligned rows at height 1: the doubled areas are exactly the base
    // lengths 1..m-1, giving floor((n-1)/2) distinct values.
    for (int i = 0; i < m; ++i) gs.points2.push_back({Rat(i), Rat(0)});
    for (int i = 0; i < m; ++i) gs.points2.push_back({Rat(i), Rat(1)});
    gs.params = {{"n", istr(n)}, {"mode", "distinct"}};
  }
  return gs;
}

namespace {

// One admissible rotation pair: tan-half parameters (r, s) with
// 4*r*s*(r-s) = eps * K * (1+r^2)(1+s^2), so the triangle cut from the unit
// circle by angles 0, r, s has doubled area exactly K.
struct CurvePoint {
  Rat r, s;
  int eps;
};

const Rat& convex_target() {
  static const Rat K(24, 85);
  return K;
}

bool on_curve(const CurvePoint& cp) {
  const Rat& K = convex_target();
  Rat lhs = Rat(4) * cp.r * cp.s * (cp.r - cp.s);
  Rat rhs = Rat(cp.eps) * K * (Rat(1) + sq(cp.r)) * (Rat(1) + sq(cp.s));
  return lhs == rhs;
}

size_t rat_bits(const Rat& r) {
  return mpz_sizeinbase(r.num().get_mpz_t(), 2) + mpz_sizeinbase(r.den().get_mpz_t(), 2);
}

size_t curve_height(const CurvePoint& cp) { return rat_bits(cp.r) + rat_bits(cp.s); }

// Inscribed triangles with doubled area 24/85, as tan-half parameters
// (u, v, w) of their three arcs; the arcs sum to a full turn, so
// u (+) v (+) w = 0 under tangent addition. Found by scanning one arc over
// small rationals and solving 4uv(u+v) = K(1+u^2)(1+v^2) for the second,
// keeping the cases with a rational root.
std::vector<CurvePoint> curve_pool(size_t want) {
  struct ArcTriple {
    const char *u, *v, *w;
  };
  static const ArcTriple kArcs[] = {
      {"-4", "1/13", "3"},
      {"-6/7", "1/4", "1/2"},
      {"-5/3", "3/29", "4/3"},
      {"-13/16", "6/17", "5/14"},
      {"-116/5", "39/547", "61/7"},
      {"-212/189", "13/87", "219/263"},
      {"-298/321", "61/300", "111/182"},
      {"-122/65", "97/1006", "591/392"},
      {"-149/126", "303/2164", "754/843"},
  };

  std::set<std::pair<Rat, Rat>> seen;
  std::vector<CurvePoint> pool;
  for (const ArcTriple& at : kArcs) {
    Rat arcs[3] = {Rat::from_string(at.u), Rat::from_string(at.v), Rat::from_string(at.w)};
    int perms[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    for (auto [ix, iy] : perms) {
      const Rat &x = arcs[ix], &y = arcs[iy];
      if (x * y == Rat(1)) continue;
      Rat r = x;
      Rat s = (x + y) / (Rat(1) - x * y);
      for (int sign : {1, -1}) {
        CurvePoint cp{Rat(sign) * r, Rat(sign) * s, 0};
        Rat num = Rat(4) * cp.r * cp.s * (cp.r - cp.s);
        Rat den = (Rat(1) + sq(cp.r)) * (Rat(1) + sq(cp.s));
        cp.eps = num.sign() * den.sign();
        if (!on_curve(cp)) fail(Err::invariant_violated, "arc table entry off the area curve");
        if (seen.insert({cp.r, cp.s}).second) pool.push_back(cp);
      }
    }
  }

  std::sort(pool.begin(), pool.end(), [](const CurvePoint& a, const CurvePoint& b) {
    size_t ha = curve_height(a), hb = curve_height(b);
    if (ha != hb) return ha < hb;
    if (a.r != b.r) return a.r < b.r;
    return a.s < b.s;
  });
  if (pool.size() > want) pool.resize(want);
  return pool;
}

Point2 circle_point(const Rat& t) {
  Rat d = Rat(1) + sq(t);
  return {(Rat(1) - sq(t)) / d, Rat(2) * t / d};
}

Point2 rotate_exact(const Rat& t, const Point2& p) {
  Rat d = Rat(1) + sq(t);
  Rat c = (Rat(1) - sq(t)) / d, s = Rat(2) * t / d;
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace

GeneratedSet gen_convex_unit(int i, std::uint64_t seed) {
  if (i < 1 || i > 8) fail(Err::bad_n, "round count must be in [1, 8]");
  const Rat& K = convex_target();
  std::vector<CurvePoint> pool = curve_pool(128);
  if (pool.size() < static_cast<size_t>(i))
    fail(Err::construction_failed, "rotation pool too small");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<char> used(pool.size(), 0);

  std::vector<Point2> pts;
  std::vector<Triple> triples;

  // Round 1: three points on the circle from one curve point.
  {
    size_t start = rng() % pool.size();
    const CurvePoint& cp = pool[start];
    used[start] = 1;
    pts = {circle_point(Rat(0)), circle_point(cp.r), circle_point(cp.s)};
    if (!all_distinct(pts)) fail(Err::construction_failed, "seed triangle degenerate");
    if (area_key_2d(pts[0], pts[1], pts[2]) != K)
      fail(Err::invariant_violated, "seed triangle misses the target area");
    triples = {{0, 1, 2}};
  }

  for (int round = 2; round <= i; ++round) {
    size_t start = rng() % pool.size();
    bool ok = false;
    for (size_t t = 0; t < pool.size() && !ok; ++t) {
      size_t ci = (start + t) % pool.size();
      if (used[ci]) continue;
      const CurvePoint& cp = pool[ci];
      int n = static_cast<int>(pts.size());
      std::vector<Point2> next;
      next.reserve(3 * pts.size());
      next.insert(next.end(), pts.begin(), pts.end());
      for (const Point2& p : pts) next.push_back(rotate_exact(cp.r, p));
      for (const Point2& p : pts) next.push_back(rotate_exact(cp.s, p));
      if (!all_distinct(next)) continue;

      std::vector<Triple> nt;
      nt.reserve(3 * triples.size() + pts.size());
      for (const Triple& tr : triples) {
        nt.push_back(tr);
        nt.push_back({tr[0] + n, tr[1] + n, tr[2] + n});
        nt.push_back({tr[0] + 2 * n, tr[1] + 2 * n, tr[2] + 2 * n});
      }
      for (int a = 0; a < n; ++a) nt.push_back({a, a + n, a + 2 * n});
      pts = std::move(next);
      triples = std::move(nt);
      used[ci] = 1;
      ok = true;
    }
    if (!ok)
      fail(Err::construction_failed,
           "no collision-free rotation pair at round " + istr(round) + " (seed " + istr(seed) + ")");
  }

  for (const Triple& t : triples)
    if (area_key_2d(pts[t[0]], pts[t[1]], pts[t[2]]) != K)
      fail(Err::invariant_violated, "rotated triangle left the area class");
  if (!convex_position_check(pts))
    fail(Err::invariant_violated, "circle points not in convex position");

  GeneratedSet gs;
  gs.dim = 2;
  gs.points2 = std::move(pts);
  Certificate cert;
  cert.kind = CertKind::equal_area;
  cert.target_key = K;
  cert.triples = std::move(triples);
  cert.provenance = "gen_convex_unit(i=" + istr(i) + ",seed=" + istr(seed) + ")";
  gs.certificate = std::move(cert);
  gs.params = {{"i", istr(i)}, {"seed", istr(seed)}};
  return gs;
}

namespace {

Point2 unit_from_param(const Rat& b) {
  Rat d = Rat(1) + sq(b);
  return {(Rat(1) - sq(b)) / d, Rat(2) * b / d};
}

// Primitive integer direction with positive first nonzero entry; antipodal
// directions collapse together, so equal keys mean collinear with the anchor.
Point2 folded_direction(const Vec2& v) {
  std::array<Rat, 2> a{v.x, v.y};
  canonicalize_ratio(a);
  return {a[0], a[1]};
}

bool has_collinear_triple(const std::vector<Point2>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<Point2> dirs;
  for (int a = 0; a < n; ++a) {
    dirs.clear();
    dirs.reserve(n - a - 1);
    for (int j = a + 1; j < n; ++j) dirs.push_back(folded_direction(pts[j] - pts[a]));
    std::sort(dirs.begin(), dirs.end());
    if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end()) return true;
  }
  return false;
}

}  // namespace

GeneratedSet gen_perturbed_minkowski(int k, std::uint64_t seed) {
  if (k < 1 || k > 6) fail(Err::bad_n, "pair count must be in [1, 6]");
  static const std::pair<long, long> kParams[] = {{1, 2}, {1, 3}, {2, 5}, {1, 4}, {3, 7}, {1, 5},
                                                  {2, 7}, {3, 8}, {1, 6}, {4, 9}, {1, 7}, {5, 8}};
  static const std::pair<long, long> kLambdas[] = {{1, 3}, {2, 5}, {3, 7}, {5, 8}};
  int n = 1;
  for (int j = 0; j < k; ++j) n *= 3;
  long long expected = static_cast<long long>(k) * (n / 3);

  for (int family = 0; family < 4; ++family) {
    std::mt19937_64 rng(seed * 1000003ULL + family);
    std::vector<int> order(std::size(kParams));
    for (size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
    for (size_t j = order.size(); j > 1; --j) std::swap(order[j - 1], order[rng() % j]);
    Rat lambda(kLambdas[rng() % 4].first, kLambdas[rng() % 4].second);

    for (int halving = 0; halving < 12; ++halving) {
      Rat t(1L, 16L << halving);
      Rat target = lambda * Rat(2) * t / (Rat(1) + sq(t));

      std::vector<Point2> bs, as;
      for (int j = 0; j < k; ++j) {
        Point2 b = unit_from_param(Rat(kParams[order[j]].first, kParams[order[j]].second));
        bs.push_back(b);
        as.push_back(lambda * rotate_exact(t, b));
      }

      std::vector<Point2> pts(n, Point2{Rat(0), Rat(0)});
      for (int idx = 0; idx < n; ++idx) {
        int rem = idx;
        Point2 p{Rat(0), Rat(0)};
        for (int j = 0; j < k; ++j) {
          int digit = rem % 3;
          rem /= 3;
          if (digit == 1) p = p + as[j];
          if (digit == 2) p = p + bs[j];
        }
        pts[idx] = p;
      }

      if (!all_distinct(pts)) continue;
      if (has_collinear_triple(pts)) continue;

      // Exhaustive minimum check with early abort: any smaller nonzero area,
      // or a wrong count at the target, rejects this attempt.
      long long at_target = 0;
      bool good = true;
      for (int a = 0; a < n && good; ++a) {
        for (int b = a + 1; b < n && good; ++b) {
          Vec2 u = pts[b] - pts[a];
          for (int c = b + 1; c < n; ++c) {
            Rat key = abs(cross(u, pts[c] - pts[a]));
            if (key < target) {
              good = false;
              break;
            }
            if (key == target) ++at_target;
          }
        }
      }
      if (!good || at_target != expected) continue;

      GeneratedSet gs;
      gs.dim = 2;
      gs.points2 = std::move(pts);
      Certificate cert;
      cert.kind = CertKind::min_area;
      cert.target_key = target;
      cert.complete = true;
      int p3 = 1;
      for (int j = 0; j < k; ++j) {
        for (int base = 0; base < n; ++base)
          if ((base / p3) % 3 == 0) cert.triples.push_back({base, base + p3, base + 2 * p3});
        p3 *= 3;
      }
      std::sort(cert.triples.begin(), cert.triples.end());
      cert.provenance = "gen_perturbed_minkowski(k=" + istr(k) + ",seed=" + istr(seed) + ")";
      gs.certificate = std::move(cert);
      gs.params = {{"k", istr(k)}, {"seed", istr(seed)}, {"family", istr(family)},
                   {"halving", istr(halving)}};
      return gs;
    }
  }
  fail(Err::construction_failed, "no perturbation found (k=" + istr(k) + ",seed=" + istr(seed) + ")");
}

GeneratedSet gen_prism(int n, PrismShape shape) {
  GeneratedSet gs;
  gs.dim = 3;
  const Vec3 w{Rat(1), Rat(1), Rat(1)};
  const Rat delta(1, 2);

  if (shape == PrismShape::equilateral) {
    if (n < 6 || n % 3 != 0 || n > 300)
      fail(Err::bad_n, "equilateral prism needs n in [6, 300] divisible by 3");
    int m = n / 3;
    const Point3 base[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    for (int line = 0; line < 3; ++line)
      for (int j = 0; j < m; ++j) gs.points3.push_back(base[line] + (Rat(j) * delta) * w);

    Certificate cert;
    cert.kind = CertKind::min_area;
    cert.target_key = Rat(3, 2);
    cert.complete = true;
    for (int line = 0; line < 3; ++line)
      for (int j = 0; j + 1 < m; ++j)
        for (int line2 = 0; line2 < 3; ++line2) {
          if (line2 == line) continue;
          for (int j2 = 0; j2 < m; ++j2)
            cert.triples.push_back(tri_sorted(line * m + j, line * m + j + 1, line2 * m + j2));
        }
    std::sort(cert.triples.begin(), cert.triples.end());
    cert.provenance = "gen_prism(n=" + istr(n) + ",shape=equilateral)";
    gs.certificate = std::move(cert);
    gs.params = {{"n", istr(n)}, {"shape", "equilateral"}};
    return gs;
  }

  if (n < 6 || n % 6 != 0 || n > 300)
    fail(Err::bad_n, "rhombus prism needs n in [6, 300] divisible by 6");
  int m1 = n / 3, m2 = n / 6;
  // Vertices of a rhombus in the plane x+y+z = 1: the long diagonal BD keeps
  // lines B and D far apart, every other pair sits at squared distance 2.
  const Point3 A{Rat(1), Rat(0), Rat(0)}, C{Rat(0), Rat(1), Rat(0)};
  const Point3 B{Rat(0), Rat(0), Rat(1)}, D{Rat(1), Rat(1), Rat(-1)};
  struct LineSpec {
    Point3 base;
    int start, count;
  };
  const LineSpec lines[4] = {{A, 0, m1}, {C, m1, m1}, {B, 2 * m1, m2}, {D, 2 * m1 + m2, m2}};
  for (const LineSpec& ls : lines)
    for (int j = 0; j < ls.count; ++j) gs.points3.push_back(ls.base + (Rat(j) * delta) * w);

  Certificate cert;
  cert.kind = CertKind::min_area;
  cert.target_key = Rat(3, 2);
  cert.complete = true;
  const std::pair<int, int> close_pairs[5] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 0}};
  for (const auto& [x, y] : close_pairs) {
    for (int j = 0; j + 1 < lines[x].count; ++j)
      for (int j2 = 0; j2 < lines[y].count; ++j2)
        cert.triples.push_back(
            tri_sorted(lines[x].start + j, lines[x].start + j + 1, lines[y].start + j2));
    for (int j = 0; j + 1 < lines[y].count; ++j)
      for (int j2 = 0; j2 < lines[x].count; ++j2)
        cert.triples.push_back(
            tri_sorted(lines[y].start + j, lines[y].start + j + 1, lines[x].start + j2));
  }
  std::sort(cert.triples.begin(), cert.triples.end());
  cert.provenance = "gen_prism(n=" + istr(n) + ",shape=rhombus)";
  gs.certificate = std::move(cert);
  gs.params = {{"n", istr(n)}, {"shape", "rhombus"}};
  return gs;
}

namespace {

Point3 rotate_z(const Rat& t, const Point3& p) {
  Rat d = Rat(1) + sq(t);
  Rat c = (Rat(1) - sq(t)) / d, s = Rat(2) * t / d;
  return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

Point3 rotate_y(const Rat& t, const Point3& p) {
  Rat d = Rat(1) + sq(t);
  Rat c = (Rat(1) - sq(t)) / d, s = Rat(2) * t / d;
  return {c * p.x + s * p.z, p.y, c * p.z - s * p.x};
}

}  // namespace

GeneratedSet gen_sphere_orthogonal(int m) {
  if (m < 2 || m > 64) fail(Err::bad_n, "cluster size must be in [2, 64]");
  GeneratedSet gs;
  gs.dim = 3;
  gs.points3.push_back({Rat(0), Rat(0), Rat(0)});

  const Point3 e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)};
  for (int j = 0; j < m; ++j) {
    Rat t(static_cast<long>(j), 16L * m), u(static_cast<long>(j), 112L * m);
    Point3 p = rotate_z(t, rotate_y(u, e1));
    if (norm_sq(p) != Rat(1)) fail(Err::invariant_violated, "cluster point left the sphere");
    gs.points3.push_back(p);
  }
  for (int j = 0; j < m; ++j) {
    Rat t(static_cast<long>(j), 16L * m);
    Point3 q = rotate_z(t, e2);
    if (norm_sq(q) != Rat(1)) fail(Err::invariant_violated, "cluster point left the sphere");
    gs.points3.push_back(q);
  }
  if (!all_distinct(gs.points3)) fail(Err::invariant_violated, "cluster points collide");

  Certificate cert;
  cert.kind = CertKind::orthogonal_pairs;
  cert.target_key = Rat(1);
  cert.origin_index = 0;
  cert.complete = true;
  int total = static_cast<int>(gs.points3.size());
  for (int i = 1; i < total; ++i)
    for (int j = i + 1; j < total; ++j)
      if (dot(gs.points3[i], gs.points3[j]).is_zero()) cert.pairs.push_back({i, j});
  if (static_cast<int>(cert.pairs.size()) != m)
    fail(Err::invariant_violated, "unexpected orthogonal pair count");
  cert.provenance = "gen_sphere_orthogonal(m=" + istr(m) + ")";
  gs.certificate = std::move(cert);
  gs.params = {{"m", istr(m)}};
  return gs;
}

GeneratedSet gen_line_families(int m) {
  if (m < 2 || m > 12) fail(Err::bad_n, "family size must be in [2, 12]");
  GeneratedSet gs;
  gs.dim = 2;
  for (int a = 0; a < m; ++a) gs.lines.push_back(Line2::make(Rat(0), Rat(1), Rat(-a)));
  for (int b = 0; b < m; ++b) gs.lines.push_back(Line2::make(Rat(1), Rat(0), Rat(-b)));
  for (int c = 0; c < m; ++c) gs.lines.push_back(Line2::make(Rat(1), Rat(1), Rat(-c)));

  Certificate cert;
  cert.kind = CertKind::equal_area;
  cert.target_key = Rat(1);
  cert.complete = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c : {a + b - 1, a + b + 1})
        if (0 <= c && c < m) cert.triples.push_back({a, m + b, 2 * m + c});
  std::sort(cert.triples.begin(), cert.triples.end());
  cert.provenance = "gen_line_families(m=" + istr(m) + ")";
  gs.certificate = std::move(cert);
  gs.params = {{"m", istr(m)}};
  return gs;
}

GreatCircleConfig gen_great_circle_config(int g) {
  if (g < 2 || g > 16) fail(Err::bad_n, "grid side must be in [2, 16]");
  GreatCircleConfig cfg;
  std::vector<Point2> flat;
  for (int y = 0; y < g; ++y)
    for (int x = 0; x < g; ++x) {
      flat.push_back({Rat(x), Rat(y)});
      cfg.points.push_back({Rat(x), Rat(y), Rat(1)});
    }
  cfg.planar_lines = rich_lines(flat, g);
  for (const auto& [line, idxs] : cfg.planar_lines) {
    const Point3 &p1 = cfg.points[idxs[0]], &p2 = cfg.points[idxs[1]];
    Vec3 normal = cross(p1, p2);
    cfg.cylinders.push_back(Cylinder3::make(Point3{Rat(0), Rat(0), Rat(0)}, normal, Rat(1)));
    cfg.planar_incidences += static_cast<long long>(idxs.size());
  }
  return cfg;
}

}  // namespace triarea
