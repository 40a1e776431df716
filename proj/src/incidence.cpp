#include "triarea/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "triarea/kernel.hpp"

namespace triarea {

Conic2 Conic2::make(std::array<Rat, 6> coeffs) {
  if (!canonicalize_ratio(coeffs)) fail(Err::degenerate, "all-zero conic");
  return Conic2{coeffs};
}

Rat Conic2::eval(const Point2& p) const {
  return c[0] * sq(p.x) + c[1] * p.x * p.y + c[2] * sq(p.y) + c[3] * p.x + c[4] * p.y + c[5];
}

Cylinder3 Cylinder3::make(const Point3& axis_point, const Vec3& axis_dir, const Rat& radius_sq) {
  if (!(radius_sq > Rat(0))) fail(Err::degenerate, "cylinder needs a positive squared radius");
  return Cylinder3{Line3::point_dir(axis_point, axis_dir), radius_sq};
}

bool Cylinder3::contains(const Point3& p) const {
  Vec3 v = p - axis.p0;
  const Vec3& d = axis.dir;
  return norm_sq(v) * norm_sq(d) - sq(dot(v, d)) == radius_sq * norm_sq(d);
}

std::vector<std::pair<Line2, std::vector<int>>> rich_lines(const std::vector<Point2>& pts, int k) {
  if (k < 2) fail(Err::bad_n, "line richness threshold must be at least 2");
  if (pts.size() < 2) fail(Err::too_few_points, "need at least 2 points");
  {
    std::vector<Point2> s(pts);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Err::duplicate_points, "point set contains duplicates");
  }
  int n = static_cast<int>(pts.size());
  std::map<Line2, std::set<int>> on;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto& members = on[Line2::through(pts[i], pts[j])];
      members.insert(i);
      members.insert(j);
    }
  std::vector<std::pair<Line2, std::vector<int>>> out;
  for (const auto& [line, members] : on)
    if (static_cast<int>(members.size()) >= k)
      out.push_back({line, std::vector<int>(members.begin(), members.end())});
  return out;
}

std::pair<Conic2, Conic2> hyperbola_pair(const Line2& l1, const Line2& l2, const Rat& par_area) {
  if (!(par_area > Rat(0))) fail(Err::degenerate, "doubled area must be positive");
  Rat crs = l1.a * l2.b - l1.b * l2.a;
  if (crs.is_zero()) fail(Err::parallel_lines, "hyperbola pair needs crossing lines");
  Rat v = par_area * abs(crs);

  std::array<Rat, 6> base{l1.a * l2.a,
                          l1.a * l2.b + l2.a * l1.b,
                          l1.b * l2.b,
                          l1.a * l2.c + l2.a * l1.c,
                          l1.b * l2.c + l2.b * l1.c,
                          l1.c * l2.c};
  std::array<Rat, 6> plus = base, minus = base;
  plus[5] -= v;   // l1(p) * l2(p) = +v
  minus[5] += v;  // l1(p) * l2(p) = -v
  return {Conic2::make(plus), Conic2::make(minus)};
}

TopLines top_lines(const Point2& a, const Point2& b, const Point2& c) {
  if (collinear(a, b, c)) fail(Err::degenerate, "top lines of a degenerate triangle");
  TopLines t;
  t.side_ab = Line2::through(a, b);
  t.side_bc = Line2::through(b, c);
  t.side_ca = Line2::through(c, a);
  t.top_ab = Line2::point_dir(c, b - a);
  t.top_bc = Line2::point_dir(a, c - b);
  t.top_ca = Line2::point_dir(b, a - c);
  return t;
}

const char* tangent_status_name(TangentStatus s) {
  switch (s) {
    case TangentStatus::secant: return "secant";
    case TangentStatus::tangent: return "tangent";
    case TangentStatus::disjoint: return "disjoint";
    case TangentStatus::single_point: return "single_point";
    case TangentStatus::contained: return "contained";
  }
  return "?";
}

TangentResult line_conic_tangency(const Line2& l, const Conic2& conic) {
  // Parametrize the line and restrict the conic to a quadratic in t.
  Point2 p0 = l.b.is_zero() ? Point2{-l.c / l.a, Rat(0)} : Point2{Rat(0), -l.c / l.b};
  Vec2 d = l.direction();

  Rat A = conic.c[0], B = conic.c[1], C = conic.c[2], D = conic.c[3], E = conic.c[4];
  Rat q2 = A * sq(d.x) + B * d.x * d.y + C * sq(d.y);
  Rat q1 = Rat(2) * A * p0.x * d.x + B * (p0.x * d.y + p0.y * d.x) + Rat(2) * C * p0.y * d.y +
           D * d.x + E * d.y;
  Rat q0 = conic.eval(p0);

  if (q2.is_zero()) {
    if (q1.is_zero())
      return q0.is_zero() ? TangentResult{TangentStatus::contained, std::nullopt}
                          : TangentResult{TangentStatus::disjoint, std::nullopt};
    return {TangentStatus::single_point, Point2{p0 + (-q0 / q1) * d}};
  }
  Rat disc = sq(q1) - Rat(4) * q2 * q0;
  if (disc > Rat(0)) return {TangentStatus::secant, std::nullopt};
  if (disc < Rat(0)) return {TangentStatus::disjoint, std::nullopt};
  Rat t = -q1 / (Rat(2) * q2);
  return {TangentStatus::tangent, Point2{p0 + t * d}};
}

CylinderMultiset cylinder_multiset(const std::vector<Point3>& pts) {
  if (pts.size() < 2) fail(Err::too_few_points, "need at least 2 points");
  {
    std::vector<Point3> s(pts);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Err::duplicate_points, "point set contains duplicates");
  }
  int n = static_cast<int>(pts.size());
  CylinderMultiset out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat rad = Rat(4) / norm_sq(pts[j] - pts[i]);
      ++out.mult[Cylinder3::make(pts[i], pts[j] - pts[i], rad)];
      ++out.pair_total;
    }
  for (const auto& [cyl, m] : out.mult) {
    long long b = 1;
    while (b * 2 <= m) b *= 2;
    ++out.buckets[b];
    if (!out.axis_point_counts.count(cyl.axis)) {
      long long cnt = 0;
      for (const Point3& p : pts)
        if (cyl.axis.contains(p)) ++cnt;
      out.axis_point_counts[cyl.axis] = cnt;
    }
  }
  return out;
}

namespace {

// Canonical direction key for grouping generator lines.
Vec3 canon_dir(const Vec3& d) {
  std::array<Rat, 3> a{d.x, d.y, d.z};
  canonicalize_ratio(a);
  return {a[0], a[1], a[2]};
}

Point3 foot_along(const Point3& p, const Vec3& d) {
  return p - (dot(p, d) / norm_sq(d)) * d;
}

// In projective mode a point q (as a ray from the origin) lies on the
// generator of the cylinder through p iff the normalized cross products with
// the axis direction coincide: parallel, same sense, equal squared norms.
bool same_generator_projective(const Point3& p, const Point3& q, const Vec3& d) {
  Vec3 X = cross(q, d), Y = cross(p, d);
  if (is_zero(X) && is_zero(Y))
    return is_zero(cross(p, q)) && dot(p, q) > Rat(0);
  if (!is_zero(cross(X, Y))) return false;
  if (dot(X, Y) < Rat(0)) return false;
  return norm_sq(X) * norm_sq(p) == norm_sq(Y) * norm_sq(q);
}

}  // namespace

IncidenceReport point_cylinder_incidences(const std::vector<Point3>& pts,
                                          const std::vector<Cylinder3>& cylinders,
                                          bool projective) {
  if (pts.empty()) fail(Err::too_few_points, "need at least 1 point");
  {
    std::vector<Point3> s(pts);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Err::duplicate_points, "point set contains duplicates");
  }
  const Point3 origin{Rat(0), Rat(0), Rat(0)};
  if (projective) {
    for (const Cylinder3& c : cylinders)
      if (c.axis.p0 != origin)
        fail(Err::invariant_violated, "projective incidences need axes through the origin");
    for (const Point3& p : pts)
      if (p == origin) fail(Err::degenerate, "the origin has no direction");
  }

  IncidenceReport rep;
  rep.per_cylinder.assign(cylinders.size(), 0);

  // Straight mode: group points by generator line (direction, foot) once per
  // distinct axis direction.
  std::map<Vec3, std::map<Point3, long long>> generator_classes;
  if (!projective) {
    for (const Cylinder3& c : cylinders) {
      Vec3 dk = canon_dir(c.axis.dir);
      if (generator_classes.count(dk)) continue;
      auto& classes = generator_classes[dk];
      for (const Point3& p : pts) ++classes[foot_along(p, dk)];
    }
  }

  for (size_t ci = 0; ci < cylinders.size(); ++ci) {
    const Cylinder3& c = cylinders[ci];
    Vec3 dk = canon_dir(c.axis.dir);
    for (const Point3& p : pts) {
      bool on;
      if (projective) {
        Rat lhs = sq(dot(p, c.axis.dir));
        Rat rhs = norm_sq(p) * norm_sq(c.axis.dir) * (Rat(1) - c.radius_sq);
        on = lhs == rhs;
      } else {
        on = c.contains(p);
      }
      if (!on) continue;
      ++rep.total;
      ++rep.per_cylinder[ci];
      long long mates;
      if (projective) {
        mates = 0;
        for (const Point3& q : pts)
          if (same_generator_projective(p, q, c.axis.dir)) ++mates;
      } else {
        mates = generator_classes[dk][foot_along(p, dk)];
      }
      if (mates >= 2)
        ++rep.type1;
      else
        ++rep.type2;
    }
  }
  return rep;
}

std::vector<std::array<int, 2>> orthogonal_pairs(const std::vector<Point3>& pts, const Point3& o) {
  int n = static_cast<int>(pts.size());
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < n; ++i) {
    if (pts[i] == o) continue;
    for (int j = i + 1; j < n; ++j) {
      if (pts[j] == o) continue;
      if (dot(pts[i] - o, pts[j] - o).is_zero()) out.push_back({i, j});
    }
  }
  return out;
}

namespace {

// Polynomial in beta whose coefficients are polynomials in alpha.
struct BPoly {
  std::vector<Poly> b;

  void norm() {
    while (!b.empty() && b.back().is_zero()) b.pop_back();
  }
  bool is_zero() const { return b.empty(); }
  Poly coeff(size_t i) const { return i < b.size() ? b[i] : Poly(); }

  static BPoly constant(const Rat& v) {
    BPoly r;
    r.b = {Poly::constant(v)};
    r.norm();
    return r;
  }
  // c0 + c_alpha * alpha + c_beta * beta
  static BPoly affine(const Rat& c0, const Rat& c_alpha, const Rat& c_beta) {
    BPoly r;
    r.b = {Poly({c0, c_alpha}), Poly::constant(c_beta)};
    r.norm();
    return r;
  }
};

BPoly operator+(const BPoly& x, const BPoly& y) {
  BPoly r;
  r.b.resize(std::max(x.b.size(), y.b.size()));
  for (size_t i = 0; i < r.b.size(); ++i) r.b[i] = x.coeff(i) + y.coeff(i);
  r.norm();
  return r;
}
BPoly operator-(const BPoly& x, const BPoly& y) {
  BPoly r;
  r.b.resize(std::max(x.b.size(), y.b.size()));
  for (size_t i = 0; i < r.b.size(); ++i) r.b[i] = x.coeff(i) - y.coeff(i);
  r.norm();
  return r;
}
BPoly operator*(const BPoly& x, const BPoly& y) {
  BPoly r;
  if (x.is_zero() || y.is_zero()) return r;
  r.b.assign(x.b.size() + y.b.size() - 1, Poly());
  for (size_t i = 0; i < x.b.size(); ++i)
    for (size_t j = 0; j < y.b.size(); ++j) r.b[i + j] = r.b[i + j] + x.b[i] * y.b[j];
  r.norm();
  return r;
}
BPoly operator*(const Rat& s, const BPoly& x) {
  BPoly r = x;
  for (Poly& p : r.b) p = s * p;
  r.norm();
  return r;
}

// Reduce modulo beta^2 = B(alpha): afterwards deg_beta <= 1.
BPoly reduce_ellipse(BPoly p, const Poly& B) {
  while (p.b.size() > 2) {
    Poly top = p.b.back();
    p.b.pop_back();
    size_t idx = p.b.size() - 2;
    p.b[idx] = p.b[idx] + top * B;
    p.norm();
  }
  return p;
}

struct FrameQuadratic {
  Rat e;      // gamma^2 coefficient
  BPoly L;    // gamma coefficient is -2L
  BPoly M;    // constant term
};

// How beta is pinned down at one root alpha of the eliminant.
struct BetaMode {
  int kind;  // 0: beta = 0; 1: beta = -P0/P1; 2: beta = s * sqrt(B)
  int s;
};

class SurfacePoint {
 public:
  SurfacePoint(AlgebraicNum* alpha, BetaMode mode, const Poly* P0, const Poly* P1, const Poly* NB,
               const Rat* d)
      : alpha_(alpha), mode_(mode), P0_(P0), P1_(P1), NB_(NB), d_(d) {}

  int sign_at(const BPoly& Q, const Poly& B) {
    BPoly q = reduce_ellipse(Q, B);
    Poly Q0 = q.coeff(0), Q1 = q.coeff(1);
    switch (mode_.kind) {
      case 0:
        return alpha_->sign_of(Q0);
      case 1: {
        int s1 = alpha_->sign_of(Q0 * *P1_ - *P0_ * Q1);
        int s2 = alpha_->sign_of(*P1_);
        return s1 * s2;
      }
      default: {
        int so = alpha_->sign_of(Q0);
        int s1 = mode_.s * alpha_->sign_of(Q1);
        if (so == 0 && s1 == 0) return 0;
        if (so == 0) return s1;
        if (s1 == 0) return so;
        if (so == s1) return so;
        int t = alpha_->sign_of(*d_ * (Q0 * Q0) - *NB_ * (Q1 * Q1));
        if (t == 0) return 0;
        return t > 0 ? so : s1;
      }
    }
  }

 private:
  AlgebraicNum* alpha_;
  BetaMode mode_;
  const Poly *P0_, *P1_, *NB_;
  const Rat* d_;
};

double eval_d(const Poly& p, double x) {
  double r = 0;
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i].to_double();
  return r;
}

double eval_d(const BPoly& q, double a, double b) {
  double r = 0;
  for (size_t j = q.b.size(); j-- > 0;) r = r * b + eval_d(q.b[j], a);
  return r;
}

Vec3 pick_transverse(const Vec3& d) {
  const Vec3 axes[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  for (const Vec3& e : axes)
    if (!is_zero(cross(d, e))) return e;
  fail(Err::invariant_violated, "axis direction is zero");
}

std::optional<TripleIntersection> triple_with_base(const Cylinder3& base, const Cylinder3& cb,
                                                   const Cylinder3& cc) {
  const Vec3& D = base.axis.dir;
  const Point3& A0 = base.axis.p0;
  Rat d = norm_sq(D);
  Vec3 U = cross(D, pick_transverse(D));
  Vec3 V = cross(D, U);
  Rat u = norm_sq(U);

  // Base cylinder in frame coordinates x = A0 + alpha U + beta V + gamma D:
  // alpha^2 + d * beta^2 = Rt.
  Rat Rt = base.radius_sq / u;
  Poly NB({Rt, Rat(0), Rat(-1)});          // numerator of B(alpha) = (Rt - alpha^2) / d
  Poly B = (Rat(1) / d) * NB;

  auto make_quadratic = [&](const Cylinder3& cyl) -> FrameQuadratic {
    const Vec3& Di = cyl.axis.dir;
    Vec3 W0 = A0 - cyl.axis.p0;
    Rat di = norm_sq(Di);
    Rat DDi = dot(D, Di);
    Rat e = d * di - sq(DDi);
    if (!(e > Rat(0))) fail(Err::invariant_violated, "parallel axes slipped through");

    BPoly WDi = BPoly::affine(dot(W0, Di), dot(U, Di), dot(V, Di));
    Rat WD = dot(W0, D);  // U, V are orthogonal to D
    // |w|^2 with w = alpha U + beta V + W0
    BPoly wsq;
    wsq.b = {Poly({norm_sq(W0), Rat(2) * dot(U, W0), u}), Poly({Rat(2) * dot(V, W0)}),
             Poly({d * u})};
    wsq.norm();

    FrameQuadratic f;
    f.e = e;
    f.L = DDi * WDi - BPoly::constant(di * WD);
    f.M = di * wsq - WDi * WDi - BPoly::constant(di * cyl.radius_sq);
    return f;
  };

  FrameQuadratic F1 = make_quadratic(cb);
  FrameQuadratic F2 = make_quadratic(cc);

  // Resultant in gamma of e1 g^2 - 2 L1 g + M1 and e2 g^2 - 2 L2 g + M2.
  BPoly Z = F1.e * F2.M - F2.e * F1.M;
  BPoly W = Rat(2) * (F1.e * F2.L - F2.e * F1.L);
  BPoly P = Z * Z - (Rat(2) * (F2.e * F1.L - F1.e * F2.L)) * (Rat(2) * (F2.L * F1.M - F1.L * F2.M));

  BPoly Pr = reduce_ellipse(P, B);
  Poly P0 = Pr.coeff(0), P1 = Pr.coeff(1);
  Poly psi = P0 * P0 - B * (P1 * P1);
  if (psi.is_zero()) return std::nullopt;
  if (psi.degree() > 8) fail(Err::invariant_violated, "eliminant degree exceeds 8");

  Poly phi = squarefree_part(psi);
  auto intervals = isolate_roots(phi);

  TripleIntersection out;
  for (const auto& [lo, hi] : intervals) {
    AlgebraicNum alpha(phi, lo, hi);
    int sB = alpha.sign_of(NB);
    if (sB < 0) continue;

    std::vector<BetaMode> modes;
    if (sB == 0) {
      if (alpha.sign_of(P0) == 0) modes.push_back({0, 0});
    } else {
      int sPo = alpha.sign_of(P1);
      if (sPo != 0) {
        modes.push_back({1, 0});
      } else {
        if (alpha.sign_of(P0) != 0)
          fail(Err::invariant_violated, "eliminant root without a surface point");
        modes.push_back({2, +1});
        modes.push_back({2, -1});
      }
    }

    for (const BetaMode& mode : modes) {
      SurfacePoint sp(&alpha, mode, &P0, &P1, &NB, &d);
      int points_here = 0;
      int sW = sp.sign_at(W, B);
      if (sW != 0) {
        // gamma = Z / W; consistency against both quadratics.
        BPoly T1 = F1.e * (Z * Z) - Rat(2) * (F1.L * Z * W) + F1.M * (W * W);
        BPoly T2 = F2.e * (Z * Z) - Rat(2) * (F2.L * Z * W) + F2.M * (W * W);
        if (sp.sign_at(T1, B) != 0 || sp.sign_at(T2, B) != 0)
          fail(Err::invariant_violated, "resultant root fails the quadratics");
        points_here = 1;
      } else {
        int sZ = sp.sign_at(Z, B);
        if (sZ != 0)
          fail(Err::invariant_violated, "vanishing resultant without a shared root");
        // The two quadratics are proportional here; count the real roots of
        // the first.
        BPoly disc = F1.L * F1.L - F1.e * F1.M;
        int sD = sp.sign_at(disc, B);
        points_here = sD > 0 ? 2 : (sD == 0 ? 1 : 0);
      }

      if (points_here > 0) {
        Rat width(1, 1024);
        while (!alpha.is_rational() && alpha.hi() - alpha.lo() > width) alpha.refine();
        double ad = alpha.to_double();
        double bd = 0;
        if (mode.kind == 1) bd = -eval_d(P0, ad) / eval_d(P1, ad);
        if (mode.kind == 2) bd = mode.s * std::sqrt(std::max(0.0, eval_d(B, ad)));
        std::vector<double> gammas;
        if (sW != 0) {
          gammas.push_back(eval_d(Z, ad, bd) / eval_d(W, ad, bd));
        } else {
          double qa = F1.e.to_double();
          double qb = -2.0 * eval_d(F1.L, ad, bd);
          double qc = eval_d(F1.M, ad, bd);
          double root = std::sqrt(std::max(0.0, qb * qb - 4 * qa * qc));
          gammas.push_back((-qb + root) / (2 * qa));
          if (points_here == 2) gammas.push_back((-qb - root) / (2 * qa));
        }
        for (double g : gammas) {
          out.alpha_intervals.push_back({alpha.lo(), alpha.hi()});
          out.points.push_back({A0.x.to_double() + ad * U.x.to_double() + bd * V.x.to_double() +
                                    g * D.x.to_double(),
                                A0.y.to_double() + ad * U.y.to_double() + bd * V.y.to_double() +
                                    g * D.y.to_double(),
                                A0.z.to_double() + ad * U.z.to_double() + bd * V.z.to_double() +
                                    g * D.z.to_double()});
          ++out.count;
        }
      }
    }
  }
  if (out.count > 8) fail(Err::invariant_violated, "more than 8 intersection points");
  return out;
}

}  // namespace

TripleIntersection cylinder_triple_intersection(const Cylinder3& c0, const Cylinder3& c1,
                                                const Cylinder3& c2) {
  auto par = [](const Cylinder3& x, const Cylinder3& y) {
    return is_zero(cross(x.axis.dir, y.axis.dir));
  };
  if (par(c0, c1) || par(c0, c2) || par(c1, c2))
    fail(Err::parallel_axes, "cylinder axes must be pairwise nonparallel");

  const Cylinder3* cs[3] = {&c0, &c1, &c2};
  for (int base = 0; base < 3; ++base) {
    auto r = triple_with_base(*cs[base], *cs[(base + 1) % 3], *cs[(base + 2) % 3]);
    if (r) return *r;
  }
  fail(Err::invariant_violated, "cylinders share a curve; intersection is not finite");
}

}  // namespace triarea
