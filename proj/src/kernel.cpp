#include "triarea/kernel.hpp"

#include <algorithm>
#include <vector>

namespace triarea {

Line2 Line2::make(Rat a, Rat b, Rat c) {
  std::array<Rat, 3> v{a, b, c};
  if (v[0].is_zero() && v[1].is_zero())
    fail(Err::degenerate, "line with zero normal");
  canonicalize_ratio(v);
  return Line2{v[0], v[1], v[2]};
}

Line2 Line2::through(const Point2& p, const Point2& q) {
  if (p == q) fail(Err::degenerate, "line through coincident points");
  return point_dir(p, q - p);
}

Line2 Line2::point_dir(const Point2& p, const Vec2& d) {
  if (is_zero(d)) fail(Err::degenerate, "line with zero direction");
  return make(-d.y, d.x, d.y * p.x - d.x * p.y);
}

bool parallel(const Line2& l, const Line2& m) {
  return (l.a * m.b - l.b * m.a).is_zero();
}

std::optional<Point2> intersect(const Line2& l, const Line2& m) {
  Rat det = l.a * m.b - l.b * m.a;
  if (det.is_zero()) return std::nullopt;
  return Point2{(l.b * m.c - l.c * m.b) / det, (l.c * m.a - l.a * m.c) / det};
}

Segment2 Segment2::make(const Point2& p, const Point2& q) {
  if (p == q) fail(Err::degenerate, "segment with coincident endpoints");
  return p < q ? Segment2{p, q} : Segment2{q, p};
}

Segment3 Segment3::make(const Point3& p, const Point3& q) {
  if (p == q) fail(Err::degenerate, "segment with coincident endpoints");
  return p < q ? Segment3{p, q} : Segment3{q, p};
}

Line3 Line3::through(const Point3& p, const Point3& q) {
  if (p == q) fail(Err::degenerate, "line through coincident points");
  return point_dir(p, q - p);
}

Line3 Line3::point_dir(const Point3& p, const Vec3& d) {
  if (is_zero(d)) fail(Err::degenerate, "line with zero direction");
  std::array<Rat, 3> v{d.x, d.y, d.z};
  canonicalize_ratio(v);
  Vec3 dir{v[0], v[1], v[2]};
  Rat t = dot(p, dir) / norm_sq(dir);
  Point3 foot = p - t * dir;
  return Line3{foot, dir};
}

Rat double_area_2d(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b - a, c - a);
}

Rat area_key_2d(const Point2& a, const Point2& b, const Point2& c) {
  return abs(double_area_2d(a, b, c));
}

Rat quad_sq_area_3d(const Point3& a, const Point3& b, const Point3& c) {
  return norm_sq(cross(b - a, c - a));
}

AreaDecomposition area_decomposition_3d(const Vec3& u, const Vec3& v) {
  Rat planar = sq(u.x * v.y - u.y * v.x);
  Vec3 w = cross(u, v);
  Rat total = norm_sq(w);
  AreaDecomposition d{total, planar, total - planar};
  // residual = |y*u0 - x*v0|^2 with u0, v0 the xy-shadows, x = u.z, y = v.z.
  Vec2 r{v.z * u.x - u.z * v.x, v.z * u.y - u.z * v.y};
  if (d.residual != norm_sq(r))
    fail(Err::invariant_violated, "area decomposition mismatch");
  return d;
}

bool collinear(const Point2& a, const Point2& b, const Point2& c) {
  return double_area_2d(a, b, c).is_zero();
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  return is_zero(cross(b - a, c - a));
}

const char* angle_class_name(AngleClass c) {
  switch (c) {
    case AngleClass::acute: return "acute";
    case AngleClass::right: return "right";
    case AngleClass::obtuse: return "obtuse";
    case AngleClass::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

template <class P>
AngleClass classify_impl(const P& a, const P& b, const P& c) {
  if (a == b || a == c || b == c || collinear(a, b, c)) return AngleClass::degenerate;
  Rat ab = norm_sq(b - a), ac = norm_sq(c - a), bc = norm_sq(c - b);
  Rat mx = std::max({ab, ac, bc});
  Rat rest = ab + ac + bc - mx;
  if (mx < rest) return AngleClass::acute;
  if (mx == rest) return AngleClass::right;
  return AngleClass::obtuse;
}

template <class P, class Seg>
Seg longest_side_impl(const P& a, const P& b, const P& c) {
  if (a == b || a == c || b == c || collinear(a, b, c))
    fail(Err::degenerate, "longest side of a degenerate triangle");
  struct Cand {
    Rat len;
    Seg seg;
  };
  Cand cands[3] = {{norm_sq(b - a), Seg::make(a, b)},
                   {norm_sq(c - a), Seg::make(a, c)},
                   {norm_sq(c - b), Seg::make(b, c)}};
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (cands[i].len > cands[best].len ||
        (cands[i].len == cands[best].len && cands[i].seg < cands[best].seg))
      best = i;
  }
  return cands[best].seg;
}

}  // namespace

AngleClass classify_angles(const Point2& a, const Point2& b, const Point2& c) {
  return classify_impl(a, b, c);
}
AngleClass classify_angles(const Point3& a, const Point3& b, const Point3& c) {
  return classify_impl(a, b, c);
}

Segment2 longest_side(const Point2& a, const Point2& b, const Point2& c) {
  return longest_side_impl<Point2, Segment2>(a, b, c);
}
Segment3 longest_side(const Point3& a, const Point3& b, const Point3& c) {
  return longest_side_impl<Point3, Segment3>(a, b, c);
}

bool convex_position_check(std::span<const Point2> pts) {
  if (pts.size() < 3) fail(Err::too_few_points, "convex position needs at least 3 points");
  std::vector<Point2> s(pts.begin(), pts.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  size_t n = s.size();

  // Monotone chain with strict turns; any collinear triple on the hull or any
  // interior point shrinks the hull below n.
  std::vector<Point2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && double_area_2d(hull[k - 2], hull[k - 1], s[i]).sign() <= 0) --k;
    hull[k++] = s[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && double_area_2d(hull[k - 2], hull[k - 1], s[i]).sign() <= 0) --k;
    hull[k++] = s[i];
  }
  return k - 1 == n;
}

}  // namespace triarea
