#pragma once

#include <span>

#include "triarea/geom.hpp"

namespace triarea {

// Signed doubled area of the triangle abc (shoelace). Positive for
// counter-clockwise orientation.
Rat double_area_2d(const Point2& a, const Point2& b, const Point2& c);

// Area class key of a planar triangle: |doubled area|. Unit area <=> key 2.
Rat area_key_2d(const Point2& a, const Point2& b, const Point2& c);

// Area class key of a spatial triangle: squared norm of the cross product of
// two edge vectors, i.e. 4*area^2. Unit area <=> key 4.
Rat quad_sq_area_3d(const Point3& a, const Point3& b, const Point3& c);

// Exact split of |u x v|^2 into the contribution of the xy-shadow and a
// nonnegative remainder: total = planar + residual with
// planar = (u.x*v.y - u.y*v.x)^2.
struct AreaDecomposition {
  Rat total, planar, residual;
};
AreaDecomposition area_decomposition_3d(const Vec3& u, const Vec3& v);

bool collinear(const Point2& a, const Point2& b, const Point2& c);
bool collinear(const Point3& a, const Point3& b, const Point3& c);

enum class AngleClass { acute, right, obtuse, degenerate };
const char* angle_class_name(AngleClass c);

// Classifies a triangle by its largest angle, decided exactly on squared side
// lengths. Collinear or repeated vertices give `degenerate`.
AngleClass classify_angles(const Point2& a, const Point2& b, const Point2& c);
AngleClass classify_angles(const Point3& a, const Point3& b, const Point3& c);

// Longest side of a nondegenerate triangle; ties resolved toward the
// lexicographically smallest canonical segment. Throws Degenerate otherwise.
Segment2 longest_side(const Point2& a, const Point2& b, const Point2& c);
Segment3 longest_side(const Point3& a, const Point3& b, const Point3& c);

// True when the points are distinct and form the vertex set of a strictly
// convex polygon (every point a hull vertex, no three collinear). Requires at
// least 3 points.
bool convex_position_check(std::span<const Point2> pts);

}  // namespace triarea
