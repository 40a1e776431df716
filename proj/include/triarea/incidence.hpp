#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "triarea/geom.hpp"
#include "triarea/polynomial.hpp"

namespace triarea {

// Conic c0*x^2 + c1*xy + c2*y^2 + c3*x + c4*y + c5 = 0, stored with coprime
// integer coefficients whose first nonzero entry is positive.
struct Conic2 {
  std::array<Rat, 6> c;

  static Conic2 make(std::array<Rat, 6> coeffs);
  Rat eval(const Point2& p) const;
  bool contains(const Point2& p) const { return eval(p).is_zero(); }

  friend bool operator==(const Conic2&, const Conic2&) = default;
  friend std::strong_ordering operator<=>(const Conic2&, const Conic2&) = default;
};

// Right circular cylinder: points at squared distance radius_sq from the
// axis. The canonical axis representation makes equal cylinders compare
// equal.
struct Cylinder3 {
  Line3 axis;
  Rat radius_sq;

  static Cylinder3 make(const Point3& axis_point, const Vec3& axis_dir, const Rat& radius_sq);
  bool contains(const Point3& p) const;

  friend bool operator==(const Cylinder3&, const Cylinder3&) = default;
  friend std::strong_ordering operator<=>(const Cylinder3&, const Cylinder3&) = default;
};

// Lines through at least k of the given points, each with the sorted indices
// of the points on it. Ordered by canonical line form.
std::vector<std::pair<Line2, std::vector<int>>> rich_lines(const std::vector<Point2>& pts,
                                                           int k);

// The two conics through a pair of crossing lines on which every point forms
// a fixed doubled area `par_area` with the intersection structure: the locus
// l1(p)*l2(p) = +/- par_area * |cross| in canonical form. First component
// carries the + sign. Throws ParallelLines when the lines do not cross.
std::pair<Conic2, Conic2> hyperbola_pair(const Line2& l1, const Line2& l2, const Rat& par_area);

// For a nondegenerate triangle abc: the three side lines and, parallel to
// each through the opposite vertex, the three "top" lines.
struct TopLines {
  Line2 side_ab, side_bc, side_ca;
  Line2 top_ab, top_bc, top_ca;  // top_xy passes through the vertex not on xy
};
TopLines top_lines(const Point2& a, const Point2& b, const Point2& c);

enum class TangentStatus { secant, tangent, disjoint, single_point, contained };
const char* tangent_status_name(TangentStatus s);

struct TangentResult {
  TangentStatus status;
  std::optional<Point2> point;  // set for tangent; the touch point is rational
};
TangentResult line_conic_tangency(const Line2& l, const Conic2& conic);

// All cylinders spanned by point pairs: pair (a,b) contributes the cylinder
// with axis through a and b and radius 2/|ab| (so a unit-area triangle with
// side ab has its apex on it). Returns multiplicities and a dyadic histogram.
struct CylinderMultiset {
  std::map<Cylinder3, long long> mult;
  std::map<long long, long long> buckets;        // floor power of 2 -> #cylinders
  std::map<Line3, long long> axis_point_counts;  // axis line -> points of S on it
  long long pair_total = 0;
};
CylinderMultiset cylinder_multiset(const std::vector<Point3>& pts);

// Point-cylinder incidence count. An incidence is type 1 when the generator
// line of the cylinder through the point holds >= 2 points of S, else type 2.
// In projective mode points and cylinder axes are read as directions from
// the origin: p lies on C iff the ray through p, normalized to the unit
// sphere, does.
struct IncidenceReport {
  long long total = 0;
  long long type1 = 0;
  long long type2 = 0;
  std::vector<long long> per_cylinder;
};
IncidenceReport point_cylinder_incidences(const std::vector<Point3>& pts,
                                          const std::vector<Cylinder3>& cylinders,
                                          bool projective = false);

// Pairs {i, j} of indices with (pts[i]-o) . (pts[j]-o) == 0; points equal to
// o are skipped.
std::vector<std::array<int, 2>> orthogonal_pairs(const std::vector<Point3>& pts,
                                                 const Point3& o);

// Number of real points common to three cylinders with pairwise nonparallel
// axes, counted via exact elimination to a degree <= 8 polynomial. Also
// reports isolating intervals for the first elimination coordinate. Throws
// ParallelAxes when two axes are parallel and InvariantViolated if the
// common locus fails to be finite.
struct TripleIntersection {
  int count = 0;
  std::vector<std::pair<Rat, Rat>> alpha_intervals;
  std::vector<std::array<double, 3>> points;  // one approximation per root
};
TripleIntersection cylinder_triple_intersection(const Cylinder3& c0, const Cylinder3& c1,
                                                const Cylinder3& c2);

}  // namespace triarea
