#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "triarea/kernel.hpp"

namespace triarea {

using Triple = std::array<int, 3>;  // point indices, strictly increasing

struct CensusClass {
  long long count = 0;
  std::vector<Triple> witnesses;  // filled only when requested, sorted
};

// Full area-class census of all point triples. Keys are area class keys
// (|doubled area| in the plane, 4*area^2 in space); collinear triples are
// tallied separately under `degenerate`.
struct Census {
  int dim = 2;
  std::map<Rat, CensusClass> classes;
  long long degenerate = 0;

  long long nondegenerate_total() const;
  long long total() const { return nondegenerate_total() + degenerate; }
};

// Requires >= 3 pairwise distinct points; throws DuplicatePoints otherwise.
// With threads > 1 the triple range is partitioned deterministically and the
// per-thread tallies merged, so results are independent of thread count.
Census area_census(const std::vector<Point2>& pts, bool witnesses = false, int threads = 1);
Census area_census(const std::vector<Point3>& pts, bool witnesses = false, int threads = 1);

long long count_unit_area(const std::vector<Point2>& pts);
long long count_unit_area(const std::vector<Point3>& pts);

struct ExtremeArea {
  Rat key;
  long long count = 0;
  std::vector<Triple> witnesses;
};

// Smallest nonzero area class; throws NoNonzeroTriangle when every triple is
// collinear.
ExtremeArea min_nonzero_area(const std::vector<Point2>& pts);
ExtremeArea min_nonzero_area(const std::vector<Point3>& pts);

ExtremeArea max_area(const std::vector<Point2>& pts);
ExtremeArea max_area(const std::vector<Point3>& pts);

// Number of minimum-area triangles whose largest angle is acute.
long long acute_min_area_count(const std::vector<Point2>& pts);

long long distinct_area_count(const std::vector<Point2>& pts);
long long distinct_area_count(const std::vector<Point3>& pts);

// Segment shared by triangles of the largest number of distinct nonzero
// areas; ties go to the lexicographically smallest canonical segment.
struct CommonSideResult {
  long long distinct = 0;
  Segment2 side;
  std::vector<Rat> keys;
};
CommonSideResult distinct_areas_common_side(const std::vector<Point2>& pts);

// How often each point participates in a maximum-area triangle.
struct MaxAreaHistogram {
  Rat key;
  long long triangle_count = 0;
  std::map<int, long long> per_point;  // only points with nonzero count
  int argmax = -1;                     // smallest index among the most loaded
};
MaxAreaHistogram max_area_incident_histogram(const std::vector<Point2>& pts);
MaxAreaHistogram max_area_incident_histogram(const std::vector<Point3>& pts);

// Census over triangles cut out by line triples. Triples with two parallel
// or three concurrent lines are counted as skipped.
struct LineTripleCensus {
  std::map<Rat, long long> classes;
  long long skipped = 0;
  long long total() const;
};
LineTripleCensus line_triple_census(const std::vector<Line2>& lines);

}  // namespace triarea
