#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triarea/census.hpp"
#include "triarea/incidence.hpp"

namespace triarea {

enum class CertKind { equal_area, min_area, orthogonal_pairs };
const char* cert_kind_name(CertKind k);

// A checkable claim shipped with a generated set. Triples index into the
// point list (or the line list, when the set is made of lines); pairs index
// points. `complete` asserts the listed witnesses are all witnesses of the
// claim, not just a sample.
struct Certificate {
  CertKind kind = CertKind::equal_area;
  Rat target_key;
  std::vector<Triple> triples;
  std::vector<std::array<int, 2>> pairs;
  int origin_index = 0;  // reference point for orthogonal_pairs
  bool complete = false;
  std::string provenance;
};

struct GeneratedSet {
  int dim = 2;
  std::vector<Point2> points2;
  std::vector<Point3> points3;
  std::vector<Line2> lines;
  std::optional<Certificate> certificate;
  std::map<std::string, std::string> params;

  size_t size() const {
    if (!lines.empty()) return lines.size();
    return dim == 2 ? points2.size() : points3.size();
  }
};

// Rechecks a certificate against its set using only exact predicates:
// claimed areas, orthogonality, distinctness of referenced indices. Throws
// InvariantViolated on any mismatch. (Completeness, being a census-level
// claim, is checked by audits, not here.)
void verify_certificate(const GeneratedSet& gs);

// w x h integer grid; certificate: the four smallest-area triangles of every
// unit cell.
GeneratedSet gen_grid(int w, int h);

// ceil(sqrt(log2 n)) rows by ceil(n/rows) columns, truncated to n points.
GeneratedSet gen_erdos_purdy_lattice(int n);

enum class TwoRowsMode { acute, distinct };
// n/2 points on each of two horizontal rows (n even, >= 4).
// acute: offset rows at height 7/8; certificate lists the n-2 minimum-area
// triangles with apex over a base midpoint, all acute.
// distinct: aligned rows at height 1, giving floor((n-1)/2) distinct areas.
GeneratedSet gen_two_rows(int n, TwoRowsMode mode);

// i rounds of rotation doubling on a rational circle: 3^i points in strictly
// convex position with >= i * 3^(i-1) triangles in one area class.
GeneratedSet gen_convex_unit(int i, std::uint64_t seed = 0);

// Sum set of k perturbed direction pairs: 3^k points, no three collinear,
// with exactly k * 3^(k-1) triangles at the global minimum area.
GeneratedSet gen_perturbed_minkowski(int k, std::uint64_t seed = 0);

enum class PrismShape { equilateral, rhombus };
// Points spread evenly along parallel lines through the vertices of an
// equilateral triangle (n % 3 == 0) or of a rhombus split into two such
// triangles (n % 6 == 0), spaced to pin down the minimum area class exactly.
GeneratedSet gen_prism(int n, PrismShape shape);

// Origin plus two clusters of m unit vectors; certificate: the m orthogonal
// pairs, exactly the max-area triangles together with the origin.
GeneratedSet gen_sphere_orthogonal(int m);

// Three concurrent-free line families y=a, x=b, x+y=c for a,b,c in [0,m);
// certificate: the m^2+m-2 one-per-family triples cutting out the modal
// triangle area.
GeneratedSet gen_line_families(int m);

// g x g grid lifted to the plane z=1 together with one unit-radius cylinder
// through the origin per rich line (rows, columns, two main diagonals), so
// projective point-cylinder incidences reproduce the planar point-line ones.
struct GreatCircleConfig {
  std::vector<Point3> points;
  std::vector<Cylinder3> cylinders;
  std::vector<std::pair<Line2, std::vector<int>>> planar_lines;
  long long planar_incidences = 0;
};
GreatCircleConfig gen_great_circle_config(int g);

}  // namespace triarea
