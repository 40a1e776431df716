#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "triarea/constructions.hpp"
#include "triarea/incidence.hpp"

namespace triarea {

// Point or line file: header "dim=2", "dim=3", or "lines", then one entry per
// line with whitespace-separated rational coordinates ("p/q" or integers).
// '#' starts a comment, blank lines are skipped, duplicate entries rejected.
struct PointFile {
  int dim = 0;  // 2 or 3; 0 for a line list
  std::vector<Point2> pts2;
  std::vector<Point3> pts3;
  std::vector<Line2> lines;

  bool is_lines() const { return dim == 0; }
  std::size_t size() const;
};

PointFile parse_point_file(std::istream& in);
PointFile load_point_file(const std::string& path);

void save_points(const std::string& path, const std::vector<Point2>& pts);
void save_points(const std::string& path, const std::vector<Point3>& pts);
void save_lines(const std::string& path, const std::vector<Line2>& lines);

// Canonical text form (header + fully reduced rows). The digest is 64-bit
// FNV-1a over it, printed as 16 hex digits; equal content hashes equal.
std::string canonical_text(const PointFile& pf);
std::string fnv1a_hex(const std::string& data);
std::string input_digest(const PointFile& pf);

// Certificate files are JSON: {kind, target_key, complete, origin_index,
// triples, pairs, params, seed, provenance}; rationals as "p/q" strings.
void save_certificate(const std::string& path, const Certificate& cert,
                      const std::map<std::string, std::string>& params);
Certificate load_certificate(const std::string& path);

// Cylinder files are a JSON array of {axis_point, axis_dir, radius_sq}.
void save_cylinders(const std::string& path, const std::vector<Cylinder3>& cyls);
std::vector<Cylinder3> load_cylinders(const std::string& path);

}  // namespace triarea
