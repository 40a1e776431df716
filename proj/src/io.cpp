#include "triarea/io.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace triarea {

std::size_t PointFile::size() const {
  if (dim == 2) return pts2.size();
  if (dim == 3) return pts3.size();
  return lines.size();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  fail(Err::parse_error, "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

PointFile parse_point_file(std::istream& in) {
  PointFile pf;
  pf.dim = -1;
  std::set<Point2> seen2;
  std::set<Point3> seen3;
  std::set<Line2> seen_lines;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (pf.dim == -1) {
      if (toks.size() != 1) bad_line(lineno, "expected a header");
      if (toks[0] == "dim=2")
        pf.dim = 2;
      else if (toks[0] == "dim=3")
        pf.dim = 3;
      else if (toks[0] == "lines")
        pf.dim = 0;
      else
        bad_line(lineno, "unknown header '" + toks[0] + "'");
      continue;
    }

    if (pf.dim == 2) {
      if (toks.size() != 2) bad_line(lineno, "expected 2 coordinates");
      Point2 p{Rat::from_string(toks[0]), Rat::from_string(toks[1])};
      if (!seen2.insert(p).second) fail(Err::duplicate_points, "duplicate point at line " + std::to_string(lineno));
      pf.pts2.push_back(p);
    } else if (pf.dim == 3) {
      if (toks.size() != 3) bad_line(lineno, "expected 3 coordinates");
      Point3 p{Rat::from_string(toks[0]), Rat::from_string(toks[1]), Rat::from_string(toks[2])};
      if (!seen3.insert(p).second) fail(Err::duplicate_points, "duplicate point at line " + std::to_string(lineno));
      pf.pts3.push_back(p);
    } else {
      if (toks.size() != 3) bad_line(lineno, "expected 3 line coefficients");
      Line2 l = Line2::make(Rat::from_string(toks[0]), Rat::from_string(toks[1]),
                            Rat::from_string(toks[2]));
      if (!seen_lines.insert(l).second) fail(Err::duplicate_lines, "duplicate line at line " + std::to_string(lineno));
      pf.lines.push_back(l);
    }
  }
  if (pf.dim == -1) fail(Err::parse_error, "missing header (dim=2, dim=3, or lines)");
  return pf;
}

PointFile load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::parse_error, "cannot open " + path);
  return parse_point_file(in);
}

std::string canonical_text(const PointFile& pf) {
  std::ostringstream out;
  if (pf.dim == 2) {
    out << "dim=2\n";
    for (const Point2& p : pf.pts2) out << p.x.to_string() << ' ' << p.y.to_string() << '\n';
  } else if (pf.dim == 3) {
    out << "dim=3\n";
    for (const Point3& p : pf.pts3)
      out << p.x.to_string() << ' ' << p.y.to_string() << ' ' << p.z.to_string() << '\n';
  } else {
    out << "lines\n";
    for (const Line2& l : pf.lines)
      out << l.a.to_string() << ' ' << l.b.to_string() << ' ' << l.c.to_string() << '\n';
  }
  return out.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string input_digest(const PointFile& pf) { return fnv1a_hex(canonical_text(pf)); }

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Err::parse_error, "cannot write " + path);
  out << text;
}

}  // namespace

void save_points(const std::string& path, const std::vector<Point2>& pts) {
  PointFile pf;
  pf.dim = 2;
  pf.pts2 = pts;
  write_text(path, canonical_text(pf));
}

void save_points(const std::string& path, const std::vector<Point3>& pts) {
  PointFile pf;
  pf.dim = 3;
  pf.pts3 = pts;
  write_text(path, canonical_text(pf));
}

void save_lines(const std::string& path, const std::vector<Line2>& lines) {
  PointFile pf;
  pf.dim = 0;
  pf.lines = lines;
  write_text(path, canonical_text(pf));
}

void save_certificate(const std::string& path, const Certificate& cert,
                      const std::map<std::string, std::string>& params) {
  nlohmann::json j;
  j["kind"] = cert_kind_name(cert.kind);
  j["target_key"] = cert.target_key.to_string();
  j["complete"] = cert.complete;
  j["origin_index"] = cert.origin_index;
  j["triples"] = nlohmann::json::array();
  for (const auto& t : cert.triples) j["triples"].push_back({t[0], t[1], t[2]});
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : cert.pairs) j["pairs"].push_back({p[0], p[1]});
  j["params"] = params;
  long long seed = 0;
  if (auto it = params.find("seed"); it != params.end()) seed = std::stoll(it->second);
  j["seed"] = seed;
  j["provenance"] = cert.provenance;
  write_text(path, j.dump(2) + "\n");
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::parse_error, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::parse_error, std::string("bad certificate json: ") + e.what());
  }
  Certificate cert;
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "equal_area")
      cert.kind = CertKind::equal_area;
    else if (kind == "min_area")
      cert.kind = CertKind::min_area;
    else if (kind == "orthogonal_pairs")
      cert.kind = CertKind::orthogonal_pairs;
    else
      fail(Err::parse_error, "unknown certificate kind '" + kind + "'");
    cert.target_key = Rat::from_string(j.at("target_key").get<std::string>());
    cert.complete = j.value("complete", false);
    cert.origin_index = j.value("origin_index", 0);
    cert.provenance = j.value("provenance", std::string());
    for (const auto& t : j.value("triples", nlohmann::json::array()))
      cert.triples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    for (const auto& p : j.value("pairs", nlohmann::json::array()))
      cert.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  } catch (const nlohmann::json::exception& e) {
    fail(Err::parse_error, std::string("bad certificate json: ") + e.what());
  }
  return cert;
}

namespace {

nlohmann::json vec3_json(const Vec3& v) {
  return {v.x.to_string(), v.y.to_string(), v.z.to_string()};
}

Vec3 vec3_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) fail(Err::parse_error, "expected a 3-vector");
  return {Rat::from_string(j.at(0).get<std::string>()),
          Rat::from_string(j.at(1).get<std::string>()),
          Rat::from_string(j.at(2).get<std::string>())};
}

}  // namespace

void save_cylinders(const std::string& path, const std::vector<Cylinder3>& cyls) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cylinder3& c : cyls) {
    nlohmann::json item;
    item["axis_point"] = vec3_json(c.axis.p0);
    item["axis_dir"] = vec3_json(c.axis.dir);
    item["radius_sq"] = c.radius_sq.to_string();
    arr.push_back(item);
  }
  write_text(path, arr.dump(2) + "\n");
}

std::vector<Cylinder3> load_cylinders(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::parse_error, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::parse_error, std::string("bad cylinder json: ") + e.what());
  }
  if (!j.is_array()) fail(Err::parse_error, "cylinder file must be a json array");
  std::vector<Cylinder3> out;
  try {
    for (const auto& item : j) {
      Point3 p = vec3_from_json(item.at("axis_point"));
      Vec3 d = vec3_from_json(item.at("axis_dir"));
      Rat r = Rat::from_string(item.at("radius_sq").get<std::string>());
      out.push_back(Cylinder3::make(p, d, r));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Err::parse_error, std::string("bad cylinder json: ") + e.what());
  }
  return out;
}

}  // namespace triarea
