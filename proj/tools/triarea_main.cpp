#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "triarea/charging.hpp"
#include "triarea/constructions.hpp"
#include "triarea/io.hpp"

using json = nlohmann::json;
using namespace triarea;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

json triples_json(const std::vector<Triple>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back({t[0], t[1], t[2]});
  return arr;
}

json classes_json(const Census& c) {
  json arr = json::array();
  for (const auto& [key, cls] : c.classes) arr.push_back({key.to_string(), cls.count});
  return arr;
}

void emit_report(const std::string& command, const json& params, const std::string& digest,
                 const json& results, Clock::time_point t0,
                 std::optional<long long> seed = std::nullopt) {
  json rep;
  rep["command"] = command;
  rep["params"] = params;
  rep["input_digest"] = digest;
  rep["results"] = results;
  rep["runtime_ms"] = ms_since(t0);
  if (seed) rep["seed"] = *seed;
  std::cout << rep.dump(2) << "\n";
}

struct GenFlags {
  std::string construction;
  std::string out;
  int w = 3, h = 3, n = 12, i = 1, k = 1, m = 2, g = 2;
  std::string mode = "acute";
  std::string shape = "equilateral";
  std::uint64_t seed = 0;
  bool seeded = false;
};

int run_gen(const GenFlags& f, Clock::time_point t0) {
  if (f.construction == "great-circle") {
    GreatCircleConfig cfg = gen_great_circle_config(f.g);
    std::string pts_path = f.out + ".pts";
    std::string cyl_path = f.out + ".cyl.json";
    save_points(pts_path, cfg.points);
    save_cylinders(cyl_path, cfg.cylinders);
    PointFile pf;
    pf.dim = 3;
    pf.pts3 = cfg.points;
    json results;
    results["n"] = cfg.points.size();
    results["certificate"] = "none";
    results["cylinders"] = cfg.cylinders.size();
    results["planar_lines"] = cfg.planar_lines.size();
    results["planar_incidences"] = cfg.planar_incidences;
    results["outputs"] = {pts_path, cyl_path};
    emit_report("gen", json{{"construction", f.construction}, {"g", std::to_string(f.g)}},
                input_digest(pf), results, t0);
    return 0;
  }

  GeneratedSet gs;
  if (f.construction == "grid")
    gs = gen_grid(f.w, f.h);
  else if (f.construction == "erdos-purdy")
    gs = gen_erdos_purdy_lattice(f.n);
  else if (f.construction == "two-rows")
    gs = gen_two_rows(f.n, f.mode == "distinct" ? TwoRowsMode::distinct : TwoRowsMode::acute);
  else if (f.construction == "convex-unit")
    gs = gen_convex_unit(f.i, f.seed);
  else if (f.construction == "minkowski")
    gs = gen_perturbed_minkowski(f.k, f.seed);
  else if (f.construction == "prism")
    gs = gen_prism(f.n, f.shape == "rhombus" ? PrismShape::rhombus : PrismShape::equilateral);
  else if (f.construction == "sphere")
    gs = gen_sphere_orthogonal(f.m);
  else if (f.construction == "line-families")
    gs = gen_line_families(f.m);
  else
    throw CLI::ValidationError("gen", "unknown construction '" + f.construction + "'");

  PointFile pf;
  std::string data_path;
  std::vector<std::string> outputs;
  if (!gs.lines.empty()) {
    data_path = f.out + ".lines";
    save_lines(data_path, gs.lines);
    pf.dim = 0;
    pf.lines = gs.lines;
  } else if (gs.dim == 2) {
    data_path = f.out + ".pts";
    save_points(data_path, gs.points2);
    pf.dim = 2;
    pf.pts2 = gs.points2;
  } else {
    data_path = f.out + ".pts";
    save_points(data_path, gs.points3);
    pf.dim = 3;
    pf.pts3 = gs.points3;
  }
  outputs.push_back(data_path);

  json cert_info = "none";
  if (gs.certificate) {
    std::string cert_path = f.out + ".cert.json";
    save_certificate(cert_path, *gs.certificate, gs.params);
    outputs.push_back(cert_path);
    cert_info = json{{"kind", cert_kind_name(gs.certificate->kind)},
                     {"size", gs.certificate->kind == CertKind::orthogonal_pairs
                                  ? gs.certificate->pairs.size()
                                  : gs.certificate->triples.size()},
                     {"target_key", gs.certificate->target_key.to_string()},
                     {"complete", gs.certificate->complete}};
  }

  json params;
  params["construction"] = f.construction;
  for (const auto& [k, v] : gs.params) params[k] = v;
  json results;
  results["n"] = gs.size();
  results["certificate"] = cert_info;
  results["outputs"] = outputs;
  std::optional<long long> seed;
  if (f.seeded || gs.params.count("seed")) seed = static_cast<long long>(f.seed);
  emit_report("gen", params, input_digest(pf), results, t0, seed);
  return 0;
}

struct CensusFlags {
  std::string in;
  std::string mode = "all";
  bool witnesses = false;
  int threads = 1;
};

json witness_map(const Census& c) {
  json m = json::object();
  for (const auto& [key, cls] : c.classes) m[key.to_string()] = triples_json(cls.witnesses);
  return m;
}

int run_census(const CensusFlags& f, Clock::time_point t0) {
  PointFile pf = load_point_file(f.in);
  std::string digest = input_digest(pf);
  json params{{"in", f.in}, {"mode", f.mode}, {"threads", f.threads}};
  if (f.witnesses) params["witnesses"] = true;

  json results;
  if (pf.is_lines()) {
    if (f.mode != "all")
      fail(Err::parse_error, "line files support --mode all only");
    LineTripleCensus c = line_triple_census(pf.lines);
    json arr = json::array();
    for (const auto& [key, count] : c.classes) arr.push_back({key.to_string(), count});
    results["classes"] = arr;
    results["skipped"] = c.skipped;
    results["total"] = c.total();
    emit_report("census", params, digest, results, t0);
    return 0;
  }

  auto with_2d = [&](auto&& fn) { fn(pf.pts2); };
  auto dispatch = [&](auto&& fn) {
    if (pf.dim == 2)
      fn(pf.pts2);
    else
      fn(pf.pts3);
  };

  try {
    if (f.mode == "all") {
      dispatch([&](const auto& pts) {
        Census c = area_census(pts, f.witnesses, f.threads);
        results["classes"] = classes_json(c);
        results["degenerate"] = c.degenerate;
        results["total"] = c.total();
        if (f.witnesses) results["witnesses"] = witness_map(c);
      });
    } else if (f.mode == "unit") {
      dispatch([&](const auto& pts) {
        results["count"] = count_unit_area(pts);
        results["key"] = pf.dim == 2 ? "2" : "4";
      });
    } else if (f.mode == "min" || f.mode == "max") {
      dispatch([&](const auto& pts) {
        ExtremeArea e = f.mode == "min" ? min_nonzero_area(pts) : max_area(pts);
        results["key"] = e.key.to_string();
        results["count"] = e.count;
        if (f.witnesses) results["witnesses"] = triples_json(e.witnesses);
      });
    } else if (f.mode == "acute-min") {
      if (pf.dim != 2) fail(Err::parse_error, "--mode acute-min needs a 2d point set");
      with_2d([&](const auto& pts) { results["count"] = acute_min_area_count(pts); });
    } else if (f.mode == "distinct") {
      dispatch([&](const auto& pts) { results["count"] = distinct_area_count(pts); });
    } else if (f.mode == "common-side") {
      if (pf.dim != 2) fail(Err::parse_error, "--mode common-side needs a 2d point set");
      with_2d([&](const auto& pts) {
        CommonSideResult r = distinct_areas_common_side(pts);
        results["count"] = r.distinct;
        results["side"] = to_string(r.side.a) + " " + to_string(r.side.b);
        json keys = json::array();
        for (const Rat& k : r.keys) keys.push_back(k.to_string());
        results["keys"] = keys;
      });
    } else {
      fail(Err::parse_error, "unknown census mode '" + f.mode + "'");
    }
  } catch (const Error& e) {
    if (e.code() != Err::no_nonzero_triangle) throw;
    results = "none";
  }
  emit_report("census", params, digest, results, t0);
  return 0;
}

struct AuditFlags {
  std::string check;
  std::string in;
  std::string cert;
  int w = 0, h = 0;
};

json clauses_json(const GridAuditReport& rep) {
  json arr = json::array();
  for (const AuditClause& cl : rep.clauses) {
    json item{{"name", cl.name}, {"pass", cl.pass}};
    if (!cl.detail.empty()) item["detail"] = cl.detail;
    arr.push_back(item);
  }
  return arr;
}

int run_audit(const AuditFlags& f, Clock::time_point t0) {
  json params{{"check", f.check}};
  json results;
  bool pass = true;

  if (f.check == "grid") {
    if (f.w < 2 || f.h < 2) fail(Err::parse_error, "--check grid needs --w and --h");
    params["w"] = f.w;
    params["h"] = f.h;
    GeneratedSet grid = gen_grid(f.w, f.h);
    PointFile pf;
    pf.dim = 2;
    pf.pts2 = grid.points2;
    GridAuditReport rep = grid_visibility_audit(f.w, f.h);
    pass = rep.pass;
    results["pass"] = rep.pass;
    results["clauses"] = clauses_json(rep);
    results["stats"] = rep.stats;
    emit_report("audit", params, input_digest(pf), results, t0);
    return pass ? 0 : 1;
  }

  if (f.check == "charge2d" || f.check == "charge3d") {
    if (f.in.empty()) fail(Err::parse_error, "--check " + f.check + " needs --in");
    params["in"] = f.in;
    PointFile pf = load_point_file(f.in);
    std::string digest = input_digest(pf);
    try {
      if (f.check == "charge2d") {
        if (pf.dim != 2) fail(Err::parse_error, "charge2d needs a 2d point set");
        ChargeMap2 cm = charge_min_area_2d(pf.pts2);
        results["min_key"] = cm.min_key.to_string();
        results["charged"] = cm.charged;
        results["max_load"] = cm.max_load;
        results["segments"] = cm.charges.size();
      } else {
        if (pf.dim != 3) fail(Err::parse_error, "charge3d needs a 3d point set");
        ChargeMap3 cm = charge_min_area_3d(pf.pts3);
        results["min_key"] = cm.min_key.to_string();
        results["charged"] = cm.charged;
        results["max_load"] = cm.max_load;
        results["thin_total"] = cm.thin_total;
        results["segments"] = cm.charges.size();
      }
      results["pass"] = true;
    } catch (const Error& e) {
      if (e.code() != Err::charging_invariant_violated) throw;
      pass = false;
      results["pass"] = false;
      results["violation"] = e.what();
    }
    emit_report("audit", params, digest, results, t0);
    return pass ? 0 : 1;
  }

  if (f.check == "certificate") {
    if (f.in.empty() || f.cert.empty())
      fail(Err::parse_error, "--check certificate needs --in and --cert");
    params["in"] = f.in;
    params["cert"] = f.cert;
    PointFile pf = load_point_file(f.in);
    Certificate cert = load_certificate(f.cert);
    GeneratedSet gs;
    gs.dim = pf.dim == 0 ? 2 : pf.dim;
    gs.points2 = pf.pts2;
    gs.points3 = pf.pts3;
    gs.lines = pf.lines;
    gs.certificate = cert;
    results["kind"] = cert_kind_name(cert.kind);
    results["size"] = cert.kind == CertKind::orthogonal_pairs ? cert.pairs.size()
                                                              : cert.triples.size();
    results["target_key"] = cert.target_key.to_string();
    try {
      verify_certificate(gs);
      if (cert.complete) {
        // A complete certificate also claims the census agrees with it.
        long long expected = static_cast<long long>(
            cert.kind == CertKind::orthogonal_pairs ? cert.pairs.size() : cert.triples.size());
        long long actual = -1;
        if (cert.kind == CertKind::orthogonal_pairs) {
          actual = static_cast<long long>(
              orthogonal_pairs(pf.pts3, pf.pts3.at(cert.origin_index)).size());
        } else if (!pf.lines.empty()) {
          LineTripleCensus c = line_triple_census(pf.lines);
          auto it = c.classes.find(cert.target_key);
          actual = it == c.classes.end() ? 0 : it->second;
        } else if (pf.dim == 2) {
          Census c = area_census(pf.pts2);
          auto it = c.classes.find(cert.target_key);
          actual = it == c.classes.end() ? 0 : it->second.count;
          if (cert.kind == CertKind::min_area &&
              min_nonzero_area(pf.pts2).key != cert.target_key)
            fail(Err::audit_failed, "certificate target is not the minimum area class");
        } else {
          Census c = area_census(pf.pts3);
          auto it = c.classes.find(cert.target_key);
          actual = it == c.classes.end() ? 0 : it->second.count;
          if (cert.kind == CertKind::min_area &&
              min_nonzero_area(pf.pts3).key != cert.target_key)
            fail(Err::audit_failed, "certificate target is not the minimum area class");
        }
        results["census_count"] = actual;
        if (actual != expected)
          fail(Err::audit_failed, "census count " + std::to_string(actual) +
                                      " != certificate size " + std::to_string(expected));
      }
      results["pass"] = true;
    } catch (const Error& e) {
      if (e.code() != Err::invariant_violated && e.code() != Err::audit_failed) throw;
      pass = false;
      results["pass"] = false;
      results["violation"] = e.what();
    }
    emit_report("audit", params, input_digest(pf), results, t0);
    return pass ? 0 : 1;
  }

  fail(Err::parse_error, "unknown audit check '" + f.check + "'");
}

struct IncidenceFlags {
  std::string points;
  std::string cylinders;
  std::string cyl_triple;
  int rich = 0;
  int k = 1;
  bool from_pairs = false;
  bool projective = false;
};

int run_incidence(const IncidenceFlags& f, Clock::time_point t0) {
  json params = json::object();
  json results;

  int actions = (f.rich > 0) + !f.cylinders.empty() + f.from_pairs + !f.cyl_triple.empty();
  if (actions != 1)
    fail(Err::parse_error,
         "pick exactly one of --rich, --cylinders, --from-pairs, --cyl-triple");

  if (!f.cyl_triple.empty()) {
    params["cyl-triple"] = f.cyl_triple;
    std::vector<Cylinder3> cyls = load_cylinders(f.cyl_triple);
    if (cyls.size() != 3) fail(Err::parse_error, "--cyl-triple needs exactly 3 cylinders");
    TripleIntersection ti = cylinder_triple_intersection(cyls[0], cyls[1], cyls[2]);
    results["count"] = ti.count;
    json ivs = json::array();
    for (const auto& [lo, hi] : ti.alpha_intervals)
      ivs.push_back({lo.to_string(), hi.to_string()});
    results["alpha_intervals"] = ivs;
    json pts = json::array();
    for (const auto& p : ti.points) pts.push_back({p[0], p[1], p[2]});
    results["points_approx"] = pts;
    std::string blob;
    for (const Cylinder3& c : cyls)
      blob += to_string(c.axis.p0) + "|" + to_string(c.axis.dir) + "|" +
              c.radius_sq.to_string() + "\n";
    emit_report("incidence", params, fnv1a_hex(blob), results, t0);
    return 0;
  }

  if (f.points.empty()) fail(Err::parse_error, "--points is required");
  params["points"] = f.points;
  PointFile pf = load_point_file(f.points);
  std::string digest = input_digest(pf);

  if (f.rich > 0) {
    params["rich"] = f.rich;
    if (pf.dim != 2) fail(Err::parse_error, "--rich needs a 2d point set");
    auto lines = rich_lines(pf.pts2, f.rich);
    results["count"] = lines.size();
    json arr = json::array();
    for (const auto& [line, members] : lines) {
      json item;
      item["coeffs"] = line.a.to_string() + " " + line.b.to_string() + " " + line.c.to_string();
      item["points"] = members;
      arr.push_back(item);
    }
    results["lines"] = arr;
  } else if (!f.cylinders.empty()) {
    params["cylinders"] = f.cylinders;
    if (f.projective) params["projective"] = true;
    if (pf.dim != 3) fail(Err::parse_error, "--cylinders needs a 3d point set");
    std::vector<Cylinder3> cyls = load_cylinders(f.cylinders);
    IncidenceReport rep = point_cylinder_incidences(pf.pts3, cyls, f.projective);
    results["total"] = rep.total;
    results["type1"] = rep.type1;
    results["type2"] = rep.type2;
    results["per_cylinder"] = rep.per_cylinder;
  } else {
    params["from-pairs"] = true;
    params["k"] = f.k;
    if (pf.dim != 3) fail(Err::parse_error, "--from-pairs needs a 3d point set");
    CylinderMultiset ms = cylinder_multiset(pf.pts3);
    std::vector<Cylinder3> cyls;
    for (const auto& [cyl, mult] : ms.mult)
      if (mult >= f.k) cyls.push_back(cyl);
    IncidenceReport rep = point_cylinder_incidences(pf.pts3, cyls);
    json buckets = json::object();
    for (const auto& [b, cnt] : ms.buckets) buckets[std::to_string(b)] = cnt;
    results["pair_total"] = ms.pair_total;
    results["distinct_cylinders"] = ms.mult.size();
    results["selected_cylinders"] = cyls.size();
    results["multiplicity_buckets"] = buckets;
    results["total"] = rep.total;
    results["type1"] = rep.type1;
    results["type2"] = rep.type2;
  }
  emit_report("incidence", params, digest, results, t0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational triangle-area census, constructions, and audits"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print usage");

  GenFlags gf;
  CLI::App* gen = app.add_subcommand("gen", "generate a construction");
  gen->set_help_flag("--help", "print usage");
  gen->add_option("construction", gf.construction,
                  "grid | erdos-purdy | two-rows | convex-unit | minkowski | prism | sphere | "
                  "line-families | great-circle")
      ->required();
  gen->add_option("--out", gf.out, "output path prefix")->required();
  gen->add_option("--w", gf.w, "grid width");
  gen->add_option("--h", gf.h, "grid height");
  gen->add_option("--n", gf.n, "point count");
  gen->add_option("--i", gf.i, "doubling rounds");
  gen->add_option("--k", gf.k, "direction pairs");
  gen->add_option("--m", gf.m, "per-family count");
  gen->add_option("--g", gf.g, "grid side");
  gen->add_option("--mode", gf.mode, "two-rows mode: acute | distinct");
  gen->add_option("--shape", gf.shape, "prism shape: equilateral | rhombus");
  auto* seed_opt = gen->add_option("--seed", gf.seed, "construction seed");

  CensusFlags cf;
  CLI::App* census = app.add_subcommand("census", "area class census of a point or line file");
  census->add_option("--in", cf.in, "input file")->required();
  census->add_option("--mode", cf.mode,
                     "all | unit | min | max | distinct | acute-min | common-side");
  census->add_flag("--witnesses", cf.witnesses, "list witness triples");
  census->add_option("--threads", cf.threads, "worker threads");

  AuditFlags af;
  CLI::App* audit = app.add_subcommand("audit", "run an exhaustive check");
  audit->set_help_flag("--help", "print usage");
  audit->add_option("--check", af.check, "grid | charge2d | charge3d | certificate")->required();
  audit->add_option("--in", af.in, "input point file");
  audit->add_option("--cert", af.cert, "certificate file");
  audit->add_option("--w", af.w, "grid width");
  audit->add_option("--h", af.h, "grid height");

  IncidenceFlags incf;
  CLI::App* inc = app.add_subcommand("incidence", "incidence structures and intersections");
  inc->add_option("--points", incf.points, "input point file");
  inc->add_option("--rich", incf.rich, "list lines through at least K points");
  inc->add_option("--cylinders", incf.cylinders, "cylinder file to intersect with the points");
  inc->add_flag("--projective", incf.projective, "read points and axes as directions");
  inc->add_flag("--from-pairs", incf.from_pairs, "build cylinders from point pairs");
  inc->add_option("--k", incf.k, "multiplicity threshold for --from-pairs");
  inc->add_option("--cyl-triple", incf.cyl_triple, "intersect exactly three cylinders");

  Clock::time_point t0 = Clock::now();
  try {
    app.parse(argc, argv);
    gf.seeded = seed_opt->count() > 0;
    if (gen->parsed()) return run_gen(gf, t0);
    if (census->parsed()) return run_census(cf, t0);
    if (audit->parsed()) return run_audit(af, t0);
    return run_incidence(incf, t0);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    json err;
    err["error"] = json{{"code", err_name(e.code())}, {"message", e.what()}};
    if (gen->parsed() && (seed_opt->count() > 0 || !gf.construction.empty()))
      err["seed"] = static_cast<long long>(gf.seed);
    std::cout << err.dump(2) << "\n";
    return err_exit_code(e.code());
  }
}
