#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

std::string bin() {
  const char* b = std::getenv("TRIAREA_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/triarea_cli_XXXXXX";
    char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

std::string path_in_scratch(const std::string& name) { return scratch_dir() + "/" + name; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(status != -1);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json report_of(const RunResult& r) {
  json j = json::parse(r.out);
  CHECK(j.contains("command"));
  CHECK(j.contains("params"));
  CHECK(j.contains("input_digest"));
  CHECK(j.contains("results"));
  CHECK(j.contains("runtime_ms"));
  CHECK(j["input_digest"].get<std::string>().size() == 16);
  return j;
}

json stable(json report) {
  report.erase("runtime_ms");
  return report;
}

}  // namespace

TEST_CASE("census of a point file") {
  std::string square = path_in_scratch("square.pts");
  write_file(square, "dim=2\n0 0\n1 0\n0 1\n1 1\n");

  RunResult r = run("census --in " + square + " --mode min");
  CHECK(r.code == 0);
  json rep = report_of(r);
  CHECK(rep["command"] == "census");
  CHECK(rep["results"]["key"] == "1");
  CHECK(rep["results"]["count"] == 4);

  RunResult w = run("census --in " + square + " --mode min --witnesses");
  CHECK(w.code == 0);
  json expected = json::array({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(report_of(w)["results"]["witnesses"] == expected);

  std::string rect = path_in_scratch("rect.pts");
  write_file(rect, "dim=2\n0 0\n2 0\n0 1\n2 1\n");
  json unit = report_of(run("census --in " + rect + " --mode unit"));
  CHECK(unit["results"]["count"] == 4);
  CHECK(unit["results"]["key"] == "2");

  // Rational coordinates and comments parse the same as integers.
  std::string frac = path_in_scratch("frac.pts");
  write_file(frac, "dim=2  # header\n0/1 0\n1/2 0\n0 1/2  # corner\n\n1/2 1/2\n");
  json fr = report_of(run("census --in " + frac + " --mode min"));
  CHECK(fr["results"]["key"] == "1/4");
  CHECK(fr["results"]["count"] == 4);

  std::string collinear = path_in_scratch("collinear.pts");
  write_file(collinear, "dim=2\n0 0\n1 1\n2 2\n");
  RunResult c = run("census --in " + collinear + " --mode min");
  CHECK(c.code == 0);
  CHECK(report_of(c)["results"] == "none");
}

TEST_CASE("census of a line file") {
  std::string lines = path_in_scratch("five.lines");
  write_file(lines, "lines\n0 1 0\n0 1 -1\n1 0 0\n1 0 -1\n1 1 -3\n");

  RunResult r = run("census --in " + lines + " --mode all");
  CHECK(r.code == 0);
  json res = report_of(r)["results"];
  CHECK(res["classes"] == json::array({{"1", 1}, {"4", 2}, {"9", 1}}));
  CHECK(res["skipped"] == 6);
  CHECK(res["total"] == 10);

  CHECK(run("census --in " + lines + " --mode min").code == 2);
}

TEST_CASE("gen writes data and certificate files") {
  std::string prefix = path_in_scratch("g3");
  RunResult r = run("gen grid --w 3 --h 3 --out " + prefix);
  CHECK(r.code == 0);
  json rep = report_of(r);
  CHECK(rep["results"]["n"] == 9);
  CHECK(rep["results"]["certificate"]["kind"] == "min_area");
  CHECK(rep["results"]["certificate"]["size"] == 16);
  CHECK(rep["results"]["certificate"]["target_key"] == "1");
  CHECK(rep["results"]["certificate"]["complete"] == false);
  CHECK(rep["params"]["construction"] == "grid");
  CHECK_FALSE(rep.contains("seed"));

  std::string pts = read_file(prefix + ".pts");
  CHECK(pts.substr(0, 6) == "dim=2\n");
  json min_rep = report_of(run("census --in " + prefix + ".pts --mode min"));
  CHECK(min_rep["results"]["count"] == 32);

  RunResult audit = run("audit --check certificate --in " + prefix + ".pts --cert " + prefix +
                        ".cert.json");
  CHECK(audit.code == 0);
  json ares = report_of(audit)["results"];
  CHECK(ares["pass"] == true);
  CHECK(ares["size"] == 16);
  CHECK_FALSE(ares.contains("census_count"));
}

TEST_CASE("complete certificate is checked against the census") {
  std::string prefix = path_in_scratch("prism12");
  RunResult r = run("gen prism --shape equilateral --n 12 --out " + prefix);
  CHECK(r.code == 0);
  json rep = report_of(r);
  CHECK(rep["results"]["n"] == 12);
  CHECK(rep["results"]["certificate"]["size"] == 72);
  CHECK(rep["results"]["certificate"]["complete"] == true);

  json min_rep = report_of(run("census --in " + prefix + ".pts --mode min"));
  CHECK(min_rep["results"]["count"] == 72);

  RunResult audit = run("audit --check certificate --in " + prefix + ".pts --cert " + prefix +
                        ".cert.json");
  CHECK(audit.code == 0);
  json ares = report_of(audit)["results"];
  CHECK(ares["pass"] == true);
  CHECK(ares["census_count"] == 72);

  // Tampering with the certificate must flip the audit to a failing exit.
  json cert = json::parse(read_file(prefix + ".cert.json"));
  cert["triples"][0][2] = cert["triples"][0][1];
  std::string bad = path_in_scratch("prism12.bad.cert.json");
  write_file(bad, cert.dump(2));
  RunResult tampered =
      run("audit --check certificate --in " + prefix + ".pts --cert " + bad);
  CHECK(tampered.code == 1);
  json tres = report_of(tampered)["results"];
  CHECK(tres["pass"] == false);
  CHECK(tres.contains("violation"));
}

TEST_CASE("two rows distinct pipeline") {
  std::string prefix = path_in_scratch("tworows8");
  RunResult r = run("gen two-rows --n 8 --mode distinct --out " + prefix);
  CHECK(r.code == 0);
  json rep = report_of(run("census --in " + prefix + ".pts --mode distinct"));
  CHECK(rep["results"]["count"] == 3);
}

TEST_CASE("convex unit pipeline") {
  std::string prefix = path_in_scratch("cu2");
  RunResult r = run("gen convex-unit --i 2 --seed 5 --out " + prefix);
  CHECK(r.code == 0);
  json rep = report_of(r);
  CHECK(rep["results"]["n"] == 9);
  CHECK(rep["results"]["certificate"]["kind"] == "equal_area");
  CHECK(rep["results"]["certificate"]["size"] == 6);
  CHECK(rep["seed"] == 5);

  RunResult audit = run("audit --check certificate --in " + prefix + ".pts --cert " + prefix +
                        ".cert.json");
  CHECK(audit.code == 0);
}

TEST_CASE("grid audit and charge audits") {
  RunResult g = run("audit --check grid --w 4 --h 4");
  CHECK(g.code == 0);
  json gres = report_of(g)["results"];
  CHECK(gres["pass"] == true);
  CHECK(gres["clauses"].size() == 5);
  for (const json& cl : gres["clauses"]) CHECK(cl["pass"] == true);
  CHECK(gres["stats"]["min_count"] == "124");
  CHECK(gres["stats"]["max_load"] == "2");

  std::string square = path_in_scratch("square.pts");
  write_file(square, "dim=2\n0 0\n1 0\n0 1\n1 1\n");
  RunResult c2 = run("audit --check charge2d --in " + square);
  CHECK(c2.code == 0);
  json cres = report_of(c2)["results"];
  CHECK(cres["pass"] == true);
  CHECK(cres["charged"] == 4);
  CHECK(cres["max_load"] == 2);
  CHECK(cres["min_key"] == "1");

  std::string tetra = path_in_scratch("tetra.pts");
  write_file(tetra, "dim=3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n");
  RunResult c3 = run("audit --check charge3d --in " + tetra);
  CHECK(c3.code == 0);
  json tres = report_of(c3)["results"];
  CHECK(tres["pass"] == true);
  CHECK(tres["charged"] == 3);
  CHECK(tres["thin_total"] == 0);

  CHECK(run("audit --check charge2d --in " + tetra).code == 2);
  CHECK(run("audit --check grid --w 1 --h 4").code == 2);
  CHECK(run("audit --check bogus").code == 2);
}

TEST_CASE("incidence commands") {
  std::string g3 = path_in_scratch("ig3");
  CHECK(run("gen grid --w 3 --h 3 --out " + g3).code == 0);
  RunResult rich = run("incidence --points " + g3 + ".pts --rich 3");
  CHECK(rich.code == 0);
  json rres = report_of(rich)["results"];
  CHECK(rres["count"] == 8);
  CHECK(rres["lines"].size() == 8);
  for (const json& line : rres["lines"]) {
    CHECK(line.contains("coeffs"));
    CHECK(line["points"].size() == 3);
  }

  std::string ring = path_in_scratch("ring.pts");
  write_file(ring, "dim=3\n1 0 0\n0 1 0\n-1 0 0\n0 -1 0\n");
  std::string zcyl = path_in_scratch("zcyl.json");
  write_file(zcyl, R"([{"axis_point": ["0","0","0"], "axis_dir": ["0","0","1"],
                       "radius_sq": "1"}])");
  json inc = report_of(run("incidence --points " + ring + " --cylinders " + zcyl));
  CHECK(inc["results"]["total"] == 4);
  CHECK(inc["results"]["type1"] == 0);
  CHECK(inc["results"]["type2"] == 4);
  CHECK(inc["results"]["per_cylinder"] == json::array({4}));

  json proj = report_of(
      run("incidence --points " + ring + " --cylinders " + zcyl + " --projective"));
  CHECK(proj["results"]["total"] == 4);
  CHECK(proj["results"]["type2"] == 4);

  std::string pts3 = path_in_scratch("six.pts");
  write_file(pts3, "dim=3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 1 0\n1 1 1\n");
  json fp = report_of(run("incidence --points " + pts3 + " --from-pairs"));
  CHECK(fp["results"]["pair_total"] == 15);
  CHECK(fp["results"]["total"] ==
        fp["results"]["type1"].get<long long>() + fp["results"]["type2"].get<long long>());
  long long bucket_sum = 0;
  for (const auto& [b, cnt] : fp["results"]["multiplicity_buckets"].items())
    bucket_sum += cnt.get<long long>();
  CHECK(bucket_sum == fp["results"]["distinct_cylinders"].get<long long>());

  std::string axes = path_in_scratch("axes.json");
  write_file(axes, R"([
    {"axis_point": ["0","0","0"], "axis_dir": ["1","0","0"], "radius_sq": "1"},
    {"axis_point": ["0","0","0"], "axis_dir": ["0","1","0"], "radius_sq": "1"},
    {"axis_point": ["0","0","0"], "axis_dir": ["0","0","1"], "radius_sq": "1"}])");
  RunResult triple = run("incidence --cyl-triple " + axes);
  CHECK(triple.code == 0);
  json tres = report_of(triple)["results"];
  CHECK(tres["count"] == 8);
  CHECK(tres["alpha_intervals"].size() == 8);
  CHECK(tres["points_approx"].size() == 8);
  for (const json& p : tres["points_approx"]) {
    REQUIRE(p.size() == 3);
    for (const json& coord : p)
      CHECK(std::abs(std::abs(coord.get<double>()) - 0.7071067811865476) < 1e-9);
  }

  std::string two = path_in_scratch("two.json");
  write_file(two, R"([
    {"axis_point": ["0","0","0"], "axis_dir": ["1","0","0"], "radius_sq": "1"},
    {"axis_point": ["0","0","0"], "axis_dir": ["0","1","0"], "radius_sq": "1"}])");
  CHECK(run("incidence --cyl-triple " + two).code == 2);
  CHECK(run("incidence --points " + ring + " --rich 2").code == 2);  // needs 2d points
  CHECK(run("incidence --points " + ring).code == 2);                // no action picked
}

TEST_CASE("reports are deterministic") {
  std::string g4 = path_in_scratch("g4");
  CHECK(run("gen grid --w 4 --h 4 --out " + g4).code == 0);

  json a = stable(report_of(run("census --in " + g4 + ".pts --mode all --witnesses")));
  json b = stable(report_of(run("census --in " + g4 + ".pts --mode all --witnesses")));
  CHECK(a == b);

  json t1 = stable(report_of(run("census --in " + g4 + ".pts --mode all")));
  json t4 = stable(report_of(run("census --in " + g4 + ".pts --mode all --threads 4")));
  t1["params"].erase("threads");
  t4["params"].erase("threads");
  CHECK(t1 == t4);

  // Seeded generation is reproducible file-for-file.
  std::string m1 = path_in_scratch("mk1"), m2 = path_in_scratch("mk2");
  json r1 = stable(report_of(run("gen minkowski --k 2 --seed 7 --out " + m1)));
  json r2 = stable(report_of(run("gen minkowski --k 2 --seed 7 --out " + m2)));
  CHECK(r1["seed"] == 7);
  r1["results"].erase("outputs");
  r2["results"].erase("outputs");
  CHECK(r1 == r2);
  CHECK(read_file(m1 + ".pts") == read_file(m2 + ".pts"));
  CHECK(read_file(m1 + ".cert.json") == read_file(m2 + ".cert.json"));
}

TEST_CASE("usage and failure exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("gen --help").code == 0);
  CHECK(run("").code == 2);                                       // subcommand required
  CHECK(run("gen bogus --out " + path_in_scratch("x")).code == 2);
  CHECK(run("gen grid --w 1 --h 2 --out " + path_in_scratch("x")).code == 2);
  CHECK(run("census --in " + path_in_scratch("missing.pts")).code == 2);
  CHECK(run("census --in " + path_in_scratch("square.pts") + " --mode bogus").code == 2);
  CHECK(run("census --no-such-flag").code == 2);

  std::string dup = path_in_scratch("dup.pts");
  write_file(dup, "dim=2\n0 0\n0 0\n1 1\n");
  CHECK(run("census --in " + dup).code == 2);

  std::string badhdr = path_in_scratch("badhdr.pts");
  write_file(badhdr, "dim=4\n0 0\n");
  CHECK(run("census --in " + badhdr).code == 2);
}
