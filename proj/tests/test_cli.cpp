#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "stgr/gadgets.hpp"
#include "stgr/generators.hpp"
#include "stgr/graph.hpp"
#include "stgr/temporal.hpp"

namespace fs = std::filesystem;
using njson = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(STGR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("stgr_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return s;
}

}  // namespace

TEST_CASE("cli: gen emits raw graph text on stdout") {
  RunResult r = run_cli("gen path -n 5 --delta 4");
  CHECK(r.exit_code == 0);
  stgr::ParsedGraph pg = stgr::parse_graph_string(r.out);
  CHECK(pg.g.n == 5);
  CHECK(pg.g.m() == 4);
  CHECK(pg.delta == 4);

  RunResult again = run_cli("gen path -n 5 --delta 4");
  CHECK(again.out == r.out);
}

TEST_CASE("cli: gnp generation is seed-deterministic") {
  RunResult a = run_cli("gen gnp -n 8 --p 0.4 --seed 7");
  RunResult b = run_cli("gen gnp -n 8 --p 0.4 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  stgr::ParsedGraph pg = stgr::parse_graph_string(a.out);
  CHECK(pg.g.n == 8);
}

TEST_CASE("cli: eval reports the fixture stretch") {
  stgr::Graph star = stgr::gen_star(5);
  std::vector<int> labels(4, 2);
  std::string path = write_fixture("star14.stgr", stgr::serialize_graph(star, 3, &labels));

  RunResult r = run_cli("eval --input " + path);
  REQUIRE(r.exit_code == 0);
  njson j = njson::parse(r.out);
  CHECK(j["result"]["stretch"]["num"] == 2);
  CHECK(j["result"]["stretch"]["den"] == 1);
  CHECK(j["instance"]["n"] == 5);
  CHECK(j["instance"]["delta"] == 3);

  // unlabeled input is a usage error
  std::string bare = write_fixture("star14_bare.stgr", stgr::serialize_graph(star, 3));
  CHECK(run_cli("eval --input " + bare).exit_code == 2);

  // thread count must not affect the bytes
  CHECK(run_cli("eval --threads 4 --input " + path).out == r.out);
}

TEST_CASE("cli: exact decide exit codes separate yes from no") {
  stgr::Graph star13 = stgr::gen_star(4);
  std::string path = write_fixture("star13.stgr", stgr::serialize_graph(star13, 2));

  CHECK(run_cli("exact decide --alpha 3/2 --input " + path).exit_code == 0);
  CHECK(run_cli("exact decide --alpha 4/3 --input " + path).exit_code == 1);
  CHECK(run_cli("exact decide --alpha 3/2 --budget 1 --input " + path).exit_code == 3);
  CHECK(run_cli("exact decide --input " + path).exit_code == 2);     // missing --alpha
  CHECK(run_cli("exact decide --alpha nonsense --input " + path).exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);                       // unknown subcommand

  RunResult opt = run_cli("exact optimize --input " + path);
  REQUIRE(opt.exit_code == 0);
  njson j = njson::parse(opt.out);
  CHECK(j["optimum"]["num"] == 3);
  CHECK(j["optimum"]["den"] == 2);
}

TEST_CASE("cli: radius witness file re-evaluates to the reported stretch") {
  stgr::Rng rng(17);
  stgr::Graph g = stgr::random_connected_graph(9, 4, rng);
  std::string path = write_fixture("rad_input.stgr", stgr::serialize_graph(g, 5));
  std::string witness = (scratch_dir() / "rad_witness.stgr").string();

  RunResult r = run_cli("radius --input " + path + " --output " + witness);
  REQUIRE(r.exit_code == 0);
  njson j = njson::parse(r.out);

  RunResult ev = run_cli("eval --input " + witness);
  REQUIRE(ev.exit_code == 0);
  njson je = njson::parse(ev.out);
  CHECK(je["result"]["stretch"] == j["stretch"]);

  // repeated runs are byte-identical, including the witness file
  std::string first_bytes = slurp(witness);
  RunResult r2 = run_cli("radius --input " + path + " --output " + witness);
  CHECK(r2.out == r.out);
  CHECK(slurp(witness) == first_bytes);
}

TEST_CASE("cli: local-search on the hitting-set fixture") {
  std::string inst = (scratch_dir() / "hs.stgr").string();
  RunResult gen = run_cli("gen hitting-set --universe 3 --sets '1,2;2,3' -k 1 --output " + inst);
  REQUIRE(gen.exit_code == 0);

  njson sidecar = njson::parse(slurp(inst + ".json"));
  CHECK(sidecar["alpha0"]["num"] == 3);
  CHECK(sidecar["alpha0"]["den"] == 2);
  CHECK(sidecar["initial_stretch"]["num"] == 5);
  CHECK(sidecar["initial_stretch"]["den"] == 3);

  CHECK(run_cli("local-search -k 1 --alpha0 3/2 --input " + inst).exit_code == 0);
  CHECK(run_cli("local-search -k 0 --alpha0 3/2 --input " + inst).exit_code == 1);

  // without --output the subcommand is a usage error
  CHECK(run_cli("gen hitting-set --universe 3 --sets '1,2;2,3' -k 1").exit_code == 2);
}

TEST_CASE("cli: gadget emission") {
  RunResult r = run_cli("gadget --delta 4");
  REQUIRE(r.exit_code == 0);
  njson j = njson::parse(r.out);
  stgr::ParsedGraph pg = stgr::parse_graph_string(j["graph"].get<std::string>());
  CHECK(pg.g.n == 8);
  CHECK(pg.g.m() == 15);
  REQUIRE(pg.labels.has_value());
  CHECK(j["gadget"]["delta"] == 4);
}

TEST_CASE("cli: reduce3col families") {
  stgr::Graph p4 = stgr::gen_path(4);
  std::string col = write_fixture("p4.col", stgr::serialize_coloring_graph(p4));
  std::string chi = write_fixture("p4.chi", "c proper coloring\n1 1\n2 2\n3 3\n4 1\n");

  RunResult tight = run_cli("reduce3col --delta 3 --input " + col + " --coloring " + chi);
  REQUIRE(tight.exit_code == 0);
  njson jt = njson::parse(tight.out);
  CHECK(jt["labeling"]["meets_target"] == true);

  RunResult d2 = run_cli("reduce3col --delta 3 --diam2 --input " + col + " --coloring " + chi);
  REQUIRE(d2.exit_code == 0);
  njson jd = njson::parse(d2.out);
  CHECK(jd["labeling"]["stretch"]["num"] == 1);
  CHECK(jd["labeling"]["stretch"]["den"] == 1);

  CHECK(run_cli("reduce3col --delta 4 --diam2 --input " + col).exit_code == 2);

  // instance emission without a coloring still succeeds
  std::string out5 = (scratch_dir() / "inst5.stgr").string();
  RunResult d5 = run_cli("reduce3col --delta 5 --input " + col + " --output " + out5);
  REQUIRE(d5.exit_code == 0);
  stgr::ParsedGraph pg = stgr::parse_graph_string(slurp(out5));
  CHECK(pg.delta == 5);
  CHECK_FALSE(pg.labels.has_value());

  // a periodic instance is rejected where a coloring input is required
  std::string wrong = write_fixture("wrong.stgr", stgr::serialize_graph(p4, 3));
  CHECK(run_cli("reduce3col --delta 3 --input " + wrong).exit_code == 2);
}

TEST_CASE("cli: bench CSV is deterministic") {
  RunResult a = run_cli("bench --count 3 --max-n 6 --delta 3 --seed 5");
  RunResult b = run_cli("bench --count 3 --max-n 6 --delta 3 --seed 5");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,m,delta,rad,diam,radius_stretch_num,radius_stretch_den,"
                    "exact_stretch_num,exact_stretch_den\n",
                    0) == 0);
  int lines = 0;
  for (char c : a.out)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + three rows
}
