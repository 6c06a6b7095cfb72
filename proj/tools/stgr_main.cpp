#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stgr/errors.hpp"
#include "stgr/exact.hpp"
#include "stgr/gadgets.hpp"
#include "stgr/generators.hpp"
#include "stgr/graph.hpp"
#include "stgr/json_io.hpp"
#include "stgr/local_search.hpp"
#include "stgr/radius.hpp"
#include "stgr/rational.hpp"
#include "stgr/temporal.hpp"

namespace {

using stgr::json;

int g_exit = 0;

struct Common {
  std::int64_t budget = stgr::kDefaultBudget;
  int threads = 1;
  std::string output;
  std::uint64_t seed = 1;
  bool timings = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "search budget in enumeration leaves")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads for evaluation")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", c.output, "write the witness / instance file here");
  cmd->add_option("--seed", c.seed, "seed for all randomness");
  cmd->add_flag("--timings", c.timings, "include wall-clock timings in the report");
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw stgr::error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw stgr::error("failed writing '" + path + "'");
}

void emit(const json& j) { std::cout << stgr::dump_report(j); }

stgr::ParsedGraph load_instance(const std::string& path) {
  stgr::ParsedGraph pg = stgr::parse_graph_file(path);
  if (pg.coloring_input)
    throw stgr::error("'" + path + "' is a coloring input; a periodic instance is required");
  return pg;
}

stgr::ParsedGraph load_labeled(const std::string& path) {
  stgr::ParsedGraph pg = load_instance(path);
  if (!pg.labels)
    throw stgr::error("'" + path + "' carries no edge labels, but a labeling is required");
  return pg;
}

stgr::Graph load_coloring(const std::string& path) {
  stgr::ParsedGraph pg = stgr::parse_graph_file(path);
  if (!pg.coloring_input)
    throw stgr::error("'" + path + "' is not a coloring input (expected a 'p col n m' header)");
  return pg.g;
}

std::vector<int> parse_coloring_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw stgr::error("cannot open coloring file '" + path + "'");
  std::vector<int> chi(n, 0);
  std::vector<bool> seen(n + 1, false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    int v = 0, color = 0;
    std::string extra;
    if (!(ls >> v >> color) || (ls >> extra))
      throw stgr::error("coloring line " + std::to_string(lineno) +
                        ": expected '<vertex> <color>'");
    if (v < 1 || v > n)
      throw stgr::error("coloring line " + std::to_string(lineno) + ": vertex " +
                        std::to_string(v) + " out of range [1," + std::to_string(n) + "]");
    if (seen[v])
      throw stgr::error("coloring line " + std::to_string(lineno) + ": vertex " +
                        std::to_string(v) + " colored twice");
    seen[v] = true;
    chi[v - 1] = color;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw stgr::error("coloring file misses vertex " + std::to_string(v));
  return chi;
}

json instance_summary(const stgr::Graph& g, int delta) {
  stgr::Metrics met = stgr::metrics(g);
  json j;
  j["delta"] = delta;
  j["n"] = g.n;
  j["m"] = g.m();
  j["radius"] = met.radius;
  j["diameter"] = met.diameter;
  return j;
}

// ---------------------------------------------------------------- eval ----

struct EvalOpts {
  Common common;
  std::string input;
  bool matrices = false;
};

void run_eval(const EvalOpts& o) {
  stgr::ParsedGraph pg = load_labeled(o.input);
  stgr::Labeling lab = stgr::make_labeling(pg.g, pg.delta, *pg.labels);
  Stopwatch sw;
  stgr::StretchReport rep = stgr::evaluate_stretch(pg.g, lab, o.common.threads);
  json j;
  j["command"] = "eval";
  j["input"] = o.input;
  j["instance"] = instance_summary(pg.g, pg.delta);
  json result = stgr::to_json(pg.g, rep, o.matrices);
  result.erase("n");
  result.erase("m");
  result.erase("delta");
  j["result"] = std::move(result);
  if (o.common.timings) j["timings_ms"] = json{{"evaluate", sw.ms()}};
  if (!o.common.output.empty())
    write_file(o.common.output, stgr::serialize_graph(pg.g, pg.delta, &lab.labels));
  emit(j);
  g_exit = 0;
}

// -------------------------------------------------------------- radius ----

struct RadiusOpts {
  Common common;
  std::string input;
  int root = 0;
};

void run_radius(const RadiusOpts& o) {
  stgr::ParsedGraph pg = load_instance(o.input);
  std::optional<int> root;
  if (o.root > 0) root = o.root;
  Stopwatch sw;
  stgr::RadiusResult rr = stgr::radius_label(pg.g, pg.delta, root);
  stgr::BoundCertificate cert = stgr::bound_certificate(pg.g, pg.delta);
  stgr::StretchReport rep = stgr::evaluate_stretch(pg.g, rr.labeling, o.common.threads);
  json j;
  j["command"] = "radius";
  j["input"] = o.input;
  j["instance"] = instance_summary(pg.g, pg.delta);
  j["root"] = rr.root;
  j["certificate"] = stgr::to_json(cert);
  j["improved_bound_applies"] = stgr::improved_bound_applies(pg.g, rr.root);
  j["labels"] = rr.labeling.labels;
  j["stretch"] = stgr::to_json(rep.stretch);
  j["worst_pair"] = json::array({rep.worst_pair.first, rep.worst_pair.second});
  if (o.common.timings) j["timings_ms"] = json{{"total", sw.ms()}};
  if (!o.common.output.empty())
    write_file(o.common.output, stgr::serialize_graph(pg.g, pg.delta, &rr.labeling.labels));
  emit(j);
  g_exit = 0;
}

// --------------------------------------------------------------- exact ----

struct ExactOpts {
  Common common;
  std::string input;
  std::string alpha;
};

void run_exact_decide(const ExactOpts& o) {
  stgr::ParsedGraph pg = load_instance(o.input);
  stgr::Rational alpha = stgr::parse_rational(o.alpha);
  Stopwatch sw;
  std::optional<stgr::Labeling> witness = stgr::exact_decide(pg.g, pg.delta, alpha, o.common.budget);
  json j;
  j["command"] = "exact decide";
  j["input"] = o.input;
  j["alpha"] = stgr::to_json(alpha);
  j["instance"] = instance_summary(pg.g, pg.delta);
  j["feasible"] = witness.has_value();
  if (witness) {
    stgr::StretchReport rep = stgr::evaluate_stretch(pg.g, *witness, o.common.threads);
    j["labels"] = witness->labels;
    j["stretch"] = stgr::to_json(rep.stretch);
    if (!o.common.output.empty())
      write_file(o.common.output, stgr::serialize_graph(pg.g, pg.delta, &witness->labels));
  }
  if (o.common.timings) j["timings_ms"] = json{{"search", sw.ms()}};
  emit(j);
  g_exit = witness ? 0 : 1;
}

void run_exact_optimize(const ExactOpts& o) {
  stgr::ParsedGraph pg = load_instance(o.input);
  Stopwatch sw;
  stgr::OptimizeResult res = stgr::exact_optimize(pg.g, pg.delta, o.common.budget);
  stgr::StretchReport rep = stgr::evaluate_stretch(pg.g, res.witness, o.common.threads);
  json j;
  j["command"] = "exact optimize";
  j["input"] = o.input;
  j["instance"] = instance_summary(pg.g, pg.delta);
  j["optimum"] = stgr::to_json(res.alpha);
  j["labels"] = res.witness.labels;
  j["stretch"] = stgr::to_json(rep.stretch);
  if (o.common.timings) j["timings_ms"] = json{{"search", sw.ms()}};
  if (!o.common.output.empty())
    write_file(o.common.output, stgr::serialize_graph(pg.g, pg.delta, &res.witness.labels));
  emit(j);
  g_exit = 0;
}

// -------------------------------------------------------- local search ----

struct LsOpts {
  Common common;
  std::string input;
  int k = 1;
  std::string alpha0;
};

void run_local_search(const LsOpts& o) {
  stgr::ParsedGraph pg = load_labeled(o.input);
  stgr::Labeling base = stgr::make_labeling(pg.g, pg.delta, *pg.labels);
  stgr::Rational alpha0 = stgr::parse_rational(o.alpha0);
  stgr::SearchOptions opts;
  opts.budget = o.common.budget;
  Stopwatch sw;
  std::optional<stgr::Labeling> res = stgr::ls_decide(pg.g, base, o.k, alpha0, opts);
  json j;
  j["command"] = "local-search";
  j["input"] = o.input;
  j["k"] = o.k;
  j["alpha0"] = stgr::to_json(alpha0);
  j["instance"] = instance_summary(pg.g, pg.delta);
  j["found"] = res.has_value();
  if (res) {
    json changed = json::array();
    for (std::size_t e = 0; e < res->labels.size(); ++e) {
      if (res->labels[e] != base.labels[e]) {
        changed.push_back(json{{"edge", e},
                               {"u", pg.g.edges[e].first},
                               {"v", pg.g.edges[e].second},
                               {"from", base.labels[e]},
                               {"to", res->labels[e]}});
      }
    }
    stgr::StretchReport rep = stgr::evaluate_stretch(pg.g, *res, o.common.threads);
    j["changed_edges"] = std::move(changed);
    j["labels"] = res->labels;
    j["stretch"] = stgr::to_json(rep.stretch);
    if (!o.common.output.empty())
      write_file(o.common.output, stgr::serialize_graph(pg.g, pg.delta, &res->labels));
  }
  if (o.common.timings) j["timings_ms"] = json{{"search", sw.ms()}};
  emit(j);
  g_exit = res ? 0 : 1;
}

// -------------------------------------------------------------- gadget ----

struct GadgetOpts {
  Common common;
  int delta = 3;
};

void run_gadget(const GadgetOpts& o) {
  stgr::SunglassesGadget sg = stgr::sunglasses_gadget(o.delta);
  stgr::Labeling lab = stgr::sunglasses_labeling(sg);
  json j = stgr::to_json(sg);
  json wrapped;
  wrapped["command"] = "gadget";
  wrapped["gadget"] = std::move(j);
  wrapped["graph"] = stgr::serialize_graph(sg.graph, o.delta, &lab.labels);
  if (!o.common.output.empty())
    write_file(o.common.output, stgr::serialize_graph(sg.graph, o.delta, &lab.labels));
  emit(wrapped);
  g_exit = 0;
}

// ----------------------------------------------------------- reduce3col ----

struct ReduceOpts {
  Common common;
  std::string input;
  std::string coloring;
  int delta = 3;
  bool diam2 = false;
};

void run_reduce3col(const ReduceOpts& o) {
  stgr::Graph g3col = load_coloring(o.input);
  if (o.diam2 && o.delta != 3)
    throw stgr::error("--diam2 requires --delta 3 (the diameter-2 family is defined for period 3)");
  stgr::ReductionInstance inst =
      o.diam2 ? stgr::reduce_3col_diam2(g3col) : stgr::reduce_3col(g3col, o.delta);
  json j;
  j["command"] = "reduce3col";
  j["input"] = o.input;
  j["instance"] = stgr::to_json(inst);
  std::string instance_text = stgr::serialize_graph(inst.g, inst.delta);

  if (!o.coloring.empty()) {
    std::vector<int> chi = parse_coloring_file(o.coloring, inst.provenance.n);
    stgr::Labeling lab = stgr::coloring_to_labeling(inst, chi);
    stgr::StretchReport rep = stgr::evaluate_stretch(inst.g, lab, o.common.threads);
    json lj;
    lj["labels"] = lab.labels;
    lj["stretch"] = stgr::to_json(rep.stretch);
    lj["alpha_target"] = stgr::to_json(inst.alpha);
    lj["meets_target"] = !(inst.alpha < rep.stretch);
    j["labeling"] = std::move(lj);
    instance_text = stgr::serialize_graph(inst.g, inst.delta, &lab.labels);
  }
  j["graph"] = instance_text;
  if (!o.common.output.empty()) write_file(o.common.output, instance_text);
  emit(j);
  g_exit = 0;
}

// ----------------------------------------------------------------- gen ----

struct GenOpts {
  Common common;
  int n = 5;
  int delta = 3;
  std::string p = "0.5";
  bool random_labels = false;
};

void finish_gen(const std::string& model, const stgr::Graph& g, const GenOpts& o) {
  const int delta = o.delta;
  std::optional<stgr::Labeling> lab;
  if (o.random_labels) {
    stgr::Rng rng(o.common.seed);
    lab = stgr::random_labeling(g, delta, rng);
  }
  std::string text = stgr::serialize_graph(g, delta, lab ? &lab->labels : nullptr);
  if (o.common.output.empty()) {
    std::cout << text;
  } else {
    write_file(o.common.output, text);
    json j;
    j["command"] = "gen " + model;
    j["n"] = g.n;
    j["m"] = g.m();
    j["delta"] = delta;
    j["seed"] = o.common.seed;
    j["output"] = o.common.output;
    emit(j);
  }
  g_exit = 0;
}

struct HittingSetOpts {
  Common common;
  int universe = 1;
  int k = 1;
  std::string sets;
};

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<int> set;
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) {
      try {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && item[pos] == ' ') ++pos;
        if (pos != item.size()) throw std::invalid_argument(item);
        set.push_back(v);
      } catch (const std::exception&) {
        throw stgr::error("invalid set element '" + item + "' in --sets");
      }
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

void run_gen_hitting_set(const HittingSetOpts& o) {
  if (o.common.output.empty())
    throw stgr::error("gen hitting-set requires --output (the instance plus a JSON sidecar)");
  stgr::HittingSetInstance inst =
      stgr::build_hitting_set_ls_instance(o.universe, parse_sets(o.sets), o.k);
  write_file(o.common.output, stgr::serialize_graph(inst.g, inst.lab.delta, &inst.lab.labels));
  json j;
  j["command"] = "gen hitting-set";
  j["universe"] = o.universe;
  j["k"] = o.k;
  j["n"] = inst.g.n;
  j["m"] = inst.g.m();
  j["delta"] = inst.lab.delta;
  j["alpha0"] = stgr::to_json(inst.alpha0);
  j["initial_stretch"] = stgr::to_json(inst.initial_stretch);
  j["center"] = inst.center;
  j["element_ids"] = inst.element_ids;
  j["set_ids"] = inst.set_ids;
  j["pendant_ids"] = inst.pendant_ids;
  j["has_small_hyperedge"] = inst.has_small_hyperedge;
  j["output"] = o.common.output;
  write_file(o.common.output + ".json", stgr::dump_report(j));
  emit(j);
  g_exit = 0;
}

// ---------------------------------------------------------------- bench ----

struct BenchOpts {
  Common common;
  int count = 10;
  int max_n = 8;
  int delta = 3;
};

void run_bench(const BenchOpts& o) {
  std::ostringstream csv;
  csv << "n,m,delta,rad,diam,radius_stretch_num,radius_stretch_den,"
         "exact_stretch_num,exact_stretch_den";
  if (o.common.timings) csv << ",radius_ms,exact_ms";
  csv << "\n";
  stgr::Rng rng(o.common.seed);
  for (int i = 0; i < o.count; ++i) {
    int n = rng.range(3, o.max_n);
    int extra = rng.range(0, 2);
    stgr::Graph g = stgr::random_connected_graph(n, extra, rng);
    stgr::Metrics met = stgr::metrics(g);

    Stopwatch sw_r;
    stgr::RadiusResult rr = stgr::radius_label(g, o.delta);
    stgr::StretchReport rrep = stgr::evaluate_stretch(g, rr.labeling, o.common.threads);
    std::int64_t radius_ms = sw_r.ms();

    Stopwatch sw_e;
    stgr::OptimizeResult best = stgr::exact_optimize(g, o.delta, o.common.budget);
    std::int64_t exact_ms = sw_e.ms();

    csv << g.n << ',' << g.m() << ',' << o.delta << ',' << met.radius << ',' << met.diameter
        << ',' << rrep.stretch.num << ',' << rrep.stretch.den << ',' << best.alpha.num << ','
        << best.alpha.den;
    if (o.common.timings) csv << ',' << radius_ms << ',' << exact_ms;
    csv << "\n";
  }
  if (o.common.output.empty())
    std::cout << csv.str();
  else
    write_file(o.common.output, csv.str());
  g_exit = 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic temporal graph realization with bounded stretch"};
  app.require_subcommand(1);

  auto eval_opts = std::make_shared<EvalOpts>();
  CLI::App* eval = app.add_subcommand("eval", "evaluate the stretch of a labeled instance");
  eval->add_option("--input", eval_opts->input, "labeled instance file")->required();
  eval->add_flag("--matrices", eval_opts->matrices, "include duration/distance matrices");
  add_common(eval, eval_opts->common);
  eval->callback([eval_opts] { run_eval(*eval_opts); });

  auto radius_opts = std::make_shared<RadiusOpts>();
  CLI::App* radius = app.add_subcommand("radius", "layered labeling with bound certificate");
  radius->add_option("--input", radius_opts->input, "instance file")->required();
  radius->add_option("--root", radius_opts->root, "root vertex (must realize the radius)");
  add_common(radius, radius_opts->common);
  radius->callback([radius_opts] { run_radius(*radius_opts); });

  CLI::App* exact = app.add_subcommand("exact", "exhaustive solving on small instances");
  exact->require_subcommand(1);
  auto decide_opts = std::make_shared<ExactOpts>();
  CLI::App* decide = exact->add_subcommand("decide", "is a labeling of stretch <= alpha possible?");
  decide->add_option("--input", decide_opts->input, "instance file")->required();
  decide->add_option("--alpha", decide_opts->alpha, "stretch bound, 'p/q' or integer")->required();
  add_common(decide, decide_opts->common);
  decide->callback([decide_opts] { run_exact_decide(*decide_opts); });
  auto optimize_opts = std::make_shared<ExactOpts>();
  CLI::App* optimize = exact->add_subcommand("optimize", "minimum achievable stretch");
  optimize->add_option("--input", optimize_opts->input, "instance file")->required();
  add_common(optimize, optimize_opts->common);
  optimize->callback([optimize_opts] { run_exact_optimize(*optimize_opts); });

  auto ls_opts = std::make_shared<LsOpts>();
  CLI::App* ls = app.add_subcommand("local-search", "relabel at most k edges to reach alpha0");
  ls->add_option("--input", ls_opts->input, "labeled instance file")->required();
  ls->add_option("-k,--k", ls_opts->k, "maximum number of edges to relabel")->required();
  ls->add_option("--alpha0", ls_opts->alpha0, "target stretch, 'p/q' or integer")->required();
  add_common(ls, ls_opts->common);
  ls->callback([ls_opts] { run_local_search(*ls_opts); });

  auto gadget_opts = std::make_shared<GadgetOpts>();
  CLI::App* gadget = app.add_subcommand("gadget", "emit a sunglasses gadget with its labeling");
  gadget->add_option("--delta", gadget_opts->delta, "period (>= 3)")->required();
  add_common(gadget, gadget_opts->common);
  gadget->callback([gadget_opts] { run_gadget(*gadget_opts); });

  auto reduce_opts = std::make_shared<ReduceOpts>();
  CLI::App* reduce = app.add_subcommand("reduce3col", "3-coloring hardness instance builder");
  reduce->add_option("--input", reduce_opts->input, "coloring graph file ('p col')")->required();
  reduce->add_option("--delta", reduce_opts->delta, "period (>= 3)")->required();
  reduce->add_option("--coloring", reduce_opts->coloring, "proper 3-coloring file");
  reduce->add_flag("--diam2", reduce_opts->diam2, "build the diameter-2 family (delta 3)");
  add_common(reduce, reduce_opts->common);
  reduce->callback([reduce_opts] { run_reduce3col(*reduce_opts); });

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto add_gen_model = [&](const std::string& name, const std::string& desc, bool with_p,
                           bool with_seed) {
    auto opts = std::make_shared<GenOpts>();
    CLI::App* cmd = gen->add_subcommand(name, desc);
    cmd->add_option("-n,--n", opts->n, "number of vertices")->required();
    cmd->add_option("--delta", opts->delta, "period for the file header")
        ->check(CLI::PositiveNumber);
    if (with_p) cmd->add_option("--p", opts->p, "edge probability (decimal or p/q)");
    (void)with_seed;  // the seed arrives through the common options
    cmd->add_flag("--random-labels", opts->random_labels, "attach a random labeling");
    add_common(cmd, opts->common);
    cmd->callback([opts, name] {
      stgr::Graph g;
      if (name == "path")
        g = stgr::gen_path(opts->n);
      else if (name == "cycle")
        g = stgr::gen_cycle(opts->n);
      else if (name == "star")
        g = stgr::gen_star(opts->n);
      else if (name == "tree")
        g = stgr::gen_tree(opts->n, opts->common.seed);
      else
        g = stgr::gen_gnp(opts->n, stgr::parse_probability(opts->p), opts->common.seed);
      finish_gen(name, g, *opts);
    });
  };
  add_gen_model("path", "path graph", false, false);
  add_gen_model("cycle", "cycle graph", false, false);
  add_gen_model("star", "star graph", false, false);
  add_gen_model("tree", "random tree", false, true);
  add_gen_model("gnp", "connected G(n,p) sample", true, true);

  auto hs_opts = std::make_shared<HittingSetOpts>();
  CLI::App* hs = gen->add_subcommand("hitting-set", "local-search instance from a set system");
  hs->add_option("--universe", hs_opts->universe, "number of elements")->required();
  hs->add_option("--sets", hs_opts->sets, "hyperedges, e.g. '1,2;2,3'")->required();
  hs->add_option("-k,--k", hs_opts->k, "relabeling budget")->required();
  add_common(hs, hs_opts->common);
  hs->callback([hs_opts] { run_gen_hitting_set(*hs_opts); });

  auto bench_opts = std::make_shared<BenchOpts>();
  CLI::App* bench = app.add_subcommand("bench", "layered construction vs optimum, CSV output");
  bench->add_option("--count", bench_opts->count, "number of instances")->check(CLI::PositiveNumber);
  bench->add_option("--max-n", bench_opts->max_n, "largest vertex count")->check(CLI::PositiveNumber);
  bench->add_option("--delta", bench_opts->delta, "period")->check(CLI::PositiveNumber);
  add_common(bench, bench_opts->common);
  bench->callback([bench_opts] { run_bench(*bench_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const stgr::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const stgr::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
