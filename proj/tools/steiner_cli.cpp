// steiner-degree: instance generation, solvers, oracles, and statistical
// reports for degree-bounded group Steiner problems.
//
// Exit codes: 0 success, 2 infeasible instance/model, 3 iteration or round
// cap exceeded, 1 anything else. Reports are deterministic for a fixed seed;
// wall-clock timing goes to stderr only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/contraction.hpp"
#include "steiner/generator.hpp"
#include "steiner/instance_json.hpp"
#include "steiner/ktree.hpp"
#include "steiner/lp_gst.hpp"
#include "steiner/oracle.hpp"
#include "steiner/parallel.hpp"
#include "steiner/rounding.hpp"
#include "steiner/separator.hpp"

using json = nlohmann::ordered_json;
using namespace steiner;

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitCapExceeded = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

json tree_to_json(const SubTree& tree) {
  json j;
  j["nodes"] = tree.nodes;
  json edges = json::array();
  for (const auto& [u, v] : tree.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["max_degree"] = max_degree(tree);
  return j;
}

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream outer(text);
  std::string part;
  while (std::getline(outer, part, ';')) {
    std::vector<int> set;
    std::stringstream inner(part);
    std::string item;
    while (std::getline(inner, item, ',')) {
      if (!item.empty()) set.push_back(std::stoi(item));
    }
    if (!set.empty()) sets.push_back(std::move(set));
  }
  return sets;
}

struct CommonFlags {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  int iter_cap = -1;
  std::optional<int> root;
  std::optional<int> cover_threshold;
};

GstInstance load_gst(const std::string& path, const CommonFlags& flags) {
  const ParsedInstance parsed = parse_instance_json(read_file(path));
  GstInstance inst = parsed.to_gst();
  if (flags.root) inst.root = *flags.root;
  if (flags.cover_threshold) inst.cover_threshold = *flags.cover_threshold;
  const auto errors = validate(inst);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());
  return inst;
}

int classify_error(const std::exception& e) {
  const std::string what = e.what();
  if (what.find("infeasible") != std::string::npos) return kExitInfeasible;
  if (what.find("cap exceeded") != std::string::npos) return kExitCapExceeded;
  return 1;
}

std::string csv_escape(const std::string& s) { return s; }

// CSV projection of a flat array of homogeneous JSON objects.
std::string rows_to_csv(const json& rows) {
  if (!rows.is_array() || rows.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : rows[0].items()) {
    os << (first ? "" : ",") << csv_escape(key);
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      os << (first ? "" : ",");
      if (value.is_string()) {
        os << csv_escape(value.get<std::string>());
      } else {
        os << value.dump();
      }
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

class Stopwatch {
 public:
  explicit Stopwatch(std::string label) : label_(std::move(label)) {
    start_ = std::chrono::steady_clock::now();
  }
  ~Stopwatch() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const double ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    std::cerr << label_ << ": " << ms << " ms\n";
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------- gen

int cmd_gen(const GenParams& params, const std::string& sets_text, bool unrooted,
            const std::string& out) {
  GenParams p = params;
  p.rooted = !unrooted;
  if (!sets_text.empty()) p.sets = parse_sets(sets_text);
  const Generated result = generate(p);
  if (result.ktree) {
    write_output(out, ktree_to_json(*result.ktree));
  } else {
    write_output(out, gst_to_json(*result.gst));
  }
  return 0;
}

// ---------------------------------------------------------------- solve-tree

int cmd_solve_tree(const std::string& instance_path, const CommonFlags& flags,
                   const std::string& objective, const std::string& dump_lp_path) {
  GstInstance inst = load_gst(instance_path, flags);
  const int n = inst.graph.node_count();

  json report;
  report["command"] = "solve-tree";
  json config;
  config["seed"] = flags.seed;
  config["objective"] = objective;
  config["iter_cap"] =
      flags.iter_cap >= 0 ? flags.iter_cap
                          : default_iteration_cap(inst.max_group_size(), inst.group_count());
  config["cover_threshold"] = inst.required_cover();
  config["degree_threshold_constant"] = 40;
  config["iteration_cap_constant"] = 64;
  report["config"] = std::move(config);

  Rng rng(flags.seed);
  if (objective == "min-degree") {
    const SubTree tree = solve_md_gst_tree(inst, rng);
    report["tree"] = tree_to_json(tree);
    report["covers"] = covers(tree, inst);
  } else {
    if (!inst.root) throw std::invalid_argument("root missing (use --root)");
    if (inst.bounds.empty()) inst.bounds.assign(n, n > 1 ? n - 1 : 1);
    if (!dump_lp_path.empty()) {
      const GstLpModel model = build_lp(inst, true);
      write_output(dump_lp_path, dump_lp(model));
    }
    RoundingTrace trace;
    trace.seed = flags.seed;
    const BicriteriaResult res = solve_bd_gst_tree(inst, rng, flags.iter_cap, &trace);
    report["tree"] = tree_to_json(res.tree);
    report["cost"] = res.cost.to_double();
    report["lp_objective"] = res.lp_objective;
    report["iterations"] = res.iterations;
    double worst = 0;
    for (double r : res.degree_ratio) worst = std::max(worst, r);
    report["max_degree_ratio"] = worst;
    report["covers"] = covers(res.tree, inst);
  }
  write_output(flags.out, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- btw

int cmd_btw(const std::string& instance_path, const CommonFlags& flags, int w,
            const std::string& dot_path) {
  const GstInstance inst = load_gst(instance_path, flags);

  int used_w = w;
  SubTree tree;
  Rng rng(flags.seed);
  if (w > 0) {
    tree = solve_md_gst_btw(inst, w, rng);
  } else {
    // width unknown: raise w until the separator recursion succeeds
    std::string last = "no separator within width bound";
    bool solved = false;
    for (used_w = 1; used_w <= 8 && !solved; ++used_w) {
      try {
        tree = solve_md_gst_btw(inst, used_w, rng);
        solved = true;
        break;
      } catch (const std::runtime_error& e) {
        last = e.what();
        if (std::string(e.what()).find("separator") == std::string::npos) throw;
      }
    }
    if (!solved) throw std::runtime_error(last);
  }

  if (!dot_path.empty()) {
    const SeparatorTree sep = build_separator_tree(inst.graph, used_w);
    const SeparatorConnectors conn = connect_separators(inst.graph, sep);
    const ContractedInstance ci = contract(inst.graph, sep, conn, inst.groups);
    write_output(dot_path + ".sep.dot", separator_tree_dot(sep));
    write_output(dot_path + ".tprime.dot", tprime_dot(ci));
  }

  json report;
  report["command"] = "btw";
  report["config"] = {{"seed", flags.seed}, {"w", used_w}};
  report["tree"] = tree_to_json(tree);
  report["covers"] = covers(tree, inst);
  write_output(flags.out, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- ktree

int cmd_ktree(const std::string& instance_path, const CommonFlags& flags,
              const std::string& mode, const std::string& solver_kind) {
  const ParsedInstance parsed = parse_instance_json(read_file(instance_path));
  const KTreeInstance inst = parsed.to_ktree();
  const auto errors = validate(inst);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());

  GstSolver solver;
  std::string solver_name = solver_kind;
  if (solver_kind == "auto") {
    solver_name = inst.graph.node_count() <= 16 ? "oracle" : "btw";
  }
  if (solver_name == "oracle") {
    solver = [](const GstInstance& gst, Rng&) { return brute_md_gst(gst).tree; };
  } else if (solver_name == "tree") {
    solver = [](const GstInstance& gst, Rng& r) { return solve_md_gst_tree(gst, r); };
  } else if (solver_name == "btw") {
    solver = [](const GstInstance& gst, Rng& r) {
      for (int w = 1; w <= 8; ++w) {
        try {
          return solve_md_gst_btw(gst, w, r);
        } catch (const std::runtime_error& e) {
          if (std::string(e.what()).find("separator") == std::string::npos) throw;
        }
      }
      throw std::runtime_error("no separator within width bound");
    };
  } else {
    throw std::invalid_argument("unknown gst solver \"" + solver_name + "\"");
  }

  Rng rng(flags.seed);
  const BinningMode binning =
      mode == "derandomized" ? BinningMode::Derandomized : BinningMode::Randomized;
  const ReductionOutcome out = solve_md_ktree(inst, solver, binning, rng);

  json report;
  report["command"] = "ktree";
  report["config"] = {{"seed", flags.seed}, {"mode", mode}, {"gst_solver", solver_name},
                      {"k", inst.k}};
  report["tree"] = tree_to_json(out.tree);
  report["terminals_covered"] = out.terminals_covered;
  report["rounds"] = out.rounds;
  json sweep = json::array();
  for (const auto& row : out.sweep) {
    sweep.push_back({{"round", row.round},
                     {"a", row.a},
                     {"b", row.b},
                     {"full_bins", row.bins_covered},
                     {"degree", row.degree},
                     {"terminals", row.terminals}});
  }
  report["sweep"] = std::move(sweep);

  if (flags.format == "csv") {
    write_output(flags.out, rows_to_csv(report["sweep"]));
  } else {
    write_output(flags.out, report.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const std::string& instance_path, const CommonFlags& flags, bool min_cost) {
  const ParsedInstance parsed = parse_instance_json(read_file(instance_path));
  json report;
  report["command"] = "oracle";
  if (parsed.has_groups()) {
    GstInstance inst = parsed.to_gst();
    if (flags.root) inst.root = *flags.root;
    if (flags.cover_threshold) inst.cover_threshold = *flags.cover_threshold;
    const OracleResult r = min_cost ? brute_min_cost_gst(inst) : brute_md_gst(inst);
    report["objective"] = min_cost ? json(r.cost.to_double()) : json(r.max_degree);
    report["tree"] = tree_to_json(r.tree);
  } else if (parsed.has_terminals()) {
    const KTreeInstance inst = parsed.to_ktree();
    const OracleResult r = brute_md_ktree(inst);
    report["objective"] = r.max_degree;
    report["tree"] = tree_to_json(r.tree);
    report["optimum_terminals"] = r.terminals;
  } else {
    throw std::invalid_argument("instance has neither groups nor terminals/k");
  }
  write_output(flags.out, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- stats

int cmd_stats(const std::string& instance_path, const CommonFlags& flags, int trials) {
  GstInstance inst = load_gst(instance_path, flags);
  if (!inst.root) throw std::invalid_argument("root missing (use --root)");
  if (inst.bounds.empty())
    inst.bounds.assign(inst.graph.node_count(), std::max(1, inst.graph.node_count() - 1));

  Rng rng(flags.seed);
  RoundingTrace trace;
  trace.seed = flags.seed;
  const BicriteriaResult res = solve_bd_gst_tree(inst, rng, flags.iter_cap, &trace);

  const GstLpModel model = build_lp(inst, true);
  const FractionalSolution sol = monotonize(solve_lp(model, inst), inst);
  const RootedTree tree(inst.graph, *inst.root);

  json report;
  report["command"] = "stats";
  report["config"] = {{"seed", flags.seed},
                      {"trials", trials},
                      {"tau_regime_constant", 1},
                      {"degree_threshold_constant", 40}};
  report["lp_objective"] = sol.objective;
  report["iterations"] = res.iterations;
  report["trace"] = json::parse(trace.to_json());

  json conc = json::array();
  for (const auto& row : degree_concentration_report(trace, inst, sol)) {
    conc.push_back({{"node", row.node},
                    {"tau", row.tau},
                    {"realized_degree", row.realized_degree},
                    {"raw_kept", row.raw_kept},
                    {"regime", row.regime},
                    {"threshold", row.threshold},
                    {"within", row.within}});
  }
  report["degree_concentration"] = std::move(conc);

  json probs = json::array();
  for (int gi = 0; gi < inst.group_count(); ++gi) {
    Rng sub = Rng::substream(flags.seed, 7000 + gi);
    const double p =
        estimate_connect_prob(tree, inst.graph, sol, inst.groups[gi], trials, sub);
    probs.push_back({{"group", gi}, {"estimate", p}});
  }
  report["connect_prob"] = std::move(probs);

  write_output(flags.out, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchRow {
  json data;
};

int cmd_bench(const CommonFlags& flags, const std::string& suite, int runs, int n, int groups,
              int group_size) {
  json rows = json::array();
  std::vector<json> slots(runs);

  if (suite == "theorem3") {
    parallel_for(runs, [&](int i) {
      const GstInstance inst =
          gen_random_tree_gst(n, groups, group_size, flags.seed + i, "degree", 8);
      Rng rng = Rng::substream(flags.seed, i);
      RoundingTrace trace;
      const BicriteriaResult res = solve_bd_gst_tree(inst, rng, flags.iter_cap, &trace);
      double worst = 0;
      for (double r : res.degree_ratio) worst = std::max(worst, r);
      slots[i] = {{"trial", i},
                  {"cost", res.cost.to_double()},
                  {"lp_objective", res.lp_objective},
                  {"cost_ratio", res.lp_objective > 0 ? res.cost.to_double() / res.lp_objective
                                                      : 1.0},
                  {"iterations", res.iterations},
                  {"max_degree_ratio", worst}};
    });
  } else if (suite == "theorem1") {
    parallel_for(runs, [&](int i) {
      const KTreeInstance inst = gen_random_ktree(10, 6, 3 + i % 4, flags.seed + i);
      Rng rng = Rng::substream(flags.seed, i);
      const GstSolver oracle = [](const GstInstance& gst, Rng&) {
        return brute_md_gst(gst).tree;
      };
      const ReductionOutcome out = solve_md_ktree(inst, oracle, BinningMode::Randomized, rng);
      const OracleResult best = brute_md_ktree(inst);
      slots[i] = {{"trial", i},
                  {"k", inst.k},
                  {"terminals", static_cast<int>(out.terminals_covered.size())},
                  {"degree", out.max_degree},
                  {"oracle_degree", best.max_degree},
                  {"rounds", out.rounds}};
    });
  } else if (suite == "theorem2") {
    parallel_for(runs, [&](int i) {
      const GstInstance inst = gen_bounded_tw_gst(13, 2, 3, 3, flags.seed + i);
      Rng rng = Rng::substream(flags.seed, i);
      const SubTree tree = solve_md_gst_btw(inst, 2, rng);
      const OracleResult best = brute_md_gst(inst);
      slots[i] = {{"trial", i},
                  {"feasible", covers(tree, inst) >= inst.required_cover()},
                  {"degree", max_degree(tree)},
                  {"oracle_degree", best.max_degree}};
    });
  } else if (suite == "gkr") {
    parallel_for(runs, [&](int i) {
      const GstInstance inst =
          gen_random_tree_gst(n, groups, group_size, flags.seed + i, "none", 1);
      GstInstance rooted = inst;
      if (!rooted.root) rooted.root = 0;
      const GstLpModel model = build_lp(rooted, false);
      const FractionalSolution sol = monotonize(solve_lp(model, rooted), rooted);
      const RootedTree tree(rooted.graph, *rooted.root);
      Rng rng = Rng::substream(flags.seed, i);
      double min_prob = 1.0;
      for (const auto& group : rooted.groups) {
        min_prob = std::min(
            min_prob, estimate_connect_prob(tree, rooted.graph, sol, group, 2000, rng));
      }
      slots[i] = {{"trial", i}, {"min_connect_prob", min_prob}};
    });
  } else {
    throw std::invalid_argument("unknown bench suite \"" + suite + "\"");
  }

  for (auto& s : slots) rows.push_back(std::move(s));

  json report;
  report["command"] = "bench";
  report["config"] = {{"suite", suite},         {"runs", runs},
                      {"seed", flags.seed},     {"n", n},
                      {"groups", groups},       {"group_size", group_size},
                      {"iteration_cap_constant", 64}, {"degree_threshold_constant", 40},
                      {"cost_ratio_constant", 16}};
  report["rows"] = rows;

  // order-independent aggregates over the trial rows
  json aggregate;
  auto mean_of = [&](const char* key) {
    double sum = 0;
    int count = 0;
    for (const auto& row : rows) {
      if (row.contains(key)) {
        sum += row[key].get<double>();
        ++count;
      }
    }
    return count > 0 ? sum / count : 0.0;
  };
  auto max_of = [&](const char* key) {
    double best = 0;
    for (const auto& row : rows) {
      if (row.contains(key)) best = std::max(best, row[key].get<double>());
    }
    return best;
  };
  if (suite == "theorem3") {
    aggregate["mean_cost_ratio"] = mean_of("cost_ratio");
    aggregate["max_degree_ratio"] = max_of("max_degree_ratio");
    aggregate["mean_iterations"] = mean_of("iterations");
  } else if (suite == "theorem1") {
    aggregate["mean_degree"] = mean_of("degree");
    aggregate["mean_oracle_degree"] = mean_of("oracle_degree");
  } else if (suite == "theorem2") {
    aggregate["mean_degree"] = mean_of("degree");
    aggregate["mean_oracle_degree"] = mean_of("oracle_degree");
  } else if (suite == "gkr") {
    aggregate["mean_min_connect_prob"] = mean_of("min_connect_prob");
  }
  report["aggregate"] = std::move(aggregate);

  if (flags.format == "csv") {
    write_output(flags.out, rows_to_csv(report["rows"]));
  } else {
    write_output(flags.out, report.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-bounded group Steiner tree toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  GenParams gen_params;
  std::string sets_text;
  bool unrooted = false;
  std::string instance_path;
  std::string objective = "bicriteria";
  std::string dump_lp_path;
  std::string dot_path;
  std::string mode = "randomized";
  std::string solver_kind = "auto";
  std::string suite = "theorem3";
  bool min_cost = false;
  int w = 0;
  int trials = 1000;
  int runs = 20;
  int bench_n = 64;
  int bench_groups = 6;
  int bench_group_size = 8;

  auto add_common = [&](CLI::App* cmd, bool with_instance = true) {
    if (with_instance) cmd->add_option("instance", instance_path, "instance JSON file")->required();
    cmd->add_option("--seed", flags.seed, "PRNG seed");
    cmd->add_option("--out", flags.out, "output path (default stdout)");
    cmd->add_option("--format", flags.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--iter-cap", flags.iter_cap, "rounding iteration cap");
    cmd->add_option("--root", [&flags](const std::vector<std::string>& vals) {
      flags.root = std::stoi(vals[0]);
      return true;
    }, "override the instance root");
    cmd->add_option("--cover-threshold", [&flags](const std::vector<std::string>& vals) {
      flags.cover_threshold = std::stoi(vals[0]);
      return true;
    }, "groups required (partial cover)");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--kind", gen_params.kind,
                  "random-tree | bounded-tw | star | hitting-set-star | grid-strip");
  gen->add_option("--n", gen_params.n, "node count");
  gen->add_option("--w", gen_params.w, "target width (bounded-tw)");
  gen->add_option("--rows", gen_params.rows, "grid rows");
  gen->add_option("--cols", gen_params.cols, "grid cols");
  gen->add_option("--leaves", gen_params.leaves, "star leaves");
  gen->add_option("--groups", gen_params.groups, "group count");
  gen->add_option("--group-size", gen_params.max_group_size, "max group size");
  gen->add_option("--bounds-mode", gen_params.bounds_mode, "none | degree | uniform");
  gen->add_option("--uniform-bound", gen_params.uniform_bound, "bound for uniform mode");
  gen->add_option("--max-cost", gen_params.max_cost, "integer costs in [1, max]");
  gen->add_option("--delete-prob", gen_params.delete_prob, "edge deletion probability");
  gen->add_option("--sets", sets_text, "hitting sets, e.g. \"1,2;2,3\"");
  gen->add_option("--terminals", gen_params.terminals, "terminal count (k-tree)");
  gen->add_option("--k", gen_params.k, "emit a k-tree instance with this k");
  gen->add_option("--seed", gen_params.seed, "PRNG seed");
  gen->add_option("--out", flags.out, "output path");
  gen->add_flag("--unrooted", unrooted, "omit the root field");

  CLI::App* solve = app.add_subcommand("solve-tree", "bicriteria / min-degree GST on a tree");
  add_common(solve);
  solve->add_option("--objective", objective, "bicriteria | min-degree")
      ->check(CLI::IsMember({"bicriteria", "min-degree"}));
  solve->add_option("--dump-lp", dump_lp_path, "write the LP in interchange format");

  CLI::App* btw = app.add_subcommand("btw", "min-degree GST on a bounded-treewidth graph");
  add_common(btw);
  btw->add_option("--w", w, "width parameter (0 = search upward)");
  btw->add_option("--dot", dot_path, "write separator tree / T' DOT files");

  CLI::App* ktree = app.add_subcommand("ktree", "min-degree Steiner k-tree reductions");
  add_common(ktree);
  ktree->add_option("--mode", mode, "randomized | derandomized")
      ->check(CLI::IsMember({"randomized", "derandomized"}));
  ktree->add_option("--gst-solver", solver_kind, "auto | oracle | tree | btw");

  CLI::App* oracle = app.add_subcommand("oracle", "exact brute-force optimum (n <= 16)");
  add_common(oracle);
  oracle->add_flag("--min-cost", min_cost, "min-cost bounded-degree objective");

  CLI::App* stats = app.add_subcommand("stats", "rounding trace and concentration report");
  add_common(stats);
  stats->add_option("--trials", trials, "Monte Carlo trials per group");

  CLI::App* bench = app.add_subcommand("bench", "seeded experiment suites");
  add_common(bench, false);
  bench->add_option("--suite", suite, "theorem1 | theorem2 | theorem3 | gkr");
  bench->add_option("--runs", runs, "trial count");
  bench->add_option("--n", bench_n, "instance size");
  bench->add_option("--groups", bench_groups, "group count");
  bench->add_option("--group-size", bench_group_size, "max group size");

  CLI11_PARSE(app, argc, argv);

  try {
    Stopwatch watch("wall time");
    if (gen->parsed()) return cmd_gen(gen_params, sets_text, unrooted, flags.out);
    if (solve->parsed()) return cmd_solve_tree(instance_path, flags, objective, dump_lp_path);
    if (btw->parsed()) return cmd_btw(instance_path, flags, w, dot_path);
    if (ktree->parsed()) return cmd_ktree(instance_path, flags, mode, solver_kind);
    if (oracle->parsed()) return cmd_oracle(instance_path, flags, min_cost);
    if (stats->parsed()) return cmd_stats(instance_path, flags, trials);
    if (bench->parsed())
      return cmd_bench(flags, suite, runs, bench_n, bench_groups, bench_group_size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_error(e);
  }
  return 1;
}
