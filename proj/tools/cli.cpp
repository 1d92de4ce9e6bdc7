#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dim/graph_io.hpp"
#include "dim/long_claw.hpp"
#include "dim/matching.hpp"
#include "dim/oracle.hpp"
#include "dim/pipeline.hpp"

namespace dim::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  if (path == "-") return load_graph(std::cin);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return load_graph(f);
}

void write_to(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  body(f);
}

struct SolveArgs {
  std::string graph;
  std::string cert;
  bool trace = false;
  bool allow_unchecked = false;
  bool stats = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = read_graph(a.graph);
  SolveOptions opt;
  opt.check_s222 = !a.allow_unchecked;
  SolveReport r;
  try {
    r = solve(g, opt);
  } catch (const NotS222Free& e) {
    err << "dimsolve: " << e.what() << '\n';
    return kUsage;
  }
  if (a.trace) write_trace(err, r.trace);
  if (r.decision == Decision::No) {
    out << "NO " << (r.witness.describe().empty() ? r.witness.rule : r.witness.describe()) << '\n';
  } else {
    out << "YES\n";
    write_to(a.cert, out, [&](std::ostream& o) { write_certificate(o, g, r.coloring); });
  }
  if (a.stats) {
    err << "propagations=" << r.counts.propagations << " cleanings=" << r.counts.cleanings
        << " rewrites=" << r.counts.rewrites << " family=" << r.counts.family_sets
        << " hitting=" << r.counts.hitting_size << " seconds=" << r.seconds << '\n';
    for (const auto& [rule, n] : r.per_rule) err << "  " << rule << ' ' << n << '\n';
  }
  return r.decision == Decision::Yes ? kYes : kNo;
}

int cmd_check(const std::string& graph, const std::string& cert, std::ostream& out) {
  Graph g = read_graph(graph);
  std::ifstream f(cert);
  if (!f) throw UsageError("cannot read " + cert);
  PartialColoring c = read_certificate(f, g);
  for (VertexId v : g.vertices())
    if (c.is_uncolored(v)) {
      out << "FAIL vertex " << v + 1 << " has no color\n";
      return kNo;
    }
  for (auto [u, v] : g.edges())
    if (c.is_white(u) && c.is_white(v)) {
      out << "FAIL white edge " << u + 1 << ' ' << v + 1 << '\n';
      return kNo;
    }
  for (VertexId v : g.vertices())
    if (c.is_black(v) && black_neighbors(g, c, v) != 1) {
      out << "FAIL black vertex " << v + 1 << " has " << black_neighbors(g, c, v) << " black neighbours\n";
      return kNo;
    }
  out << "OK\n";
  return kYes;
}

struct GenArgs {
  std::string model = "uniform";
  int n = 10;
  std::uint64_t seed = 1;
  double density = 0.25;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  try {
    spec.model = parse_model(a.model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.n = a.n;
  spec.seed = a.seed;
  spec.density = a.density;
  Graph g;
  try {
    g = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::runtime_error& e) {
    err << "dimsolve: " << e.what() << '\n';
    return kNo;
  }
  write_to(a.output, out, [&](std::ostream& o) {
    o << "# " << a.model << " n=" << a.n << " seed=" << a.seed << '\n';
    save_graph(o, g);
  });
  return kYes;
}

int cmd_oracle(const std::string& graph, std::ostream& out) {
  Graph g = read_graph(graph);
  if (g.vertex_count() > kBruteForceLimit)
    throw UsageError("oracle refuses graphs above " + std::to_string(kBruteForceLimit) + " vertices");
  auto c = brute_dim(g);
  if (!c) {
    out << "NO\n";
    return kNo;
  }
  out << "YES\n";
  write_certificate(out, g, *c);
  return kYes;
}

struct CompareArgs {
  std::string model = "uniform";
  int n_min = 7;
  int n_max = 14;
  int count = 1000;
  std::uint64_t seed = 1;
  double density = 0.25;
  int jobs = 1;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  Model model;
  try {
    model = parse_model(a.model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.n_min > a.n_max || a.n_max > static_cast<int>(kBruteForceLimit))
    throw UsageError("bad size range");
  std::atomic<int> next{0}, yes{0}, skipped{0};
  std::mutex lock;
  std::vector<std::string> reports;
  auto worker = [&] {
    for (int i; (i = next++) < a.count;) {
      std::mt19937_64 pick(a.seed + static_cast<std::uint64_t>(i));
      GeneratorSpec spec;
      spec.model = model;
      spec.n = a.n_min + static_cast<int>(pick() % static_cast<std::uint64_t>(a.n_max - a.n_min + 1));
      spec.seed = pick();
      spec.density = a.density;
      Graph g;
      try {
        g = generate(spec);
      } catch (const std::exception&) {
        ++skipped;
        continue;
      }
      bool truth = brute_dim(g).has_value();
      std::string problem;
      try {
        SolveReport r = solve(g);
        bool got = r.decision == Decision::Yes;
        yes += got;
        if (got != truth) problem = got ? "solver YES, oracle NO" : "solver NO (" + r.witness.rule + "), oracle YES";
      } catch (const std::exception& e) {
        problem = std::string("solver error: ") + e.what();
      }
      if (!problem.empty()) {
        std::lock_guard guard(lock);
        reports.push_back("instance " + std::to_string(i) + " n=" + std::to_string(spec.n) +
                          " seed=" + std::to_string(spec.seed) + ": " + problem + "\n" + format_graph(g));
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, a.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(reports.begin(), reports.end());
  for (const auto& r : reports) out << r;
  out << "compared " << a.count - skipped << " instances (model=" << a.model << " seed=" << a.seed
      << "), yes=" << yes << ", discrepancies=" << reports.size() << '\n';
  return reports.empty() ? kYes : kNo;
}

int cmd_saturate(const std::string& graph, std::ostream& out) {
  GraphWithSubset in;
  if (graph == "-") {
    in = load_graph_with_subset(std::cin);
  } else {
    std::ifstream f(graph);
    if (!f) throw UsageError("cannot read " + graph);
    in = load_graph_with_subset(f);
  }
  auto m = solve_saturation(in.graph, in.subset);
  if (!m) {
    out << "infeasible\n";
    return kNo;
  }
  out << m->size() << '\n';
  for (auto [u, v] : *m) out << u + 1 << ' ' << v + 1 << '\n';
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominating induced matching solver for S(2,2,2)-free graphs", "dimsolve"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide and print a certificate");
  solve_cmd->add_option("graph", solve_args.graph, "Graph file, - for stdin")->required();
  solve_cmd->add_option("-c,--cert", solve_args.cert, "Write the certificate here instead of stdout");
  solve_cmd->add_flag("--trace", solve_args.trace, "Dump the rewrite trace to stderr");
  solve_cmd->add_flag("--allow-unchecked", solve_args.allow_unchecked, "Skip the S(2,2,2)-freeness check");
  solve_cmd->add_flag("--stats", solve_args.stats, "Print step counts to stderr");

  std::string check_graph, check_cert;
  auto* check_cmd = app.add_subcommand("check", "Verify a certificate");
  check_cmd->add_option("graph", check_graph)->required();
  check_cmd->add_option("certificate", check_cert)->required();

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an S(2,2,2)-free graph");
  gen_cmd->add_option("-m,--model", gen_args.model,
                      "uniform, triangle-chain, claw-gadget, path-of-triangles, cycle, path, complete, star");
  gen_cmd->add_option("-n", gen_args.n)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("-s,--seed", gen_args.seed);
  gen_cmd->add_option("-p,--density", gen_args.density)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", gen_args.output);

  std::string oracle_graph;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide by exhaustive search");
  oracle_cmd->add_option("graph", oracle_graph)->required();

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Run solver and oracle on generated graphs");
  compare_cmd->add_option("-m,--model", cmp.model);
  compare_cmd->add_option("--n-min", cmp.n_min)->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--n-max", cmp.n_max)->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--count", cmp.count)->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("-s,--seed", cmp.seed);
  compare_cmd->add_option("-p,--density", cmp.density)->check(CLI::Range(0.0, 1.0));
  compare_cmd->add_option("-j,--jobs", cmp.jobs)->check(CLI::PositiveNumber);

  std::string sat_graph;
  auto* sat_cmd = app.add_subcommand("saturate", "Matching saturating the U: line");
  sat_cmd->add_option("graph", sat_graph)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*check_cmd) return cmd_check(check_graph, check_cert, out);
    if (*gen_cmd) return cmd_gen(gen_args, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle_graph, out);
    if (*compare_cmd) return cmd_compare(cmp, out);
    if (*sat_cmd) return cmd_saturate(sat_graph, out);
  } catch (const ParseError& e) {
    err << "dimsolve: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "dimsolve: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "dimsolve: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace dim::cli
