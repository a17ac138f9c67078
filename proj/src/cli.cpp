#include "kpvc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kpvc/approx.hpp"
#include "kpvc/bench.hpp"
#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/generate.hpp"
#include "kpvc/heuristic.hpp"
#include "kpvc/io.hpp"
#include "kpvc/reduction.hpp"

namespace kpvc::cli {

namespace {

std::optional<std::string> read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code_for(const Error &e) {
  switch (e.code()) {
  case ErrorCode::IntraPartEdge:
  case ErrorCode::InstanceInvalid: return kInvalidInstance;
  default: return kParseError;
  }
}

// Reads and parses an instance file, reporting failures on err.
std::optional<Instance> load(const std::string &path, std::ostream &err, int &code) {
  const auto text = read_file(path);
  if (!text) {
    err << "error: cannot read " << path << '\n';
    code = kIoError;
    return std::nullopt;
  }
  try {
    return parse_instance(*text);
  } catch (const Error &e) {
    err << path << ": " << e.what() << '\n';
    code = exit_code_for(e);
    return std::nullopt;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

int cmd_validate(const std::string &path, std::ostream &out, std::ostream &err) {
  int code = kOk;
  const auto inst = load(path, err, code);
  if (!inst) return code;
  const auto report = validate_instance(*inst);
  for (const auto &w : report.warnings) err << "warning: " << w << '\n';
  if (!report.ok()) {
    for (const auto &v : report.violations) err << "violation: " << v.message << '\n';
    return kInvalidInstance;
  }
  out << "ok\n";
  return kOk;
}

int cmd_solve(const std::string &path, const std::string &algo,
              const std::string &format, std::ostream &out, std::ostream &err) {
  int code = kOk;
  const auto inst = load(path, err, code);
  if (!inst) return code;
  const OutputFormat fmt = format == "json"  ? OutputFormat::Json
                           : format == "csv" ? OutputFormat::Csv
                                             : OutputFormat::Text;

  const auto start = std::chrono::steady_clock::now();
  if (algo == "cvck") {
    const CoverResult result = solve_cvck(*inst);
    const auto report = make_report(result, elapsed_ms(start));
    if (fmt == OutputFormat::Csv) out << result_csv_header();
    out << emit_result(report, fmt);
    return result.success() ? kOk : kHeuristicFailure;
  }
  if (algo == "exact") {
    const ExactResult result = exact_cvck(*inst);
    const auto report = make_report(result, *inst, elapsed_ms(start));
    if (fmt == OutputFormat::Csv) out << result_csv_header();
    out << emit_result(report, fmt);
    return result.feasible() ? kOk : kInfeasible;
  }
  const MatchingCover result = two_approx_vc(inst->graph);
  const auto report = make_report(result, *inst, elapsed_ms(start));
  if (fmt == OutputFormat::Csv) out << result_csv_header();
  out << emit_result(report, fmt);
  return kOk;
}

int cmd_reduce_clique(const std::string &path, Vertex k, const std::string &out_path,
                      std::ostream &out, std::ostream &err) {
  int code = kOk;
  const auto inst = load(path, err, code);
  if (!inst) return code;

  ReductionOutput reduced;
  try {
    reduced = reduce_clique_to_vc(inst->graph, k);
  } catch (const Error &e) {
    err << e.what() << '\n';
    return kParseError;
  }
  KPartition partition = greedy_partition(reduced.complement_graph);
  Budgets budgets;
  for (PartId p = 1; p <= partition.part_count(); ++p)
    budgets.limits.push_back(static_cast<std::int64_t>(partition.members(p).size()));
  const Instance target{std::move(reduced.complement_graph), std::move(partition),
                        std::move(budgets)};

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << out_path << '\n';
    return kIoError;
  }
  file << "c target_cover_size " << reduced.target_cover_size << '\n'
       << serialize_instance(target);
  if (!file) {
    err << "error: cannot write " << out_path << '\n';
    return kIoError;
  }
  out << "wrote " << out_path << " (target cover size " << reduced.target_cover_size
      << ")\n";
  return kOk;
}

struct GenFlags {
  Vertex n = 0;
  PartId k = 1;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string budget_mode = "slack:1";
  bool tree = false;
  std::vector<Vertex> complete;
  Vertex exact_cutoff = kDefaultBudgetExactCutoff;
};

int cmd_gen(const GenFlags &flags, std::ostream &out, std::ostream &err) {
  try {
    Instance inst;
    if (!flags.complete.empty()) {
      inst = gen_complete_kpartite(flags.complete);
    } else if (flags.tree) {
      const BudgetMode mode = BudgetMode::parse(flags.budget_mode);
      if (mode.kind != BudgetMode::Kind::Slack)
        throw Error(ErrorCode::SpecInvalid, "trees take slack budgets");
      inst = gen_tree(flags.n, flags.seed, mode.slack, flags.exact_cutoff);
    } else {
      GenSpec spec;
      spec.n = flags.n;
      spec.k = flags.k;
      spec.density = flags.density;
      spec.seed = flags.seed;
      spec.budget_mode = BudgetMode::parse(flags.budget_mode);
      spec.exact_cutoff = flags.exact_cutoff;
      inst = gen_kpartite(spec);
    }
    out << serialize_instance(inst);
    return kOk;
  } catch (const Error &e) {
    err << e.what() << '\n';
    return kParseError;
  }
}

struct BenchFlags {
  BenchOptions options;
  std::string budget_mode = "slack:1";
  std::string out_path;
};

int cmd_bench(BenchFlags flags, std::ostream &out, std::ostream &err) {
  try {
    flags.options.budget_mode = BudgetMode::parse(flags.budget_mode);
    const BenchRun run = run_bench(flags.options);
    if (!flags.out_path.empty()) {
      std::ofstream file(flags.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << flags.out_path << '\n';
        return kIoError;
      }
      write_bench_csv(file, run.records);
    }
    out << format_summary(run.summary);
    return kOk;
  } catch (const Error &e) {
    err << e.what() << '\n';
    return kParseError;
  }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Constrained minimum vertex cover on k-partite graphs", "kpvc"};
  app.require_subcommand(1);

  std::string path;
  auto *validate = app.add_subcommand("validate", "Parse and validate an instance file");
  validate->add_option("path", path, "Instance file")->required();

  std::string algo = "cvck";
  std::string format = "json";
  auto *solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("path", path, "Instance file")->required();
  solve->add_option("--algo", algo, "Solver")
      ->check(CLI::IsMember({"cvck", "exact", "2approx"}))
      ->capture_default_str();
  solve->add_option("--output", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();

  Vertex clique_k = 0;
  std::string out_path;
  auto *reduce = app.add_subcommand(
      "reduce-clique", "Write the vertex cover instance for a clique question");
  reduce->add_option("path", path, "Instance file (partition and budgets ignored)")
      ->required();
  reduce->add_option("--k", clique_k, "Clique size")->required();
  reduce->add_option("--out", out_path, "Output instance file")->required();

  GenFlags gen_flags;
  auto *gen = app.add_subcommand("gen", "Generate an instance on standard output");
  gen->add_option("--n", gen_flags.n, "Vertex count");
  gen->add_option("--k", gen_flags.k, "Part count")->capture_default_str();
  gen->add_option("--density", gen_flags.density, "Inter-part edge probability")
      ->capture_default_str();
  gen->add_option("--seed", gen_flags.seed, "Random seed")->capture_default_str();
  gen->add_option("--budget-mode", gen_flags.budget_mode,
                  "exact | slack:<s> | fixed:<b1>,<b2>,...")
      ->capture_default_str();
  gen->add_option("--exact-cutoff", gen_flags.exact_cutoff,
                  "Largest n for which budgets come from an exact cover")
      ->capture_default_str();
  auto *tree_flag = gen->add_flag("--tree", gen_flags.tree, "Random labeled tree");
  gen->add_option("--complete", gen_flags.complete, "Complete multipartite part sizes")
      ->delimiter(',')
      ->excludes(tree_flag);

  BenchFlags bench_flags;
  auto &bopt = bench_flags.options;
  auto *bench = app.add_subcommand("bench", "Run a seeded benchmark ensemble");
  bench->add_option("--sizes", bopt.sizes, "Vertex counts")->delimiter(',')->required();
  bench->add_option("--trials", bopt.trials, "Instances per size")->capture_default_str();
  bench->add_option("--density", bopt.density, "Inter-part edge probability")
      ->capture_default_str();
  bench->add_option("--k", bopt.k, "Part count")->capture_default_str();
  bench->add_option("--seed", bopt.seed, "Master seed")->capture_default_str();
  bench->add_option("--budget-mode", bench_flags.budget_mode,
                    "exact | slack:<s> | fixed:<b1>,<b2>,...")
      ->capture_default_str();
  bench->add_flag("--tree", bopt.trees, "Use random trees instead of k-partite graphs");
  bench->add_option("--exact-cutoff", bopt.oracle_cutoff,
                    "Largest n solved by the exact oracle")
      ->capture_default_str();
  bench->add_option("--budget-cutoff", bopt.budget_cutoff,
                    "Largest n for which budgets come from an exact cover")
      ->capture_default_str();
  bench->add_option("--out", bench_flags.out_path, "Per-record CSV output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kParseError;
  }

  if (*validate) return cmd_validate(path, out, err);
  if (*solve) return cmd_solve(path, algo, format, out, err);
  if (*reduce) return cmd_reduce_clique(path, clique_k, out_path, out, err);
  if (*gen) {
    if (gen_flags.complete.empty() && gen_flags.n < 1) {
      err << "gen: --n is required\n";
      return kParseError;
    }
    return cmd_gen(gen_flags, out, err);
  }
  return cmd_bench(std::move(bench_flags), out, err);
}

} // namespace kpvc::cli
