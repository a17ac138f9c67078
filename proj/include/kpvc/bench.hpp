#pragma once

// Benchmark harness: generates seeded ensembles, runs the heuristic, the
// exact oracle (within a size cutoff) and the matching baseline on each
// instance, and summarizes success rate, optimality gaps and op-count scaling.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kpvc/generate.hpp"

namespace kpvc {

inline constexpr Vertex kDefaultOracleCutoff = 22;

struct BenchOptions {
  std::vector<Vertex> sizes;
  int trials = 1;
  double density = 0.5;
  PartId k = 3; // clamped to n; ignored for trees
  std::uint64_t seed = 0;
  BudgetMode budget_mode = BudgetMode::with_slack(1);
  bool trees = false;
  Vertex oracle_cutoff = kDefaultOracleCutoff;
  Vertex budget_cutoff = kDefaultBudgetExactCutoff;
};

struct BenchRecord {
  std::string instance_id;
  Vertex n = 0;
  PartId k = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::string budget_mode;
  std::string algo;
  std::string status;
  std::optional<std::size_t> size;
  /// Constrained optimum for cvck/exact; unconstrained optimum for 2approx,
  /// which ignores budgets.
  std::optional<std::size_t> optimum;
  std::optional<std::int64_t> gap;
  std::uint64_t op_count = 0; // nodes explored for exact
  double wall_ms = 0.0;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log(y) on log(x). Needs two or more distinct x.
ScalingFit fit_loglog(const std::vector<double> &xs, const std::vector<double> &ys);

struct BenchSummary {
  std::string ensemble;
  std::size_t instances = 0;
  std::size_t records = 0;

  std::size_t cvck_successes = 0;
  std::size_t success_denominator = 0;
  /// "oracle-feasible", "all" or "mixed" (some sizes above the oracle cutoff).
  std::string denominator_basis;
  double success_rate = 0.0;

  /// cvck gap (size - optimum) -> count, over successes with an optimum.
  std::map<std::int64_t, std::size_t> gap_histogram;
  std::optional<double> tree_claim_rate;
  std::size_t approx_bound_violations = 0;

  std::map<Vertex, double> mean_op_count; // cvck, per n
  std::optional<ScalingFit> scaling;
};

struct BenchRun {
  std::vector<BenchRecord> records; // ordered by (n, trial, algo)
  BenchSummary summary;
};

/// Instance seeds are drawn in (n, trial) order from SplitMix64(options.seed).
BenchRun run_bench(const BenchOptions &options);

std::string_view bench_csv_header();
/// wall_ms is the last column and the only nondeterministic one.
void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records);
std::string format_summary(const BenchSummary &summary);

} // namespace kpvc
