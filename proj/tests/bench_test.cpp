#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "kpvc/bench.hpp"

namespace kpvc {
namespace {

// Drops the trailing wall_ms column from every CSV line.
std::string strip_wall_ms(const std::string &csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

TEST(RunBench, RecordArithmetic) {
  BenchOptions opt;
  opt.sizes = {10};
  opt.trials = 5;
  opt.seed = 1;
  const auto run = run_bench(opt);
  ASSERT_EQ(run.records.size(), 15u);
  const char *order[] = {"cvck", "exact", "2approx"};
  for (std::size_t i = 0; i < run.records.size(); ++i)
    EXPECT_EQ(run.records[i].algo, order[i % 3]);
  EXPECT_EQ(run.summary.instances, 5u);
  EXPECT_EQ(run.summary.records, 15u);
  EXPECT_EQ(run.summary.denominator_basis, "oracle-feasible");
  EXPECT_LE(run.summary.success_denominator, 5u);
  EXPECT_LE(run.summary.cvck_successes, run.summary.success_denominator);
  EXPECT_FALSE(run.summary.tree_claim_rate.has_value());
}

TEST(RunBench, SkipsOracleAboveCutoff) {
  BenchOptions opt;
  opt.sizes = {30};
  opt.trials = 2;
  opt.oracle_cutoff = 20;
  const auto run = run_bench(opt);
  ASSERT_EQ(run.records.size(), 4u);
  EXPECT_EQ(run.records[0].algo, "cvck");
  EXPECT_EQ(run.records[1].algo, "2approx");
  EXPECT_FALSE(run.records[0].optimum.has_value());
  EXPECT_EQ(run.summary.denominator_basis, "all");
  EXPECT_EQ(run.summary.success_denominator, 2u);
}

TEST(RunBench, MixedDenominator) {
  BenchOptions opt;
  opt.sizes = {8, 25};
  opt.trials = 2;
  opt.oracle_cutoff = 10;
  EXPECT_EQ(run_bench(opt).summary.denominator_basis, "mixed");
}

TEST(RunBench, TreeEnsembleReportsClaimRate) {
  BenchOptions opt;
  opt.sizes = {8, 15};
  opt.trials = 10;
  opt.trees = true;
  opt.seed = 3;
  const auto run = run_bench(opt);
  ASSERT_TRUE(run.summary.tree_claim_rate.has_value());
  std::size_t within = 0, trees = 0;
  for (const auto &r : run.records) {
    if (r.algo != "cvck") continue;
    ++trees;
    if (r.status == "Success" && r.optimum && *r.size <= *r.optimum + 1) ++within;
  }
  EXPECT_EQ(trees, 20u);
  EXPECT_DOUBLE_EQ(*run.summary.tree_claim_rate, double(within) / double(trees));
}

TEST(RunBench, GapAndApproxInvariants) {
  BenchOptions opt;
  opt.sizes = {6, 10, 14};
  opt.trials = 20;
  opt.density = 0.4;
  opt.seed = 11;
  const auto run = run_bench(opt);
  for (const auto &r : run.records) {
    if (r.size && r.optimum) {
      ASSERT_TRUE(r.gap.has_value());
      EXPECT_GE(*r.gap, 0) << r.instance_id << ' ' << r.algo;
    }
    if (r.algo == "2approx" && r.optimum) EXPECT_LE(*r.size, 2 * *r.optimum);
    if (r.algo == "exact" && r.status == "Feasible") EXPECT_EQ(r.gap, 0);
  }
  EXPECT_EQ(run.summary.approx_bound_violations, 0u);
}

TEST(RunBench, CsvIsReproducibleExceptWallMs) {
  BenchOptions opt;
  opt.sizes = {5, 12};
  opt.trials = 4;
  opt.seed = 99;
  std::ostringstream a, b;
  write_bench_csv(a, run_bench(opt).records);
  write_bench_csv(b, run_bench(opt).records);
  EXPECT_EQ(strip_wall_ms(a.str()), strip_wall_ms(b.str()));
  EXPECT_EQ(a.str().rfind(std::string(bench_csv_header()), 0), 0u);

  opt.seed = 100;
  std::ostringstream c;
  write_bench_csv(c, run_bench(opt).records);
  EXPECT_NE(strip_wall_ms(a.str()), strip_wall_ms(c.str()));
}

TEST(FitLoglog, ExactPowerLaw) {
  const std::vector<double> xs{50, 100, 200, 400};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * x * x);
  const auto fit = fit_loglog(xs, ys);
  EXPECT_NEAR(fit.slope, 2.0, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-9);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(FitLoglog, NeedsDistinctPoints) {
  EXPECT_ANY_THROW(fit_loglog({10}, {5}));
  EXPECT_ANY_THROW(fit_loglog({10, 10}, {5, 6}));
}

TEST(RunBench, ScalingFitOnLargerSizes) {
  BenchOptions opt;
  opt.sizes = {20, 40, 80};
  opt.trials = 2;
  opt.oracle_cutoff = 0;
  const auto run = run_bench(opt);
  ASSERT_TRUE(run.summary.scaling.has_value());
  EXPECT_GT(run.summary.scaling->slope, 1.0);
  EXPECT_EQ(run.summary.mean_op_count.size(), 3u);
  EXPECT_NE(format_summary(run.summary).find("slope"), std::string::npos);
}

} // namespace
} // namespace kpvc
