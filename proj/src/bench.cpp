#include "kpvc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "kpvc/approx.hpp"
#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/heuristic.hpp"

namespace kpvc {

namespace {

template <typename F> auto timed(F &&f, double &ms) {
  const auto start = std::chrono::steady_clock::now();
  auto value = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                 start)
           .count();
  return value;
}

std::string format_double(double value, const char *fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

std::string optional_field(const std::optional<std::size_t> &v) {
  return v ? std::to_string(*v) : std::string();
}

} // namespace

ScalingFit fit_loglog(const std::vector<double> &xs, const std::vector<double> &ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_loglog needs two or more points");
  const auto count = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
    sx += lx.back();
    sy += ly.back();
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog needs distinct x values");
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

BenchRun run_bench(const BenchOptions &options) {
  if (options.sizes.empty() || options.trials < 1)
    throw Error(ErrorCode::SpecInvalid, "bench needs sizes and trials >= 1");

  BenchRun run;
  BenchSummary &summary = run.summary;
  {
    std::ostringstream e;
    e << (options.trees ? "trees" : "kpartite") << " sizes=";
    for (std::size_t i = 0; i < options.sizes.size(); ++i)
      e << (i ? "," : "") << options.sizes[i];
    e << " trials=" << options.trials;
    if (!options.trees) e << " k=" << options.k << " density=" << options.density;
    e << " budgets=" << options.budget_mode.to_string() << " seed=" << options.seed;
    summary.ensemble = e.str();
  }

  SplitMix64 seeds(options.seed);
  bool any_oracle = false, any_without = false;
  std::size_t tree_hits = 0, tree_total = 0;
  std::map<Vertex, std::pair<double, std::size_t>> op_sums;

  for (Vertex n : options.sizes) {
    for (int trial = 0; trial < options.trials; ++trial) {
      const std::uint64_t inst_seed = seeds.next();
      Instance inst;
      if (options.trees) {
        if (options.budget_mode.kind != BudgetMode::Kind::Slack)
          throw Error(ErrorCode::SpecInvalid, "tree ensembles use slack budgets");
        inst = gen_tree(n, inst_seed, options.budget_mode.slack, options.budget_cutoff);
      } else {
        GenSpec spec;
        spec.n = n;
        spec.k = std::min<PartId>(options.k, n);
        spec.density = options.density;
        spec.seed = inst_seed;
        spec.budget_mode = options.budget_mode;
        spec.exact_cutoff = options.budget_cutoff;
        inst = gen_kpartite(spec);
      }
      ++summary.instances;

      BenchRecord base;
      base.instance_id = "n" + std::to_string(n) + "-t" + std::to_string(trial);
      base.n = n;
      base.k = inst.partition.part_count();
      base.density = options.trees ? 0.0 : options.density;
      base.seed = inst_seed;
      base.budget_mode = options.budget_mode.to_string();

      const bool with_oracle = n <= options.oracle_cutoff;
      std::optional<ExactResult> exact;
      double exact_ms = 0.0;
      std::optional<std::size_t> unconstrained_opt;
      if (with_oracle) {
        exact = timed([&] { return exact_cvck(inst); }, exact_ms);
        unconstrained_opt = exact_min_vc(inst.graph).size();
      }
      std::optional<std::size_t> optimum;
      if (exact && exact->feasible()) optimum = exact->size();

      double cvck_ms = 0.0;
      const CoverResult cvck = timed([&] { return solve_cvck(inst); }, cvck_ms);
      BenchRecord rec = base;
      rec.algo = "cvck";
      rec.status = cvck.success() ? "Success" : "HeuristicFailure";
      if (cvck.success()) rec.size = cvck.cover.size();
      rec.optimum = optimum;
      if (rec.size && rec.optimum)
        rec.gap = static_cast<std::int64_t>(*rec.size) - static_cast<std::int64_t>(*rec.optimum);
      rec.op_count = cvck.op_count;
      rec.wall_ms = cvck_ms;
      run.records.push_back(rec);

      auto &[op_sum, op_n] = op_sums[n];
      op_sum += static_cast<double>(cvck.op_count);
      ++op_n;

      if (!with_oracle || exact->feasible()) {
        ++summary.success_denominator;
        if (cvck.success()) ++summary.cvck_successes;
      }
      (with_oracle ? any_oracle : any_without) = true;
      if (rec.gap) ++summary.gap_histogram[*rec.gap];
      if (options.trees && optimum) {
        ++tree_total;
        if (cvck.success() && cvck.cover.size() <= *optimum + 1) ++tree_hits;
      }

      if (exact) {
        BenchRecord erec = base;
        erec.algo = "exact";
        erec.status = exact->feasible() ? "Feasible" : "Infeasible";
        if (exact->feasible()) erec.size = exact->size();
        erec.optimum = optimum;
        if (erec.size) erec.gap = 0;
        erec.op_count = static_cast<std::uint64_t>(exact->nodes_explored);
        erec.wall_ms = exact_ms;
        run.records.push_back(erec);
      }

      double approx_ms = 0.0;
      const MatchingCover approx = timed([&] { return two_approx_vc(inst.graph); }, approx_ms);
      BenchRecord arec = base;
      arec.algo = "2approx";
      arec.status = "Success";
      arec.size = approx.cover.size();
      arec.optimum = unconstrained_opt;
      if (arec.optimum) {
        arec.gap = static_cast<std::int64_t>(*arec.size) - static_cast<std::int64_t>(*arec.optimum);
        if (*arec.size > 2 * *arec.optimum) ++summary.approx_bound_violations;
      }
      arec.op_count = approx.op_count;
      arec.wall_ms = approx_ms;
      run.records.push_back(arec);
    }
  }

  summary.records = run.records.size();
  summary.denominator_basis = any_oracle && any_without ? "mixed"
                              : any_oracle               ? "oracle-feasible"
                                                         : "all";
  summary.success_rate =
      summary.success_denominator == 0
          ? 0.0
          : static_cast<double>(summary.cvck_successes) /
                static_cast<double>(summary.success_denominator);
  if (options.trees && tree_total > 0)
    summary.tree_claim_rate =
        static_cast<double>(tree_hits) / static_cast<double>(tree_total);

  std::vector<double> xs, ys;
  for (const auto &[n, sum] : op_sums) {
    const double mean = sum.first / static_cast<double>(sum.second);
    summary.mean_op_count[n] = mean;
    if (n > 1 && mean > 0) {
      xs.push_back(static_cast<double>(n));
      ys.push_back(mean);
    }
  }
  if (xs.size() >= 2) summary.scaling = fit_loglog(xs, ys);
  return run;
}

std::string_view bench_csv_header() {
  return "instance_id,n,k,density,seed,budget_mode,algo,status,size,optimum,gap,"
         "op_count,wall_ms\n";
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
  out << bench_csv_header();
  for (const auto &r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.k << ','
        << format_double(r.density, "%g") << ',' << r.seed << ',' << r.budget_mode
        << ',' << r.algo << ',' << r.status << ',' << optional_field(r.size) << ','
        << optional_field(r.optimum) << ','
        << (r.gap ? std::to_string(*r.gap) : std::string()) << ',' << r.op_count
        << ',' << format_double(r.wall_ms, "%.3f") << '\n';
  }
}

std::string format_summary(const BenchSummary &s) {
  std::ostringstream out;
  out << "ensemble: " << s.ensemble << '\n'
      << "instances: " << s.instances << "  records: " << s.records << '\n'
      << "cvck success rate: " << format_double(s.success_rate, "%.4f") << " ("
      << s.cvck_successes << "/" << s.success_denominator << ", denominator "
      << s.denominator_basis << ")\n";
  out << "cvck gap histogram:";
  if (s.gap_histogram.empty()) out << " (no optimum computed)";
  for (const auto &[gap, count] : s.gap_histogram) out << ' ' << gap << ':' << count;
  out << '\n';
  if (s.tree_claim_rate)
    out << "tree claim rate (size <= optimum + 1): "
        << format_double(*s.tree_claim_rate, "%.4f") << '\n';
  out << "2approx bound violations: " << s.approx_bound_violations << '\n';
  out << "mean cvck op_count:";
  for (const auto &[n, mean] : s.mean_op_count)
    out << ' ' << n << ':' << format_double(mean, "%.1f");
  out << '\n';
  if (s.scaling)
    out << "scaling slope: " << format_double(s.scaling->slope, "%.4f")
        << "  R^2: " << format_double(s.scaling->r_squared, "%.4f") << '\n';
  return out.str();
}

} // namespace kpvc
