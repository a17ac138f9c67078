#pragma once

// Seeded instance generators.
//
// Random streams come from SplitMix64 so that any implementation can
// reproduce an ensemble bit for bit:
//
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
//
// uniform01() is (next() >> 11) * 2^-53. below(m) draws next() until the value
// is >= (2^64 - m) mod m and returns it mod m.

#include <cstdint>
#include <string>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, m); m must be positive.
  std::uint64_t below(std::uint64_t m) noexcept {
    const std::uint64_t threshold = (0 - m) % m;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % m;
    }
  }

private:
  std::uint64_t state_;
};

/// How per-part budgets are attached to a generated graph.
///   Exact    - per-part usage of the lexicographically smallest minimum cover
///   Slack(s) - per-part usage of a reference cover plus s
///   Fixed    - the given limits verbatim (may be infeasible)
/// The reference cover is the minimum cover when n <= the exact cutoff, and
/// otherwise every vertex outside the largest part (lowest part id on ties).
struct BudgetMode {
  enum class Kind { Exact, Slack, Fixed };

  Kind kind = Kind::Slack;
  std::int64_t slack = 1;
  std::vector<std::int64_t> fixed;

  static BudgetMode exact() { return {Kind::Exact, 0, {}}; }
  static BudgetMode with_slack(std::int64_t s) { return {Kind::Slack, s, {}}; }
  static BudgetMode fixed_limits(std::vector<std::int64_t> limits) {
    return {Kind::Fixed, 0, std::move(limits)};
  }

  /// Accepts "exact", "slack:<s>" (or "slack" for s = 1) and
  /// "fixed:<b1>,<b2>,...". Throws Error(SpecInvalid).
  static BudgetMode parse(const std::string &text);
  std::string to_string() const;

  friend bool operator==(const BudgetMode &, const BudgetMode &) = default;
};

inline constexpr Vertex kDefaultBudgetExactCutoff = 30;

struct GenSpec {
  Vertex n = 1;
  PartId k = 1;
  double density = 0.5;
  std::uint64_t seed = 0;
  BudgetMode budget_mode;
  Vertex exact_cutoff = kDefaultBudgetExactCutoff;
};

/// Parts are contiguous id blocks as even as possible, earlier parts taking
/// the remainder. Each inter-part pair (u < v, ascending) consumes one
/// uniform01() draw and becomes an edge when the draw is below the density.
/// Throws Error(SpecInvalid).
Instance gen_kpartite(const GenSpec &spec);

/// Uniform labeled tree from a random Pruefer sequence, split into two parts
/// by depth parity from vertex 1, budgets from Slack(slack).
Instance gen_tree(Vertex n, std::uint64_t seed, std::int64_t slack = 1,
                  Vertex exact_cutoff = kDefaultBudgetExactCutoff);

/// Complete multipartite graph with contiguous parts of the given sizes;
/// budgets equal part sizes. Throws Error(SpecInvalid).
Instance gen_complete_kpartite(const std::vector<Vertex> &sizes);

/// Attaches budgets to a graph and partition. Throws Error(SpecInvalid) for a
/// Fixed list of the wrong length or Exact mode above the cutoff.
Budgets derive_budgets(const Graph &g, const KPartition &partition,
                       const BudgetMode &mode,
                       Vertex exact_cutoff = kDefaultBudgetExactCutoff);

} // namespace kpvc
