#pragma once

// Exact solvers used as ground truth: constrained and unconstrained minimum
// vertex cover by branch and bound, maximum clique by an independent
// branch and bound, and an exhaustive enumerator for small instances.
//
// All solvers break ties deterministically: among optimal sets they return the
// lexicographically smallest sorted id sequence.

#include <cstdint>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

enum class ExactStatus { Feasible, Infeasible };

struct ExactResult {
  ExactStatus status = ExactStatus::Infeasible;
  VertexSet cover; // empty unless Feasible
  std::int64_t nodes_explored = 0;

  bool feasible() const noexcept { return status == ExactStatus::Feasible; }
  std::size_t size() const noexcept { return cover.size(); }
};

/// Minimum-size cover respecting every part budget, or Infeasible.
/// Throws Error(InstanceInvalid).
ExactResult exact_cvck(const Instance &inst);

VertexSet exact_min_vc(const Graph &g);

VertexSet exact_max_clique(const Graph &g);

inline constexpr Vertex kDefaultExhaustiveLimit = 20;

/// All minimum-size budget-respecting covers in lexicographic order, by
/// trying every subset. Empty result means infeasible.
/// Throws Error(InstanceTooLarge) when n exceeds `limit`.
std::vector<VertexSet> enumerate_min_cvck(const Instance &inst,
                                          Vertex limit = kDefaultExhaustiveLimit);

} // namespace kpvc
