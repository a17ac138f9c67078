#pragma once

#include <cstdint>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

struct MatchingCover {
  VertexSet cover;
  /// Edges picked, in pick order; pairwise disjoint.
  std::vector<Edge> matching;
  std::uint64_t op_count = 0; // edges examined
};

/// Maximal-matching cover: take the lexicographically smallest edge still
/// uncovered, add both endpoints, repeat. Ignores budgets; at most twice the
/// minimum cover.
MatchingCover two_approx_vc(const Graph &g);

} // namespace kpvc
