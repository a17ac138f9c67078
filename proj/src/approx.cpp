#include "kpvc/approx.hpp"

#include <algorithm>

namespace kpvc {

MatchingCover two_approx_vc(const Graph &g) {
  MatchingCover result;
  std::vector<char> taken(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  // Deleting the edges incident to a picked pair leaves exactly the edges with
  // both endpoints untaken, so one pass in sorted order finds each next
  // smallest live edge.
  for (const Edge &e : g.edges()) {
    ++result.op_count;
    if (taken[e.u] || taken[e.v]) continue;
    taken[e.u] = taken[e.v] = 1;
    result.matching.push_back(e);
    result.cover.push_back(e.u);
    result.cover.push_back(e.v);
  }
  std::sort(result.cover.begin(), result.cover.end());
  return result;
}

} // namespace kpvc
