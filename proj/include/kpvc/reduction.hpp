#pragma once

// CLIQUE to VERTEX-COVER by graph complement: G has a clique of size k iff the
// complement of G has a vertex cover of size n - k. Certificates translate by
// taking the vertex-set complement in both directions.

#include "kpvc/graph.hpp"

namespace kpvc {

struct ReductionOutput {
  Graph complement_graph;
  Vertex target_cover_size = 0;
};

/// Throws Error(KOutOfRange) unless 0 <= k_clique <= n.
ReductionOutput reduce_clique_to_vc(const Graph &g, Vertex k_clique);

/// V \ clique, a cover of complement(g). Throws Error(NotAClique).
VertexSet clique_cert_to_cover(const Graph &g, std::span<const Vertex> clique);

/// V \ cover, a clique of g. Throws Error(NotACover) unless `cover` covers
/// complement(g).
VertexSet cover_cert_to_clique(const Graph &g, std::span<const Vertex> cover);

} // namespace kpvc
