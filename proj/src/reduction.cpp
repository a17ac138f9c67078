#include "kpvc/reduction.hpp"

#include "kpvc/error.hpp"

namespace kpvc {

ReductionOutput reduce_clique_to_vc(const Graph &g, Vertex k_clique) {
  const Vertex n = g.vertex_count();
  if (k_clique < 0 || k_clique > n)
    throw Error(ErrorCode::KOutOfRange, "clique size " +
                                            std::to_string(k_clique) +
                                            " outside 0.." + std::to_string(n));
  return {complement(g), n - k_clique};
}

VertexSet clique_cert_to_cover(const Graph &g, std::span<const Vertex> clique) {
  if (!is_clique(g, clique))
    throw Error(ErrorCode::NotAClique, "certificate is not a clique");
  return set_complement(g.vertex_count(), clique);
}

VertexSet cover_cert_to_clique(const Graph &g, std::span<const Vertex> cover) {
  // A cover of the complement leaves an independent set there, which is a
  // clique here; checking that avoids building the complement.
  const VertexSet rest = set_complement(g.vertex_count(), cover);
  if (!is_clique(g, rest))
    throw Error(ErrorCode::NotACover,
                "certificate does not cover the complement graph");
  return rest;
}

} // namespace kpvc
