#pragma once

// Core types for constrained vertex cover on k-partite graphs.
//
// Vertices are dense 1-based ids 1..n; parts are 1-based ids 1..k. Containers
// indexed by vertex or part are stored 0-based internally and reached only
// through accessors taking the 1-based id.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kpvc {

using Vertex = std::int32_t;
using PartId = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, always normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Immutable simple undirected graph. Duplicate input edges are merged,
/// self-loops rejected.
class Graph {
public:
  Graph() = default;

  /// Throws Error(SelfLoop | VertexOutOfRange) on bad input; n must be >= 1.
  Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edge_list);
  Graph(Vertex n, std::span<const Edge> edge_list);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in ascending lexicographic order.
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void build(std::vector<Edge> edges);

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Vertex -> part assignment. May hold out-of-range or empty parts; those are
/// reported by validate_instance rather than rejected here.
class KPartition {
public:
  KPartition() = default;
  /// part_of[i] is the part of vertex i + 1.
  KPartition(PartId k, std::vector<PartId> part_of);

  PartId part_count() const noexcept { return k_; }
  Vertex vertex_count() const noexcept {
    return static_cast<Vertex>(part_of_.size());
  }
  PartId part_of(Vertex v) const { return part_of_.at(v - 1); }
  const std::vector<PartId> &assignment() const noexcept { return part_of_; }

  /// Members of part p in ascending order (empty for out-of-range p).
  std::span<const Vertex> members(PartId p) const;

  friend bool operator==(const KPartition &a, const KPartition &b) {
    return a.k_ == b.k_ && a.part_of_ == b.part_of_;
  }

private:
  PartId k_ = 0;
  std::vector<PartId> part_of_;
  std::vector<std::vector<Vertex>> members_;
};

/// Per-part selection limits.
struct Budgets {
  std::vector<std::int64_t> limits;

  std::int64_t limit(PartId p) const { return limits.at(p - 1); }
  std::int64_t total() const;

  friend bool operator==(const Budgets &, const Budgets &) = default;
};

struct Instance {
  Graph graph;
  KPartition partition;
  Budgets budgets;

  friend bool operator==(const Instance &, const Instance &) = default;
};

struct Violation {
  enum class Kind {
    PartitionSize,     // partition does not cover exactly 1..n
    PartOutOfRange,    // a vertex is assigned outside 1..k
    BudgetCount,       // budgets length differs from k
    NegativeBudget,
    IntraPartEdge,
  };
  Kind kind;
  std::string message;
  Edge edge{}; // set for IntraPartEdge
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Non-fatal findings, e.g. a part id with no vertices.
  std::vector<std::string> warnings;

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_instance(const Instance &inst);

/// Throws Error(InstanceInvalid) listing the first violation.
void require_valid(const Instance &inst);

Graph complement(const Graph &g);

/// The set arguments may be in any order; ids outside 1..n throw
/// Error(VertexOutOfRange).
bool is_vertex_cover(const Graph &g, std::span<const Vertex> s);
bool is_clique(const Graph &g, std::span<const Vertex> s);
bool is_independent_set(const Graph &g, std::span<const Vertex> s);

/// Per-part count of s, indexed by part id - 1.
std::vector<std::int64_t> part_usage(const Instance &inst,
                                     std::span<const Vertex> s);
bool respects_budgets(const Instance &inst, std::span<const Vertex> s);

/// Greedy smallest-available-color in vertex-id order.
KPartition greedy_partition(const Graph &g);

/// 1..n minus s (s any order).
VertexSet set_complement(Vertex n, std::span<const Vertex> s);

/// Sorts and deduplicates.
VertexSet normalized(std::span<const Vertex> s);

} // namespace kpvc
