#include "kpvc/graph.hpp"

#include <algorithm>
#include <numeric>

#include "kpvc/error.hpp"

namespace kpvc {

namespace {

void check_vertex(const Graph &g, Vertex v) {
  if (!g.contains(v))
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 1.." +
                    std::to_string(g.vertex_count()));
}

std::vector<char> membership(const Graph &g, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : s) {
    check_vertex(g, v);
    in[v] = 1;
  }
  return in;
}

} // namespace

Graph::Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edge_list)
    : n_(n) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto &[a, b] : edge_list) edges.emplace_back(a, b);
  build(std::move(edges));
}

Graph::Graph(Vertex n, std::span<const Edge> edge_list) : n_(n) {
  build({edge_list.begin(), edge_list.end()});
}

void Graph::build(std::vector<Edge> edges) {
  if (n_ < 1)
    throw Error(ErrorCode::VertexOutOfRange, "graph needs at least one vertex");
  for (const Edge &e : edges) {
    if (e.u < 1 || e.v > n_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside 1.." + std::to_string(n_));
    if (e.u == e.v)
      throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const Edge &e : edges_) {
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto &adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[v - 1];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto &adj = adjacency_[a - 1];
  return std::binary_search(adj.begin(), adj.end(), b);
}

KPartition::KPartition(PartId k, std::vector<PartId> part_of)
    : k_(k), part_of_(std::move(part_of)) {
  members_.assign(static_cast<std::size_t>(std::max<PartId>(k_, 0)), {});
  for (std::size_t i = 0; i < part_of_.size(); ++i) {
    const PartId p = part_of_[i];
    if (p >= 1 && p <= k_) members_[p - 1].push_back(static_cast<Vertex>(i + 1));
  }
}

std::span<const Vertex> KPartition::members(PartId p) const {
  if (p < 1 || p > k_) return {};
  return members_[p - 1];
}

std::int64_t Budgets::total() const {
  return std::accumulate(limits.begin(), limits.end(), std::int64_t{0});
}

ValidationReport validate_instance(const Instance &inst) {
  ValidationReport report;
  const Graph &g = inst.graph;
  const KPartition &part = inst.partition;
  const PartId k = part.part_count();

  bool assignment_usable = true;
  if (k < 1) {
    report.violations.push_back(
        {Violation::Kind::PartOutOfRange, "partition has no parts"});
    assignment_usable = false;
  }
  if (part.vertex_count() != g.vertex_count()) {
    report.violations.push_back(
        {Violation::Kind::PartitionSize,
         "partition assigns " + std::to_string(part.vertex_count()) +
             " vertices, graph has " + std::to_string(g.vertex_count())});
    assignment_usable = false;
  }
  for (Vertex v = 1; v <= part.vertex_count(); ++v) {
    const PartId p = part.part_of(v);
    if (p < 1 || p > k) {
      report.violations.push_back(
          {Violation::Kind::PartOutOfRange,
           "vertex " + std::to_string(v) + " assigned to part " +
               std::to_string(p) + ", expected 1.." + std::to_string(k)});
      assignment_usable = false;
    }
  }

  if (static_cast<std::size_t>(std::max<PartId>(k, 0)) !=
      inst.budgets.limits.size()) {
    report.violations.push_back(
        {Violation::Kind::BudgetCount,
         std::to_string(inst.budgets.limits.size()) + " budgets for " +
             std::to_string(k) + " parts"});
  }
  for (std::size_t i = 0; i < inst.budgets.limits.size(); ++i) {
    if (inst.budgets.limits[i] < 0)
      report.violations.push_back(
          {Violation::Kind::NegativeBudget,
           "part " + std::to_string(i + 1) + " has negative budget"});
  }

  if (assignment_usable) {
    for (const Edge &e : g.edges()) {
      if (part.part_of(e.u) == part.part_of(e.v))
        report.violations.push_back(
            {Violation::Kind::IntraPartEdge,
             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 ") inside part " + std::to_string(part.part_of(e.u)),
             e});
    }
  }

  for (PartId p = 1; p <= k; ++p) {
    if (part.members(p).empty())
      report.warnings.push_back("part " + std::to_string(p) +
                                " has no vertices");
  }
  return report;
}

void require_valid(const Instance &inst) {
  const auto report = validate_instance(inst);
  if (!report.ok())
    throw Error(ErrorCode::InstanceInvalid, report.violations.front().message);
}

Graph complement(const Graph &g) {
  const Vertex n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edge_count());
  for (Vertex u = 1; u <= n; ++u) {
    auto adj = g.neighbors(u);
    auto it = std::upper_bound(adj.begin(), adj.end(), u);
    for (Vertex v = u + 1; v <= n; ++v) {
      if (it != adj.end() && *it == v) {
        ++it;
        continue;
      }
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::span<const Edge>(edges));
}

bool is_vertex_cover(const Graph &g, std::span<const Vertex> s) {
  const auto in = membership(g, s);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge &e) { return in[e.u] || in[e.v]; });
}

bool is_clique(const Graph &g, std::span<const Vertex> s) {
  for (Vertex v : s) check_vertex(g, v);
  const VertexSet set = normalized(s);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.has_edge(set[i], set[j])) return false;
  return true;
}

bool is_independent_set(const Graph &g, std::span<const Vertex> s) {
  const auto in = membership(g, s);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge &e) { return in[e.u] && in[e.v]; });
}

std::vector<std::int64_t> part_usage(const Instance &inst,
                                     std::span<const Vertex> s) {
  std::vector<std::int64_t> usage(
      static_cast<std::size_t>(inst.partition.part_count()), 0);
  for (Vertex v : normalized(s)) {
    check_vertex(inst.graph, v);
    const PartId p = inst.partition.part_of(v);
    if (p >= 1 && p <= inst.partition.part_count()) ++usage[p - 1];
  }
  return usage;
}

bool respects_budgets(const Instance &inst, std::span<const Vertex> s) {
  const auto usage = part_usage(inst, s);
  for (std::size_t i = 0; i < usage.size(); ++i) {
    const std::int64_t limit =
        i < inst.budgets.limits.size() ? inst.budgets.limits[i] : 0;
    if (usage[i] > limit) return false;
  }
  return true;
}

KPartition greedy_partition(const Graph &g) {
  const Vertex n = g.vertex_count();
  std::vector<PartId> color(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> seen_by(static_cast<std::size_t>(n) + 2, 0);
  PartId used = 0;
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w < v) seen_by[color[w - 1]] = v;
    }
    PartId c = 1;
    while (seen_by[c] == v) ++c;
    color[v - 1] = c;
    used = std::max(used, c);
  }
  return KPartition(used, std::move(color));
}

VertexSet set_complement(Vertex n, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > n)
      throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
    in[v] = 1;
  }
  VertexSet out;
  for (Vertex v = 1; v <= n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

VertexSet normalized(std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace kpvc
