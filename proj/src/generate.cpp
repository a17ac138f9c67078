#include "kpvc/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <queue>

#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"

namespace kpvc {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(ErrorCode::SpecInvalid,
                "not an integer: '" + std::string(text) + "'");
  return value;
}

VertexSet reference_cover(const Graph &g, const KPartition &partition,
                          Vertex exact_cutoff) {
  if (g.vertex_count() <= exact_cutoff) return exact_min_vc(g);
  PartId largest = 1;
  for (PartId p = 2; p <= partition.part_count(); ++p)
    if (partition.members(p).size() > partition.members(largest).size())
      largest = p;
  VertexSet cover;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (partition.part_of(v) != largest) cover.push_back(v);
  return cover;
}

std::vector<std::int64_t> usage_of(const KPartition &partition,
                                   const VertexSet &cover) {
  std::vector<std::int64_t> usage(
      static_cast<std::size_t>(partition.part_count()), 0);
  for (Vertex v : cover) ++usage[partition.part_of(v) - 1];
  return usage;
}

} // namespace

BudgetMode BudgetMode::parse(const std::string &text) {
  if (text == "exact") return exact();
  if (text == "slack") return with_slack(1);
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::SpecInvalid, "unknown budget mode '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string_view rest = std::string_view(text).substr(colon + 1);
  if (head == "slack") {
    const std::int64_t s = parse_int(rest);
    if (s < 0) throw Error(ErrorCode::SpecInvalid, "negative slack");
    return with_slack(s);
  }
  if (head == "fixed") {
    std::vector<std::int64_t> limits;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const auto stop = comma == std::string_view::npos ? rest.size() : comma;
      const std::int64_t b = parse_int(rest.substr(start, stop - start));
      if (b < 0) throw Error(ErrorCode::SpecInvalid, "negative budget");
      limits.push_back(b);
      start = stop + 1;
    }
    return fixed_limits(std::move(limits));
  }
  throw Error(ErrorCode::SpecInvalid, "unknown budget mode '" + text + "'");
}

std::string BudgetMode::to_string() const {
  switch (kind) {
  case Kind::Exact: return "exact";
  case Kind::Slack: return "slack:" + std::to_string(slack);
  case Kind::Fixed: {
    std::string out = "fixed:";
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(fixed[i]);
    }
    return out;
  }
  }
  return {};
}

Budgets derive_budgets(const Graph &g, const KPartition &partition,
                       const BudgetMode &mode, Vertex exact_cutoff) {
  switch (mode.kind) {
  case BudgetMode::Kind::Fixed:
    if (mode.fixed.size() != static_cast<std::size_t>(partition.part_count()))
      throw Error(ErrorCode::SpecInvalid,
                  std::to_string(mode.fixed.size()) + " fixed budgets for " +
                      std::to_string(partition.part_count()) + " parts");
    return {mode.fixed};
  case BudgetMode::Kind::Exact:
    if (g.vertex_count() > exact_cutoff)
      throw Error(ErrorCode::SpecInvalid,
                  "exact budgets need n <= " + std::to_string(exact_cutoff));
    return {usage_of(partition, exact_min_vc(g))};
  case BudgetMode::Kind::Slack: {
    auto limits = usage_of(partition, reference_cover(g, partition, exact_cutoff));
    for (auto &b : limits) b += mode.slack;
    return {std::move(limits)};
  }
  }
  return {};
}

Instance gen_kpartite(const GenSpec &spec) {
  if (spec.n < 1 || spec.k < 1 || spec.k > spec.n)
    throw Error(ErrorCode::SpecInvalid, "need 1 <= k <= n");
  if (!(spec.density >= 0.0 && spec.density <= 1.0))
    throw Error(ErrorCode::SpecInvalid, "density must lie in [0, 1]");

  std::vector<PartId> part_of;
  part_of.reserve(static_cast<std::size_t>(spec.n));
  const Vertex base = spec.n / spec.k;
  const Vertex extra = spec.n % spec.k;
  for (PartId p = 1; p <= spec.k; ++p) {
    const Vertex size = base + (p <= extra ? 1 : 0);
    part_of.insert(part_of.end(), static_cast<std::size_t>(size), p);
  }

  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= spec.n; ++u)
    for (Vertex v = u + 1; v <= spec.n; ++v) {
      if (part_of[u - 1] == part_of[v - 1]) continue;
      if (rng.uniform01() < spec.density) edges.emplace_back(u, v);
    }

  Graph g(spec.n, std::span<const Edge>(edges));
  KPartition partition(spec.k, std::move(part_of));
  Budgets budgets = derive_budgets(g, partition, spec.budget_mode, spec.exact_cutoff);
  return {std::move(g), std::move(partition), std::move(budgets)};
}

Instance gen_tree(Vertex n, std::uint64_t seed, std::int64_t slack,
                  Vertex exact_cutoff) {
  if (n < 1) throw Error(ErrorCode::SpecInvalid, "tree needs n >= 1");
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(1, 2);
  if (n > 2) {
    SplitMix64 rng(seed);
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    for (auto &c : code) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))) + 1;

    std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 1);
    for (Vertex c : code) ++remaining[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 1; v <= n; ++v)
      if (remaining[v] == 1) leaves.push(v);
    for (Vertex c : code) {
      const Vertex leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, c);
      if (--remaining[c] == 1) leaves.push(c);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
  }
  Graph g(n, std::span<const Edge>(edges));

  std::vector<PartId> part_of(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> frontier;
  part_of[0] = 1;
  frontier.push(1);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (part_of[w - 1] != 0) continue;
      part_of[w - 1] = part_of[v - 1] == 1 ? 2 : 1;
      frontier.push(w);
    }
  }
  KPartition partition(n == 1 ? 1 : 2, std::move(part_of));
  Budgets budgets = derive_budgets(g, partition, BudgetMode::with_slack(slack),
                                   exact_cutoff);
  return {std::move(g), std::move(partition), std::move(budgets)};
}

Instance gen_complete_kpartite(const std::vector<Vertex> &sizes) {
  if (sizes.empty()) throw Error(ErrorCode::SpecInvalid, "no parts given");
  std::vector<PartId> part_of;
  std::vector<std::int64_t> limits;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw Error(ErrorCode::SpecInvalid, "part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]),
                   static_cast<PartId>(i + 1));
    limits.push_back(sizes[i]);
  }
  const auto n = static_cast<Vertex>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (part_of[u - 1] != part_of[v - 1]) edges.emplace_back(u, v);
  Graph g(n, std::span<const Edge>(edges));
  return {std::move(g), KPartition(static_cast<PartId>(sizes.size()), std::move(part_of)),
          Budgets{std::move(limits)}};
}

} // namespace kpvc
