#include "kpvc/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "kpvc/error.hpp"

namespace kpvc {

namespace {

enum class Mark : std::uint8_t { Open, In, Out };

// Depth-first branch and bound over "lowest open vertex with an uncovered
// edge": first branch puts it in the cover, second excludes it and forces its
// open neighbors in. Visiting include-before-exclude in ascending id order
// walks equal-size covers in lexicographic order, so the first optimum found
// is the lexicographically smallest one.
class CoverSearch {
public:
  CoverSearch(const Graph &g, std::vector<PartId> part_of,
              std::vector<std::int64_t> limits)
      : g_(g), part_of_(std::move(part_of)), limits_(std::move(limits)),
        mark_(static_cast<std::size_t>(g.vertex_count()) + 1, Mark::Open),
        used_(limits_.size(), 0),
        matched_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {}

  ExactResult run() {
    best_size_ = std::numeric_limits<std::size_t>::max();
    std::vector<Vertex> trail;
    if (propagate(trail)) search();
    ExactResult result;
    result.nodes_explored = nodes_;
    if (best_size_ != std::numeric_limits<std::size_t>::max()) {
      result.status = ExactStatus::Feasible;
      result.cover = best_;
    }
    return result;
  }

private:
  bool open_edge(const Edge &e) const {
    return mark_[e.u] == Mark::Open && mark_[e.v] == Mark::Open;
  }

  bool can_take(Vertex v) const {
    const PartId p = part_of_[v - 1];
    return used_[p] < limits_[p];
  }

  void put_in(Vertex v, std::vector<Vertex> &trail) {
    mark_[v] = Mark::In;
    ++used_[part_of_[v - 1]];
    ++size_;
    trail.push_back(v);
  }

  void put_out(Vertex v, std::vector<Vertex> &trail) {
    mark_[v] = Mark::Out;
    trail.push_back(v);
  }

  void undo(std::vector<Vertex> &trail, std::size_t mark) {
    while (trail.size() > mark) {
      const Vertex v = trail.back();
      trail.pop_back();
      if (mark_[v] == Mark::In) {
        --used_[part_of_[v - 1]];
        --size_;
      }
      mark_[v] = Mark::Open;
    }
  }

  // Excluding v forces every open neighbor in.
  bool exclude(Vertex v, std::vector<Vertex> &trail) {
    put_out(v, trail);
    for (Vertex w : g_.neighbors(v)) {
      if (mark_[w] == Mark::In) continue;
      if (mark_[w] == Mark::Out || !can_take(w)) return false;
      put_in(w, trail);
    }
    return true;
  }

  // Open vertices with an uncovered edge whose part has no budget left must be
  // excluded. Repeats until stable; false on contradiction.
  bool propagate(std::vector<Vertex> &trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Edge &e : g_.edges()) {
        if (!open_edge(e)) continue;
        for (Vertex v : {e.u, e.v}) {
          if (mark_[v] == Mark::Open && !can_take(v)) {
            if (!exclude(v, trail)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  std::size_t matching_bound() {
    std::size_t bound = 0;
    ++stamp_;
    for (const Edge &e : g_.edges()) {
      if (!open_edge(e)) continue;
      if (matched_[e.u] == stamp_ || matched_[e.v] == stamp_) continue;
      matched_[e.u] = matched_[e.v] = stamp_;
      ++bound;
    }
    return bound;
  }

  void search() {
    ++nodes_;
    if (size_ + matching_bound() >= best_size_) return;

    Vertex pivot = 0;
    for (const Edge &e : g_.edges()) {
      if (open_edge(e) && (pivot == 0 || e.u < pivot)) pivot = e.u;
    }
    if (pivot == 0) {
      best_size_ = size_;
      best_.clear();
      for (Vertex v = 1; v <= g_.vertex_count(); ++v)
        if (mark_[v] == Mark::In) best_.push_back(v);
      return;
    }

    std::vector<Vertex> trail;
    if (can_take(pivot)) {
      put_in(pivot, trail);
      if (propagate(trail)) search();
      undo(trail, 0);
    }
    if (exclude(pivot, trail) && propagate(trail)) search();
    undo(trail, 0);
  }

  const Graph &g_;
  std::vector<PartId> part_of_; // 0-based part index per vertex - 1
  std::vector<std::int64_t> limits_;
  std::vector<Mark> mark_;
  std::vector<std::int64_t> used_;
  std::vector<std::uint32_t> matched_;
  std::uint32_t stamp_ = 0;
  std::size_t size_ = 0;
  std::size_t best_size_ = 0;
  VertexSet best_;
  std::int64_t nodes_ = 0;
};

// Clique search over ascending candidate lists; prefix-first DFS visits
// cliques of equal size in lexicographic order.
class CliqueSearch {
public:
  explicit CliqueSearch(const Graph &g) : g_(g) {}

  VertexSet run() {
    std::vector<Vertex> candidates(static_cast<std::size_t>(g_.vertex_count()));
    for (Vertex v = 1; v <= g_.vertex_count(); ++v) candidates[v - 1] = v;
    expand(candidates);
    return best_;
  }

private:
  void expand(const std::vector<Vertex> &candidates) {
    if (current_.size() > best_.size()) best_ = current_;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current_.size() + (candidates.size() - i) <= best_.size()) return;
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g_.has_edge(v, candidates[j])) next.push_back(candidates[j]);
      current_.push_back(v);
      expand(next);
      current_.pop_back();
    }
  }

  const Graph &g_;
  VertexSet current_;
  VertexSet best_;
};

} // namespace

ExactResult exact_cvck(const Instance &inst) {
  require_valid(inst);
  std::vector<PartId> part_of;
  part_of.reserve(inst.partition.assignment().size());
  for (PartId p : inst.partition.assignment()) part_of.push_back(p - 1);
  return CoverSearch(inst.graph, std::move(part_of), inst.budgets.limits).run();
}

VertexSet exact_min_vc(const Graph &g) {
  std::vector<PartId> part_of(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<std::int64_t> limits{g.vertex_count()};
  return CoverSearch(g, std::move(part_of), std::move(limits)).run().cover;
}

VertexSet exact_max_clique(const Graph &g) { return CliqueSearch(g).run(); }

std::vector<VertexSet> enumerate_min_cvck(const Instance &inst, Vertex limit) {
  require_valid(inst);
  const Vertex n = inst.graph.vertex_count();
  if (n > limit || n > 30)
    throw Error(ErrorCode::InstanceTooLarge,
                "n = " + std::to_string(n) + " exceeds exhaustive limit " +
                    std::to_string(std::min<Vertex>(limit, 30)));

  std::vector<std::uint32_t> part_mask(
      static_cast<std::size_t>(inst.partition.part_count()), 0);
  for (Vertex v = 1; v <= n; ++v)
    part_mask[inst.partition.part_of(v) - 1] |= 1u << (v - 1);

  std::vector<std::uint32_t> edge_mask;
  for (const Edge &e : inst.graph.edges())
    edge_mask.push_back((1u << (e.u - 1)) | (1u << (e.v - 1)));

  int best = n + 1;
  std::vector<std::uint32_t> optimal;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const auto s = static_cast<std::uint32_t>(bits);
    const int size = std::popcount(s);
    if (size > best) continue;
    bool ok = true;
    for (std::size_t p = 0; ok && p < part_mask.size(); ++p)
      ok = std::popcount(s & part_mask[p]) <= inst.budgets.limits[p];
    for (std::size_t i = 0; ok && i < edge_mask.size(); ++i)
      ok = (s & edge_mask[i]) != 0;
    if (!ok) continue;
    if (size < best) {
      best = size;
      optimal.clear();
    }
    optimal.push_back(s);
  }

  std::vector<VertexSet> out;
  out.reserve(optimal.size());
  for (std::uint32_t s : optimal) {
    VertexSet set;
    for (Vertex v = 1; v <= n; ++v)
      if (s & (1u << (v - 1))) set.push_back(v);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace kpvc
