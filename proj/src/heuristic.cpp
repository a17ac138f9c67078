#include "kpvc/heuristic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kpvc/error.hpp"

namespace kpvc {

HeuristicState::HeuristicState(const Instance &inst) : inst_(&inst) {
  require_valid(inst);
  const Graph &g = inst.graph;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  state_.assign(n, VertexState::NotUsed);
  used_.assign(inst.budgets.limits.size(), 0);
  incident_.assign(n, {});
  live_degree_.assign(n, 0);
  live_.assign(g.edge_count(), 1);
  live_edges_ = g.edge_count();
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge &e = g.edges()[id];
    incident_[e.u - 1].push_back(id);
    incident_[e.v - 1].push_back(id);
    ++live_degree_[e.u - 1];
    ++live_degree_[e.v - 1];
  }
}

std::vector<Edge> HeuristicState::live_edges() const {
  std::vector<Edge> out;
  out.reserve(live_edges_);
  for (std::size_t id = 0; id < live_.size(); ++id)
    if (live_[id]) out.push_back(inst_->graph.edges()[id]);
  return out;
}

void HeuristicState::require_state(Vertex v, VertexState expected) const {
  if (state(v) != expected)
    throw std::logic_error("illegal label transition for vertex " +
                           std::to_string(v));
}

void HeuristicState::mark_not_selected(Vertex v) {
  require_state(v, VertexState::NotUsed);
  state_[v - 1] = VertexState::NotSelected;
}

void HeuristicState::select(Vertex v) {
  require_state(v, VertexState::NotUsed);
  if (pending_ != 0) throw std::logic_error("selection already pending");
  const PartId p = inst_->partition.part_of(v);
  if (residual(p) < 1) throw std::logic_error("budget exhausted");

  state_[v - 1] = VertexState::Selected;
  ++used_[p - 1];
  pending_ = v;
  stash_.clear();
  const auto &edges = inst_->graph.edges();
  for (std::size_t id : incident_[v - 1]) {
    if (!live_[id]) continue;
    live_[id] = 0;
    --live_degree_[edges[id].u - 1];
    --live_degree_[edges[id].v - 1];
    --live_edges_;
    stash_.push_back(id);
  }
  ops_ += stash_.size();
}

void HeuristicState::undo_selection() {
  if (pending_ == 0) throw std::logic_error("no pending selection");
  const Vertex v = pending_;
  state_[v - 1] = VertexState::NotSelected;
  --used_[inst_->partition.part_of(v) - 1];
  const auto &edges = inst_->graph.edges();
  for (std::size_t id : stash_) {
    live_[id] = 1;
    ++live_degree_[edges[id].u - 1];
    ++live_degree_[edges[id].v - 1];
    ++live_edges_;
  }
  ops_ += stash_.size();
  stash_.clear();
  pending_ = 0;
}

void HeuristicState::commit() {
  if (pending_ == 0) throw std::logic_error("no pending selection");
  stash_.clear();
  pending_ = 0;
}

bool HeuristicState::consistent() const {
  const Instance &inst = *inst_;
  std::vector<std::int64_t> recount(used_.size(), 0);
  for (Vertex v = 1; v <= inst.graph.vertex_count(); ++v)
    if (state(v) == VertexState::Selected)
      ++recount[inst.partition.part_of(v) - 1];
  if (recount != used_) return false;
  for (std::size_t i = 0; i < used_.size(); ++i)
    if (used_[i] > inst.budgets.limits[i]) return false;

  std::size_t live_total = 0;
  std::vector<std::size_t> degree(state_.size(), 0);
  for (std::size_t id = 0; id < live_.size(); ++id) {
    const Edge &e = inst.graph.edges()[id];
    const bool covered = state(e.u) == VertexState::Selected ||
                         state(e.v) == VertexState::Selected;
    if (static_cast<bool>(live_[id]) == covered) return false;
    if (live_[id]) {
      ++live_total;
      ++degree[e.u - 1];
      ++degree[e.v - 1];
    }
  }
  return live_total == live_edges_ && degree == live_degree_;
}

std::optional<Vertex> extract_max(HeuristicState &state) {
  const Vertex n = state.instance().graph.vertex_count();
  state.count_ops(static_cast<std::uint64_t>(n));
  std::size_t best_degree = 0;
  std::optional<Vertex> best;
  for (Vertex v = 1; v <= n; ++v) {
    if (state.state(v) != VertexState::NotUsed) continue;
    if (state.live_degree(v) > best_degree) {
      best_degree = state.live_degree(v);
      best = v;
    }
  }
  return best;
}

bool make_decision(HeuristicState &state) {
  const Instance &inst = state.instance();
  const auto &edges = inst.graph.edges();
  std::size_t unvisited_total = state.live_edge_count();
  if (unvisited_total == 0) return true;

  const PartId k = inst.partition.part_count();
  std::vector<PartId> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](PartId a, PartId b) {
    return state.residual(a) > state.residual(b);
  });
  state.count_ops(static_cast<std::uint64_t>(k));

  // Unvisited live degree per vertex, and visited flags per edge; both local.
  std::vector<std::size_t> open_degree(
      static_cast<std::size_t>(inst.graph.vertex_count()));
  for (Vertex v = 1; v <= inst.graph.vertex_count(); ++v)
    open_degree[v - 1] = state.live_degree(v);
  std::vector<char> visited(edges.size(), 0);
  const auto &live = state.live_mask();

  std::uint64_t ops = 0;
  for (PartId p : order) {
    const auto members = inst.partition.members(p);
    for (std::int64_t picks = state.residual(p); picks > 0; --picks) {
      Vertex best = 0;
      std::size_t best_degree = 0;
      for (Vertex v : members) {
        ++ops;
        if (state.state(v) != VertexState::NotUsed) continue;
        if (open_degree[v - 1] > best_degree) {
          best_degree = open_degree[v - 1];
          best = v;
        }
      }
      if (best == 0) break;
      for (std::size_t id : state.incident(best)) {
        if (!live[id] || visited[id]) continue;
        visited[id] = 1;
        --open_degree[edges[id].u - 1];
        --open_degree[edges[id].v - 1];
        --unvisited_total;
        ++ops;
      }
      if (unvisited_total == 0) {
        state.count_ops(ops);
        return true;
      }
    }
  }
  state.count_ops(ops);
  return unvisited_total == 0;
}

CoverResult solve_cvck(const Instance &inst, const StepObserver &observer) {
  HeuristicState state(inst);
  const Vertex n = inst.graph.vertex_count();

  Vertex iterations = 0;
  while (auto next = extract_max(state)) {
    const Vertex u = *next;
    if (++iterations > n) throw std::logic_error("vertex left NotUsed twice");
    const PartId p = inst.partition.part_of(u);
    StepOutcome outcome;
    if (state.residual(p) < 1) {
      state.mark_not_selected(u);
      outcome = StepOutcome::BudgetExhausted;
    } else {
      state.select(u);
      if (make_decision(state)) {
        state.commit();
        outcome = StepOutcome::Kept;
      } else {
        state.undo_selection();
        outcome = StepOutcome::Undone;
      }
    }
    if (observer) observer(Step{u, outcome}, state);
  }

  CoverResult result;
  for (Vertex v = 1; v <= n; ++v)
    if (state.state(v) == VertexState::Selected) result.cover.push_back(v);
  result.per_part_usage.resize(static_cast<std::size_t>(inst.partition.part_count()));
  for (PartId p = 1; p <= inst.partition.part_count(); ++p)
    result.per_part_usage[p - 1] = state.used(p);
  result.op_count = state.op_count();
  result.uncovered_edges = state.live_edges();
  result.status = result.uncovered_edges.empty() ? CoverStatus::Success
                                                 : CoverStatus::HeuristicFailure;
  return result;
}

} // namespace kpvc
