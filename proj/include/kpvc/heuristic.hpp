#pragma once

// Greedy constrained vertex cover with a feasibility lookahead.
//
// The solver repeatedly takes the highest-degree unused vertex of the working
// graph. A vertex whose part has no budget left is marked not-selected and its
// edges stay live. Otherwise it is tentatively selected, its incident edges are
// removed, and a greedy coverability check of the remaining edges decides
// whether the selection is kept; on a negative answer the selection is undone
// and the removed edges are put back exactly.
//
// Every vertex leaves the NotUsed state at most once, so the main loop runs at
// most n times. When no unused vertex with live edges remains but edges are
// still uncovered, the result is HeuristicFailure.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

enum class VertexState : std::uint8_t { NotUsed, Selected, NotSelected };

/// Mutable working state of one solve: a live-edge overlay on the immutable
/// graph, per-vertex labels, per-part usage and the undo stash.
class HeuristicState {
public:
  /// Throws Error(InstanceInvalid).
  explicit HeuristicState(const Instance &inst);

  const Instance &instance() const noexcept { return *inst_; }

  VertexState state(Vertex v) const { return state_.at(v - 1); }
  std::int64_t used(PartId p) const { return used_.at(p - 1); }
  std::int64_t residual(PartId p) const {
    return inst_->budgets.limit(p) - used(p);
  }
  std::size_t live_degree(Vertex v) const { return live_degree_.at(v - 1); }
  std::size_t live_edge_count() const noexcept { return live_edges_; }
  std::vector<Edge> live_edges() const;
  /// Live flag per edge, parallel to graph().edges().
  const std::vector<char> &live_mask() const noexcept { return live_; }
  /// Edges removed by the pending selection.
  const std::vector<std::size_t> &stash() const noexcept { return stash_; }

  std::uint64_t op_count() const noexcept { return ops_; }
  void count_ops(std::uint64_t n) noexcept { ops_ += n; }

  /// Edge ids incident to v, ascending.
  const std::vector<std::size_t> &incident(Vertex v) const {
    return incident_.at(v - 1);
  }

  /// NotUsed -> NotSelected; edges untouched.
  void mark_not_selected(Vertex v);
  /// NotUsed -> Selected; removes v's live edges into the stash.
  void select(Vertex v);
  /// Selected -> NotSelected for the pending selection; restores the stash.
  void undo_selection();
  /// Keeps the pending selection.
  void commit();

  /// Checks the bookkeeping invariants: usage counts match labels, usage
  /// within budgets, live edges are exactly those with no Selected endpoint.
  bool consistent() const;

private:
  void require_state(Vertex v, VertexState expected) const;

  const Instance *inst_;
  std::vector<VertexState> state_;
  std::vector<std::int64_t> used_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<char> live_;
  std::vector<std::size_t> live_degree_;
  std::size_t live_edges_ = 0;
  std::vector<std::size_t> stash_;
  Vertex pending_ = 0;
  std::uint64_t ops_ = 0;
};

/// Unused vertex of maximum live degree (>= 1), lowest id on ties.
/// Costs n operations.
std::optional<Vertex> extract_max(HeuristicState &state);

/// Greedy check that the live edges can be covered by unused vertices within
/// the residual budgets. Parts are visited by descending residual budget
/// (lower id first on ties); inside a part the unused vertex touching the
/// most unvisited edges is taken (lowest id on ties) until the residual budget
/// runs out or no vertex touches an unvisited edge. Leaves the state's labels
/// and edges untouched; only the op counter advances.
bool make_decision(HeuristicState &state);

enum class CoverStatus { Success, HeuristicFailure };

struct CoverResult {
  CoverStatus status = CoverStatus::HeuristicFailure;
  VertexSet cover; // Selected vertices
  std::vector<std::int64_t> per_part_usage;
  std::uint64_t op_count = 0;
  std::vector<Edge> uncovered_edges;

  bool success() const noexcept { return status == CoverStatus::Success; }
};

enum class StepOutcome { BudgetExhausted, Kept, Undone };

struct Step {
  Vertex vertex;
  StepOutcome outcome;
};

/// Called after every loop iteration with the state as it stands then.
using StepObserver = std::function<void(const Step &, const HeuristicState &)>;

/// Throws Error(InstanceInvalid).
CoverResult solve_cvck(const Instance &inst, const StepObserver &observer = {});

} // namespace kpvc
