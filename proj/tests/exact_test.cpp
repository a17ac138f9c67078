#include <gtest/gtest.h>

#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"
#include "oracles.hpp"

namespace kpvc {
namespace {

using testing::make_instance;

Instance triangle(std::vector<std::int64_t> limits) {
  return make_instance(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3}, std::move(limits));
}

TEST(ExactCvck, PathWithTightBudget) {
  const auto r = exact_cvck(make_instance(3, {{1, 2}, {2, 3}}, {1, 2, 1}, {0, 1}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.cover, (VertexSet{2}));
  EXPECT_EQ(r.size(), 1u);
  EXPECT_GT(r.nodes_explored, 0);
}

TEST(ExactCvck, ZeroBudgetsAreInfeasible) {
  const auto r = exact_cvck(make_instance(3, {{1, 2}, {2, 3}}, {1, 2, 1}, {0, 0}));
  EXPECT_FALSE(r.feasible());
  EXPECT_TRUE(r.cover.empty());
}

TEST(ExactCvck, TriangleWithOneClosedPart) {
  // Of the 8 subsets only {1,2} and {1,2,3} cover; the latter breaks part 3.
  const auto r = exact_cvck(triangle({1, 1, 0}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.cover, (VertexSet{1, 2}));
}

TEST(ExactCvck, RejectsInvalidInstance) {
  try {
    exact_cvck(make_instance(3, {{1, 2}}, {1, 1, 2}, {1, 1}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceInvalid);
  }
}

TEST(ExactMinVc, Examples) {
  EXPECT_TRUE(exact_min_vc(Graph(4, std::vector<Edge>{})).empty());

  std::vector<Edge> k4;
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v) k4.emplace_back(u, v);
  EXPECT_EQ(exact_min_vc(Graph(4, std::span<const Edge>(k4))).size(), 3u);

  const Graph star(6, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
  EXPECT_EQ(exact_min_vc(star), (VertexSet{1}));
}

TEST(ExactMaxClique, Examples) {
  EXPECT_EQ(exact_max_clique(Graph(3, std::vector<Edge>{})), (VertexSet{1}));
  const Graph g(4, std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(exact_max_clique(g), (VertexSet{1, 2, 3}));
}

TEST(ExactMaxClique, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 10, 0.2 + 0.6 * (trial % 4) / 3);
    const VertexSet clique = exact_max_clique(g);
    EXPECT_TRUE(is_clique(g, clique));
    EXPECT_EQ(static_cast<int>(clique.size()), testing::brute_max_clique_size(g));
  }
}

TEST(EnumerateMinCvck, Examples) {
  const auto edge = [](std::vector<std::int64_t> limits) {
    return make_instance(2, {{1, 2}}, {1, 2}, std::move(limits));
  };
  EXPECT_EQ(enumerate_min_cvck(edge({1, 1})), (std::vector<VertexSet>{{1}, {2}}));
  EXPECT_EQ(enumerate_min_cvck(edge({1, 0})), (std::vector<VertexSet>{{1}}));
  EXPECT_EQ(enumerate_min_cvck(triangle({1, 1, 1})),
            (std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(enumerate_min_cvck(edge({0, 0})).empty());
}

TEST(EnumerateMinCvck, RefusesLargeInstances) {
  std::mt19937_64 rng(1);
  const auto inst = testing::random_instance(rng, 21, 3, 0.2);
  try {
    enumerate_min_cvck(inst);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
  EXPECT_THROW(enumerate_min_cvck(testing::random_instance(rng, 6, 2, 0.5), 5), Error);
}

// The branch-and-bound answer is the lexicographically first of all optimal
// budget-respecting covers.
TEST(ExactCvck, AgreesWithEnumerationIncludingTieBreak) {
  std::mt19937_64 rng(99);
  int feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 1 + trial % 11;
    const PartId k = 1 + trial % std::min<int>(n, 4);
    const auto inst = testing::random_instance(rng, n, k, 0.5);
    const auto all = enumerate_min_cvck(inst);
    const auto r = exact_cvck(inst);
    ASSERT_EQ(r.feasible(), !all.empty());
    EXPECT_EQ(testing::brute_min_cvck_size(inst), r.feasible() ? int(r.size()) : -1);
    if (!r.feasible()) continue;
    ++feasible;
    EXPECT_EQ(r.cover, all.front());
    EXPECT_TRUE(is_vertex_cover(inst.graph, r.cover));
    EXPECT_TRUE(respects_budgets(inst, r.cover));
  }
  EXPECT_GT(feasible, 100);
}

TEST(ExactCvck, UnlimitedBudgetsMatchUnconstrainedOptimum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = testing::random_instance(rng, 3 + trial % 12, 3, 0.5);
    const Vertex n = inst.graph.vertex_count();
    for (auto &b : inst.budgets.limits) b = n;
    const auto r = exact_cvck(inst);
    ASSERT_TRUE(r.feasible());
    const VertexSet unconstrained = exact_min_vc(inst.graph);
    EXPECT_EQ(r.size(), unconstrained.size());
    EXPECT_EQ(static_cast<int>(unconstrained.size()), testing::brute_min_vc_size(inst.graph));
  }
}

TEST(ExactCvck, RaisingABudgetNeverHurts) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = testing::random_instance(rng, 4 + trial % 9, 3, 0.5);
    const auto before = exact_cvck(inst);
    inst.budgets.limits[static_cast<std::size_t>(trial % 3)] += 1;
    const auto after = exact_cvck(inst);
    if (before.feasible()) {
      ASSERT_TRUE(after.feasible());
      EXPECT_LE(after.size(), before.size());
    }
  }
}

TEST(Theorem, CliquePlusComplementCoverIsN) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 10, 0.5);
    EXPECT_EQ(exact_max_clique(g).size() + exact_min_vc(complement(g)).size(),
              static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST(Gallai, MinCoverPlusMaxIndependentIsN) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 10, 0.4);
    EXPECT_EQ(static_cast<int>(exact_min_vc(g).size()) + testing::brute_max_independent_size(g),
              g.vertex_count());
  }
}

} // namespace
} // namespace kpvc
