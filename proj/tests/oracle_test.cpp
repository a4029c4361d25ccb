#include <gtest/gtest.h>

#include "spanner/analysis.hpp"
#include "spanner/generators.hpp"
#include "spanner/greedy.hpp"
#include "spanner/metric.hpp"
#include "spanner/mst.hpp"
#include "spanner/oracle.hpp"
#include "support.hpp"

using namespace spanner;
namespace ts = testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no spanner::Error thrown";
  return ErrorCode::io;
}

}  // namespace

TEST(Oracle, UnitTriangle) {
  const auto g = WeightedGraph::from_edges(3, ts::unit_triangle());
  const auto s = min_size_spanner(g, 3.0);
  EXPECT_TRUE(s.exhausted);
  EXPECT_EQ(s.value, 2.0);
  EXPECT_EQ(s.edges.size(), 2u);
  const auto w = min_weight_spanner(g, 3.0);
  EXPECT_TRUE(w.exhausted);
  EXPECT_EQ(w.value, 2.0);
}

TEST(Oracle, TreeNeedsEveryEdge) {
  ts::TestRng rng(2);
  for (int rep = 0; rep < 5; ++rep) {
    const std::size_t n = 2 + rng.index(10);
    const auto g = WeightedGraph::from_edges(n, ts::connected_edges(n, 0.0, rng));
    for (double t : {1.0, 4.0}) {
      const auto r = min_size_spanner(g, t);
      EXPECT_EQ(r.value, static_cast<double>(n - 1));
      EXPECT_TRUE(same_edge_set(r.edges, g.edges()));
    }
  }
}

TEST(Oracle, FixtureOptimumIsTheStar) {
  const auto fx = petersen_star_fixture(0.2);
  const auto s = min_size_spanner(fx.graph, 3.0);
  EXPECT_TRUE(s.exhausted);
  EXPECT_EQ(s.value, 9.0);
  EXPECT_TRUE(same_edge_set(s.edges, fx.star_edges));
  const auto w = min_weight_spanner(fx.graph, 3.0);
  EXPECT_TRUE(w.exhausted);
  EXPECT_NEAR(w.value, 10.2, 1e-9);
  EXPECT_TRUE(same_edge_set(w.edges, fx.star_edges));
}

TEST(Oracle, NoFixtureSpannerIsLighterThanTheStar) {
  // Every subset with at least 9 edges and weight below 3 + 6 * 1.2 is
  // checked directly; none of them may be a 3-spanner.
  const auto fx = petersen_star_fixture(0.2);
  const std::vector<Edge> all(fx.graph.edges().begin(), fx.graph.edges().end());
  const auto& unit = fx.petersen_edges;
  const auto& heavy = fx.heavy_edges;
  EXPECT_TRUE(ts::is_t_spanner(10, fx.star_edges, all, 3.0));
  EXPECT_NEAR(ts::weight_of(fx.star_edges), 10.2, 1e-12);
  std::size_t checked = 0;
  std::vector<Edge> subset;
  for (unsigned hm = 0; hm < (1u << heavy.size()); ++hm) {
    const int b = __builtin_popcount(hm);
    for (unsigned um = 0; um < (1u << unit.size()); ++um) {
      const int a = __builtin_popcount(um);
      if (a + b < 9 || a + 1.2 * b >= 10.2 - 1e-9) continue;
      subset.clear();
      for (std::size_t i = 0; i < unit.size(); ++i)
        if (um >> i & 1) subset.push_back(unit[i]);
      for (std::size_t i = 0; i < heavy.size(); ++i)
        if (hm >> i & 1) subset.push_back(heavy[i]);
      ++checked;
      ASSERT_FALSE(ts::is_t_spanner(10, subset, all, 3.0));
    }
  }
  EXPECT_GT(checked, 100000u);
}

TEST(Oracle, MatchesSubsetEnumeration) {
  ts::TestRng rng(13);
  int compared = 0;
  for (int rep = 0; rep < 60 && compared < 30; ++rep) {
    const std::size_t n = 3 + rng.index(4);
    const auto edges = ts::connected_edges(n, 0.7, rng);
    if (edges.size() > 12) continue;
    const auto g = WeightedGraph::from_edges(n, edges);
    for (double t : {1.1, 1.5, 2.5}) {
      const auto brute = ts::brute_force_optimum(n, edges, t);
      const auto s = min_size_spanner(g, t);
      const auto w = min_weight_spanner(g, t);
      EXPECT_TRUE(s.exhausted);
      EXPECT_TRUE(w.exhausted);
      EXPECT_EQ(s.value, brute.min_size);
      EXPECT_NEAR(w.value, brute.min_weight, 1e-12);
      EXPECT_TRUE(ts::is_t_spanner(n, s.edges, edges, t));
      EXPECT_TRUE(ts::is_t_spanner(n, w.edges, edges, t));
    }
    ++compared;
  }
  EXPECT_GE(compared, 20);
}

TEST(Oracle, RandomMetricsMatchSubsetEnumeration) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto m = random_euclidean(5, 2, Seed{seed});
    const auto g = complete_graph(m);
    const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (double t : {1.2, 1.9}) {
      const auto brute = ts::brute_force_optimum(5, edges, t);
      EXPECT_EQ(min_size_spanner(g, t).value, brute.min_size);
      EXPECT_NEAR(min_weight_spanner(g, t).value, brute.min_weight, 1e-12);
    }
  }
}

TEST(Oracle, GreedySpannerIsItsOwnOptimum) {
  ts::TestRng rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 4 + rng.index(5);
    const auto g = WeightedGraph::from_edges(n, ts::connected_edges(n, 0.6, rng));
    for (double t : {1.5, 3.0}) {
      const auto h = greedy_spanner(g, GreedyConfig{t, 0.0}).spanner;
      const auto r = min_size_spanner(h, t);
      EXPECT_TRUE(r.exhausted);
      EXPECT_EQ(r.value, static_cast<double>(h.edge_count()));
      EXPECT_TRUE(same_edge_set(r.edges, h.edges()));
    }
  }
}

TEST(Oracle, HugeStretchGivesMstWeight) {
  ts::TestRng rng(22);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 3 + rng.index(6);
    const auto g = WeightedGraph::from_edges(n, ts::connected_edges(n, 0.5, rng));
    double max_w = 0.0;
    double min_w = kInfinity;
    for (const auto& e : g.edges()) {
      max_w = std::max(max_w, e.weight);
      min_w = std::min(min_w, e.weight);
    }
    const double t = static_cast<double>(n) * max_w / min_w;
    EXPECT_NEAR(min_weight_spanner(g, t).value, mst(g).total_weight, 1e-12);
  }
}

TEST(Oracle, OutputIsAlwaysValid) {
  ts::TestRng rng(24);
  for (int rep = 0; rep < 15; ++rep) {
    const std::size_t n = 3 + rng.index(6);
    const auto g = WeightedGraph::from_edges(n, ts::connected_edges(n, 0.5, rng));
    const double t = rng.between(1.0, 3.0);
    for (const auto& r : {min_size_spanner(g, t), min_weight_spanner(g, t)}) {
      EXPECT_TRUE(verify_spanner(WeightedGraph::from_edges(n, r.edges), g, t).ok);
      EXPECT_TRUE(std::is_sorted(r.edges.begin(), r.edges.end(), canonical_less));
    }
  }
}

TEST(Oracle, BudgetExhaustionKeepsIncumbent) {
  const auto fx = petersen_star_fixture(0.2);
  const auto r = min_size_spanner(fx.graph, 3.0, 5);
  EXPECT_FALSE(r.exhausted);
  EXPECT_LE(r.nodes_explored, 6u);
  EXPECT_TRUE(verify_spanner(WeightedGraph::from_edges(10, r.edges), fx.graph, 3.0).ok);
  EXPECT_EQ(r.value, 15.0);
}

TEST(Oracle, InvalidInput) {
  EXPECT_EQ(code_of([] { min_size_spanner(WeightedGraph::from_edges(3, ts::unit_triangle()), 0.5); }),
            ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { min_weight_spanner(WeightedGraph(3), 2.0); }), ErrorCode::disconnected);
}

TEST(Oracle, Json) {
  const auto r = min_weight_spanner(WeightedGraph::from_edges(3, ts::unit_triangle()), 3.0);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("objective"), "weight");
  EXPECT_EQ(j.at("value").get<double>(), 2.0);
  EXPECT_EQ(j.at("edges").size(), 2u);
  EXPECT_TRUE(j.at("exhausted").get<bool>());
}
