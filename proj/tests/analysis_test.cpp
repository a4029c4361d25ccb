#include <gtest/gtest.h>

#include "spanner/analysis.hpp"
#include "spanner/generators.hpp"
#include "spanner/greedy.hpp"
#include "spanner/mst.hpp"
#include "support.hpp"

using namespace spanner;
namespace ts = testing_support;

namespace {

WeightedGraph triangle() { return WeightedGraph::from_edges(3, ts::unit_triangle()); }

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

TEST(Verify, IdentityHasRatioOne) {
  const auto g = petersen_star_fixture(0.2).graph;
  const auto r = verify_spanner(g, g, 1.0);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.worst_ratio, 1.0);
}

TEST(Verify, StarIsAThreeSpannerOfTheFixture) {
  const auto fx = petersen_star_fixture(0.2);
  const auto star = WeightedGraph::from_edges(10, fx.star_edges);
  const auto r = verify_spanner(star, fx.graph, 3.0);
  EXPECT_TRUE(r.ok);
  // Independent check: every Petersen edge detours through the root.
  const auto d = ts::floyd_warshall(10, fx.star_edges);
  double worst = 0.0;
  for (const auto& e : fx.petersen_edges) worst = std::max(worst, d[e.u][e.v] / e.weight);
  EXPECT_NEAR(worst, 2.4, 1e-12);
  EXPECT_NEAR(r.worst_ratio, worst, 1e-12);
}

TEST(Verify, StarIsNotATwoSpanner) {
  const auto fx = petersen_star_fixture(0.2);
  const auto star = WeightedGraph::from_edges(10, fx.star_edges);
  const auto r = verify_spanner(star, fx.graph, 2.0);
  EXPECT_FALSE(r.ok);
  EXPECT_GT(r.worst_ratio, 2.0);
  const auto d = ts::floyd_warshall(10, fx.star_edges);
  EXPECT_NEAR(d[r.worst_u][r.worst_v], r.worst_ratio, 1e-12);
  const double detour = d[r.worst_u][r.worst_v];
  EXPECT_TRUE(std::abs(detour - 2.2) < 1e-12 || std::abs(detour - 2.4) < 1e-12);
}

TEST(Verify, DisconnectedSpannerHasInfiniteRatio) {
  const auto g = triangle();
  const auto h = WeightedGraph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}});
  const auto r = verify_spanner(h, g, 100.0);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.worst_ratio, kInfinity);
}

TEST(Verify, NotSubgraphIsAnError) {
  const auto g = WeightedGraph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}});
  EXPECT_EQ(code_of([&] { verify_spanner(triangle(), g, 2.0); }), ErrorCode::not_subgraph);
  const auto heavier = WeightedGraph::from_edges(3, std::vector<Edge>{{0, 1, 2.0}, {1, 2, 1.0}});
  EXPECT_EQ(code_of([&] { verify_spanner(heavier, g, 2.0); }), ErrorCode::not_subgraph);
  EXPECT_EQ(code_of([&] { verify_spanner(WeightedGraph(4), g, 2.0); }), ErrorCode::not_subgraph);
}

TEST(Verify, MatchesFloydWarshall) {
  ts::TestRng rng(30);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 3 + rng.index(30);
    const auto edges = ts::connected_edges(n, 0.3, rng);
    const auto g = WeightedGraph::from_edges(n, edges);
    std::vector<Edge> sub;
    for (const auto& e : edges)
      if (rng.coin(0.7)) sub.push_back(e);
    const auto h = WeightedGraph::from_edges(n, sub);
    const auto d = ts::floyd_warshall(n, sub);
    double worst = 1.0;
    for (const auto& e : edges) worst = std::max(worst, d[e.u][e.v] / e.weight);
    const auto r = verify_spanner(h, g, 2.0);
    EXPECT_DOUBLE_EQ(r.worst_ratio, worst);
    EXPECT_EQ(r.ok, worst <= 2.0 * (1 + 1e-9));
  }
}

TEST(Verify, GreedyOutputAlwaysPasses) {
  ts::TestRng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rng.index(59);
    const auto g = WeightedGraph::from_edges(n, ts::connected_edges(n, 0.2, rng));
    const double t = rng.between(1.0, 4.0);
    EXPECT_TRUE(verify_spanner(greedy_spanner(g, GreedyConfig{t, 0.0}).spanner, g, t).ok);
  }
}

TEST(Report, MstHasLightnessOne) {
  ts::TestRng rng(32);
  const auto g = WeightedGraph::from_edges(20, ts::connected_edges(20, 0.3, rng));
  const auto tree = WeightedGraph::from_edges(20, mst(g).tree_edges);
  const auto r = report(tree, g);
  EXPECT_DOUBLE_EQ(r.lightness, 1.0);
  EXPECT_EQ(r.size, 19u);
  EXPECT_FALSE(r.girth);
}

TEST(Report, FixtureGreedySpanner) {
  const auto fx = petersen_star_fixture(0.2);
  const auto h = greedy_spanner(fx.graph, GreedyConfig{3.0, 0.0}).spanner;
  const auto r = report(h, fx.graph);
  EXPECT_EQ(r.size, 15u);
  EXPECT_EQ(r.weight, 15.0);
  EXPECT_EQ(r.mst_weight, 9.0);
  EXPECT_DOUBLE_EQ(r.lightness, 15.0 / 9.0);
  EXPECT_EQ(r.max_degree, 3u);
  EXPECT_EQ(r.girth, 5u);
  ASSERT_TRUE(r.max_pair_stretch);
  EXPECT_LE(*r.max_pair_stretch, r.max_edge_stretch);
}

TEST(Report, UnitTriangle) {
  const auto r = report(triangle(), triangle());
  EXPECT_EQ(r.max_degree, 2u);
  EXPECT_EQ(r.girth, 3u);
  EXPECT_EQ(r.max_edge_stretch, 1.0);
}

TEST(Report, PairStretchIsGatedByLimit) {
  const auto g = triangle();
  EXPECT_FALSE(report(g, g, 2).max_pair_stretch);
  EXPECT_TRUE(report(g, g, 3).max_pair_stretch);
}

TEST(Report, DisconnectedSpannerRejected) {
  EXPECT_EQ(code_of([] { report(WeightedGraph(3), triangle()); }), ErrorCode::disconnected);
}

TEST(Report, InvariantsOnRandomSpanners) {
  ts::TestRng rng(33);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 3 + rng.index(40);
    const auto edges = ts::connected_edges(n, 0.3, rng);
    const auto g = WeightedGraph::from_edges(n, edges);
    const double t = rng.between(1.0, 3.0);
    const auto h = greedy_spanner(g, GreedyConfig{t, 0.0}).spanner;
    const auto r = report(h, g);
    EXPECT_GE(r.lightness, 1.0 - 1e-12);
    ASSERT_TRUE(r.max_pair_stretch);
    EXPECT_LE(*r.max_pair_stretch, r.max_edge_stretch * (1 + 1e-12));
    EXPECT_NEAR(mst(h).total_weight, r.mst_weight, 1e-12 * r.mst_weight);
    EXPECT_EQ(r.lightness == 1.0, std::abs(r.weight - r.mst_weight) == 0.0);
  }
}

TEST(Report, JsonAndCsv) {
  const auto r = report(triangle(), triangle());
  const auto j = to_json(r);
  EXPECT_EQ(j.at("size").get<std::size_t>(), 3u);
  EXPECT_EQ(j.at("girth").get<std::size_t>(), 3u);
  EXPECT_EQ(csv_header(r), "size,weight,mst_weight,lightness,max_degree,max_edge_stretch,max_pair_stretch,girth");
  EXPECT_EQ(csv_row(r), "3,3,2,1.5,2,1,1,3");
  const auto tree = WeightedGraph::from_edges(2, std::vector<Edge>{{0, 1, 1.0}});
  EXPECT_EQ(to_json(report(tree, tree)).at("girth"), "inf");
}

TEST(Essentiality, GreedyTriangleAtOneAndAHalfPasses) {
  const auto h = greedy_spanner(triangle(), GreedyConfig{1.5, 0.0}).spanner;
  ASSERT_EQ(h.edge_count(), 3u);
  EXPECT_TRUE(edge_essentiality_suite(h, 1.5).pass);
}

TEST(Essentiality, TriangleAtThreeFails) {
  const auto r = edge_essentiality_suite(triangle(), 3.0);
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations[0].detour, 2.0);
  EXPECT_EQ(r.violations[0].shortcut.size(), 3u);
}

TEST(Essentiality, RandomGreedySpannersPass) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_weighted_graph(30, 0.3, {0.1, 1.0}, Seed{seed});
    for (double t : {1.5, 3.0}) {
      EXPECT_TRUE(edge_essentiality_suite(greedy_spanner(g, GreedyConfig{t, 0.0}).spanner, t).pass);
    }
  }
}
