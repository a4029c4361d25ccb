#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "spanner/error.hpp"
#include "spanner/graph.hpp"
#include "spanner/metric.hpp"
#include "spanner/shortest_paths.hpp"

namespace spanner {

struct Seed {
  std::uint64_t value = 0;
};

// mt19937_64 is fully specified by the standard; the standard distributions
// are not, so draws are mapped to [0, 1) and ranges by hand to keep instances
// bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in the open interval (lo, hi).
  double open_interval(double lo, double hi) {
    for (;;) {
      const double x = lo + (hi - lo) * uniform();
      if (x > lo && x < hi) return x;
    }
  }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

struct PetersenStarFixture {
  WeightedGraph graph;
  VertexId root = 0;
  std::vector<Edge> petersen_edges;  // 15 edges, weight 1
  std::vector<Edge> star_edges;      // the 9 edges of the star S rooted at `root`
  std::vector<Edge> heavy_edges;     // the 6 star edges of weight 1 + eps
};

// Petersen graph (outer cycle 0-4, inner pentagram 5-9, spokes i -- i+5) with
// unit weights, plus edges of weight 1 + eps from root 0 to its six
// non-neighbours. The three Petersen edges at the root complete the star.
inline PetersenStarFixture petersen_star_fixture(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw Error(ErrorCode::invalid_argument, "epsilon must lie in (0, 1/2)");
  }
  PetersenStarFixture f;
  for (VertexId i = 0; i < 5; ++i) {
    f.petersen_edges.push_back(make_edge(i, (i + 1) % 5, 1.0));
    f.petersen_edges.push_back(make_edge(i, i + 5, 1.0));
    f.petersen_edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5, 1.0));
  }
  std::vector<bool> adjacent(10, false);
  for (const auto& e : f.petersen_edges) {
    if (e.u == f.root) {
      adjacent[e.v] = true;
      f.star_edges.push_back(e);
    }
  }
  for (VertexId v = 0; v < 10; ++v) {
    if (v == f.root || adjacent[v]) continue;
    const Edge e = make_edge(f.root, v, 1.0 + epsilon);
    f.heavy_edges.push_back(e);
    f.star_edges.push_back(e);
  }
  std::vector<Edge> all = f.petersen_edges;
  all.insert(all.end(), f.heavy_edges.begin(), f.heavy_edges.end());
  f.graph = WeightedGraph::from_edges(10, all);
  return f;
}

// Erdos-Renyi G(n, p) with weights uniform in (lo, hi), or exactly lo when
// lo == hi. A disconnected draw is repaired by adding the missing edges of a
// random spanning tree at weight hi.
inline WeightedGraph random_weighted_graph(std::size_t n, double p, std::pair<double, double> weight_range,
                                           Seed seed) {
  const auto [lo, hi] = weight_range;
  if (n < 2) throw Error(ErrorCode::invalid_argument, "random_weighted_graph needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "p must lie in (0, 1]");
  if (!(lo >= 0.0 && hi > 0.0 && hi >= lo)) {
    throw Error(ErrorCode::invalid_argument, "weight range must satisfy 0 <= lo <= hi, hi > 0");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (p < 1.0 && !(rng.uniform() < p)) continue;
      const double w = lo == hi ? lo : rng.open_interval(lo, hi);
      edges.push_back({u, v, w});
    }
  }
  auto g = WeightedGraph::from_edges(n, edges);
  if (is_connected(g)) return g;
  std::vector<VertexId> perm(n);
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId a = perm[i];
    const VertexId b = perm[rng.below(i)];
    if (!g.has_edge(a, b)) g.add_edge(a, b, hi);
  }
  return g;
}

// n points uniform in the unit d-cube.
inline MetricSpace random_euclidean(std::size_t n, std::size_t d, Seed seed) {
  if (d < 1 || d > 8) throw Error(ErrorCode::invalid_argument, "dimension must lie in [1, 8]");
  Rng rng(seed);
  std::vector<double> coords(n * d);
  for (auto& c : coords) c = rng.uniform();
  return MetricSpace::from_points(n, d, std::move(coords));
}

// side x side integer grid in the plane; point index = row * side + col.
inline MetricSpace grid_metric(std::size_t side) {
  if (side < 1) throw Error(ErrorCode::invalid_argument, "side must be >= 1");
  std::vector<double> coords;
  coords.reserve(2 * side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      coords.push_back(static_cast<double>(r));
      coords.push_back(static_cast<double>(c));
    }
  }
  return MetricSpace::from_points(side * side, 2, std::move(coords));
}

}  // namespace spanner
