#pragma once

// Hand-rolled instance generators and brute-force reference computations.
// Nothing here calls into the library's algorithms, so tests can compare
// library output against these answers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "spanner/graph.hpp"

namespace testing_support {

using spanner::Edge;
using spanner::VertexId;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Matrix = std::vector<std::vector<double>>;

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double between(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_); }
  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Connected random graph: a random recursive tree plus independent extra
// edges with probability p. Weights uniform in [lo, hi).
inline std::vector<Edge> connected_edges(std::size_t n, double p, TestRng& rng, double lo = 0.1, double hi = 1.0) {
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  auto add = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    if (a == b || present[a][b]) return;
    present[a][b] = true;
    edges.push_back({a, b, rng.between(lo, hi)});
  };
  for (VertexId v = 1; v < n; ++v) add(static_cast<VertexId>(rng.index(v)), v);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (rng.coin(p)) add(a, b);
    }
  }
  return edges;
}

inline std::vector<Edge> unit_weights(std::vector<Edge> edges) {
  for (auto& e : edges) e.weight = 1.0;
  return edges;
}

inline std::vector<Edge> unit_triangle() { return {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}; }

inline Matrix floyd_warshall(std::size_t n, const std::vector<Edge>& edges) {
  Matrix d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& e : edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.weight);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Subset is a t-spanner of `all` iff every edge of `all` is stretched by at
// most t, checked with Floyd-Warshall on the subset.
inline bool is_t_spanner(std::size_t n, const std::vector<Edge>& subset, const std::vector<Edge>& all, double t,
                         double rel_tol = 1e-9) {
  const auto d = floyd_warshall(n, subset);
  return std::all_of(all.begin(), all.end(),
                     [&](const Edge& e) { return d[e.u][e.v] <= t * e.weight * (1.0 + rel_tol); });
}

inline bool connected(std::size_t n, const std::vector<Edge>& edges) {
  const auto d = floyd_warshall(n, edges);
  for (std::size_t v = 0; v < n; ++v) {
    if (d[0][v] == kInf) return false;
  }
  return true;
}

inline double weight_of(const std::vector<Edge>& edges) {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

// Calls f(subset) for every subset of `edges` given as a bitmask.
inline void for_each_subset(const std::vector<Edge>& edges, const std::function<void(const std::vector<Edge>&)>& f) {
  const std::size_t m = edges.size();
  std::vector<Edge> subset;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) subset.push_back(edges[i]);
    }
    f(subset);
  }
}

// Minimum spanning-tree weight by enumerating all (n-1)-edge subsets.
inline double brute_force_mst_weight(std::size_t n, const std::vector<Edge>& edges) {
  double best = kInf;
  for_each_subset(edges, [&](const std::vector<Edge>& s) {
    if (s.size() + 1 != n || !connected(n, s)) return;
    best = std::min(best, weight_of(s));
  });
  return best;
}

// Prim on a dense matrix; parallel edges keep the lighter weight.
inline double prim_mst_weight(std::size_t n, const std::vector<Edge>& edges) {
  Matrix w(n, std::vector<double>(n, kInf));
  for (const auto& e : edges) {
    w[e.u][e.v] = std::min(w[e.u][e.v], e.weight);
    w[e.v][e.u] = w[e.u][e.v];
  }
  std::vector<double> best(n, kInf);
  std::vector<bool> in(n, false);
  best[0] = 0.0;
  double total = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && (pick == n || best[v] < best[pick])) pick = v;
    if (best[pick] == kInf) return kInf;
    in[pick] = true;
    total += best[pick];
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v]) best[v] = std::min(best[v], w[pick][v]);
  }
  return total;
}

struct BruteOptimum {
  double min_size = kInf;
  double min_weight = kInf;
};

inline BruteOptimum brute_force_optimum(std::size_t n, const std::vector<Edge>& edges, double t) {
  BruteOptimum out;
  for_each_subset(edges, [&](const std::vector<Edge>& s) {
    if (!is_t_spanner(n, s, edges, t)) return;
    out.min_size = std::min(out.min_size, static_cast<double>(s.size()));
    out.min_weight = std::min(out.min_weight, weight_of(s));
  });
  return out;
}

// Length of the shortest simple cycle by DFS over all simple paths; nullopt
// for forests. Exponential; meant for n <= 12.
inline std::optional<std::size_t> brute_force_girth(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<bool> on_path(n, false);
  // Cycles are enumerated from their smallest vertex `start`.
  std::function<void(VertexId, VertexId, std::size_t)> dfs = [&](VertexId start, VertexId x, std::size_t len) {
    if (len + 1 >= best) return;
    for (VertexId y : adj[x]) {
      if (y == start && len >= 2) best = std::min(best, len + 1);
      if (y <= start || on_path[y]) continue;
      on_path[y] = true;
      dfs(start, y, len + 1);
      on_path[y] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, 0);
    on_path[s] = false;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace testing_support
