#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spanner/error.hpp"
#include "spanner/graph.hpp"

namespace spanner {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Dense symmetric n x n matrix of doubles, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  double max_entry() const noexcept {
    double m = 0.0;
    for (double x : data_) m = std::max(m, x);
    return m;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Reusable Dijkstra state. Only vertices touched by the previous query are
// reset, so repeated small queries on a large graph stay cheap.
class DijkstraWorkspace {
 public:
  explicit DijkstraWorkspace(std::size_t n = 0) { resize(n); }

  void resize(std::size_t n) {
    dist_.assign(n, kInfinity);
    parent_.assign(n, kNone);
    settled_.assign(n, false);
    touched_.clear();
  }

  // Exact distance from source to target if it is <= cutoff, nullopt
  // otherwise (including unreachable). Vertices whose tentative distance
  // exceeds the cutoff are never queued. `skip_edge` hides one edge index.
  std::optional<double> bounded(const WeightedGraph& g, VertexId source, VertexId target,
                                double cutoff, std::optional<std::size_t> skip_edge = std::nullopt) {
    prepare(g);
    if (source == target) {
      throw Error(ErrorCode::invalid_argument, "bounded_dijkstra requires source != target");
    }
    if (!(cutoff > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "cutoff must be positive");
    }
    last_source_ = source;
    relax_from(g, source, target, cutoff, skip_edge, [](VertexId) { return 0.0; });
    if (settled_[target] && dist_[target] <= cutoff) return dist_[target];
    return std::nullopt;
  }

  // Same contract as bounded(), searched goal-first: `lower_bound(x)` must
  // never exceed the true x-target distance and must be consistent across
  // edges (a metric distance to the target qualifies when edge weights are
  // metric distances). Vertices are pruned when dist + bound exceeds the
  // cutoff by more than a relative 1e-12.
  template <typename LowerBound>
  std::optional<double> bounded_guided(const WeightedGraph& g, VertexId source, VertexId target,
                                       double cutoff, LowerBound&& lower_bound) {
    prepare(g);
    if (source == target) {
      throw Error(ErrorCode::invalid_argument, "bounded_dijkstra requires source != target");
    }
    if (!(cutoff > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "cutoff must be positive");
    }
    last_source_ = source;
    relax_from(g, source, target, cutoff, std::nullopt, lower_bound);
    if (settled_[target] && dist_[target] <= cutoff) return dist_[target];
    return std::nullopt;
  }

  // Full single-source distances (kInfinity where unreachable).
  std::vector<double> single_source(const WeightedGraph& g, VertexId source,
                                    std::optional<std::size_t> skip_edge = std::nullopt) {
    prepare(g);
    last_source_ = source;
    relax_from(g, source, kNone, kInfinity, skip_edge, [](VertexId) { return 0.0; });
    return dist_;
  }

  // Vertices of the path found by the last query, source first. Empty if the
  // target was not settled.
  std::vector<VertexId> path_to(VertexId target) const {
    std::vector<VertexId> path;
    if (target >= settled_.size() || !settled_[target]) return path;
    for (VertexId v = target; v != kNone; v = parent_[v]) {
      path.push_back(v);
      if (v == last_source_) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  void prepare(const WeightedGraph& g) {
    if (dist_.size() != g.vertex_count()) {
      resize(g.vertex_count());
      return;
    }
    for (VertexId v : touched_) {
      dist_[v] = kInfinity;
      parent_[v] = kNone;
      settled_[v] = false;
    }
    touched_.clear();
  }

  // Dijkstra when lower_bound is zero, A* otherwise. A vertex whose distance
  // improves after it was settled is reopened, so rounding in the bound can
  // cost time but never exactness.
  template <typename LowerBound>
  void relax_from(const WeightedGraph& g, VertexId source, VertexId target, double cutoff,
                  std::optional<std::size_t> skip_edge, LowerBound&& lower_bound) {
    struct Item {
      double key;
      double dist;
      VertexId vertex;
      bool operator>(const Item& o) const { return key > o.key; }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    const double prune = cutoff * (1.0 + 1e-12);
    dist_[source] = 0.0;
    touched_.push_back(source);
    heap.push({lower_bound(source), 0.0, source});
    while (!heap.empty()) {
      const Item top = heap.top();
      heap.pop();
      const VertexId x = top.vertex;
      const double d = top.dist;
      if (d > dist_[x]) continue;
      settled_[x] = true;
      if (x == target) return;
      for (const auto& inc : g.neighbors(x)) {
        if (skip_edge && inc.edge == *skip_edge) continue;
        const double nd = d + inc.weight;
        if (nd > cutoff || nd >= dist_[inc.neighbor]) continue;
        const double key = nd + lower_bound(inc.neighbor);
        if (key > prune) continue;
        if (dist_[inc.neighbor] == kInfinity) touched_.push_back(inc.neighbor);
        dist_[inc.neighbor] = nd;
        parent_[inc.neighbor] = x;
        settled_[inc.neighbor] = false;
        heap.push({key, nd, inc.neighbor});
      }
    }
  }

  std::vector<double> dist_;
  std::vector<VertexId> parent_;
  std::vector<bool> settled_;
  std::vector<VertexId> touched_;
  VertexId last_source_ = kNone;
};

// One-shot bounded query; nullopt stands for "exceeds cutoff or unreachable".
inline std::optional<double> bounded_dijkstra(const WeightedGraph& g, VertexId source,
                                              VertexId target, double cutoff) {
  DijkstraWorkspace ws(g.vertex_count());
  return ws.bounded(g, source, target, cutoff);
}

inline DistanceMatrix all_pairs_distances(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix out(n);
  DijkstraWorkspace ws(n);
  for (VertexId s = 0; s < n; ++s) {
    const auto dist = ws.single_source(g, s);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kInfinity) {
        throw Error(ErrorCode::disconnected, "vertices " + std::to_string(s) + " and " +
                                                 std::to_string(v) + " are not connected");
      }
      out(s, v) = dist[v];
    }
  }
  // Dijkstra from each side can differ in the last bit; force exact symmetry.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::min(out(i, j), out(j, i));
      out(i, j) = d;
      out(j, i) = d;
    }
  }
  return out;
}

inline bool is_connected(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

// Hop length of the shortest cycle, ignoring weights; nullopt for forests.
// BFS from every root; a non-tree edge (x, y) closes a cycle of length at most
// depth(x) + depth(y) + 1, and the minimum over all roots is exact.
inline std::optional<std::size_t> girth_unweighted(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> depth(n, kUnseen);
  std::vector<std::size_t> via(n, kUnseen);
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), kUnseen);
    queue.assign(1, root);
    depth[root] = 0;
    via[root] = kUnseen;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      if (2 * depth[x] >= best) break;
      for (const auto& inc : g.neighbors(x)) {
        if (inc.edge == via[x]) continue;
        const VertexId y = inc.neighbor;
        if (depth[y] == kUnseen) {
          depth[y] = depth[x] + 1;
          via[y] = inc.edge;
          queue.push_back(y);
        } else {
          best = std::min(best, depth[x] + depth[y] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

}  // namespace spanner
