#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spanner/error.hpp"

namespace spanner {

using VertexId = std::uint32_t;

// Undirected edge in canonical orientation (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Strict weak order used by every edge scan in the library: (weight, u, v).
inline bool canonical_less(const Edge& a, const Edge& b) {
  return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
}

inline Edge make_edge(VertexId a, VertexId b, double weight) {
  if (a == b) {
    throw Error(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(a));
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::invalid_argument, "edge weight must be positive and finite");
  }
  return a < b ? Edge{a, b, weight} : Edge{b, a, weight};
}

// Packs an unordered vertex pair into one key; used for edge lookups.
inline std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Incidence {
  VertexId neighbor;
  double weight;
  std::size_t edge;  // index into WeightedGraph::edges()
};

// Undirected graph with positive weights. Edges are kept in insertion order;
// the adjacency lists index into that edge list. Vertices are 0..n-1.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : adjacency_(n) {}

  // Builds a graph from an arbitrary edge list. Parallel edges collapse to the
  // lightest copy, placed at the position of the first occurrence.
  static WeightedGraph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
      }
      canon.push_back(make_edge(e.u, e.v, e.weight));
    }
    std::vector<std::size_t> order(canon.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pair_key(canon[a].u, canon[a].v) < pair_key(canon[b].u, canon[b].v);
    });
    std::vector<bool> keep(canon.size(), false);
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      std::size_t first = order[i];
      double lightest = canon[first].weight;
      const auto key = pair_key(canon[first].u, canon[first].v);
      while (j < order.size() && pair_key(canon[order[j]].u, canon[order[j]].v) == key) {
        lightest = std::min(lightest, canon[order[j]].weight);
        ++j;
      }
      canon[first].weight = lightest;
      keep[first] = true;
      i = j;
    }
    WeightedGraph g(n);
    g.edges_.reserve(order.size());
    for (std::size_t i = 0; i < canon.size(); ++i) {
      if (keep[i]) g.push_edge(canon[i]);
    }
    return g;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, adj.size());
    return best;
  }

  double total_weight() const noexcept {
    double sum = 0.0;
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  // Scans the shorter adjacency list; intended for sparse graphs.
  std::optional<std::size_t> find_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const VertexId other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    for (const auto& inc : list) {
      if (inc.neighbor == other) return inc.edge;
    }
    return std::nullopt;
  }

  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  // Adds (a, b). If the pair is already present the lighter weight wins and
  // false is returned.
  bool add_edge(VertexId a, VertexId b, double weight) {
    if (a >= vertex_count() || b >= vertex_count()) {
      throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    }
    const Edge e = make_edge(a, b, weight);
    if (auto existing = find_edge(a, b)) {
      if (e.weight < edges_[*existing].weight) set_weight(*existing, e.weight);
      return false;
    }
    push_edge(e);
    return true;
  }

  bool add_edge(const Edge& e) { return add_edge(e.u, e.v, e.weight); }

  // Sorted (u, v) keys of all edges, for membership tests on dense graphs.
  std::vector<std::uint64_t> sorted_keys() const {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges_.size());
    for (const auto& e : edges_) keys.push_back(pair_key(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  void push_edge(const Edge& e) {
    const std::size_t idx = edges_.size();
    edges_.push_back(e);
    adjacency_[e.u].push_back({e.v, e.weight, idx});
    adjacency_[e.v].push_back({e.u, e.weight, idx});
  }

  void set_weight(std::size_t idx, double w) {
    Edge& e = edges_[idx];
    e.weight = w;
    for (auto& inc : adjacency_[e.u]) {
      if (inc.edge == idx) inc.weight = w;
    }
    for (auto& inc : adjacency_[e.v]) {
      if (inc.edge == idx) inc.weight = w;
    }
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Edges sorted by (weight, u, v).
inline std::vector<Edge> canonical_edge_order(const WeightedGraph& g) {
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Same edge set regardless of storage order (weights compared exactly).
inline bool same_edge_set(std::span<const Edge> a, std::span<const Edge> b) {
  if (a.size() != b.size()) return false;
  std::vector<Edge> x(a.begin(), a.end());
  std::vector<Edge> y(b.begin(), b.end());
  std::sort(x.begin(), x.end(), canonical_less);
  std::sort(y.begin(), y.end(), canonical_less);
  return x == y;
}

}  // namespace spanner
