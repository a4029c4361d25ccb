#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "spanner/error.hpp"
#include "spanner/graph.hpp"

namespace spanner {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already in the same set.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t components_;
};

struct MstResult {
  std::vector<Edge> tree_edges;  // in canonical order
  double total_weight = 0.0;
};

// Kruskal over edges already sorted canonically. Stops at n - 1 edges.
inline MstResult kruskal_sorted(std::size_t n, std::span<const Edge> sorted_edges) {
  MstResult out;
  if (n == 0) return out;
  DisjointSet dsu(n);
  out.tree_edges.reserve(n - 1);
  for (const auto& e : sorted_edges) {
    if (dsu.unite(e.u, e.v)) {
      out.tree_edges.push_back(e);
      out.total_weight += e.weight;
      if (out.tree_edges.size() + 1 == n) break;
    }
  }
  if (out.tree_edges.size() + 1 != n) {
    throw Error(ErrorCode::disconnected, "graph has no spanning tree");
  }
  return out;
}

inline MstResult mst(const WeightedGraph& g) {
  const auto order = canonical_edge_order(g);
  return kruskal_sorted(g.vertex_count(), order);
}

}  // namespace spanner
