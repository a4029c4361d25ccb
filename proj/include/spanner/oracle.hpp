#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "spanner/analysis.hpp"
#include "spanner/error.hpp"
#include "spanner/graph.hpp"
#include "spanner/greedy.hpp"
#include "spanner/mst.hpp"
#include "spanner/shortest_paths.hpp"

namespace spanner {

enum class Objective { size, weight };

inline const char* to_string(Objective o) { return o == Objective::size ? "size" : "weight"; }

struct OracleResult {
  std::vector<Edge> edges;  // canonical order
  Objective objective = Objective::size;
  double value = 0.0;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;  // true certifies optimality
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

namespace detail {

// Include/exclude branch and bound over the canonical edge order,
// include-first, seeded with the greedy spanner as incumbent. An edge may be
// excluded only while included + undecided edges still give its endpoints a
// path within the stretch bound; that check is repeated for every excluded
// edge not yet satisfied by included edges alone.
class SpannerSearch {
 public:
  SpannerSearch(const WeightedGraph& g, double t, Objective obj, std::uint64_t budget)
      : n_(g.vertex_count()), t_(t), objective_(obj), budget_(budget),
        edges_(canonical_edge_order(g)), state_(edges_.size(), State::undecided), incident_(n_) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
    dist_.resize(n_);
    done_.resize(n_);
  }

  OracleResult run() {
    const auto seed = greedy_spanner(WeightedGraph::from_edges(n_, edges_), GreedyConfig{t_, 0.0});
    best_edges_ = canonical_edge_order(seed.spanner);
    best_value_ = value_of(best_edges_);
    search(0, 0.0, 0);
    OracleResult out;
    out.edges = best_edges_;
    out.objective = objective_;
    out.value = best_value_;
    out.nodes_explored = nodes_;
    out.exhausted = !aborted_;
    return out;
  }

 private:
  enum class State : unsigned char { undecided, included, excluded };

  double value_of(const std::vector<Edge>& es) const {
    if (objective_ == Objective::size) return static_cast<double>(es.size());
    double w = 0.0;
    for (const auto& e : es) w += e.weight;
    return w;
  }

  // Shortest u-v distance over edges allowed by the mask, pruned at cutoff.
  // Array-based Dijkstra; instances here have a handful of vertices.
  bool within(VertexId u, VertexId v, double cutoff, bool allow_undecided) {
    std::fill(dist_.begin(), dist_.end(), kInfinity);
    std::fill(done_.begin(), done_.end(), false);
    dist_[u] = 0.0;
    for (;;) {
      VertexId x = 0;
      double best = kInfinity;
      for (VertexId y = 0; y < n_; ++y) {
        if (!done_[y] && dist_[y] < best) {
          best = dist_[y];
          x = y;
        }
      }
      if (best > cutoff) return false;
      if (x == v) return true;
      done_[x] = true;
      for (std::size_t idx : incident_[x]) {
        const State s = state_[idx];
        if (s == State::excluded || (s == State::undecided && !allow_undecided)) continue;
        const Edge& e = edges_[idx];
        const VertexId y = e.u == x ? e.v : e.u;
        if (best + e.weight < dist_[y]) dist_[y] = best + e.weight;
      }
    }
  }

  double cutoff_for(const Edge& e) const { return t_ * e.weight * (1.0 + kStretchTolerance); }

  // Lower bound: current value plus the cheapest way to connect the
  // components of the included edges using undecided edges.
  double lower_bound(std::size_t next, double current) const {
    DisjointSet dsu(n_);
    for (std::size_t i = 0; i < next; ++i) {
      if (state_[i] == State::included) dsu.unite(edges_[i].u, edges_[i].v);
    }
    double extra = 0.0;
    for (std::size_t i = next; i < edges_.size() && dsu.components() > 1; ++i) {
      if (dsu.unite(edges_[i].u, edges_[i].v)) {
        extra += objective_ == Objective::size ? 1.0 : edges_[i].weight;
      }
    }
    if (dsu.components() > 1) return kInfinity;
    return current + extra;
  }

  bool improves(double bound) const {
    if (objective_ == Objective::size) return bound < best_value_ - 0.5;
    return bound < best_value_ * (1.0 - 1e-12);
  }

  bool exclusions_feasible() {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (state_[i] != State::excluded) continue;
      const Edge& e = edges_[i];
      if (!within(e.u, e.v, cutoff_for(e), true)) return false;
    }
    return true;
  }

  void search(std::size_t next, double current, std::size_t included) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (!improves(lower_bound(next, current))) return;
    if (next == edges_.size()) {
      std::vector<Edge> chosen;
      chosen.reserve(included);
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (state_[i] == State::included) chosen.push_back(edges_[i]);
      }
      best_edges_ = std::move(chosen);
      best_value_ = value_of(best_edges_);
      return;
    }
    const Edge& e = edges_[next];
    state_[next] = State::included;
    search(next + 1, current + (objective_ == Objective::size ? 1.0 : e.weight), included + 1);
    state_[next] = State::excluded;
    if (exclusions_feasible()) search(next + 1, current, included);
    state_[next] = State::undecided;
  }

  std::size_t n_;
  double t_;
  Objective objective_;
  std::uint64_t budget_;
  std::vector<Edge> edges_;
  std::vector<State> state_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<double> dist_;
  std::vector<bool> done_;
  std::vector<Edge> best_edges_;
  double best_value_ = kInfinity;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

inline OracleResult run_oracle(const WeightedGraph& g, double t, Objective obj, std::uint64_t budget) {
  if (!(t >= 1.0)) throw Error(ErrorCode::invalid_argument, "stretch t must be >= 1");
  if (!is_connected(g)) throw Error(ErrorCode::disconnected, "oracle requires a connected graph");
  auto out = SpannerSearch(g, t, obj, budget).run();
  const auto h = WeightedGraph::from_edges(g.vertex_count(), out.edges);
  if (!verify_spanner(h, g, t).ok) {
    throw Error(ErrorCode::invalid_argument, "oracle produced an invalid spanner");
  }
  return out;
}

}  // namespace detail

// Fewest edges of any t-spanner of g. exhausted = false means the node
// budget ran out and the incumbent is returned without an optimality proof.
inline OracleResult min_size_spanner(const WeightedGraph& g, double t,
                                     std::uint64_t budget = kDefaultOracleBudget) {
  return detail::run_oracle(g, t, Objective::size, budget);
}

inline OracleResult min_weight_spanner(const WeightedGraph& g, double t,
                                       std::uint64_t budget = kDefaultOracleBudget) {
  return detail::run_oracle(g, t, Objective::weight, budget);
}

inline nlohmann::json to_json(const OracleResult& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : r.edges) edges.push_back({e.u, e.v, e.weight});
  return {{"objective", to_string(r.objective)},
          {"value", r.value},
          {"edges", edges},
          {"exhausted", r.exhausted},
          {"nodes_explored", r.nodes_explored}};
}

}  // namespace spanner
