#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "spanner/error.hpp"
#include "spanner/graph.hpp"
#include "spanner/metric.hpp"
#include "spanner/mst.hpp"
#include "spanner/shortest_paths.hpp"
#include "spanner/text_format.hpp"

namespace spanner {

struct GreedyConfig {
  double t = 1.0;
  // Relative widening of the rejection test, for knife-edge ties.
  double comparison_slack = 0.0;

  static constexpr double kMaxSlack = 1e-6;

  void validate() const {
    if (!(t >= 1.0)) throw Error(ErrorCode::invalid_argument, "stretch t must be >= 1");
    if (!(comparison_slack >= 0.0 && comparison_slack <= kMaxSlack)) {
      throw Error(ErrorCode::invalid_argument, "comparison_slack must lie in [0, 1e-6]");
    }
  }
};

struct TraceRecord {
  Edge edge;
  bool accepted = false;
  // Spanner distance found at examination time; nullopt means the search
  // exceeded the cutoff (or found no path).
  std::optional<double> witness_distance;
  // Taken unconditionally, without a distance test.
  bool seeded = false;
};

struct SpannerResult {
  WeightedGraph spanner;
  std::string construction;
  double stretch_param = 1.0;
  std::vector<TraceRecord> trace;  // canonical order, one record per input edge
};

namespace detail {

// Algorithm core shared by greedy_spanner and restricted_greedy: scans
// `order` and appends an edge iff the current spanner distance between its
// endpoints exceeds stretch * w(e) * (1 + slack).
inline void greedy_scan(WeightedGraph& spanner, std::span<const Edge> order, double stretch,
                        double slack, std::vector<TraceRecord>& trace,
                        const std::vector<bool>* seeded = nullptr, const MetricSpace* guide = nullptr) {
  DijkstraWorkspace ws(spanner.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge& e = order[i];
    if (seeded && (*seeded)[i]) {
      trace.push_back({e, true, std::nullopt, true});
      continue;
    }
    const double cutoff = stretch * e.weight * (1.0 + slack);
    const auto d = guide ? ws.bounded_guided(spanner, e.u, e.v, cutoff,
                                             [&](VertexId x) { return guide->distance(x, e.v); })
                         : ws.bounded(spanner, e.u, e.v, cutoff);
    if (!d) spanner.add_edge(e);
    trace.push_back({e, !d.has_value(), d, false});
  }
}

}  // namespace detail

// The greedy t-spanner: edges in canonical (weight, u, v) order, each kept
// iff the spanner built so far has no u-v path of weight <= t * w(u, v).
inline SpannerResult greedy_spanner(const WeightedGraph& g, const GreedyConfig& cfg) {
  cfg.validate();
  if (!is_connected(g)) throw Error(ErrorCode::disconnected, "greedy_spanner requires a connected graph");
  SpannerResult out{WeightedGraph(g.vertex_count()), "greedy", cfg.t, {}};
  const auto order = canonical_edge_order(g);
  out.trace.reserve(order.size());
  detail::greedy_scan(out.spanner, order, cfg.t, cfg.comparison_slack, out.trace);
  return out;
}

// True iff the canonical Kruskal MST of g is contained in the spanner.
inline bool mst_inclusion_check(const WeightedGraph& g, const SpannerResult& r) {
  const auto tree = mst(g);
  return std::all_of(tree.tree_edges.begin(), tree.tree_edges.end(), [&](const Edge& e) {
    const auto idx = r.spanner.find_edge(e.u, e.v);
    return idx && r.spanner.edges()[*idx].weight == e.weight;
  });
}

// One line per examined edge: `u v w accepted witness`, where accepted is
// 0/1 and witness is a distance or the token `exceeds`.
inline void write_trace(std::ostream& out, const SpannerResult& r) {
  for (const auto& rec : r.trace) {
    out << rec.edge.u << ' ' << rec.edge.v << ' ' << format_shortest(rec.edge.weight) << ' '
        << (rec.accepted ? 1 : 0) << ' '
        << (rec.witness_distance ? format_shortest(*rec.witness_distance) : std::string("exceeds"))
        << '\n';
  }
}

}  // namespace spanner
