#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "spanner/error.hpp"
#include "spanner/graph.hpp"
#include "spanner/greedy.hpp"
#include "spanner/metric.hpp"
#include "spanner/shortest_paths.hpp"

namespace spanner {

enum class BaseSpannerKind { complete, net_hierarchy };

// Stretch bookkeeping for the pipeline. With t = 1 + eps and
// t' = 1 + eps * t_prime_fraction, the base spanner is built at
// sqrt(t / t') and the greedy simulation runs at sqrt(t * t'), so the two
// stretches multiply to t.
struct ApproxGreedyConfig {
  double epsilon = 0.25;
  double t_prime_fraction = 0.5;
  BaseSpannerKind base = BaseSpannerKind::net_hierarchy;
  std::optional<double> net_gamma;

  double t() const { return 1.0 + epsilon; }
  double t_prime() const { return 1.0 + epsilon * t_prime_fraction; }
  double base_stretch() const { return std::sqrt(t() / t_prime()); }
  double simulation_stretch() const { return std::sqrt(t() * t_prime()); }
  double gamma() const { return net_gamma.value_or(default_gamma(base_stretch())); }

  static double default_gamma(double s1) { return 4.0 + 32.0 / (s1 - 1.0); }

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
      throw Error(ErrorCode::invalid_argument, "epsilon must lie in (0, 1/2)");
    }
    if (!(t_prime_fraction > 0.0 && t_prime_fraction < 1.0)) {
      throw Error(ErrorCode::invalid_argument, "t_prime_fraction must lie in (0, 1)");
    }
    if (net_gamma && !(*net_gamma > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "net_gamma must be positive");
    }
  }
};

struct NetLevel {
  double scale = 0.0;
  std::vector<VertexId> net_points;
  std::vector<Edge> cross_edges;
};

struct NetHierarchy {
  std::vector<NetLevel> levels;  // increasing scale
};

// Levels at scales 2^i from just below the minimum interpoint distance up to
// the first power of two >= the diameter. Each level's net is a greedy
// scale-net over all points in index order: a point joins iff it is farther
// than the scale from every point already chosen. Cross edges join net
// points at distance <= gamma * scale.
inline NetHierarchy build_net_hierarchy(const MetricSpace& m, double gamma) {
  NetHierarchy h;
  const std::size_t n = m.size();
  if (n < 2) return h;
  double min_d = kInfinity;
  double diameter = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = m.distance(i, j);
      min_d = std::min(min_d, d);
      diameter = std::max(diameter, d);
    }
  }
  int low = static_cast<int>(std::floor(std::log2(min_d)));
  if (std::ldexp(1.0, low) >= min_d) --low;
  int high = static_cast<int>(std::ceil(std::log2(diameter)));
  if (std::ldexp(1.0, high) < diameter) ++high;

  for (int i = low; i <= high; ++i) {
    NetLevel level;
    level.scale = std::ldexp(1.0, i);
    for (VertexId p = 0; p < n; ++p) {
      const bool far = std::all_of(level.net_points.begin(), level.net_points.end(),
                                   [&](VertexId q) { return m.distance(p, q) > level.scale; });
      if (far) level.net_points.push_back(p);
    }
    const double reach = gamma * level.scale;
    const auto& pts = level.net_points;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        const double d = m.distance(pts[a], pts[b]);
        if (d <= reach) level.cross_edges.push_back(make_edge(pts[a], pts[b], d));
      }
    }
    h.levels.push_back(std::move(level));
  }
  return h;
}

// The bounded-degree base spanner G'. Its stretch in net_hierarchy mode is a
// consequence of gamma and is checked by callers, not assumed.
inline WeightedGraph base_spanner(const MetricSpace& m, double s1, const ApproxGreedyConfig& cfg) {
  if (!(s1 > 1.0)) throw Error(ErrorCode::invalid_argument, "base stretch must exceed 1");
  if (cfg.base == BaseSpannerKind::complete) return complete_graph(m);
  const double gamma = cfg.net_gamma.value_or(ApproxGreedyConfig::default_gamma(s1));
  const auto hierarchy = build_net_hierarchy(m, gamma);
  std::vector<Edge> edges;
  for (const auto& level : hierarchy.levels) {
    edges.insert(edges.end(), level.cross_edges.begin(), level.cross_edges.end());
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return WeightedGraph::from_edges(m.size(), edges);
}

struct LightEdgePartition {
  double max_weight = 0.0;  // D
  double threshold = 0.0;   // D / n
  std::vector<Edge> light;  // E0: weight <= D / n
  std::vector<Edge> rest;
};

inline LightEdgePartition partition_light_edges(const WeightedGraph& gprime) {
  if (gprime.edge_count() == 0) {
    throw Error(ErrorCode::invalid_argument, "partition_light_edges needs a nonempty edge set");
  }
  LightEdgePartition p;
  for (const auto& e : gprime.edges()) p.max_weight = std::max(p.max_weight, e.weight);
  p.threshold = p.max_weight / static_cast<double>(gprime.vertex_count());
  for (const auto& e : gprime.edges()) {
    (e.weight <= p.threshold ? p.light : p.rest).push_back(e);
  }
  return p;
}

// Seeds the spanner with `seed`, then runs the greedy loop at stretch s2 over
// the remaining edges of gprime in canonical order using exact bounded
// Dijkstra checks. When `guide` is the metric gprime's weights come from,
// the checks search toward the target using metric distance as a lower bound.
inline SpannerResult restricted_greedy(const WeightedGraph& gprime, std::span<const Edge> seed, double s2,
                                       const MetricSpace* guide = nullptr) {
  if (!(s2 >= 1.0)) throw Error(ErrorCode::invalid_argument, "simulation stretch must be >= 1");
  std::vector<std::uint64_t> seed_keys;
  seed_keys.reserve(seed.size());
  for (const auto& e : seed) {
    const auto idx = gprime.find_edge(e.u, e.v);
    if (!idx || gprime.edges()[*idx].weight != e.weight) {
      throw Error(ErrorCode::invalid_argument, "seed edge not in base graph");
    }
    seed_keys.push_back(pair_key(e.u, e.v));
  }
  std::sort(seed_keys.begin(), seed_keys.end());

  SpannerResult out{WeightedGraph(gprime.vertex_count()), "restricted_greedy", s2, {}};
  const auto order = canonical_edge_order(gprime);
  std::vector<bool> seeded(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (std::binary_search(seed_keys.begin(), seed_keys.end(), pair_key(order[i].u, order[i].v))) {
      seeded[i] = true;
      out.spanner.add_edge(order[i]);
    }
  }
  out.trace.reserve(order.size());
  detail::greedy_scan(out.spanner, order, s2, 0.0, out.trace, &seeded, guide);
  return out;
}

struct PipelineSummary {
  std::size_t base_edges = 0;      // |E'|
  double max_weight = 0.0;         // D
  std::size_t light_edges = 0;     // |E0|
  std::size_t rest_edges = 0;
  std::size_t accepted = 0;        // greedy-accepted edges of the rest
  double base_stretch = 0.0;       // s1
  double simulation_stretch = 0.0; // s2
  double t = 0.0;
  double t_prime = 0.0;
};

struct ApproxGreedyResult {
  SpannerResult result;
  PipelineSummary summary;
  std::vector<Edge> light_edges;
  WeightedGraph base;
};

inline ApproxGreedyResult approx_greedy(const MetricSpace& m, const ApproxGreedyConfig& cfg) {
  cfg.validate();
  ApproxGreedyResult out;
  const double s1 = cfg.base_stretch();
  const double s2 = cfg.simulation_stretch();
  out.base = base_spanner(m, s1, cfg);
  if (out.base.edge_count() == 0) {
    out.result = {WeightedGraph(m.size()), "approx_greedy", cfg.t(), {}};
  } else {
    auto part = partition_light_edges(out.base);
    out.result = restricted_greedy(out.base, part.light, s2, &m);
    out.result.construction = "approx_greedy";
    out.summary.max_weight = part.max_weight;
    out.summary.light_edges = part.light.size();
    out.summary.rest_edges = part.rest.size();
    out.light_edges = std::move(part.light);
  }
  out.summary.base_edges = out.base.edge_count();
  out.summary.accepted = static_cast<std::size_t>(
      std::count_if(out.result.trace.begin(), out.result.trace.end(),
                    [](const TraceRecord& r) { return r.accepted && !r.seeded; }));
  out.summary.base_stretch = s1;
  out.summary.simulation_stretch = s2;
  out.summary.t = cfg.t();
  out.summary.t_prime = cfg.t_prime();
  return out;
}

inline nlohmann::json to_json(const PipelineSummary& s) {
  return {{"base_edges", s.base_edges},   {"D", s.max_weight},
          {"light_edges", s.light_edges}, {"rest_edges", s.rest_edges},
          {"accepted", s.accepted},       {"s1", s.base_stretch},
          {"s2", s.simulation_stretch},   {"t", s.t},
          {"t_prime", s.t_prime}};
}

// d_{g-e}(u, v): the best u-v path other than the edge itself. nullopt when
// e is a bridge.
inline std::optional<double> second_shortest_weight(const WeightedGraph& g, const Edge& e) {
  const auto idx = g.find_edge(e.u, e.v);
  if (!idx) throw Error(ErrorCode::invalid_argument, "edge not in graph");
  DijkstraWorkspace ws(g.vertex_count());
  return ws.bounded(g, e.u, e.v, kInfinity, *idx);
}

}  // namespace spanner
