#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "spanner/error.hpp"
#include "spanner/graph.hpp"
#include "spanner/mst.hpp"
#include "spanner/shortest_paths.hpp"
#include "spanner/text_format.hpp"

namespace spanner {

inline constexpr double kStretchTolerance = 1e-9;

struct StretchCheck {
  bool ok = true;
  double worst_ratio = 1.0;  // max over g's edges of d_h(u, v) / w(u, v)
  VertexId worst_u = 0;
  VertexId worst_v = 0;
};

// Throws NOT_SUBGRAPH unless h has g's vertex set and every edge of h is an
// edge of g with the same weight.
inline void require_subgraph(const WeightedGraph& h, const WeightedGraph& g) {
  if (h.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::not_subgraph, "vertex counts differ");
  }
  for (const auto& e : h.edges()) {
    const auto idx = g.find_edge(e.u, e.v);
    if (!idx || g.edges()[*idx].weight != e.weight) {
      throw Error(ErrorCode::not_subgraph, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                               ") missing from host graph or reweighted");
    }
  }
}

// Checks the stretch condition on g's edges only, which bounds the stretch of
// every vertex pair. One Dijkstra over h per source vertex.
inline StretchCheck verify_spanner(const WeightedGraph& h, const WeightedGraph& g, double t) {
  require_subgraph(h, g);
  StretchCheck out;
  const std::size_t n = g.vertex_count();
  DijkstraWorkspace ws(n);
  for (VertexId s = 0; s < n; ++s) {
    bool has_forward = false;
    for (const auto& inc : g.neighbors(s)) has_forward |= inc.neighbor > s;
    if (!has_forward) continue;
    const auto dist = ws.single_source(h, s);
    for (const auto& inc : g.neighbors(s)) {
      if (inc.neighbor <= s) continue;
      const double ratio = dist[inc.neighbor] / inc.weight;
      if (ratio > out.worst_ratio) {
        out.worst_ratio = ratio;
        out.worst_u = s;
        out.worst_v = inc.neighbor;
      }
    }
  }
  out.ok = out.worst_ratio <= t * (1.0 + kStretchTolerance);
  return out;
}

// Max over all vertex pairs of d_h / d_g.
inline double max_pair_stretch(const WeightedGraph& h, const WeightedGraph& g) {
  const auto dh = all_pairs_distances(h);
  const auto dg = all_pairs_distances(g);
  double worst = 1.0;
  for (std::size_t i = 0; i < dg.size(); ++i) {
    for (std::size_t j = i + 1; j < dg.size(); ++j) worst = std::max(worst, dh(i, j) / dg(i, j));
  }
  return worst;
}

struct AnalysisReport {
  std::size_t size = 0;
  double weight = 0.0;
  double mst_weight = 0.0;
  double lightness = 0.0;
  std::size_t max_degree = 0;
  double max_edge_stretch = 1.0;
  std::optional<double> max_pair_stretch;
  std::optional<std::size_t> girth;  // nullopt = infinite
};

inline constexpr std::size_t kPairStretchLimit = 500;

inline AnalysisReport report(const WeightedGraph& h, const WeightedGraph& g,
                             std::size_t pair_stretch_limit = kPairStretchLimit) {
  require_subgraph(h, g);
  if (!is_connected(h)) throw Error(ErrorCode::disconnected, "spanner is not connected");
  AnalysisReport r;
  r.size = h.edge_count();
  r.weight = h.total_weight();
  r.mst_weight = mst(g).total_weight;
  r.lightness = r.mst_weight > 0.0 ? r.weight / r.mst_weight : 1.0;
  r.max_degree = h.max_degree();
  r.max_edge_stretch = verify_spanner(h, g, kInfinity).worst_ratio;
  if (g.vertex_count() <= pair_stretch_limit) r.max_pair_stretch = max_pair_stretch(h, g);
  r.girth = girth_unweighted(h);
  return r;
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["size"] = r.size;
  j["weight"] = r.weight;
  j["mst_weight"] = r.mst_weight;
  j["lightness"] = r.lightness;
  j["max_degree"] = r.max_degree;
  j["max_edge_stretch"] = r.max_edge_stretch;
  j["max_pair_stretch"] = r.max_pair_stretch ? nlohmann::json(*r.max_pair_stretch) : nlohmann::json(nullptr);
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json("inf");
  return j;
}

inline std::string csv_header(const AnalysisReport&) {
  return "size,weight,mst_weight,lightness,max_degree,max_edge_stretch,max_pair_stretch,girth";
}

inline std::string csv_row(const AnalysisReport& r) {
  std::string s;
  s += std::to_string(r.size) + ',';
  s += format_sig(r.weight) + ',';
  s += format_sig(r.mst_weight) + ',';
  s += format_sig(r.lightness) + ',';
  s += std::to_string(r.max_degree) + ',';
  s += format_sig(r.max_edge_stretch) + ',';
  s += (r.max_pair_stretch ? format_sig(*r.max_pair_stretch) : std::string()) + ',';
  s += r.girth ? std::to_string(*r.girth) : std::string("inf");
  return s;
}

struct EssentialityViolation {
  Edge edge;
  double detour = 0.0;                // d_{h-e}(u, v)
  std::vector<VertexId> shortcut;     // the offending u-v path
};

struct EssentialityResult {
  bool pass = true;
  std::vector<EssentialityViolation> violations;
};

// Every edge e = (u, v) of h must satisfy d_{h-e}(u, v) > t * w(e). A
// violation means some t-spanner of h omits e, so h cannot be a greedy
// t-spanner. Comparison uses a relative tolerance in the conservative
// direction: detours within rel_tol of t * w(e) count as violations.
inline EssentialityResult edge_essentiality_suite(const WeightedGraph& h, double t,
                                                  double rel_tol = kStretchTolerance) {
  EssentialityResult out;
  DijkstraWorkspace ws(h.vertex_count());
  for (std::size_t idx = 0; idx < h.edge_count(); ++idx) {
    const Edge e = h.edges()[idx];
    const double cutoff = t * e.weight * (1.0 + rel_tol);
    if (auto d = ws.bounded(h, e.u, e.v, cutoff, idx)) {
      out.pass = false;
      out.violations.push_back({e, *d, ws.path_to(e.v)});
    }
  }
  return out;
}

}  // namespace spanner
