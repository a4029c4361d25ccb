#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "spanner/analysis.hpp"
#include "spanner/approx_greedy.hpp"
#include "spanner/error.hpp"
#include "spanner/generators.hpp"
#include "spanner/graph.hpp"
#include "spanner/graph_io.hpp"
#include "spanner/greedy.hpp"
#include "spanner/metric.hpp"
#include "spanner/mst.hpp"
#include "spanner/oracle.hpp"
#include "spanner/shortest_paths.hpp"
#include "spanner/text_format.hpp"

namespace spanner {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma3",           "mst_inclusion",   "existential",
                                              "girth",            "corollary7_trend", "approx_pipeline",
                                              "lightness_flatness", "petersen"};
  return names;
}

struct ExperimentConfig {
  std::string suite;
  std::optional<int> k;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::optional<double> t_override;
  // Extra knobs; each suite documents which it reads.
  std::vector<double> stretches;      // stretch sweep when t is not pinned
  std::vector<double> densities;      // edge probabilities for random graphs
  double corollary7_constant = 4.0;   // t = c * log2(n) / delta
  double size_envelope = 3.0;         // corollary7: |H| <= size_envelope * n
  double lightness_envelope = 2.0;    // corollary7: lightness <= envelope
  double trend_factor = 1.5;          // approx suites: value(n_max) <= factor * value(n_min)
  std::optional<std::string> input;   // graph file replacing generated instances

  // Stretch implied by k and epsilon: (2k - 1)(1 + eps).
  std::optional<double> pinned_stretch() const {
    if (t_override) return t_override;
    if (k && epsilon) return (2.0 * *k - 1.0) * (1.0 + *epsilon);
    return std::nullopt;
  }

  void validate() const {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
      throw Error(ErrorCode::invalid_argument, "unknown suite '" + suite + "'");
    }
    if (k && *k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
    if (t_override && !(*t_override >= 1.0)) throw Error(ErrorCode::invalid_argument, "t must be >= 1");
    if (delta && !(*delta > 0.0 && *delta < 1.0)) throw Error(ErrorCode::invalid_argument, "delta must lie in (0, 1)");
    for (double p : densities) {
      if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "densities must lie in (0, 1]");
    }
  }

  static ExperimentConfig from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.suite = j.value("suite", std::string());
    if (j.contains("k")) c.k = j.at("k").get<int>();
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("delta")) c.delta = j.at("delta").get<double>();
    if (j.contains("t")) c.t_override = j.at("t").get<double>();
    if (j.contains("sizes")) c.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("stretches")) c.stretches = j.at("stretches").get<std::vector<double>>();
    if (j.contains("densities")) c.densities = j.at("densities").get<std::vector<double>>();
    c.corollary7_constant = j.value("corollary7_constant", c.corollary7_constant);
    c.size_envelope = j.value("size_envelope", c.size_envelope);
    c.lightness_envelope = j.value("lightness_envelope", c.lightness_envelope);
    c.trend_factor = j.value("trend_factor", c.trend_factor);
    if (j.contains("input")) c.input = j.at("input").get<std::string>();
    return c;
  }
};

// One output record. Measurement columns are optional because oracle and
// trend rows only fill some of them.
struct SuiteRow {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string construction;
  std::optional<double> t;
  std::optional<std::size_t> size;
  std::optional<double> weight;
  std::optional<double> mst_weight;
  std::optional<double> lightness;
  std::optional<std::size_t> max_degree;
  std::optional<double> max_edge_stretch;
  std::optional<double> max_pair_stretch;
  std::optional<std::size_t> girth;
  bool girth_infinite = false;
  bool pass = true;
  std::string detail;

  void fill(const AnalysisReport& r) {
    size = r.size;
    weight = r.weight;
    mst_weight = r.mst_weight;
    lightness = r.lightness;
    max_degree = r.max_degree;
    max_edge_stretch = r.max_edge_stretch;
    max_pair_stretch = r.max_pair_stretch;
    girth = r.girth;
    girth_infinite = !r.girth.has_value();
  }

  // Records a failed check; the first failure message wins the detail slot
  // and later ones are appended.
  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += detail.empty() ? what : "; " + what;
  }
};

inline SuiteRow make_row(std::string suite, std::size_t n, std::uint64_t seed, std::string construction,
                         std::optional<double> t) {
  SuiteRow row;
  row.suite = std::move(suite);
  row.n = n;
  row.seed = seed;
  row.construction = std::move(construction);
  row.t = t;
  return row;
}

struct SuiteOutcome {
  std::vector<SuiteRow> rows;

  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.pass; }));
  }
};

namespace detail {

inline std::string stretch_tag(double t) { return "t=" + format_sig(t, 6); }

template <typename T>
std::vector<T> or_default(const std::vector<T>& v, std::vector<T> fallback) {
  return v.empty() ? fallback : v;
}

inline std::vector<std::uint64_t> seed_range(std::uint64_t first, std::uint64_t last) {
  std::vector<std::uint64_t> out;
  for (auto s = first; s <= last; ++s) out.push_back(s);
  return out;
}

struct Instance {
  std::size_t n;
  std::uint64_t seed;
  WeightedGraph graph;
};

// Random graphs for (size, seed) or the single graph from cfg.input.
inline std::vector<Instance> graph_instances(const ExperimentConfig& cfg, std::vector<std::size_t> default_sizes,
                                             std::vector<std::uint64_t> default_seeds, double p,
                                             std::pair<double, double> weights) {
  std::vector<Instance> out;
  if (cfg.input) {
    auto g = read_graph_file(*cfg.input);
    out.push_back({g.vertex_count(), 0, std::move(g)});
    return out;
  }
  for (auto n : or_default(cfg.sizes, default_sizes)) {
    for (auto s : or_default(cfg.seeds, default_seeds)) {
      out.push_back({n, s, random_weighted_graph(n, p, weights, Seed{s})});
    }
  }
  return out;
}

inline std::vector<double> stretch_sweep(const ExperimentConfig& cfg, std::vector<double> fallback) {
  if (auto t = cfg.pinned_stretch()) return {*t};
  return or_default(cfg.stretches, fallback);
}

inline void suite_petersen(const ExperimentConfig& cfg, SuiteOutcome& out) {
  const double eps = cfg.epsilon.value_or(0.2);
  const double t = cfg.t_override.value_or(3.0);
  const auto fx = petersen_star_fixture(eps);
  const auto& g = fx.graph;

  const auto greedy = greedy_spanner(g, GreedyConfig{t, 0.0});
  auto row = make_row("petersen", 10, 0, "greedy", t);
  row.fill(report(greedy.spanner, g));
  row.check(same_edge_set(greedy.spanner.edges(), fx.petersen_edges), "greedy edge set != Petersen edges");
  row.check(mst_inclusion_check(g, greedy), "MST not contained");
  out.rows.push_back(row);

  const auto size_opt = min_size_spanner(g, t);
  auto srow = make_row("petersen", 10, 0, "oracle_min_size", t);
  srow.fill(report(WeightedGraph::from_edges(10, size_opt.edges), g));
  srow.check(size_opt.exhausted, "size oracle not exhausted");
  srow.check(size_opt.value == static_cast<double>(fx.star_edges.size()), "optimal size != star size");
  srow.check(srow.size.value_or(0) <= row.size.value_or(0), "oracle larger than greedy");
  out.rows.push_back(srow);

  const auto weight_opt = min_weight_spanner(g, t);
  auto wrow = make_row("petersen", 10, 0, "oracle_min_weight", t);
  wrow.fill(report(WeightedGraph::from_edges(10, weight_opt.edges), g));
  double star_weight = 0.0;
  for (const auto& e : fx.star_edges) star_weight += e.weight;
  wrow.check(weight_opt.exhausted, "weight oracle not exhausted");
  wrow.check(std::abs(weight_opt.value - star_weight) <= 1e-9, "optimal weight != star weight");
  out.rows.push_back(wrow);
}

inline void suite_lemma3(const ExperimentConfig& cfg, SuiteOutcome& out) {
  const auto instances = graph_instances(cfg, {10, 20, 30}, seed_range(1, 10), 0.3, {0.1, 1.0});
  for (const auto& inst : instances) {
    for (double t : stretch_sweep(cfg, {1.5})) {
      const auto r = greedy_spanner(inst.graph, GreedyConfig{t, 0.0});
      auto row = make_row("lemma3", inst.n, inst.seed, "greedy_" + stretch_tag(t), t);
      row.fill(report(r.spanner, inst.graph));
      const auto ess = edge_essentiality_suite(r.spanner, t);
      if (!ess.pass) {
        const auto& v = ess.violations.front();
        row.check(false, "edge (" + std::to_string(v.edge.u) + "," + std::to_string(v.edge.v) + ") has detour " +
                             format_sig(v.detour));
      }
      const auto again = greedy_spanner(r.spanner, GreedyConfig{t, 0.0});
      row.check(same_edge_set(again.spanner.edges(), r.spanner.edges()), "greedy(H) != H");
      row.check(verify_spanner(r.spanner, inst.graph, t).ok, "stretch bound violated");
      out.rows.push_back(row);
    }
  }
}

inline void suite_mst_inclusion(const ExperimentConfig& cfg, SuiteOutcome& out) {
  const auto instances = graph_instances(cfg, {20}, seed_range(1, 30), 0.4, {0.0, 1.0});
  for (const auto& inst : instances) {
    for (double t : stretch_sweep(cfg, {1.5, 3.0, 5.0})) {
      const auto r = greedy_spanner(inst.graph, GreedyConfig{t, 0.0});
      auto row = make_row("mst_inclusion", inst.n, inst.seed, "greedy_" + stretch_tag(t), t);
      row.fill(report(r.spanner, inst.graph));
      row.check(mst_inclusion_check(inst.graph, r), "Kruskal MST not contained in greedy spanner");
      const double wg = mst(inst.graph).total_weight;
      const double wh = mst(r.spanner).total_weight;
      row.check(std::abs(wg - wh) <= 1e-12 * wg, "MST weight of spanner differs from MST weight of graph");
      out.rows.push_back(row);
    }
  }
}

inline void suite_existential(const ExperimentConfig& cfg, SuiteOutcome& out) {
  const auto sizes = or_default(cfg.sizes, {4, 5, 6, 7});
  const auto seeds = or_default(cfg.seeds, seed_range(1, 5));
  std::vector<double> weight_ts = stretch_sweep(cfg, {1.5, 2.5});
  std::vector<double> size_ts;
  if (cfg.pinned_stretch() || !cfg.stretches.empty()) {
    for (double t : weight_ts) {
      if (t < 2.0) size_ts.push_back(t);
    }
  } else {
    size_ts = {1.5, 1.9};
  }
  std::vector<double> all_ts = weight_ts;
  all_ts.insert(all_ts.end(), size_ts.begin(), size_ts.end());
  std::sort(all_ts.begin(), all_ts.end());
  all_ts.erase(std::unique(all_ts.begin(), all_ts.end()), all_ts.end());

  for (auto n : sizes) {
    for (auto s : seeds) {
      const auto m = random_euclidean(n, 2, Seed{s});
      const auto g = complete_graph(m);
      for (double t : all_ts) {
        const auto h = greedy_spanner(g, GreedyConfig{t, 0.0}).spanner;
        const auto mh = complete_graph(metric_closure(h));
        auto row = make_row("existential", n, s, "greedy_" + stretch_tag(t), t);
        row.fill(report(h, g));
        if (std::find(weight_ts.begin(), weight_ts.end(), t) != weight_ts.end()) {
          const auto opt = min_weight_spanner(mh, t);
          row.check(opt.exhausted, "weight oracle not exhausted");
          row.check(h.total_weight() <= opt.value + 1e-9, "w(H) exceeds optimal weight on M_H");
          row.detail += row.detail.empty() ? "" : "; ";
          row.detail += "opt_weight=" + format_sig(opt.value);
        }
        if (std::find(size_ts.begin(), size_ts.end(), t) != size_ts.end()) {
          const auto opt = min_size_spanner(mh, t);
          row.check(opt.exhausted, "size oracle not exhausted");
          row.check(static_cast<double>(h.edge_count()) <= opt.value, "|H| exceeds optimal size on M_H");
          row.detail += row.detail.empty() ? "" : "; ";
          row.detail += "opt_size=" + format_sig(opt.value);
        }
        out.rows.push_back(row);
      }
    }
  }
}

inline void suite_girth(const ExperimentConfig& cfg, SuiteOutcome& out) {
  const std::vector<int> ks = cfg.k ? std::vector<int>{*cfg.k} : std::vector<int>{2, 3};
  const auto densities = or_default(cfg.densities, {0.2, 0.5});
  std::vector<std::pair<double, Instance>> instances;
  if (cfg.input) {
    for (auto& inst : graph_instances(cfg, {}, {}, 1.0, {1.0, 1.0})) instances.push_back({0.0, std::move(inst)});
  } else {
    for (double p : densities) {
      for (auto& inst : graph_instances(cfg, {20, 40, 60}, seed_range(1, 3), p, {1.0, 1.0})) {
        instances.push_back({p, std::move(inst)});
      }
    }
  }
  for (const auto& [p, inst] : instances) {
    for (int k : ks) {
      const double t = 2.0 * k - 1.0;
      const auto r = greedy_spanner(inst.graph, GreedyConfig{t, 0.0});
      auto row = make_row("girth", inst.n, inst.seed, "greedy_k=" + std::to_string(k) + "_p=" + format_sig(p, 3), t);
      row.fill(report(r.spanner, inst.graph));
      const auto girth = girth_unweighted(r.spanner);
      row.check(!girth || *girth >= static_cast<std::size_t>(2 * k + 1), "girth below 2k+1");
      out.rows.push_back(row);
    }
  }
}

inline void suite_corollary7(const ExperimentConfig& cfg, SuiteOutcome& out) {
  const double delta = cfg.delta.value_or(0.5);
  for (auto n : or_default(cfg.sizes, {64, 256, 1024})) {
    for (auto s : or_default(cfg.seeds, {1})) {
      const auto g = random_weighted_graph(n, 1.0, {0.1, 1.0}, Seed{s});
      const double t = cfg.t_override.value_or(cfg.corollary7_constant * std::log2(static_cast<double>(n)) / delta);
      const auto r = greedy_spanner(g, GreedyConfig{t, 0.0});
      auto row = make_row("corollary7_trend", n, s, "greedy_" + stretch_tag(t), t);
      row.fill(report(r.spanner, g, 0));
      row.check(static_cast<double>(r.spanner.edge_count()) <= cfg.size_envelope * static_cast<double>(n),
                "size above envelope");
      row.check(row.lightness.value_or(kInfinity) <= cfg.lightness_envelope, "lightness above envelope");
      out.rows.push_back(row);
    }
  }
}

// Runs the approximate-greedy pipeline once and checks the per-instance
// output properties; returns the analysis for trend comparisons.
inline AnalysisReport approx_instance(const std::string& suite, std::size_t n, std::uint64_t seed, double eps,
                                      SuiteOutcome& out) {
  const auto m = random_euclidean(n, 2, Seed{seed});
  ApproxGreedyConfig acfg;
  acfg.epsilon = eps;
  const auto res = approx_greedy(m, acfg);
  const auto g = complete_graph(m);
  const auto& h = res.result.spanner;
  auto row = make_row(suite, n, seed, "approx_greedy", acfg.t());
  const auto rep = report(h, g, 0);
  row.fill(rep);
  row.check(verify_spanner(h, g, acfg.t()).ok, "stretch above 1+eps");
  const auto light = [&] {
    std::vector<std::uint64_t> keys;
    for (const auto& e : res.light_edges) keys.push_back(pair_key(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return keys;
  }();
  double worst_ratio = kInfinity;
  for (const auto& e : h.edges()) {
    if (std::binary_search(light.begin(), light.end(), pair_key(e.u, e.v))) continue;
    const auto second = second_shortest_weight(h, e);
    worst_ratio = std::min(worst_ratio, second ? *second / e.weight : kInfinity);
  }
  row.check(worst_ratio > acfg.t_prime() * (1.0 + kStretchTolerance), "second shortest path within t' * w(e)");
  row.check(rep.mst_weight > 0.0 && mst(h).total_weight <= acfg.t() * rep.mst_weight * (1.0 + kStretchTolerance),
            "MST of output above t * MST of input");
  row.detail += row.detail.empty() ? "" : "; ";
  row.detail += "min_second_ratio=" + format_sig(worst_ratio) + " base_edges=" + std::to_string(res.summary.base_edges) +
                " light=" + std::to_string(res.summary.light_edges);
  out.rows.push_back(row);
  return rep;
}

inline void approx_trend(const ExperimentConfig& cfg, const std::string& suite, std::vector<std::size_t> default_sizes,
                         bool check_degree, SuiteOutcome& out) {
  const double eps = cfg.epsilon.value_or(0.25);
  auto sizes = or_default(cfg.sizes, default_sizes);
  std::sort(sizes.begin(), sizes.end());
  for (auto s : or_default(cfg.seeds, {1})) {
    std::vector<AnalysisReport> reps;
    for (auto n : sizes) reps.push_back(approx_instance(suite, n, s, eps, out));
    if (reps.size() < 2) continue;
    auto row = make_row(suite, sizes.back(), s, "trend", 1.0 + eps);
    const auto& small = reps.front();
    const auto& large = reps.back();
    if (check_degree) {
      row.check(static_cast<double>(large.max_degree) <= cfg.trend_factor * static_cast<double>(small.max_degree),
                "degree grows with n");
    }
    row.check(large.lightness <= cfg.trend_factor * small.lightness, "lightness grows with n");
    row.lightness = large.lightness / small.lightness;
    row.max_degree = large.max_degree;
    row.detail += row.detail.empty() ? "" : "; ";
    row.detail += "degree " + std::to_string(small.max_degree) + "->" + std::to_string(large.max_degree) +
                  " lightness " + format_sig(small.lightness) + "->" + format_sig(large.lightness);
    out.rows.push_back(row);
  }
}

}  // namespace detail

// Runs one named suite. Rows come back sorted by (suite, n, seed,
// construction) so output bytes do not depend on execution order.
inline SuiteOutcome run_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  SuiteOutcome out;
  if (cfg.suite == "petersen") detail::suite_petersen(cfg, out);
  else if (cfg.suite == "lemma3") detail::suite_lemma3(cfg, out);
  else if (cfg.suite == "mst_inclusion") detail::suite_mst_inclusion(cfg, out);
  else if (cfg.suite == "existential") detail::suite_existential(cfg, out);
  else if (cfg.suite == "girth") detail::suite_girth(cfg, out);
  else if (cfg.suite == "corollary7_trend") detail::suite_corollary7(cfg, out);
  else if (cfg.suite == "approx_pipeline") detail::approx_trend(cfg, "approx_pipeline", {125, 250, 500}, true, out);
  else if (cfg.suite == "lightness_flatness") detail::approx_trend(cfg, "lightness_flatness", {250, 2000}, false, out);
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const SuiteRow& a, const SuiteRow& b) {
    return std::tie(a.suite, a.n, a.seed, a.construction) < std::tie(b.suite, b.n, b.seed, b.construction);
  });
  return out;
}

inline const char* kSuiteCsvHeader =
    "suite,n,seed,construction,t,size,weight,mst_weight,lightness,max_degree,max_edge_stretch,"
    "max_pair_stretch,girth,pass,detail";

// Writes the CSV. When `timestamp` is given it goes on a leading `#` line,
// which is the only line allowed to differ between identical runs.
inline void write_suite_csv(std::ostream& os, const SuiteOutcome& outcome,
                            const std::optional<std::string>& timestamp = std::nullopt) {
  auto num = [](const std::optional<double>& x) { return x ? format_sig(*x) : std::string(); };
  auto cnt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string(); };
  if (timestamp) os << "# generated " << *timestamp << '\n';
  os << kSuiteCsvHeader << '\n';
  for (const auto& r : outcome.rows) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    os << r.suite << ',' << r.n << ',' << r.seed << ',' << r.construction << ',' << num(r.t) << ','
       << cnt(r.size) << ',' << num(r.weight) << ',' << num(r.mst_weight) << ',' << num(r.lightness) << ','
       << cnt(r.max_degree) << ',' << num(r.max_edge_stretch) << ',' << num(r.max_pair_stretch) << ','
       << (r.girth_infinite ? std::string("inf") : cnt(r.girth)) << ',' << (r.pass ? 1 : 0) << ',' << detail
       << '\n';
  }
}

inline nlohmann::json to_json(const SuiteOutcome& outcome) {
  nlohmann::json rows = nlohmann::json::array();
  auto opt = [](const auto& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  for (const auto& r : outcome.rows) {
    rows.push_back({{"suite", r.suite},
                    {"n", r.n},
                    {"seed", r.seed},
                    {"construction", r.construction},
                    {"t", opt(r.t)},
                    {"size", opt(r.size)},
                    {"weight", opt(r.weight)},
                    {"mst_weight", opt(r.mst_weight)},
                    {"lightness", opt(r.lightness)},
                    {"max_degree", opt(r.max_degree)},
                    {"max_edge_stretch", opt(r.max_edge_stretch)},
                    {"max_pair_stretch", opt(r.max_pair_stretch)},
                    {"girth", r.girth_infinite ? nlohmann::json("inf") : opt(r.girth)},
                    {"pass", r.pass},
                    {"detail", r.detail}});
  }
  return {{"rows", rows}, {"failures", outcome.failures()}, {"pass", outcome.all_pass()}};
}

}  // namespace spanner
