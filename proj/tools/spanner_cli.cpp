// Command-line front end: instance generation, spanner construction,
// analysis, exact oracles and the experiment suites.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spanner/analysis.hpp"
#include "spanner/approx_greedy.hpp"
#include "spanner/experiments.hpp"
#include "spanner/generators.hpp"
#include "spanner/graph_io.hpp"
#include "spanner/greedy.hpp"
#include "spanner/metric.hpp"
#include "spanner/oracle.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out;
  std::string format;  // empty: json for reports, csv for suites
  std::string config;
};

// Writes to the --out path, or stdout when none is given.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw spanner::Error(spanner::ErrorCode::io, "cannot write " + path);
  os << text;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw spanner::Error(spanner::ErrorCode::io, "cannot open config " + path);
  return json::parse(in);
}

std::string report_text(const spanner::AnalysisReport& r, const json& extra, const std::string& format) {
  if (format == "csv") {
    return spanner::csv_header(r) + "\n" + spanner::csv_row(r) + "\n";
  }
  json j = spanner::to_json(r);
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy and approximate-greedy graph spanners"};
  app.require_subcommand(1);
  // Global flags may appear before or after the subcommand.
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--seed", global.seed, "Random seed for generators")->capture_default_str();
  app.add_option("--out", global.out, "Output path (default: stdout)");
  app.add_option("--format", global.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", global.config, "JSON file with subcommand parameters");

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  std::string gen_kind;
  std::size_t gen_n = 20, gen_d = 2, gen_side = 10;
  double gen_p = 0.3, gen_lo = 0.1, gen_hi = 1.0, gen_eps = 0.2;
  gen->add_option("kind", gen_kind, "petersen | random-graph | euclidean | grid")
      ->required()
      ->check(CLI::IsMember({"petersen", "random-graph", "euclidean", "grid"}));
  gen->add_option("--n", gen_n, "Vertex / point count");
  gen->add_option("--p", gen_p, "Edge probability (random-graph)");
  gen->add_option("--lo", gen_lo, "Lower weight bound (random-graph)");
  gen->add_option("--hi", gen_hi, "Upper weight bound (random-graph)");
  gen->add_option("--d", gen_d, "Dimension (euclidean)");
  gen->add_option("--side", gen_side, "Grid side (grid)");
  gen->add_option("--epsilon", gen_eps, "Star edge excess (petersen)");

  // build greedy | approx
  auto* build = app.add_subcommand("build", "Construct a spanner");
  build->require_subcommand(1);
  std::string b_input, b_report, b_trace;
  std::optional<double> b_t, b_eps;
  std::optional<int> b_k;
  bool b_points = false;
  double b_slack = 0.0, b_tpf = 0.5;
  std::string b_base = "net";
  std::optional<double> b_gamma;

  auto* bg = build->add_subcommand("greedy", "Greedy t-spanner of a graph (or of a metric's complete graph)");
  bg->add_option("--input", b_input, "Graph file, or metric file with --metric")->required();
  bg->add_option("--t", b_t, "Stretch");
  bg->add_option("--k", b_k, "With --epsilon: t = (2k-1)(1+epsilon)");
  bg->add_option("--epsilon", b_eps, "See --k");
  bg->add_flag("--metric", b_points, "Input is a point-set or matrix file");
  bg->add_option("--slack", b_slack, "Relative comparison slack in [0, 1e-6]");
  bg->add_option("--report", b_report, "Write the analysis report here (default: stdout)");
  bg->add_option("--trace", b_trace, "Write the per-edge trace here");

  auto* ba = build->add_subcommand("approx", "Approximate-greedy (1+epsilon)-spanner of a metric");
  ba->add_option("--input", b_input, "Point-set or matrix file")->required();
  ba->add_option("--epsilon", b_eps, "Target stretch 1+epsilon, epsilon in (0, 1/2)")->required();
  ba->add_option("--t-prime-fraction", b_tpf, "t' = 1 + epsilon * fraction");
  ba->add_option("--base", b_base, "Base spanner")->check(CLI::IsMember({"net", "complete"}));
  ba->add_option("--gamma", b_gamma, "Net cross-edge radius multiplier");
  ba->add_option("--report", b_report, "Write the analysis report here (default: stdout)");
  ba->add_option("--trace", b_trace, "Write the per-edge trace here");

  // analyze
  auto* an = app.add_subcommand("analyze", "Measure a spanner against its host graph");
  std::string a_graph, a_spanner;
  std::optional<double> a_t;
  an->add_option("--graph", a_graph, "Host graph file")->required();
  an->add_option("--spanner", a_spanner, "Spanner graph file")->required();
  an->add_option("--t", a_t, "Also verify stretch t");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact minimum-size or minimum-weight t-spanner");
  std::string o_input, o_objective = "size";
  double o_t = 2.0;
  std::uint64_t o_budget = spanner::kDefaultOracleBudget;
  orc->add_option("--input", o_input, "Graph file")->required();
  orc->add_option("--t", o_t, "Stretch")->required();
  orc->add_option("--objective", o_objective, "size | weight")->check(CLI::IsMember({"size", "weight"}));
  orc->add_option("--budget", o_budget, "Search node limit");

  // suite
  auto* su = app.add_subcommand("suite", "Run a named experiment suite");
  std::string s_name;
  std::optional<int> s_k;
  std::optional<double> s_eps, s_delta, s_t;
  std::vector<std::size_t> s_sizes;
  std::vector<std::uint64_t> s_seeds;
  std::vector<double> s_stretches, s_densities;
  std::string s_input;
  bool s_no_timestamp = false;
  su->add_option("name", s_name, "Suite name")->check(CLI::IsMember(spanner::suite_names()));
  su->add_option("--k", s_k);
  su->add_option("--epsilon", s_eps);
  su->add_option("--delta", s_delta);
  su->add_option("--t", s_t);
  su->add_option("--sizes", s_sizes)->delimiter(',');
  su->add_option("--seeds", s_seeds)->delimiter(',');
  su->add_option("--stretches", s_stretches)->delimiter(',');
  su->add_option("--densities", s_densities)->delimiter(',');
  su->add_option("--input", s_input, "Graph file used instead of generated instances");
  su->add_flag("--no-timestamp", s_no_timestamp, "Omit the leading timestamp comment line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::ostringstream os;
      const spanner::Seed seed{global.seed};
      if (gen_kind == "petersen") {
        spanner::write_graph(os, spanner::petersen_star_fixture(gen_eps).graph);
      } else if (gen_kind == "random-graph") {
        spanner::write_graph(os, spanner::random_weighted_graph(gen_n, gen_p, {gen_lo, gen_hi}, seed));
      } else if (gen_kind == "euclidean") {
        spanner::write_metric(os, spanner::random_euclidean(gen_n, gen_d, seed));
      } else {
        spanner::write_metric(os, spanner::grid_metric(gen_side));
      }
      emit(global.out, os.str());
      return 0;
    }

    if (bg->parsed()) {
      spanner::WeightedGraph g = b_points ? spanner::complete_graph(spanner::read_metric_file(b_input))
                                          : spanner::read_graph_file(b_input);
      double t = 0.0;
      if (b_t) {
        t = *b_t;
      } else if (b_k && b_eps) {
        t = (2.0 * *b_k - 1.0) * (1.0 + *b_eps);
      } else {
        throw spanner::Error(spanner::ErrorCode::invalid_argument, "give --t or both --k and --epsilon");
      }
      const auto r = spanner::greedy_spanner(g, spanner::GreedyConfig{t, b_slack});
      emit(global.out, spanner::graph_to_string(r.spanner));
      if (!b_trace.empty()) {
        std::ostringstream os;
        spanner::write_trace(os, r);
        emit(b_trace, os.str());
      }
      json extra{{"construction", r.construction}, {"t", t}};
      if (b_k) extra["k"] = *b_k;
      if (b_eps) extra["epsilon"] = *b_eps;
      emit(b_report, report_text(spanner::report(r.spanner, g), extra, global.format));
      return 0;
    }

    if (ba->parsed()) {
      const auto m = spanner::read_metric_file(b_input);
      spanner::ApproxGreedyConfig cfg;
      cfg.epsilon = *b_eps;
      cfg.t_prime_fraction = b_tpf;
      cfg.base = b_base == "complete" ? spanner::BaseSpannerKind::complete : spanner::BaseSpannerKind::net_hierarchy;
      cfg.net_gamma = b_gamma;
      const auto res = spanner::approx_greedy(m, cfg);
      emit(global.out, spanner::graph_to_string(res.result.spanner));
      if (!b_trace.empty()) {
        std::ostringstream os;
        spanner::write_trace(os, res.result);
        emit(b_trace, os.str());
      }
      const auto g = spanner::complete_graph(m);
      json extra{{"construction", res.result.construction}, {"t", cfg.t()}, {"pipeline", spanner::to_json(res.summary)}};
      emit(b_report, report_text(spanner::report(res.result.spanner, g), extra, global.format));
      return 0;
    }

    if (an->parsed()) {
      const auto g = spanner::read_graph_file(a_graph);
      const auto h = spanner::read_graph_file(a_spanner);
      json extra = json::object();
      int code = 0;
      if (a_t) {
        const auto check = spanner::verify_spanner(h, g, *a_t);
        extra["verified_t"] = *a_t;
        extra["valid"] = check.ok;
        extra["worst_pair"] = {check.worst_u, check.worst_v};
        code = check.ok ? 0 : 1;
      }
      emit(global.out, report_text(spanner::report(h, g), extra, global.format));
      return code;
    }

    if (orc->parsed()) {
      const auto g = spanner::read_graph_file(o_input);
      const auto r = o_objective == "size" ? spanner::min_size_spanner(g, o_t, o_budget)
                                           : spanner::min_weight_spanner(g, o_t, o_budget);
      emit(global.out, spanner::to_json(r).dump() + "\n");
      return r.exhausted ? 0 : 2;
    }

    if (su->parsed()) {
      json cj = load_config(global.config);
      if (!s_name.empty()) cj["suite"] = s_name;
      auto cfg = spanner::ExperimentConfig::from_json(cj);
      if (s_k) cfg.k = s_k;
      if (s_eps) cfg.epsilon = s_eps;
      if (s_delta) cfg.delta = s_delta;
      if (s_t) cfg.t_override = s_t;
      if (!s_sizes.empty()) cfg.sizes = s_sizes;
      if (!s_seeds.empty()) cfg.seeds = s_seeds;
      if (!s_stretches.empty()) cfg.stretches = s_stretches;
      if (!s_densities.empty()) cfg.densities = s_densities;
      if (!s_input.empty()) cfg.input = s_input;
      const auto outcome = spanner::run_suite(cfg);
      std::ostringstream os;
      if (global.format == "json") {
        os << spanner::to_json(outcome).dump(2) << '\n';
      } else {
        spanner::write_suite_csv(os, outcome,
                                 s_no_timestamp ? std::nullopt : std::optional<std::string>(utc_timestamp()));
      }
      emit(global.out, os.str());
      if (!outcome.all_pass()) {
        json failed = json::array();
        for (const auto& r : outcome.rows) {
          if (!r.pass) failed.push_back({{"n", r.n}, {"seed", r.seed}, {"construction", r.construction}, {"detail", r.detail}});
        }
        std::cerr << json{{"suite", cfg.suite}, {"failed", failed}}.dump() << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 3;
  }
  return 0;
}
