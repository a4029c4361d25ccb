#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spanner/graph.hpp"
#include "spanner/text_format.hpp"

namespace spanner {

// Graph text format:
//   n m
//   u v w      (m lines, 0-based ids)
// `#` starts a comment. Parallel edges collapse to the lightest copy.
inline WeightedGraph read_graph(std::istream& in) {
  TokenLineReader reader(in);
  auto header = reader.next();
  if (!header) reader.fail("missing header 'n m'");
  if (header->size() != 2) reader.fail("header must be 'n m'");
  const auto n = reader.parse_number<std::size_t>((*header)[0]);
  const auto m = reader.parse_number<std::size_t>((*header)[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto tokens = reader.next();
    if (!tokens) reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (tokens->size() != 3) reader.fail("edge line must be 'u v w'");
    const auto u = reader.parse_number<VertexId>((*tokens)[0]);
    const auto v = reader.parse_number<VertexId>((*tokens)[1]);
    const auto w = reader.parse_number<double>((*tokens)[2]);
    if (u >= n || v >= n) reader.fail("vertex id out of range");
    if (u == v) reader.fail("self-loop");
    if (!(w > 0.0) || !std::isfinite(w)) reader.fail("weight must be positive and finite");
    edges.push_back(make_edge(u, v, w));
  }
  if (reader.next()) reader.fail("trailing content after " + std::to_string(m) + " edges");
  return WeightedGraph::from_edges(n, edges);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_shortest(e.weight) << '\n';
  }
}

inline WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  return read_graph(in);
}

inline void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  write_graph(out, g);
}

inline std::string graph_to_string(const WeightedGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline WeightedGraph graph_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace spanner
