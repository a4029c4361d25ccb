#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "spanner/error.hpp"
#include "spanner/graph.hpp"
#include "spanner/shortest_paths.hpp"
#include "spanner/text_format.hpp"

namespace spanner {

// Finite metric space: either Euclidean coordinates (distances computed on
// demand) or an explicit symmetric matrix. Immutable after construction.
class MetricSpace {
 public:
  enum class Source { coordinates, matrix };

  static MetricSpace from_points(std::size_t n, std::size_t dim, std::vector<double> coords) {
    if (coords.size() != n * dim) {
      throw Error(ErrorCode::invalid_argument, "coordinate array has wrong size");
    }
    if (n > 0 && dim == 0) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    for (double c : coords) {
      if (!std::isfinite(c)) throw Error(ErrorCode::invalid_argument, "non-finite coordinate");
    }
    MetricSpace m;
    m.source_ = Source::coordinates;
    m.n_ = n;
    m.dim_ = dim;
    m.coords_ = std::move(coords);
    return m;
  }

  // Validates symmetry, zero diagonal, positive off-diagonal entries, and the
  // triangle inequality (exhaustive up to 500 points, sampled beyond).
  static MetricSpace from_matrix(DistanceMatrix matrix) {
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix(i, i) != 0.0) throw Error(ErrorCode::invalid_argument, "nonzero diagonal");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (matrix(i, j) != matrix(j, i)) throw Error(ErrorCode::invalid_argument, "matrix not symmetric");
        if (!(matrix(i, j) > 0.0) || !std::isfinite(matrix(i, j))) {
          throw Error(ErrorCode::invalid_argument, "off-diagonal entries must be positive");
        }
      }
    }
    check_triangle_inequality(matrix);
    MetricSpace m;
    m.source_ = Source::matrix;
    m.n_ = n;
    m.matrix_ = std::move(matrix);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return dim_; }
  Source source() const noexcept { return source_; }
  std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
  const DistanceMatrix& matrix() const { return matrix_; }

  double distance(std::size_t i, std::size_t j) const {
    if (source_ == Source::matrix) return matrix_(i, j);
    double s = 0.0;
    const double* a = coords_.data() + i * dim_;
    const double* b = coords_.data() + j * dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double d = a[k] - b[k];
      s += d * d;
    }
    return std::sqrt(s);
  }

  DistanceMatrix to_matrix() const {
    if (source_ == Source::matrix) return matrix_;
    DistanceMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        out(i, j) = out(j, i) = distance(i, j);
      }
    }
    return out;
  }

  static constexpr double kTriangleTolerance = 1e-9;
  static constexpr std::size_t kExhaustiveTriangleLimit = 500;

 private:
  static void check_triangle_inequality(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    if (n < 3) return;
    const double slack = kTriangleTolerance * d.max_entry();
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (d(a, c) > d(a, b) + d(b, c) + slack) {
        throw Error(ErrorCode::invalid_argument,
                    "triangle inequality violated at (" + std::to_string(a) + ", " +
                        std::to_string(b) + ", " + std::to_string(c) + ")");
      }
    };
    if (n <= kExhaustiveTriangleLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) check(a, b, c);
      return;
    }
    std::mt19937_64 rng(0x5eed);
    for (std::size_t s = 0; s < 1'000'000; ++s) {
      check(rng() % n, rng() % n, rng() % n);
    }
  }

  Source source_ = Source::matrix;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  DistanceMatrix matrix_;
};

// All n-choose-2 edges weighted by the metric, generated in (u, v) order.
inline WeightedGraph complete_graph(const MetricSpace& m) {
  const std::size_t n = m.size();
  WeightedGraph g(n);
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back(make_edge(u, v, m.distance(u, v)));
  }
  return WeightedGraph::from_edges(n, edges);
}

// Shortest-path metric induced by a connected graph.
inline MetricSpace metric_closure(const WeightedGraph& g) {
  return MetricSpace::from_matrix(all_pairs_distances(g));
}

struct DoublingEstimate {
  std::size_t doubling_constant = 1;
  double estimated_dimension = 0.0;  // log2 of the constant
};

// Greedy-cover diagnostic: for every center p and every radius on a
// doubling grid spanning the occurring distances, covers B(p, r) by balls of
// radius r/2 centered at points of B(p, r) chosen greedily in index order.
// The reported value is the largest cover size seen; it certifies nothing.
inline DoublingEstimate estimate_doubling_constant(const MetricSpace& m) {
  const std::size_t n = m.size();
  DoublingEstimate out;
  if (n <= 1) return out;
  const DistanceMatrix d = m.to_matrix();
  double min_d = kInfinity;
  double max_d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      min_d = std::min(min_d, d(i, j));
      max_d = std::max(max_d, d(i, j));
    }
  }
  std::vector<double> radii;
  for (double r = min_d; r < 2.0 * max_d; r *= 2.0) radii.push_back(r);

  std::vector<std::size_t> ball;
  std::vector<bool> covered;
  for (std::size_t p = 0; p < n; ++p) {
    for (double r : radii) {
      ball.clear();
      for (std::size_t q = 0; q < n; ++q) {
        if (d(p, q) <= r) ball.push_back(q);
      }
      covered.assign(ball.size(), false);
      std::size_t centers = 0;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (covered[i]) continue;
        ++centers;
        for (std::size_t j = i; j < ball.size(); ++j) {
          if (!covered[j] && d(ball[i], ball[j]) <= r / 2.0) covered[j] = true;
        }
      }
      out.doubling_constant = std::max(out.doubling_constant, centers);
    }
  }
  out.estimated_dimension = std::log2(static_cast<double>(out.doubling_constant));
  return out;
}

// Point-set file: "n d" then n lines of d coordinates.
// Matrix file:    "n"   then n lines of n entries.
// read_metric accepts either, dispatching on the header's token count.
inline MetricSpace read_metric(std::istream& in) {
  TokenLineReader reader(in);
  auto header = reader.next();
  if (!header) reader.fail("missing header");
  if (header->size() == 2) {
    const auto n = reader.parse_number<std::size_t>((*header)[0]);
    const auto dim = reader.parse_number<std::size_t>((*header)[1]);
    std::vector<double> coords;
    coords.reserve(n * dim);
    for (std::size_t i = 0; i < n; ++i) {
      auto row = reader.next();
      if (!row) reader.fail("expected " + std::to_string(n) + " points");
      if (row->size() != dim) reader.fail("point must have " + std::to_string(dim) + " coordinates");
      for (const auto& tok : *row) coords.push_back(reader.parse_number<double>(tok));
    }
    if (reader.next()) reader.fail("trailing content");
    return MetricSpace::from_points(n, dim, std::move(coords));
  }
  if (header->size() == 1) {
    const auto n = reader.parse_number<std::size_t>((*header)[0]);
    DistanceMatrix matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto row = reader.next();
      if (!row) reader.fail("expected " + std::to_string(n) + " matrix rows");
      if (row->size() != n) reader.fail("matrix row must have " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) matrix(i, j) = reader.parse_number<double>((*row)[j]);
    }
    if (reader.next()) reader.fail("trailing content");
    return MetricSpace::from_matrix(std::move(matrix));
  }
  reader.fail("header must be 'n d' (points) or 'n' (matrix)");
}

inline void write_metric(std::ostream& out, const MetricSpace& m) {
  if (m.source() == MetricSpace::Source::coordinates) {
    out << m.size() << ' ' << m.dimension() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto p = m.point(i);
      for (std::size_t k = 0; k < p.size(); ++k) {
        out << (k ? " " : "") << format_shortest(p[k]);
      }
      out << '\n';
    }
    return;
  }
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << (j ? " " : "") << format_shortest(m.matrix()(i, j));
    }
    out << '\n';
  }
}

inline MetricSpace read_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  return read_metric(in);
}

inline void write_metric_file(const std::string& path, const MetricSpace& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  write_metric(out, m);
}

}  // namespace spanner
