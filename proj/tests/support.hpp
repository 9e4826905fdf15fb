// Shared helpers for the unit and acceptance suites: randomized instance
// generators and the brute-force oracles the implementation is checked
// against. Everything here is independent of the library's decision paths.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rlab/generators.hpp"
#include "rlab/graph.hpp"
#include "rlab/metric_space.hpp"
#include "rlab/rng.hpp"

namespace testsupport {

inline bool exact_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

inline bool exact_equal(const rlab::IntMatrix& a, const rlab::IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

// Max of l^T Psi l over random unit vectors projected to the mean-zero
// hyperplane. A sampling lower bound for the true maximum; deterministic
// for a fixed seed regardless of thread count (chunks own their RNG, max
// is order-independent).
inline double brute_force_max_quadform(const Eigen::MatrixXd& psi, int samples,
                                       std::uint64_t seed) {
  const int n = static_cast<int>(psi.rows());
  if (n < 2) return 0.0;
  constexpr int kChunk = 1024;
  const int chunks = (samples + kChunk - 1) / kChunk;
  double best = -std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(max : best) schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    rlab::Rng rng(seed + 0x51ed2701ULL * static_cast<std::uint64_t>(c + 1));
    Eigen::VectorXd lambda(n);
    const int todo = std::min(kChunk, samples - c * kChunk);
    for (int s = 0; s < todo; ++s) {
      // gaussian components via Box-Muller, then center and normalize
      for (int i = 0; i < n; i += 2) {
        double u1 = rng.uniform01();
        double u2 = rng.uniform01();
        double r = std::sqrt(-2.0 * std::log(u1 + 1e-300));
        lambda(i) = r * std::cos(2.0 * M_PI * u2);
        if (i + 1 < n) lambda(i + 1) = r * std::sin(2.0 * M_PI * u2);
      }
      lambda.array() -= lambda.mean();
      double norm = lambda.norm();
      if (norm < 1e-12) continue;
      lambda /= norm;
      best = std::max(best, lambda.dot(psi * lambda));
    }
  }
  return best;
}

// Generic symmetric zero-diagonal matrix with entries in [-scale, scale].
inline Eigen::MatrixXd random_zero_diag_symmetric(rlab::Rng& rng, int n, double scale) {
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = rng.uniform(-scale, scale);
      psi(i, j) = v;
      psi(j, i) = v;
    }
  return psi;
}

// Squared Euclidean distances of random points: of negative type by
// construction.
inline Eigen::MatrixXd random_squared_euclidean(rlab::Rng& rng, int n, int dim) {
  Eigen::MatrixXd pts(n, dim);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim; ++k) pts(i, k) = rng.uniform(-1.0, 1.0);
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = (pts.row(i) - pts.row(j)).squaredNorm();
      psi(i, j) = v;
      psi(j, i) = v;
    }
  return psi;
}

inline rlab::FiniteMetricSpace random_lp_space(rlab::Rng& rng) {
  int dim = 1 + rng.index(4);
  int count = 4 + rng.index(7);
  double p = 1.0 + rng.uniform01();
  return rlab::lp_sample(dim, count, p, rng.next());
}

// Random connected graph: random tree plus a few extra edges; BFS metric.
inline rlab::GeneratedSpace random_graph_space(rlab::Rng& rng, int max_vertices = 16) {
  int n = 4 + rng.index(max_vertices - 3);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(rng.index(v), v);
  int extra = rng.index(3);
  for (int e = 0; e < extra; ++e) {
    int u = rng.index(n);
    int v = rng.index(n);
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  rlab::GeneratedSpace out;
  out.graph = rlab::make_graph(std::move(labels), edges);
  out.space = rlab::metric_from_graph(out.graph);
  return out;
}

inline rlab::FiniteMetricSpace random_metric(rlab::Rng& rng) {
  return rng.index(2) == 0 ? random_lp_space(rng) : random_graph_space(rng).space;
}

// Median families: path, grid, hypercube, random tree, small zn ball.
inline rlab::GeneratedSpace random_median_graph(rlab::Rng& rng) {
  switch (rng.index(5)) {
    case 0: return rlab::path_graph(2 + rng.index(20));
    case 1: return rlab::grid({2 + rng.index(4), 2 + rng.index(4)});
    case 2: return rlab::hypercube(1 + rng.index(5));
    case 3: {
      int n = 3 + rng.index(20);
      std::vector<std::pair<int, int>> edges;
      for (int v = 1; v < n; ++v) edges.emplace_back(rng.index(v), v);
      std::vector<std::string> labels(n);
      for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
      rlab::GeneratedSpace out;
      out.graph = rlab::make_graph(std::move(labels), edges);
      out.space = rlab::metric_from_graph(out.graph);
      return out;
    }
    default: return rlab::zn_ball(2, 1 + rng.index(3));
  }
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace testsupport
