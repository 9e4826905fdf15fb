#include "rlab/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rlab/errors.hpp"
#include "rlab/rng.hpp"

namespace rlab {

namespace {

constexpr int kVertexCap = 100'000;

std::string tuple_label(const std::vector<int>& coords) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) out << ',';
    out << coords[k];
  }
  out << ')';
  return out.str();
}

std::int64_t l1_distance(const std::vector<int>& u, const std::vector<int>& v) {
  std::int64_t d = 0;
  for (std::size_t k = 0; k < u.size(); ++k) d += std::abs(u[k] - v[k]);
  return d;
}

}  // namespace

GeneratedSpace zn_ball(int rank, int radius) {
  if (rank < 1) throw std::invalid_argument("zn_ball: rank must be >= 1");
  if (radius < 1) throw std::invalid_argument("zn_ball: radius must be >= 1");

  // enumerate lattice points with l1 norm <= radius
  std::vector<std::vector<int>> points;
  std::vector<int> cur(rank, 0);
  auto enumerate = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == rank) {
      points.push_back(cur);
      if (static_cast<int>(points.size()) > kVertexCap)
        throw SizeCapError("zn_ball(" + std::to_string(rank) + "," +
                           std::to_string(radius) + ") exceeds " +
                           std::to_string(kVertexCap) + " vertices");
      return;
    }
    for (int x = -remaining; x <= remaining; ++x) {
      cur[axis] = x;
      self(self, axis + 1, remaining - std::abs(x));
    }
  };
  enumerate(enumerate, 0, radius);
  std::sort(points.begin(), points.end());

  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (const auto& pt : points) {
    index.emplace(pt, static_cast<int>(labels.size()));
    labels.push_back(tuple_label(pt));
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& pt : points) {
    int u = index.at(pt);
    std::vector<int> nbr = pt;
    for (int axis = 0; axis < rank; ++axis) {
      for (int step : {-1, 1}) {
        nbr[axis] = pt[axis] + step;
        auto it = index.find(nbr);
        if (it != index.end() && u < it->second) edges.emplace_back(u, it->second);
      }
      nbr[axis] = pt[axis];
    }
  }

  GeneratedSpace out;
  out.graph = make_graph(std::move(labels), edges);
  IntMatrix dist = all_pairs_bfs(out.graph);

  // the truncated ball must carry the ambient word metric
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) != l1_distance(points[i], points[j]))
        throw std::logic_error("zn_ball: graph metric disagrees with l1 distance");

  out.space = make_space(out.graph.labels, std::move(dist));
  return out;
}

GeneratedSpace free_group_ball(int rank, int radius) {
  if (rank < 2) throw std::invalid_argument("free_group_ball: rank must be >= 2");
  if (radius < 1) throw std::invalid_argument("free_group_ball: radius must be >= 1");
  if (rank > 13)
    throw std::invalid_argument("free_group_ball: rank above 13 is not supported");

  // vertex count 1 + 2r((2r-1)^R - 1)/(2r-2) for the 2r-regular tree
  {
    long double count = 1.0L;
    long double layer = 2.0L * rank;
    for (int d = 1; d <= radius; ++d) {
      count += layer;
      layer *= (2.0L * rank - 1.0L);
      if (count > kVertexCap)
        throw SizeCapError("free_group_ball(" + std::to_string(rank) + "," +
                           std::to_string(radius) + ") exceeds " +
                           std::to_string(kVertexCap) + " vertices");
    }
  }

  // reduced words over a..z / A..Z (capital = inverse); BFS layer by layer
  std::vector<std::string> labels{"e"};
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> frontier{""};
  std::map<std::string, int> index{{"", 0}};
  auto letter = [&](int gen, bool inverse) -> char {
    return inverse ? static_cast<char>('A' + gen) : static_cast<char>('a' + gen);
  };
  auto inverse_of = [](char c) -> char {
    return std::isupper(static_cast<unsigned char>(c)) ? std::tolower(c) : std::toupper(c);
  };
  for (int depth = 1; depth <= radius; ++depth) {
    std::vector<std::string> next;
    for (const std::string& word : frontier) {
      int u = index.at(word);
      for (int gen = 0; gen < rank; ++gen) {
        for (bool inv : {false, true}) {
          char c = letter(gen, inv);
          if (!word.empty() && word.back() == inverse_of(c)) continue;
          std::string child = word + c;
          int v = static_cast<int>(labels.size());
          index.emplace(child, v);
          labels.push_back(child);
          edges.emplace_back(u, v);
          next.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }

  GeneratedSpace out;
  out.graph = make_graph(std::move(labels), edges);
  out.space = make_space(out.graph.labels, all_pairs_bfs(out.graph));
  return out;
}

GeneratedSpace hypercube(int n) {
  if (n < 1 || n > 12) throw SizeCapError("hypercube: n must be in [1, 12]");
  const int count = 1 << n;
  std::vector<std::string> labels(count);
  for (int v = 0; v < count; ++v) {
    std::string bits(n, '0');
    for (int k = 0; k < n; ++k)
      if (v & (1 << k)) bits[n - 1 - k] = '1';
    labels[v] = bits;
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < count; ++v)
    for (int k = 0; k < n; ++k) {
      int w = v ^ (1 << k);
      if (v < w) edges.emplace_back(v, w);
    }
  IntMatrix dist(count, count);
  for (int v = 0; v < count; ++v)
    for (int w = 0; w < count; ++w)
      dist(v, w) = std::popcount(static_cast<unsigned>(v ^ w));

  GeneratedSpace out;
  out.graph = make_graph(std::move(labels), edges);
  out.space = make_space(out.graph.labels, std::move(dist));
  return out;
}

GeneratedSpace grid(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("grid: dims must be non-empty");
  long long count = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("grid: each dim must be >= 1");
    count *= d;
    if (count > kVertexCap)
      throw SizeCapError("grid exceeds " + std::to_string(kVertexCap) + " vertices");
  }
  const int n = static_cast<int>(count);
  const int axes = static_cast<int>(dims.size());

  // mixed-radix decode, axis 0 slowest
  auto decode = [&](int v) {
    std::vector<int> coords(axes);
    for (int k = axes - 1; k >= 0; --k) {
      coords[k] = v % dims[k];
      v /= dims[k];
    }
    return coords;
  };

  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> coords(n);
  for (int v = 0; v < n; ++v) {
    coords[v] = decode(v);
    labels[v] = tuple_label(coords[v]);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    int stride = 1;
    for (int k = axes - 1; k >= 0; --k) {
      if (coords[v][k] + 1 < dims[k]) edges.emplace_back(v, v + stride);
      stride *= dims[k];
    }
  }
  IntMatrix dist(n, n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) dist(v, w) = l1_distance(coords[v], coords[w]);

  GeneratedSpace out;
  out.graph = make_graph(std::move(labels), edges);
  out.space = make_space(out.graph.labels, std::move(dist));
  return out;
}

GeneratedSpace cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  if (n > kVertexCap) throw SizeCapError("cycle_graph: n exceeds vertex cap");
  std::vector<std::string> labels(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    labels[v] = std::to_string(v);
    edges.emplace_back(v, (v + 1) % n);
  }
  IntMatrix dist(n, n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      int gap = std::abs(v - w);
      dist(v, w) = std::min(gap, n - gap);
    }
  GeneratedSpace out;
  out.graph = make_graph(std::move(labels), edges);
  out.space = make_space(out.graph.labels, std::move(dist));
  return out;
}

GeneratedSpace path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path_graph: n must be >= 2");
  if (n > kVertexCap) throw SizeCapError("path_graph: n exceeds vertex cap");
  std::vector<std::string> labels(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    labels[v] = std::to_string(v);
    if (v + 1 < n) edges.emplace_back(v, v + 1);
  }
  IntMatrix dist(n, n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) dist(v, w) = std::abs(v - w);
  GeneratedSpace out;
  out.graph = make_graph(std::move(labels), edges);
  out.space = make_space(out.graph.labels, std::move(dist));
  return out;
}

FiniteMetricSpace lp_sample(int dim, int count, double p, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("lp_sample: dim must be >= 1");
  if (count < 2) throw std::invalid_argument("lp_sample: count must be >= 2");
  if (!(p >= 1.0 && p <= 2.0))
    throw std::invalid_argument("lp_sample: p must lie in [1, 2]");

  Rng rng(seed);
  Eigen::MatrixXd pts(count, dim);
  for (int i = 0; i < count; ++i)
    for (int k = 0; k < dim; ++k) pts(i, k) = rng.uniform01();

  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      double d;
      if (p == 1.0) {
        d = (pts.row(i) - pts.row(j)).cwiseAbs().sum();
      } else if (p == 2.0) {
        d = (pts.row(i) - pts.row(j)).norm();
      } else {
        double acc = 0.0;
        for (int k = 0; k < dim; ++k)
          acc += std::pow(std::abs(pts(i, k) - pts(j, k)), p);
        d = std::pow(acc, 1.0 / p);
      }
      dist(i, j) = d;
      dist(j, i) = d;
    }

  std::vector<std::string> labels(count);
  for (int i = 0; i < count; ++i) labels[i] = std::to_string(i);
  return make_space(std::move(labels), std::move(dist));
}

}  // namespace rlab
