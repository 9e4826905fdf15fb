#include "rlab/cubical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rlab/errors.hpp"

namespace rlab {

std::vector<int> HyperplaneSet::half_space(int cls, int which) const {
  if (cls < 0 || cls >= class_count())
    throw std::invalid_argument("half_space: class index out of range");
  if (which != 0 && which != 1)
    throw std::invalid_argument("half_space: side must be 0 or 1");
  std::vector<int> vertices;
  const auto& s = side[cls];
  for (int v = 0; v < static_cast<int>(s.size()); ++v)
    if (s[v] == which) vertices.push_back(v);
  return vertices;
}

int L1Embedding::dimension() const {
  return vectors.empty() ? 0 : static_cast<int>(vectors.front().size());
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

HyperplaneSet theta_classes(const Graph& graph) {
  const int n = graph.vertex_count();
  HyperplaneSet hps;
  hps.edges = edges_of(graph);
  const int edge_count = static_cast<int>(hps.edges.size());

  std::unordered_map<std::int64_t, int> edge_id;
  edge_id.reserve(hps.edges.size() * 2);
  auto key = [n](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::int64_t>(u) * n + v;
  };
  for (int e = 0; e < edge_count; ++e)
    edge_id.emplace(key(hps.edges[e].first, hps.edges[e].second), e);

  // Opposite sides of a 4-cycle a-b-c-d are related; classes are the
  // transitive closure. For edge (a,b): c in N(b), d in N(c) & N(a).
  UnionFind uf(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    auto [a, b] = hps.edges[e];
    for (int c : graph.adj[b]) {
      if (c == a) continue;
      for (int d : graph.adj[c]) {
        if (d == b || d == a) continue;
        if (!graph.has_edge(a, d)) continue;
        uf.unite(e, edge_id.at(key(c, d)));
      }
    }
  }

  // group edges by root, classes ordered by smallest edge id
  std::unordered_map<int, int> root_to_class;
  for (int e = 0; e < edge_count; ++e) {
    int root = uf.find(e);
    auto [it, fresh] = root_to_class.emplace(root, hps.class_count());
    if (fresh) hps.classes.emplace_back();
    hps.classes[it->second].push_back(e);
  }

  // Each class must split the graph into exactly two components, the
  // half-spaces, and every class edge must straddle them.
  hps.side.assign(hps.class_count(), std::vector<std::uint8_t>(n, 0));
  std::vector<char> removed(edge_count, 0);
  for (int cls = 0; cls < hps.class_count(); ++cls) {
    for (int e : hps.classes[cls]) removed[e] = 1;

    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    int comp_count = 0;
    for (int start = 0; start < n; ++start) {
      if (comp[start] >= 0) continue;
      if (comp_count == 2)
        throw NotCubicalError(cls, "not a cubical skeleton: removing theta class " +
                                       std::to_string(cls) +
                                       " leaves more than 2 components");
      stack.push_back(start);
      comp[start] = comp_count;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : graph.adj[u]) {
          if (removed[edge_id.at(key(u, v))]) continue;
          if (comp[v] < 0) {
            comp[v] = comp_count;
            stack.push_back(v);
          }
        }
      }
      ++comp_count;
    }
    if (comp_count != 2)
      throw NotCubicalError(cls, "not a cubical skeleton: removing theta class " +
                                     std::to_string(cls) + " leaves " +
                                     std::to_string(comp_count) +
                                     " component(s) instead of 2");
    for (int e : hps.classes[cls]) {
      auto [u, v] = hps.edges[e];
      if (comp[u] == comp[v])
        throw NotCubicalError(cls, "not a cubical skeleton: edge (" +
                                       graph.labels[u] + "," + graph.labels[v] +
                                       ") of theta class " + std::to_string(cls) +
                                       " does not cross its half-spaces");
    }
    for (int v = 0; v < n; ++v)
      hps.side[cls][v] = static_cast<std::uint8_t>(comp[v]);

    for (int e : hps.classes[cls]) removed[e] = 0;
  }
  return hps;
}

int separation_count(const HyperplaneSet& hps, int v, int w) {
  const int n = hps.side.empty() ? 0 : static_cast<int>(hps.side.front().size());
  if (v < 0 || w < 0 || (hps.class_count() > 0 && (v >= n || w >= n)))
    throw std::invalid_argument("separation_count: vertex out of range");
  int count = 0;
  for (int cls = 0; cls < hps.class_count(); ++cls)
    count += hps.side[cls][v] != hps.side[cls][w];
  return count;
}

L1Embedding halfspace_embedding(const Graph& graph, const HyperplaneSet& hps,
                                int basepoint) {
  const int n = graph.vertex_count();
  if (basepoint < 0 || basepoint >= n)
    throw std::invalid_argument("halfspace_embedding: basepoint out of range");
  for (int cls = 0; cls < hps.class_count(); ++cls)
    if (static_cast<int>(hps.side[cls].size()) != n)
      throw ValidationError("halfspace_embedding: hyperplane set does not match graph");

  L1Embedding emb;
  emb.basepoint = basepoint;
  emb.vectors.assign(n, std::vector<std::uint8_t>(hps.class_count(), 0));
  for (int v = 0; v < n; ++v)
    for (int cls = 0; cls < hps.class_count(); ++cls)
      emb.vectors[v][cls] = hps.side[cls][v] != hps.side[cls][basepoint];
  return emb;
}

namespace {

IsometryReport verify_impl(const L1Embedding& emb, const FiniteMetricSpace& space,
                           bool parallel) {
  const int n = static_cast<int>(emb.vectors.size());
  if (n != space.size())
    throw ValidationError("verify_isometry: embedding and space sizes differ");
  if (!space.int_dist)
    throw std::invalid_argument("verify_isometry: exact integer metric required");
  const IntMatrix& dist = *space.int_dist;
  const int dim = emb.dimension();

  std::vector<std::vector<IsometryFailure>> per_source(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      std::int64_t norm = 0;
      for (int c = 0; c < dim; ++c) norm += emb.vectors[v][c] != emb.vectors[w][c];
      if (norm != dist(v, w))
        per_source[v].push_back({v, w, dist(v, w), norm});
    }
  }

  IsometryReport report;
  for (auto& failures : per_source)
    for (auto& f : failures) {
      report.isometric = false;
      report.failures.push_back(f);
    }
  return report;
}

}  // namespace

IsometryReport verify_isometry(const L1Embedding& emb, const FiniteMetricSpace& space) {
  return verify_impl(emb, space, true);
}

IsometryReport verify_isometry_serial(const L1Embedding& emb,
                                      const FiniteMetricSpace& space) {
  return verify_impl(emb, space, false);
}

FiniteMetricSpace orbit_metric(
    const std::vector<std::pair<std::string, int>>& orbit_map,
    const FiniteMetricSpace& space) {
  const int n = space.size();
  std::vector<char> used(n, 0);
  for (const auto& [label, vertex] : orbit_map) {
    if (vertex < 0 || vertex >= n)
      throw std::invalid_argument("orbit_metric: vertex out of range");
    if (used[vertex])
      throw std::invalid_argument(
          "orbit_metric: orbit map is not injective (vertex " +
          space.labels[vertex] + " hit twice)");
    used[vertex] = 1;
  }

  const int m = static_cast<int>(orbit_map.size());
  FiniteMetricSpace out;
  out.labels.reserve(m);
  for (const auto& [label, vertex] : orbit_map) out.labels.push_back(label);
  out.dist.resize(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.dist(i, j) = space.dist(orbit_map[i].second, orbit_map[j].second);
  if (space.int_dist) {
    IntMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        sub(i, j) = (*space.int_dist)(orbit_map[i].second, orbit_map[j].second);
    out.int_dist = std::move(sub);
  }
  return out;
}

}  // namespace rlab
