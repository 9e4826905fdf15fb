#include "rlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rlab/errors.hpp"

namespace rlab {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph make_graph(std::vector<std::string> labels,
                 const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(labels.size());
  Graph g;
  g.labels = std::move(labels);
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("make_graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("make_graph: self-loop");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  // connectivity check, naming a separated pair
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v])
        throw ValidationError("graph is disconnected: no path between '" +
                              g.labels[0] + "' and '" + g.labels[v] + "'");
  }
  return g;
}

std::vector<std::pair<int, int>> edges_of(const Graph& graph) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < graph.vertex_count(); ++u)
    for (int v : graph.adj[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

namespace {

void bfs_row(const Graph& graph, int src, IntMatrix& dist) {
  const int n = graph.vertex_count();
  std::vector<std::int64_t> row(n, -1);
  std::vector<int> frontier{src};
  row[src] = 0;
  std::int64_t depth = 0;
  std::vector<int> next;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (int u : frontier)
      for (int v : graph.adj[u])
        if (row[v] < 0) {
          row[v] = depth;
          next.push_back(v);
        }
    frontier.swap(next);
  }
  for (int v = 0; v < n; ++v) dist(src, v) = row[v];
}

}  // namespace

IntMatrix all_pairs_bfs(const Graph& graph) {
  const int n = graph.vertex_count();
  IntMatrix dist(n, n);
#pragma omp parallel for schedule(dynamic)
  for (int src = 0; src < n; ++src) bfs_row(graph, src, dist);
  return dist;
}

IntMatrix all_pairs_bfs_serial(const Graph& graph) {
  const int n = graph.vertex_count();
  IntMatrix dist(n, n);
  for (int src = 0; src < n; ++src) bfs_row(graph, src, dist);
  return dist;
}

FiniteMetricSpace metric_from_graph(const Graph& graph) {
  return make_space(graph.labels, all_pairs_bfs(graph));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list file: " + path);
  std::vector<std::pair<long long, long long>> raw;
  std::map<long long, int> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw ValidationError("edge list " + path + ": line " +
                            std::to_string(line_no) + " has no second endpoint");
    raw.emplace_back(u, v);
    ids.emplace(u, 0);
    ids.emplace(v, 0);
  }
  int next = 0;
  for (auto& [id, idx] : ids) idx = next++;
  std::vector<std::string> labels(ids.size());
  for (const auto& [id, idx] : ids) labels[idx] = std::to_string(id);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(ids[u], ids[v]);
  return make_graph(std::move(labels), edges);
}

void save_edge_list(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write edge list file: " + path);
  for (auto [u, v] : edges_of(graph)) out << u << ' ' << v << '\n';
}

}  // namespace rlab
