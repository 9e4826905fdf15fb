#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rlab/metric_space.hpp"

namespace rlab {

// Undirected simple connected graph with labeled vertices.
struct Graph {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int vertex_count() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
};

// Builds a graph from 0-based endpoint pairs. Duplicate edges are merged;
// self-loops are rejected; a disconnected graph raises ValidationError
// naming a separated vertex pair.
Graph make_graph(std::vector<std::string> labels,
                 const std::vector<std::pair<int, int>>& edges);

std::vector<std::pair<int, int>> edges_of(const Graph& graph);

// Exact all-pairs shortest paths (unit edge weights), one BFS per source.
// The parallel version distributes sources across OpenMP threads; the
// serial version is the reference the tests compare against.
IntMatrix all_pairs_bfs(const Graph& graph);
IntMatrix all_pairs_bfs_serial(const Graph& graph);

FiniteMetricSpace metric_from_graph(const Graph& graph);

// Edge-list file: one "u v" pair per line, integer vertex ids. Ids need not
// be contiguous; vertices are indexed in increasing id order.
Graph load_edge_list(const std::string& path);
void save_edge_list(const Graph& graph, const std::string& path);

}  // namespace rlab
