#pragma once

#include <cstdint>
#include <vector>

#include "rlab/graph.hpp"

namespace rlab {

struct GeneratedSpace {
  Graph graph;
  FiniteMetricSpace space;
};

// Word-metric ball of Z^rank: lattice points with l1 norm <= radius, edges
// between points at l1 distance 1. The graph metric of the truncated ball
// equals the ambient l1 word metric (checked at construction).
GeneratedSpace zn_ball(int rank, int radius);

// Ball of the 2*rank-regular tree (Cayley graph of the free group on the
// standard generators); metric = tree distance.
GeneratedSpace free_group_ball(int rank, int radius);

// 0/1 vertices with Hamming adjacency and Hamming metric, 1 <= n <= 12.
GeneratedSpace hypercube(int n);

// Axis-aligned box product of paths; dims lists vertex counts per axis;
// metric = l1.
GeneratedSpace grid(const std::vector<int>& dims);

GeneratedSpace cycle_graph(int n);  // n >= 3
GeneratedSpace path_graph(int n);   // n >= 2

// `count` points drawn uniformly from [0,1]^dim with the p-norm metric,
// 1 <= p <= 2. Point k is drawn identically regardless of count, so smaller
// samples are prefixes of larger ones under the same seed.
FiniteMetricSpace lp_sample(int dim, int count, double p, std::uint64_t seed);

}  // namespace rlab
