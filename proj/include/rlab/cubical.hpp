#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlab/graph.hpp"

namespace rlab {

// Partition of a graph's edges into Djokovic-Winkler classes (transitive
// closure of "opposite sides of a 4-cycle"), with the two half-spaces each
// class determines.
struct HyperplaneSet {
  std::vector<std::pair<int, int>> edges;  // canonical (u < v), indexed by edge id
  std::vector<std::vector<int>> classes;   // edge ids per class
  // side[c][v]: which half-space of class c vertex v lies in;
  // side 0 is the half-space containing vertex 0.
  std::vector<std::vector<std::uint8_t>> side;

  int class_count() const { return static_cast<int>(classes.size()); }
  std::vector<int> half_space(int cls, int which) const;
};

// Fails with NotCubicalError (naming the class) when removing some class's
// edges does not split the graph into exactly two components.
HyperplaneSet theta_classes(const Graph& graph);

// Number of classes whose half-spaces put v and w on opposite sides;
// equals the graph distance on valid (median) inputs.
int separation_count(const HyperplaneSet& hps, int v, int w);

struct L1Embedding {
  int basepoint = 0;
  // vectors[v][c] = 1 iff class c separates the basepoint from v
  std::vector<std::vector<std::uint8_t>> vectors;

  int dimension() const;
};

L1Embedding halfspace_embedding(const Graph& graph, const HyperplaneSet& hps,
                                int basepoint);

struct IsometryFailure {
  int v;
  int w;
  std::int64_t distance;
  std::int64_t embedded_norm;
};

struct IsometryReport {
  bool isometric = true;
  std::vector<IsometryFailure> failures;
};

// Checks ||f(v)-f(w)||_1 = d0(v,w) for all pairs in exact integer
// arithmetic. The parallel version distributes sources across threads.
IsometryReport verify_isometry(const L1Embedding& emb, const FiniteMetricSpace& space);
IsometryReport verify_isometry_serial(const L1Embedding& emb,
                                      const FiniteMetricSpace& space);

// Pullback of a vertex metric along an injective orbit map g -> g.v0:
// D0(g,h) = d0(g.v0, h.v0).
FiniteMetricSpace orbit_metric(
    const std::vector<std::pair<std::string, int>>& orbit_map,
    const FiniteMetricSpace& space);

}  // namespace rlab
