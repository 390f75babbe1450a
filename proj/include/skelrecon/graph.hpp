#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "skelrecon/vertex_set.hpp"

namespace skelrecon {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws InvalidSpec on loops,
  /// repeated edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices` (sorted); vertex i of the result is
  /// vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Per-vertex neighbour masks. Requires n <= 64.
  std::vector<Mask> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// A star K_{1,k}: a root and k of its neighbours (sorted).
struct Frame {
  Vertex root = -1;
  VertexSet leaves;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Vertex connectivity test: true iff the graph has more than k vertices and
/// no vertex cut of size < k.
bool k_connected(const Graph& g, int k);

/// All vertex sets whose induced subgraph is a single chordless cycle of
/// length >= 3, ordered by (length, lexicographic).
std::vector<VertexSet> induced_cycles(const Graph& g);

/// Feasible subgraph test: the subgraph induced by `subset` is
/// (d-1)-connected, every simple vertex in it has induced degree exactly d-1
/// and every nonsimple vertex has induced degree at least d-1. A vertex is
/// simple when its degree in `g` equals d.
bool is_feasible(const Graph& g, std::span<const Vertex> subset, int d);

/// Degree part of the feasibility test only (linear time).
bool has_feasible_degrees(const Graph& g, std::span<const Vertex> subset, int d);

}  // namespace skelrecon
