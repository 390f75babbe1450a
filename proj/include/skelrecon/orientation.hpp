#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/vertex_set.hpp"

namespace skelrecon {

/// Acyclic orientation of a graph with at most 64 vertices.
struct Orientation {
  std::vector<Mask> out;        // out-neighbour mask per vertex
  std::vector<Mask> in;         // in-neighbour mask per vertex
  std::vector<Vertex> order;    // a topological order (lower -> higher)
  std::vector<int> indegree;
  std::vector<int> histogram;         // h_k over all vertices
  std::vector<int> simple_histogram;  // h_k over simple vertices only

  bool points(Vertex from, Vertex to) const { return (out[from] >> to) & 1u; }

  /// Orientation induced by a total order of the vertices.
  static Orientation from_order(const Graph& g, std::span<const Vertex> order, Mask simple);
};

/// Forced structure for a family of orientations.
struct OrientationConstraints {
  Mask sources = 0;            // indegree 0
  Mask sinks = 0;              // outdegree 0
  std::vector<Edge> arcs;      // (from, to) directions that are fixed

  bool admits(const Orientation& o) const;
};

/// Block `index` of `count` disjoint blocks, split on the direction of the
/// first free edges. The union over all blocks is the full stream.
struct Partition {
  unsigned index = 0;
  unsigned count = 1;
};

/// Default vertex bound for exhaustive sweeps: 12, or SKELRECON_MAX_N.
std::size_t default_max_vertices();

struct EnumerationOptions {
  OrientationConstraints constraints;
  Mask simple = 0;  // vertices counted by Orientation::simple_histogram
  std::size_t max_vertices = default_max_vertices();
  Partition partition;
};

using OrientationFilter = std::function<bool(const Orientation&)>;
using OrientationVisitor = std::function<void(const Orientation&)>;

/// Yields every acyclic orientation of `g` that satisfies the constraints and
/// `filter` exactly once. Edges are directed one at a time against a running
/// transitive closure, so no orientation is produced twice and there are no
/// dead ends. Throws TooLarge above options.max_vertices. Returns the number
/// of orientations visited.
std::size_t enumerate_acyclic_orientations(const Graph& g, const OrientationFilter& filter,
                                           const OrientationVisitor& visit,
                                           const EnumerationOptions& options = {});

struct Objectives {
  long long f2 = 0;           // sum_k h_k * C(k, 2), all vertices
  long long sink_pairs = 0;   // sum_w 2^indeg(w)
  long long facet_sinks = 0;  // h_{d-1} + d * h_d, simple vertices only
};

Objectives objectives(const Orientation& o, int d);

/// True iff every facet-induced subgraph has exactly one sink.
bool is_good(const Orientation& o, std::span<const VertexSet> facets);

/// Number of sinks of `o` restricted to `subset`.
int count_sinks(const Orientation& o, Mask subset);

/// All vertices with a directed path to x, including x. Always initial.
Mask ancestors(const Orientation& o, Vertex x);

/// No edge enters `subset` from outside.
bool is_initial(const Orientation& o, Mask subset);

/// Minimum over acyclic orientations admitted by `constraints` of
/// sum_v cost(v, indeg(v)), by dynamic programming over the set of vertices
/// placed first. Returns nullopt when the family is empty. Needs 2^n words,
/// so n is capped at 24.
std::optional<long long> minimize_over_orientations(
    const Graph& g, const OrientationConstraints& constraints,
    const std::function<long long(Vertex, int)>& cost);

inline constexpr int kDynamicProgramMaxVertices = 24;

}  // namespace skelrecon
