#pragma once

#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/lattice.hpp"
#include "skelrecon/vertex_set.hpp"

namespace skelrecon {

/// A Q-family polytope with its vertex labels and the even-labelled
/// nonsimple set X = {2, 4, ..., 2(d-1)}.
struct LabeledConstruction {
  PolytopeSpec spec;
  std::vector<int> labels;
  VertexSet X;
};

/// 2d vertices and 2d facets (Types A-E). d >= 3.
LabeledConstruction q1(int d);
/// 2d vertices and 2d-1 facets: A and E of q1 merged into a bipyramid A'.
/// d >= 4.
LabeledConstruction q2(int d);

PolytopeSpec simplex(int d);
/// Vertex ids are the coordinate bit masks.
PolytopeSpec cube(int d);
PolytopeSpec polygon(int m);
/// spec x [0,1]: vertex i of the base becomes i (bottom) and n + i (top).
PolytopeSpec prism(const PolytopeSpec& base);
PolytopeSpec polygon_prism(int m);
/// Apex gets id n.
PolytopeSpec pyramid(const PolytopeSpec& base);
/// Apexes get ids n and n + 1; the base is not a facet.
PolytopeSpec bipyramid(const PolytopeSpec& base);
/// t-fold iterated pyramid; apexes are n..n+t-1.
PolytopeSpec multifold_pyramid(const PolytopeSpec& base, int t);
/// Wedge over `base` at the facet base.facets[facet]: the vertices of that
/// facet keep their ids, every other vertex x splits into a bottom copy and a
/// top copy. Dimension goes up by one.
PolytopeSpec wedge(const PolytopeSpec& base, int facet);

/// 2-skeleton of the m-gonal prism built directly (d = 3), without a lattice.
KSkeleton polygon_prism_2skeleton(int m);

struct CutVertex {
  Vertex x = -1;  // endpoint inside the truncated face
  Vertex y = -1;  // endpoint outside
  Vertex w = -1;  // id in the truncated polytope
};

/// Id bookkeeping for a truncation. Survivors are renumbered in increasing
/// order of their old ids; the new vertices w_xy follow, in (x, y) order.
struct TruncationMap {
  VertexSet face;
  std::vector<CutVertex> cut;
  std::vector<Vertex> old_to_new;  // -1 on the face
  std::vector<Vertex> new_to_old;  // survivors only
  int num_vertices = 0;            // of the truncated polytope
  // Truncating a facet replaces it by the cut facet, so pulling back maps the
  // cut facet to the face instead of dropping it.
  bool face_is_facet = false;

  VertexSet cut_facet() const;
};

TruncationMap truncation_map(const Graph& g, const VertexSet& face);

/// Graph of the truncated polytope from the original graph and the 2-faces
/// that meet the face (others are ignored).
Graph truncated_graph(const Graph& g, const TruncationMap& map,
                      const std::vector<VertexSet>& two_faces);

struct Truncation {
  PolytopeSpec spec;
  TruncationMap map;
  Graph graph;
};

/// Combinatorial truncation at a proper face. Throws NotAProperFace.
Truncation truncate(const FaceLattice& lattice, const VertexSet& face);

/// Maps facets of the truncated polytope back: drops the cut facet and
/// replaces each w_xy by x (or maps the cut facet to the face when the face is
/// a facet). Throws CutFacetMissing.
std::vector<VertexSet> pullback_facets(const std::vector<VertexSet>& facets,
                                       const TruncationMap& map);

}  // namespace skelrecon
