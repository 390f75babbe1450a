#pragma once

#include "skelrecon/constructions.hpp"

namespace fixture {

using skelrecon::PolytopeSpec;

// A 3-polytope with 8 vertices and 7 faces (found by an offline convex-hull
// search). Vertices 2 and 6 have degree 4 and are not adjacent; wedging over
// the face {2,5,6,7} keeps them as the only nonsimple vertices.
inline PolytopeSpec wedge_base() {
  PolytopeSpec s{3, 8,
                 {{0, 1, 2}, {0, 1, 3, 4, 6}, {0, 2, 3, 7}, {1, 2, 4, 5}, {2, 5, 6, 7},
                  {3, 6, 7}, {4, 5, 6}}};
  s.canonicalize();
  return s;
}

// 4-polytope, 12 vertices, exactly two nonsimple vertices (2 and 6), not
// adjacent.
inline PolytopeSpec nonadjacent_pair() {
  const auto base = wedge_base();
  int g = 0;
  for (int i = 0; i < static_cast<int>(base.facets.size()); ++i)
    if (base.facets[i] == skelrecon::VertexSet{2, 5, 6, 7}) g = i;
  return skelrecon::wedge(base, g);
}

inline PolytopeSpec square_two_fold() {
  return skelrecon::multifold_pyramid(skelrecon::polygon(4), 2);
}

inline PolytopeSpec triangle_prism_two_fold() {
  return skelrecon::multifold_pyramid(skelrecon::polygon_prism(3), 2);
}

}  // namespace fixture
