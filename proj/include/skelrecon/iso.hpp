#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/lattice.hpp"

namespace skelrecon {

enum class Obstruction {
  None,
  VertexCount,
  FaceCounts,
  DegreeMultiset,
  ColorRefinement,  // stable vertex colourings differ
  ExhaustedSearch,
};

std::string_view to_string(Obstruction o);

struct IsoResult {
  bool isomorphic = false;
  std::vector<Vertex> witness;  // witness[v] = image of v, when isomorphic
  Obstruction obstruction = Obstruction::None;
  std::string detail;
};

/// Exact isomorphism of ranked face systems: a vertex bijection preserving
/// adjacency and mapping every face layer up to rank k onto the other.
/// Throws KindMismatch when k or d differ.
IsoResult isomorphic(const KSkeleton& a, const KSkeleton& b);

/// Full face lattices (all proper faces). Throws KindMismatch when d differs.
IsoResult isomorphic(const FaceLattice& a, const FaceLattice& b);

/// Plain graphs.
IsoResult isomorphic(const Graph& a, const Graph& b);

}  // namespace skelrecon
