#pragma once

#include <string>
#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/vertex_set.hpp"

namespace skelrecon {

/// Vertex-facet incidences of a d-polytope: the canonical interchange object.
struct PolytopeSpec {
  int d = 0;
  int n = 0;
  std::vector<VertexSet> facets;

  /// Sorts every facet and the facet list.
  void canonicalize();

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

/// Throws InvalidSpec unless: d >= 2, ids lie in 0..n-1, every vertex is in at
/// least d facets, no facet contains another and there are no duplicates.
void check_spec(const PolytopeSpec& spec);

/// Ranked face poset. Rank r holds the faces of dimension r for r = -1..d;
/// rank -1 is the empty face and rank d the full vertex set.
class FaceLattice {
 public:
  int dim() const { return d_; }
  int num_vertices() const { return n_; }

  /// Faces of dimension `rank` (-1..d), lexicographically sorted.
  const std::vector<VertexSet>& faces(int rank) const;

  /// Indices (into faces(rank + 1)) of the faces covering faces(rank)[i].
  const std::vector<int>& covers_up(int rank, int index) const;

  /// f_0..f_{d-1}.
  std::vector<long long> f_vector() const;

  /// The 1-skeleton, built from the rank-1 faces that have two vertices.
  Graph graph() const;

  /// The facet list as a canonical spec.
  PolytopeSpec spec() const;

  friend struct LatticeBuilder;

 private:
  int d_ = 0;
  int n_ = 0;
  // layers_[r + 1] holds rank r.
  std::vector<std::vector<VertexSet>> layers_;
  std::vector<std::vector<std::vector<int>>> up_;
};

struct LatticeBuildOptions {
  // When false the incidence list is taken as-is; used to feed deliberately
  // broken inputs to validate().
  bool require_polytope_spec = true;
};

/// Closes the facet list under intersection and ranks every face by the
/// length of its longest chain from the empty face. Throws NotGraded when the
/// resulting poset is not graded with top rank d.
FaceLattice build_face_lattice(const PolytopeSpec& spec, LatticeBuildOptions options = {});

/// Graph plus all faces of dimension 0..k. faces_by_dim[0] holds the
/// singletons and faces_by_dim[1] the edges, so layer r is rank r.
struct KSkeleton {
  int d = 0;
  int k = 0;
  Graph graph;
  std::vector<std::vector<VertexSet>> faces_by_dim;

  const std::vector<VertexSet>& faces(int dim) const { return faces_by_dim.at(dim); }
};

/// Restriction of the lattice to ranks <= k. Throws RankOutOfRange unless
/// 1 <= k <= d-1.
KSkeleton k_skeleton(const FaceLattice& lattice, int k);

/// KSkeleton from a graph and its 2-faces (k = 2).
KSkeleton two_skeleton(int d, Graph graph, std::vector<VertexSet> two_faces);

struct VertexClasses {
  VertexSet simple;
  VertexSet nonsimple;
  std::vector<int> degree;
};

/// Partitions vertices by degree == d vs > d. Throws DegreeBelowDimension if
/// some vertex has degree < d.
VertexClasses classify_vertices(const Graph& g, int d);
VertexClasses classify_vertices(const PolytopeSpec& spec);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Results of the necessary-condition checks. Passing all of them does not
/// certify that the lattice is polytopal.
struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool passed() const;
  const ValidationCheck* find(const std::string& name) const;
};

ValidationReport validate(const FaceLattice& lattice);

}  // namespace skelrecon
