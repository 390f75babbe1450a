#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/orientation.hpp"
#include "skelrecon/vertex_set.hpp"

namespace skelrecon {

/// Induced cycles covering every 2-frame rooted at a simple vertex exactly
/// once; `certificate` is min f2 over orientations with the nonsimple vertex
/// (if any) as a source.
struct TwoSystem {
  std::vector<VertexSet> sets;
  std::vector<std::pair<Frame, int>> coverage;  // 2-frame -> index into sets
  long long certificate = 0;
};

/// Maximum 2-system of a graph with at most one nonsimple vertex, by exact
/// cover search stopped at the f2 certificate. Throws NoCoverFound when no
/// cover exists and CertificateMismatch when the best cover misses the
/// certificate.
TwoSystem max_two_system(const Graph& g, int d);

/// Facets of a polytope with at most one nonsimple vertex from its graph:
/// the maximum 2-system gives the 2-faces, then frame propagation.
std::vector<VertexSet> reconstruct_one_nonsimple(const Graph& g, int d);

struct GraphReconOptions {
  // Vertex bound for exhaustive orientation sweeps.
  std::size_t max_vertices = default_max_vertices();
};

enum class FamilyMode { UMinusV, VMinusU, UV };

struct FamilyResult {
  std::vector<VertexSet> facets;
  long long minimum = 0;
  std::size_t orientations = 0;  // members of the family that were scored
};

/// Sweeps the orientation family of the mode (u source and v sink for
/// UMinusV, the reverse for VMinusU, unconstrained for UV), keeps the
/// minimisers of h_{d-1} + d h_d over simple vertices, and accepts the
/// ancestor sets of simple vertices that are feasible and contain exactly the
/// required nonsimple vertices. An orientation belongs to the family when it
/// has at least one such set. Throws EmptyFamily.
FamilyResult find_facets_avoiding(const Graph& g, int d, Vertex u, Vertex v, FamilyMode mode,
                                  const GraphReconOptions& options = {});

/// Facets avoiding both u and v. `known_u_minus_v` are the facets containing
/// u but not v; `expected` is their count from the facet-count identity (the
/// sweep is skipped when it is 0). The objective adds to h_{d-1} + d h_d the
/// number of known facets in which u is a sink; v is kept a sink.
FamilyResult find_facets_empty(const Graph& g, int d, Vertex u, Vertex v,
                               const std::vector<VertexSet>& known_u_minus_v, long long expected,
                               const GraphReconOptions& options = {});

/// True iff some simple (d-1)-frame lies in none of the known facets.
bool detect_uv_facets(const Graph& g, int d, const std::vector<VertexSet>& known);

struct FacetFamilies {
  std::vector<VertexSet> u_minus_v, v_minus_u, empty, uv;
};

struct TwoNonsimpleReport {
  Vertex u = -1, v = -1;
  FacetFamilies families;
  long long min_u = 0;                   // = f - f^v
  long long min_v = 0;                   // = f - f^u
  long long expected_empty = 0;          // f^empty from the count identity
  std::optional<long long> min_empty;    // when the sweep ran
  std::optional<long long> min_uv;       // = f when facets with both exist
  std::vector<VertexSet> facets;
};

/// Graph reconstruction with exactly two nonsimple vertices via the four
/// facet families. Throws PreconditionViolated, InconsistentCounts.
TwoNonsimpleReport reconstruct_two_nonsimple(const Graph& g, int d,
                                             const GraphReconOptions& options = {});

struct TruncationReport {
  Vertex u = -1, v = -1;
  bool adjacent = false;
  std::vector<VertexSet> two_faces;  // the 2-faces through u or v that were found
  int truncated_vertices = 0;
  bool repaired_edge = false;
  std::vector<VertexSet> facets;
};

/// Second route: find the 2-faces at u and v, truncate at the edge uv (or at
/// u when they are not adjacent), reconstruct the truncated polytope and pull
/// the facets back. Throws RepairAmbiguous, PreconditionViolated.
TruncationReport reconstruct_two_nonsimple_via_truncation(const Graph& g, int d,
                                                          const GraphReconOptions& options = {});

}  // namespace skelrecon
