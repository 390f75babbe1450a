#pragma once

#include <optional>
#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/lattice.hpp"

namespace skelrecon {

/// All 2-frames rooted at simple vertices, each tagged with its unique 2-face
/// and linked to the frames one propagation step away. A frame (u; a, b) lives in
/// slot offset[u] + pair(i, j) where a, b are the i-th and j-th neighbours of
/// u (i < j).
class FrameGraph {
 public:
  struct Node {
    Vertex root = -1;
    Vertex leaf[2] = {-1, -1};
    int face = -1;              // index into the skeleton's 2-faces
    Vertex hat[2] = {-1, -1};   // neighbour of leaf[i] in the face, other than root
    int next[2] = {-1, -1};     // slot of (leaf[i]; root, hat[i]) when leaf[i] is simple
  };

  int dim() const { return d_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(int slot) const { return nodes_[slot]; }
  bool is_simple(Vertex v) const { return offset_[v] >= 0; }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_->neighbors(v); }
  const Graph& graph() const { return *graph_; }

  /// Slot of the 2-frame (root; a, b). Throws NonSimpleRoot.
  int slot(Vertex root, Vertex a, Vertex b) const;

  friend FrameGraph build_frame_graph(const KSkeleton& sk, int d);

 private:
  int index_of(Vertex root, Vertex leaf) const;

  int d_ = 0;
  const Graph* graph_ = nullptr;
  std::vector<int> offset_;  // -1 for nonsimple vertices
  std::vector<Node> nodes_;
};

/// Throws FrameNotInUniqueTwoFace unless every 2-frame at a simple vertex
/// lies in exactly one 2-face. The skeleton must outlive the result.
FrameGraph build_frame_graph(const KSkeleton& sk, int d);

/// One propagation move: `t_u` is the (d-1)-frame at simple u defining a
/// facet F and u2 a simple vertex of t_u; returns the (d-1)-frame at u2
/// defining F. Throws NonSimpleRoot.
Frame propagate_frame(const FrameGraph& fg, const Frame& t_u, Vertex u2);

enum class Parity { Even, Odd };

struct Ambiguity {
  VertexSet first;      // the two traced vertex sets meeting in N
  VertexSet second;
  VertexSet separator;  // N, the nonsimple vertices
  std::vector<VertexSet> split;   // completion with two facets meeting in N
  std::vector<VertexSet> merged;  // completion with their union as one facet
};

struct ReconstructionStats {
  std::size_t frame_graph_nodes = 0;
  std::size_t frames_visited = 0;  // simple (d-1)-frames
  std::size_t traces = 0;
};

struct ReconstructionOutcome {
  enum class Status { Complete, Ambiguous };
  Status status = Status::Complete;
  std::vector<VertexSet> facets;  // empty while ambiguous
  std::optional<Ambiguity> ambiguity;
  ReconstructionStats stats;
};

/// Facets from a 2-skeleton by simple-frame propagation. Complete whenever
/// every facet has at most d-2 nonsimple vertices. The one undetermined case
/// (d-1 nonsimple vertices N inducing a complete graph and separating a
/// facet) is reported as ambiguous unless `parity` picks a completion.
/// Throws NotASkeleton when the propagation is inconsistent.
ReconstructionOutcome reconstruct(const KSkeleton& sk, int d,
                                  std::optional<Parity> parity = std::nullopt);

}  // namespace skelrecon
