#include "skelrecon/recon_2skel.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "skelrecon/error.hpp"

namespace skelrecon {
namespace {

int pair_index(int i, int j, int d) { return i * (2 * d - i - 1) / 2 + (j - i - 1); }

}  // namespace

int FrameGraph::index_of(Vertex root, Vertex leaf) const {
  const auto nb = graph_->neighbors(root);
  for (int i = 0; i < static_cast<int>(nb.size()); ++i)
    if (nb[i] == leaf) return i;
  throw Error(ErrorCode::PreconditionViolated,
              std::to_string(leaf) + " is not a neighbour of " + std::to_string(root));
}

int FrameGraph::slot(Vertex root, Vertex a, Vertex b) const {
  if (offset_[root] < 0) throw Error(ErrorCode::NonSimpleRoot, std::to_string(root));
  int i = index_of(root, a), j = index_of(root, b);
  if (i > j) std::swap(i, j);
  if (i == j) throw Error(ErrorCode::PreconditionViolated, "degenerate 2-frame");
  return offset_[root] + pair_index(i, j, d_);
}

FrameGraph build_frame_graph(const KSkeleton& sk, int d) {
  if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "frame propagation needs d >= 3");
  if (sk.k < 2) throw Error(ErrorCode::RankOutOfRange, "need a skeleton with 2-faces");
  const Graph& g = sk.graph;
  const int n = g.num_vertices();
  FrameGraph fg;
  fg.d_ = d;
  fg.graph_ = &g;
  fg.offset_.assign(n, -1);
  const int per_root = d * (d - 1) / 2;
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < d)
      throw Error(ErrorCode::DegreeBelowDimension, "vertex " + std::to_string(v));
    if (g.degree(v) == d) {
      fg.offset_[v] = next;
      next += per_root;
    }
  }
  fg.nodes_.assign(next, {});

  // Each face is scanned once: mark its vertices, find every vertex's two
  // neighbours inside the face, then fill the frames rooted at simple ones.
  std::vector<int> local(n, -1);
  const auto& faces = sk.faces(2);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& face = faces[f];
    for (int i = 0; i < static_cast<int>(face.size()); ++i) local[face[i]] = i;
    std::vector<std::array<Vertex, 2>> around(face.size(), {-1, -1});
    for (int i = 0; i < static_cast<int>(face.size()); ++i) {
      int found = 0;
      for (Vertex w : g.neighbors(face[i])) {
        if (local[w] < 0) continue;
        if (found == 2) {
          found = 3;
          break;
        }
        around[i][found++] = w;
      }
      if (found != 2)
        throw Error(ErrorCode::NotASkeleton, "2-face " + to_string(face) + " is not an induced cycle");
    }
    for (int i = 0; i < static_cast<int>(face.size()); ++i) {
      const Vertex u = face[i];
      if (fg.offset_[u] < 0) continue;
      const int s = fg.slot(u, around[i][0], around[i][1]);
      auto& node = fg.nodes_[s];
      if (node.face >= 0)
        throw Error(ErrorCode::FrameNotInUniqueTwoFace,
                    "frame at " + std::to_string(u) + " lies in two 2-faces");
      node.root = u;
      node.face = f;
      for (int k = 0; k < 2; ++k) {
        const Vertex leaf = around[i][k];
        node.leaf[k] = leaf;
        const auto& other = around[local[leaf]];
        node.hat[k] = other[0] == u ? other[1] : other[0];
      }
      if (node.leaf[0] > node.leaf[1]) {
        std::swap(node.leaf[0], node.leaf[1]);
        std::swap(node.hat[0], node.hat[1]);
      }
    }
    for (Vertex v : face) local[v] = -1;
  }
  for (std::size_t s = 0; s < fg.nodes_.size(); ++s)
    if (fg.nodes_[s].face < 0)
      throw Error(ErrorCode::FrameNotInUniqueTwoFace, "a 2-frame lies in no 2-face");
  for (auto& node : fg.nodes_)
    for (int k = 0; k < 2; ++k)
      if (fg.offset_[node.leaf[k]] >= 0) node.next[k] = fg.slot(node.leaf[k], node.root, node.hat[k]);
  return fg;
}

Frame propagate_frame(const FrameGraph& fg, const Frame& t_u, Vertex u2) {
  const Vertex u = t_u.root;
  if (!fg.is_simple(u)) throw Error(ErrorCode::NonSimpleRoot, std::to_string(u));
  if (!fg.is_simple(u2)) throw Error(ErrorCode::NonSimpleRoot, std::to_string(u2));
  if (!contains(t_u.leaves, u2))
    throw Error(ErrorCode::PreconditionViolated, "vertex is not in the frame");
  Vertex excluded = -1;
  for (Vertex w : fg.neighbors(u))
    if (!contains(t_u.leaves, w)) {
      if (excluded >= 0) throw Error(ErrorCode::PreconditionViolated, "not a (d-1)-frame");
      excluded = w;
    }
  if (excluded < 0) throw Error(ErrorCode::PreconditionViolated, "not a (d-1)-frame");
  const auto& node = fg.node(fg.slot(u, excluded, u2));
  const Vertex hat = node.leaf[0] == u2 ? node.hat[0] : node.hat[1];
  Frame out{u2, {}};
  for (Vertex w : fg.neighbors(u2))
    if (w != hat) out.leaves.push_back(w);
  return out;
}

ReconstructionOutcome reconstruct(const KSkeleton& sk, int d, std::optional<Parity> parity) {
  const FrameGraph fg = build_frame_graph(sk, d);
  const Graph& g = sk.graph;
  const int n = g.num_vertices();
  ReconstructionOutcome out;
  out.stats.frame_graph_nodes = fg.size();

  // (d-1)-frames at simple u are named by the excluded neighbour's index.
  std::vector<int> simple_rank(n, -1);
  int simple_count = 0;
  for (int v = 0; v < n; ++v)
    if (fg.is_simple(v)) simple_rank[v] = simple_count++;
  std::vector<char> visited(static_cast<std::size_t>(simple_count) * d, 0);
  auto frame_id = [&](Vertex u, int excluded) { return simple_rank[u] * d + excluded; };
  auto position = [&](Vertex u, Vertex w) {
    const auto nb = g.neighbors(u);
    return static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin());
  };

  std::vector<VertexSet> traced;
  std::vector<std::pair<Vertex, int>> work;
  for (int u = 0; u < n; ++u) {
    if (!fg.is_simple(u)) continue;
    for (int e = 0; e < d; ++e) {
      if (visited[frame_id(u, e)]) continue;
      VertexSet members;
      visited[frame_id(u, e)] = 1;
      work.assign(1, {u, e});
      while (!work.empty()) {
        auto [x, ex] = work.back();
        work.pop_back();
        ++out.stats.frames_visited;
        const auto nb = g.neighbors(x);
        const Vertex excluded = nb[ex];
        members.push_back(x);
        for (Vertex y : nb) {
          if (y == excluded) continue;
          members.push_back(y);
          if (!fg.is_simple(y)) continue;
          const auto& node = fg.node(fg.slot(x, excluded, y));
          const Vertex hat = node.leaf[0] == y ? node.hat[0] : node.hat[1];
          const int next = position(y, hat);
          if (!visited[frame_id(y, next)]) {
            visited[frame_id(y, next)] = 1;
            work.emplace_back(y, next);
          }
        }
      }
      canonicalize(members);
      traced.push_back(std::move(members));
      ++out.stats.traces;
    }
  }

  VertexSet nonsimple;
  for (int v = 0; v < n; ++v)
    if (!fg.is_simple(v)) nonsimple.push_back(v);

  // Two traces meeting exactly in N belong to one facet separated by N.
  std::vector<std::pair<int, int>> split_pairs;
  if (static_cast<int>(nonsimple.size()) == d - 1) {
    std::vector<int> holders;
    for (int i = 0; i < static_cast<int>(traced.size()); ++i)
      if (is_subset(nonsimple, traced[i])) holders.push_back(i);
    for (std::size_t a = 0; a < holders.size(); ++a)
      for (std::size_t b = a + 1; b < holders.size(); ++b)
        if (set_intersection(traced[holders[a]], traced[holders[b]]) == nonsimple)
          split_pairs.emplace_back(holders[a], holders[b]);
  }
  if (split_pairs.size() > 1)
    throw Error(ErrorCode::NotASkeleton, std::to_string(split_pairs.size()) +
                                             " pairs of traces meet in the nonsimple set");

  auto check_facets = [&](const std::vector<VertexSet>& facets) {
    for (const auto& f : facets)
      if (!has_feasible_degrees(g, f, d))
        throw Error(ErrorCode::NotASkeleton, "traced set " + to_string(f) + " is not a facet graph");
  };

  if (split_pairs.empty()) {
    canonicalize(traced);
    check_facets(traced);
    out.facets = std::move(traced);
    return out;
  }

  const auto [ia, ib] = split_pairs.front();
  Ambiguity amb;
  amb.first = traced[ia];
  amb.second = traced[ib];
  amb.separator = nonsimple;
  const VertexSet joined = set_union(amb.first, amb.second);
  if (!is_feasible(g, joined, d))
    throw Error(ErrorCode::NotASkeleton, "union of split traces is not a facet graph");
  amb.split = traced;
  canonicalize(amb.split);
  for (int i = 0; i < static_cast<int>(traced.size()); ++i)
    if (i != ia && i != ib) amb.merged.push_back(traced[i]);
  amb.merged.push_back(joined);
  canonicalize(amb.merged);

  bool complete_graph = true;
  for (std::size_t i = 0; i < nonsimple.size() && complete_graph; ++i)
    for (std::size_t j = i + 1; j < nonsimple.size(); ++j)
      if (!g.adjacent(nonsimple[i], nonsimple[j])) {
        complete_graph = false;
        break;
      }
  if (!complete_graph) {
    // N cannot be a ridge, so the two traces span one facet.
    check_facets(amb.merged);
    out.facets = std::move(amb.merged);
    return out;
  }
  check_facets(amb.merged);
  if (parity) {
    const bool want_even = *parity == Parity::Even;
    const bool split_even = amb.split.size() % 2 == 0;
    out.facets = want_even == split_even ? amb.split : amb.merged;
    out.ambiguity = std::move(amb);
    return out;
  }
  out.status = ReconstructionOutcome::Status::Ambiguous;
  out.ambiguity = std::move(amb);
  return out;
}

}  // namespace skelrecon
