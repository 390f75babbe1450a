#include "skelrecon/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "skelrecon/error.hpp"

namespace skelrecon {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::InvalidSpec, "negative vertex count");
  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::InvalidSpec, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidSpec, "loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw Error(ErrorCode::InvalidSpec, "repeated edge at vertex " + std::to_string(v));
  }
  g.num_edges_ = edges.size();
  return g;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& adj : adjacency_) m = std::max(m, static_cast<int>(adj.size()));
  return m;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : adjacency_[vertices[i]])
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  return from_edges(static_cast<int>(vertices.size()), edges);
}

std::vector<Mask> Graph::adjacency_masks() const {
  if (num_vertices() > kMaskBits)
    throw Error(ErrorCode::TooLarge, "mask representation needs at most 64 vertices");
  std::vector<Mask> masks(adjacency_.size(), 0);
  for (int v = 0; v < num_vertices(); ++v) masks[v] = to_mask(adjacency_[v]);
  return masks;
}

namespace {

// Unit-capacity flow on the split graph: vertex v becomes in = 2v, out = 2v+1.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.num_vertices()), head_(2 * n_, -1) {
    for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, 1);
      add_arc(2 * v + 1, 2 * u, 1);
    }
  }

  // Number of internally disjoint s-t paths, capped at `limit`.
  int local_connectivity(Vertex s, Vertex t, int limit) {
    for (auto& a : arcs_) a.flow = 0;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> via(2 * n_);
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source);
      via[source] = -2;
      while (!q.empty() && via[sink] == -1) {
        const int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const int y = arcs_[a].to;
          if (via[y] == -1 && arcs_[a].flow < arcs_[a].cap) {
            via[y] = a;
            q.push(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source;) {
        const int a = via[x];
        ++arcs_[a].flow;
        --arcs_[a ^ 1].flow;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to, next, cap, flow;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap, 0});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

bool k_connected(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k <= 0) return true;
  if (n <= k) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < k) return false;
  // Even's scheme: every separator of size < k misses one of the first k
  // vertices, so pairs (v_i, w) with i < k suffice.
  SplitFlow flow(g);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j) && flow.local_connectivity(i, j, k) < k) return false;
  return true;
}

std::vector<VertexSet> induced_cycles(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> cycles;
  std::vector<int> chords(n, 0);  // internal path vertices adjacent to v
  std::vector<char> on_path(n, 0), near_start(n, 0);
  std::vector<Vertex> path;

  auto extend = [&](auto&& self) -> void {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path[w] || chords[w] > 0) continue;
      if (path.size() >= 2 && near_start[w]) {
        if (path[1] < w) {
          VertexSet c(path.begin(), path.end());
          c.push_back(w);
          std::sort(c.begin(), c.end());
          cycles.push_back(std::move(c));
        }
        continue;
      }
      if (path.size() >= 2)
        for (Vertex x : g.neighbors(last)) ++chords[x];
      path.push_back(w);
      on_path[w] = 1;
      self(self);
      on_path[w] = 0;
      path.pop_back();
      if (path.size() >= 2)
        for (Vertex x : g.neighbors(last)) --chords[x];
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex x : g.neighbors(s)) near_start[x] = 1;
    path = {s};
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
    for (Vertex x : g.neighbors(s)) near_start[x] = 0;
  }
  std::sort(cycles.begin(), cycles.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return cycles;
}

bool has_feasible_degrees(const Graph& g, std::span<const Vertex> subset, int d) {
  for (Vertex v : subset) {
    int inside = 0;
    for (Vertex w : g.neighbors(v))
      if (contains(subset, w)) ++inside;
    if (g.degree(v) == d ? inside != d - 1 : inside < d - 1) return false;
  }
  return true;
}

bool is_feasible(const Graph& g, std::span<const Vertex> subset, int d) {
  if (subset.empty() || !has_feasible_degrees(g, subset, d)) return false;
  return k_connected(g.induced(subset), d - 1);
}

}  // namespace skelrecon
