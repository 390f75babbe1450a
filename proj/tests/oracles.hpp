// Independent brute-force oracles used only by the tests. They deliberately
// avoid the library's algorithms (flow, closure BFS, DFS cycle search,
// transitive-closure enumeration) so agreement is meaningful.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "skelrecon/graph.hpp"
#include "skelrecon/lattice.hpp"

namespace oracle {

using skelrecon::Graph;
using skelrecon::Mask;
using skelrecon::PolytopeSpec;
using skelrecon::VertexSet;

inline bool connected_without(const Graph& g, Mask removed) {
  const int n = g.num_vertices();
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!((removed >> v) & 1u)) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<int> stack{start};
  Mask seen = Mask{1} << start;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      Mask b = Mask{1} << w;
      if ((removed & b) || (seen & b)) continue;
      seen |= b;
      ++count;
      stack.push_back(w);
    }
  }
  return count == alive;
}

// Every vertex subset of size < k is tried as a cut.
inline bool k_connected(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k <= 0) return true;
  if (n <= k) return false;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) >= k) continue;
    if (!connected_without(g, s)) return false;
  }
  return true;
}

// Acyclic orientations counted as distinct direction signatures over all
// total orders.
inline std::size_t count_acyclic_orientations(const Graph& g, Mask sources = 0) {
  const int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto edges = g.edges();
  std::set<std::vector<bool>> seen;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<bool> sig;
    bool ok = true;
    for (auto [u, v] : edges) {
      sig.push_back(pos[u] < pos[v]);
      if ((sources >> v) & 1u && pos[u] < pos[v]) ok = false;
      if ((sources >> u) & 1u && pos[v] < pos[u]) ok = false;
    }
    if (ok) seen.insert(sig);
  } while (std::next_permutation(order.begin(), order.end()));
  return seen.size();
}

// Chromatic polynomial at x by deletion-contraction on an edge list over
// vertices 0..n-1. |P(G, -1)| counts acyclic orientations.
inline long long chromatic(int n, std::vector<std::pair<int, int>> edges, long long x) {
  if (edges.empty()) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  }
  auto [a, b] = edges.back();
  edges.pop_back();
  const long long deleted = chromatic(n, edges, x);
  // Contract b into a and renumber the remaining vertices densely.
  std::vector<int> id(n);
  for (int w = 0, next = 0; w < n; ++w) id[w] = w == b ? -1 : next++;
  id[b] = id[a];
  std::set<std::pair<int, int>> merged;
  for (auto [u, v] : edges) {
    const int p = id[u], q = id[v];
    if (p != q) merged.insert({std::min(p, q), std::max(p, q)});
  }
  return deleted - chromatic(n - 1, {merged.begin(), merged.end()}, x);
}

inline long long acyclic_orientations_by_chromatic(const Graph& g) {
  const auto all = g.edges();
  std::vector<std::pair<int, int>> edges(all.begin(), all.end());
  const long long p = chromatic(g.num_vertices(), edges, -1);
  return p < 0 ? -p : p;
}

// Chordless cycles: subsets whose induced subgraph is connected and 2-regular.
inline std::vector<VertexSet> induced_cycles(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) < 3) continue;
    bool regular = true;
    for (int v = 0; v < n && regular; ++v) {
      if (!((s >> v) & 1u)) continue;
      int deg = 0;
      for (int w : g.neighbors(v)) deg += (s >> w) & 1u;
      regular = deg == 2;
    }
    if (!regular || !connected_without(g, ~s & ((Mask{1} << n) - 1))) continue;
    out.push_back(skelrecon::from_mask(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Faces as closed vertex subsets: S is a face iff S equals the intersection
// of all facets containing it (the full set for S = V). Rank = longest chain
// length from the empty face minus one. Exponential in n; n <= 16.
struct Faces {
  std::map<int, std::vector<VertexSet>> by_rank;
  std::vector<long long> f_vector;  // ranks 0..d-1
};

inline Faces faces_of(const PolytopeSpec& spec) {
  const int n = spec.n;
  std::vector<Mask> facets;
  for (const auto& f : spec.facets) facets.push_back(skelrecon::to_mask(f));
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Mask> closed;
  for (Mask s = 0; s <= all; ++s) {
    Mask c = all;
    for (Mask f : facets)
      if ((f & s) == s) c &= f;
    if (c == s) closed.push_back(s);
  }
  std::sort(closed.begin(), closed.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::map<Mask, int> rank;
  for (Mask s : closed) {
    int r = -1;
    for (auto& [t, rt] : rank)
      if (t != s && (t & s) == t) r = std::max(r, rt + 1);
    rank[s] = r;
  }
  Faces out;
  for (auto& [s, r] : rank) out.by_rank[r].push_back(skelrecon::from_mask(s));
  for (auto& [r, layer] : out.by_rank) std::sort(layer.begin(), layer.end());
  for (int r = 0; r < spec.d; ++r) out.f_vector.push_back(out.by_rank[r].size());
  return out;
}

// Same result for larger n: close the facets under pairwise intersection
// until nothing new appears, then rank by longest chains.
inline Faces faces_by_intersection(const PolytopeSpec& spec) {
  std::set<Mask> closed;
  const Mask all = spec.n == 64 ? ~Mask{0} : (Mask{1} << spec.n) - 1;
  closed.insert(all);
  for (const auto& f : spec.facets) closed.insert(skelrecon::to_mask(f));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Mask> now(closed.begin(), closed.end());
    for (std::size_t i = 0; i < now.size(); ++i)
      for (std::size_t j = i + 1; j < now.size(); ++j)
        grew |= closed.insert(now[i] & now[j]).second;
  }
  closed.insert(0);
  std::vector<Mask> order(closed.begin(), closed.end());
  std::sort(order.begin(), order.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::map<Mask, int> rank;
  for (Mask s : order) {
    int r = -1;
    for (auto& [t, rt] : rank)
      if (t != s && (t & s) == t) r = std::max(r, rt + 1);
    rank[s] = r;
  }
  Faces out;
  for (auto& [s, r] : rank) out.by_rank[r].push_back(skelrecon::from_mask(s));
  for (auto& [r, layer] : out.by_rank) std::sort(layer.begin(), layer.end());
  for (int r = 0; r < spec.d; ++r) out.f_vector.push_back(out.by_rank[r].size());
  return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline PolytopeSpec relabel(const PolytopeSpec& spec, const std::vector<int>& p) {
  PolytopeSpec out{spec.d, spec.n, {}};
  for (const auto& f : spec.facets) {
    VertexSet g;
    for (int v : f) g.push_back(p[v]);
    out.facets.push_back(g);
  }
  out.canonicalize();
  return out;
}

inline Graph relabel(const Graph& g, const std::vector<int>& p) {
  std::vector<skelrecon::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
  return Graph::from_edges(g.num_vertices(), edges);
}

}  // namespace oracle
