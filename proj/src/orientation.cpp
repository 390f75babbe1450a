#include "skelrecon/orientation.hpp"

#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "skelrecon/error.hpp"

namespace skelrecon {
namespace {

void finish(const Graph& g, Orientation& o, Mask simple) {
  const int n = g.num_vertices();
  o.in.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    Mask m = o.out[v];
    while (m) {
      o.in[std::countr_zero(m)] |= bit(v);
      m &= m - 1;
    }
  }
  const int width = g.max_degree() + 1;
  o.indegree.assign(n, 0);
  o.histogram.assign(width, 0);
  o.simple_histogram.assign(width, 0);
  for (int v = 0; v < n; ++v) {
    const int k = std::popcount(o.in[v]);
    o.indegree[v] = k;
    ++o.histogram[k];
    if ((simple >> v) & 1u) ++o.simple_histogram[k];
  }
  // Kahn's algorithm, smallest ready vertex first.
  o.order.clear();
  Mask placed = 0;
  const Mask all = n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
  while (placed != all) {
    Mask ready = 0;
    Mask rest = all & ~placed;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((o.in[v] & ~placed) == 0) ready |= bit(v);
    }
    const int v = std::countr_zero(ready);
    o.order.push_back(v);
    placed |= bit(v);
  }
}

}  // namespace

Orientation Orientation::from_order(const Graph& g, std::span<const Vertex> order, Mask simple) {
  const int n = g.num_vertices();
  if (n > kMaskBits) throw Error(ErrorCode::TooLarge, "orientation needs at most 64 vertices");
  std::vector<int> position(n);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  Orientation o;
  o.out.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    if (position[u] < position[v])
      o.out[u] |= bit(v);
    else
      o.out[v] |= bit(u);
  }
  finish(g, o, simple);
  return o;
}

bool OrientationConstraints::admits(const Orientation& o) const {
  for (Mask m = sources; m; m &= m - 1)
    if (o.in[std::countr_zero(m)]) return false;
  for (Mask m = sinks; m; m &= m - 1)
    if (o.out[std::countr_zero(m)]) return false;
  for (auto [a, b] : arcs)
    if (!o.points(a, b)) return false;
  return true;
}

std::size_t default_max_vertices() {
  if (const char* env = std::getenv("SKELRECON_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<std::size_t>(value);
  }
  return 12;
}

std::size_t enumerate_acyclic_orientations(const Graph& g, const OrientationFilter& filter,
                                           const OrientationVisitor& visit,
                                           const EnumerationOptions& options) {
  const int n = g.num_vertices();
  if (static_cast<std::size_t>(n) > options.max_vertices || n > kMaskBits)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the sweep bound of " +
                                         std::to_string(options.max_vertices));
  if (options.partition.count == 0 || options.partition.index >= options.partition.count)
    throw Error(ErrorCode::PreconditionViolated, "bad partition");

  // reach[x]: vertices reachable from x, x included.
  std::vector<Mask> reach(n);
  for (int v = 0; v < n; ++v) reach[v] = bit(v);
  Orientation o;
  o.out.assign(n, 0);

  auto add_arc = [&](std::vector<Mask>& r, Vertex a, Vertex b) {
    const Mask from_b = r[b];
    for (int x = 0; x < n; ++x)
      if ((r[x] >> a) & 1u) r[x] |= from_b;
    o.out[a] |= bit(b);
  };

  const auto& c = options.constraints;
  std::vector<Edge> free_edges;
  for (auto [u, v] : g.edges()) {
    int forced = 0;  // +1: u->v, -1: v->u
    auto force = [&](int dir) {
      if (forced != 0 && forced != dir) forced = 2;
      else forced = dir;
    };
    if ((c.sources >> u) & 1u) force(+1);
    if ((c.sources >> v) & 1u) force(-1);
    if ((c.sinks >> v) & 1u) force(+1);
    if ((c.sinks >> u) & 1u) force(-1);
    for (auto [a, b] : c.arcs) {
      if (a == u && b == v) force(+1);
      if (a == v && b == u) force(-1);
    }
    if (forced == 2) return 0;  // contradictory constraints: empty family
    if (forced == 0) {
      free_edges.emplace_back(u, v);
      continue;
    }
    const Vertex a = forced > 0 ? u : v;
    const Vertex b = forced > 0 ? v : u;
    if ((reach[b] >> a) & 1u) return 0;
    add_arc(reach, a, b);
  }

  unsigned split_depth = 0;
  while ((1u << split_depth) < options.partition.count && split_depth < free_edges.size())
    ++split_depth;

  std::size_t visited = 0;
  std::vector<std::vector<Mask>> saved(free_edges.size() + 1, std::vector<Mask>(n));
  auto recurse = [&](auto&& self, std::size_t depth, unsigned pattern) -> void {
    if (depth == split_depth && options.partition.count > 1 &&
        pattern % options.partition.count != options.partition.index)
      return;
    if (depth == free_edges.size()) {
      finish(g, o, options.simple);
      if (!filter || filter(o)) {
        ++visited;
        visit(o);
      }
      return;
    }
    const auto [u, v] = free_edges[depth];
    for (int dir = 0; dir < 2; ++dir) {
      const Vertex a = dir == 0 ? u : v;
      const Vertex b = dir == 0 ? v : u;
      if ((reach[b] >> a) & 1u) continue;
      saved[depth] = reach;
      const Mask out_a = o.out[a];
      add_arc(reach, a, b);
      self(self, depth + 1, depth < split_depth ? (pattern << 1) | dir : pattern);
      o.out[a] = out_a;
      reach.swap(saved[depth]);
    }
  };
  recurse(recurse, 0, 0);
  return visited;
}

Objectives objectives(const Orientation& o, int d) {
  Objectives r;
  for (std::size_t k = 0; k < o.histogram.size(); ++k) {
    const long long h = o.histogram[k];
    r.f2 += h * static_cast<long long>(k) * (static_cast<long long>(k) - 1) / 2;
    r.sink_pairs += h << k;
  }
  auto simple_h = [&](int k) -> long long {
    return k >= 0 && k < static_cast<int>(o.simple_histogram.size()) ? o.simple_histogram[k] : 0;
  };
  r.facet_sinks = simple_h(d - 1) + d * simple_h(d);
  return r;
}

int count_sinks(const Orientation& o, Mask subset) {
  int sinks = 0;
  for (Mask m = subset; m; m &= m - 1)
    if ((o.out[std::countr_zero(m)] & subset) == 0) ++sinks;
  return sinks;
}

bool is_good(const Orientation& o, std::span<const VertexSet> facets) {
  for (const auto& f : facets)
    if (count_sinks(o, to_mask(f)) != 1) return false;
  return true;
}

Mask ancestors(const Orientation& o, Vertex x) {
  Mask seen = bit(x);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= o.in[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_initial(const Orientation& o, Mask subset) {
  for (Mask m = subset; m; m &= m - 1)
    if (o.in[std::countr_zero(m)] & ~subset) return false;
  return true;
}

std::optional<long long> minimize_over_orientations(
    const Graph& g, const OrientationConstraints& constraints,
    const std::function<long long(Vertex, int)>& cost) {
  const int n = g.num_vertices();
  if (n > kDynamicProgramMaxVertices)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the DP bound of " +
                                         std::to_string(kDynamicProgramMaxVertices));
  const auto adj = g.adjacency_masks();
  std::vector<Mask> must_precede(n, 0);  // vertices placed before v
  std::vector<Mask> must_follow(n, 0);   // neighbours placed after v
  for (int v = 0; v < n; ++v) {
    if ((constraints.sources >> v) & 1u) must_follow[v] |= adj[v];
    if ((constraints.sinks >> v) & 1u) must_precede[v] |= adj[v];
  }
  for (auto [a, b] : constraints.arcs) {
    must_precede[b] |= bit(a);
    must_follow[a] |= bit(b);
  }
  std::vector<std::vector<long long>> table(n);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k <= g.degree(v); ++k) table[v].push_back(cost(v, k));

  constexpr long long kInf = std::numeric_limits<long long>::max();
  const std::size_t states = std::size_t{1} << n;
  std::vector<long long> best(states, kInf);
  best[0] = 0;
  for (std::size_t s = 0; s < states; ++s) {
    if (best[s] == kInf) continue;
    const Mask placed = s;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1u) continue;
      if ((must_precede[v] & ~placed) || (must_follow[v] & placed)) continue;
      const long long value = best[s] + table[v][std::popcount(adj[v] & placed)];
      auto& slot = best[s | bit(v)];
      if (value < slot) slot = value;
    }
  }
  if (best[states - 1] == kInf) return std::nullopt;
  return best[states - 1];
}

}  // namespace skelrecon
