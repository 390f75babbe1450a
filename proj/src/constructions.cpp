#include "skelrecon/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "skelrecon/error.hpp"

namespace skelrecon {
namespace {

LabeledConstruction labeled(int d, std::vector<VertexSet> facets) {
  LabeledConstruction c;
  c.spec.d = d;
  c.spec.n = 2 * d;
  c.spec.facets = std::move(facets);
  c.spec.canonicalize();
  c.labels.resize(2 * d);
  std::iota(c.labels.begin(), c.labels.end(), 0);
  for (int i = 1; i < d; ++i) c.X.push_back(2 * i);
  return c;
}

// Types B, C and D, shared by both families.
std::vector<VertexSet> common_facets(int d, const VertexSet& X) {
  std::vector<VertexSet> out;
  auto without = [&](Vertex skip) {
    VertexSet s;
    for (Vertex x : X)
      if (x != skip) s.push_back(x);
    return s;
  };
  for (int k = 1; k <= d - 1; ++k) {
    VertexSet b = without(2 * k);
    b.push_back(0);
    for (int i = 0; i < k; ++i) b.push_back(2 * i + 1);
    out.push_back(b);
  }
  for (int k = 1; k <= d - 2; ++k) {
    VertexSet c = without(2 * k);
    c.push_back(2 * d - 1);
    for (int i = k - 1; i <= d - 2; ++i) c.push_back(2 * i + 1);
    out.push_back(c);
  }
  VertexSet dd = without(2 * (d - 1));
  dd.push_back(2 * d - 3);
  dd.push_back(2 * d - 1);
  out.push_back(dd);
  return out;
}

VertexSet even_labels(int d) {
  VertexSet X;
  for (int i = 1; i < d; ++i) X.push_back(2 * i);
  return X;
}

void require_valid_base(const PolytopeSpec& base) {
  try {
    check_spec(base);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidBase, e.what());
  }
}

}  // namespace

LabeledConstruction q1(int d) {
  if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "q1 needs d >= 3");
  const VertexSet X = even_labels(d);
  auto facets = common_facets(d, X);
  VertexSet a = X;
  a.push_back(0);
  VertexSet e = X;
  e.push_back(2 * d - 1);
  facets.push_back(a);
  facets.push_back(e);
  return labeled(d, std::move(facets));
}

LabeledConstruction q2(int d) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "q2 needs d >= 4");
  const VertexSet X = even_labels(d);
  auto facets = common_facets(d, X);
  VertexSet a = X;
  a.push_back(0);
  a.push_back(2 * d - 1);
  facets.push_back(a);
  return labeled(d, std::move(facets));
}

PolytopeSpec simplex(int d) {
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "simplex needs d >= 1");
  PolytopeSpec s{d, d + 1, {}};
  for (int skip = 0; skip <= d; ++skip) {
    VertexSet f;
    for (int v = 0; v <= d; ++v)
      if (v != skip) f.push_back(v);
    s.facets.push_back(f);
  }
  s.canonicalize();
  return s;
}

PolytopeSpec cube(int d) {
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "cube needs d >= 1");
  if (d > 20) throw Error(ErrorCode::TooLarge, "cube dimension too large");
  const int n = 1 << d;
  PolytopeSpec s{d, n, {}};
  for (int i = 0; i < d; ++i)
    for (int b = 0; b < 2; ++b) {
      VertexSet f;
      for (int v = 0; v < n; ++v)
        if (((v >> i) & 1) == b) f.push_back(v);
      s.facets.push_back(f);
    }
  s.canonicalize();
  return s;
}

PolytopeSpec polygon(int m) {
  if (m < 3) throw Error(ErrorCode::InvalidBase, "polygon needs at least 3 vertices");
  PolytopeSpec s{2, m, {}};
  for (int i = 0; i < m; ++i) s.facets.push_back({i, (i + 1) % m});
  s.canonicalize();
  return s;
}

PolytopeSpec prism(const PolytopeSpec& base) {
  require_valid_base(base);
  const int n = base.n;
  PolytopeSpec s{base.d + 1, 2 * n, {}};
  VertexSet bottom(n), top(n);
  std::iota(bottom.begin(), bottom.end(), 0);
  std::iota(top.begin(), top.end(), n);
  s.facets.push_back(bottom);
  s.facets.push_back(top);
  for (const auto& f : base.facets) {
    VertexSet side = f;
    for (Vertex v : f) side.push_back(v + n);
    s.facets.push_back(side);
  }
  s.canonicalize();
  return s;
}

PolytopeSpec polygon_prism(int m) { return prism(polygon(m)); }

PolytopeSpec pyramid(const PolytopeSpec& base) {
  require_valid_base(base);
  PolytopeSpec s{base.d + 1, base.n + 1, {}};
  VertexSet all(base.n);
  std::iota(all.begin(), all.end(), 0);
  s.facets.push_back(all);
  for (auto f : base.facets) {
    f.push_back(base.n);
    s.facets.push_back(f);
  }
  s.canonicalize();
  return s;
}

PolytopeSpec bipyramid(const PolytopeSpec& base) {
  require_valid_base(base);
  PolytopeSpec s{base.d + 1, base.n + 2, {}};
  for (const auto& f : base.facets)
    for (Vertex apex : {base.n, base.n + 1}) {
      VertexSet g = f;
      g.push_back(apex);
      s.facets.push_back(g);
    }
  s.canonicalize();
  return s;
}

PolytopeSpec multifold_pyramid(const PolytopeSpec& base, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidBase, "negative pyramid count");
  PolytopeSpec s = base;
  require_valid_base(s);
  for (int i = 0; i < t; ++i) s = pyramid(s);
  return s;
}

PolytopeSpec wedge(const PolytopeSpec& base, int facet) {
  require_valid_base(base);
  if (facet < 0 || facet >= static_cast<int>(base.facets.size()))
    throw Error(ErrorCode::InvalidBase, "wedge facet index out of range");
  const VertexSet& g = base.facets[facet];
  // Vertices off g keep their id as the bottom copy; top copies follow n.
  std::vector<Vertex> top(base.n, -1);
  int next = base.n;
  for (int v = 0; v < base.n; ++v)
    if (!contains(g, v)) top[v] = next++;

  PolytopeSpec s{base.d + 1, next, {}};
  VertexSet bottom_facet, top_facet;
  for (int v = 0; v < base.n; ++v) {
    if (contains(g, v)) {
      bottom_facet.push_back(v);
      top_facet.push_back(v);
    } else {
      bottom_facet.push_back(v);
      top_facet.push_back(top[v]);
    }
  }
  s.facets.push_back(bottom_facet);
  s.facets.push_back(top_facet);
  for (int i = 0; i < static_cast<int>(base.facets.size()); ++i) {
    if (i == facet) continue;
    VertexSet h;
    for (Vertex v : base.facets[i]) {
      h.push_back(v);
      if (!contains(g, v)) h.push_back(top[v]);
    }
    s.facets.push_back(h);
  }
  s.canonicalize();
  return s;
}

KSkeleton polygon_prism_2skeleton(int m) {
  if (m < 3) throw Error(ErrorCode::InvalidBase, "polygon needs at least 3 vertices");
  std::vector<Edge> edges;
  edges.reserve(3 * static_cast<std::size_t>(m));
  std::vector<VertexSet> faces;
  faces.reserve(m + 2);
  VertexSet bottom(m), top(m);
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    edges.emplace_back(i, j);
    edges.emplace_back(m + i, m + j);
    edges.emplace_back(i, m + i);
    bottom[i] = i;
    top[i] = m + i;
    VertexSet side{i, j, m + i, m + j};
    canonicalize(side);
    faces.push_back(std::move(side));
  }
  faces.push_back(bottom);
  faces.push_back(top);
  return two_skeleton(3, Graph::from_edges(2 * m, edges), std::move(faces));
}

VertexSet TruncationMap::cut_facet() const {
  VertexSet out;
  for (const auto& c : cut) out.push_back(c.w);
  std::sort(out.begin(), out.end());
  return out;
}

TruncationMap truncation_map(const Graph& g, const VertexSet& face) {
  TruncationMap map;
  map.face = face;
  const int n = g.num_vertices();
  map.old_to_new.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (contains(face, v)) continue;
    map.old_to_new[v] = static_cast<Vertex>(map.new_to_old.size());
    map.new_to_old.push_back(v);
  }
  int next = static_cast<int>(map.new_to_old.size());
  for (Vertex x : face)
    for (Vertex y : g.neighbors(x))
      if (!contains(face, y)) map.cut.push_back({x, y, next++});
  map.num_vertices = next;
  return map;
}

Graph truncated_graph(const Graph& g, const TruncationMap& map,
                      const std::vector<VertexSet>& two_faces) {
  std::map<Edge, Vertex> w_of;
  for (const auto& c : map.cut) w_of[{c.x, c.y}] = c.w;
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    const bool in_a = contains(map.face, a);
    const bool in_b = contains(map.face, b);
    if (!in_a && !in_b) edges.emplace_back(map.old_to_new[a], map.old_to_new[b]);
  }
  for (const auto& c : map.cut) edges.emplace_back(map.old_to_new[c.y], c.w);
  for (const auto& k : two_faces) {
    const VertexSet inside = set_intersection(k, map.face);
    if (inside.empty() || inside.size() == k.size()) continue;
    std::vector<Vertex> ws;
    for (Vertex x : inside)
      for (Vertex y : k)
        if (!contains(map.face, y) && g.adjacent(x, y)) ws.push_back(w_of.at({x, y}));
    if (ws.size() != 2)
      throw Error(ErrorCode::InvalidSpec,
                  "2-face " + to_string(k) + " does not cross the truncated face in two edges");
    edges.emplace_back(std::min(ws[0], ws[1]), std::max(ws[0], ws[1]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(map.num_vertices, edges);
}

Truncation truncate(const FaceLattice& lattice, const VertexSet& face) {
  const int d = lattice.dim();
  bool proper = false;
  for (int r = 0; r < d && !proper; ++r) {
    const auto& layer = lattice.faces(r);
    proper = std::binary_search(layer.begin(), layer.end(), face);
  }
  if (!proper) throw Error(ErrorCode::NotAProperFace, to_string(face));

  const Graph g = lattice.graph();
  Truncation t;
  t.map = truncation_map(g, face);
  const auto& facets = lattice.faces(d - 1);
  t.map.face_is_facet = std::binary_search(facets.begin(), facets.end(), face);
  std::map<Edge, Vertex> w_of;
  for (const auto& c : t.map.cut) w_of[{c.x, c.y}] = c.w;

  t.spec.d = d;
  t.spec.n = t.map.num_vertices;
  t.spec.facets.push_back(t.map.cut_facet());
  for (const auto& j : lattice.faces(d - 1)) {
    if (j == face) continue;
    VertexSet image;
    for (Vertex y : j)
      if (!contains(face, y)) image.push_back(t.map.old_to_new[y]);
    for (Vertex x : j) {
      if (!contains(face, x)) continue;
      for (Vertex y : j)
        if (!contains(face, y) && g.adjacent(x, y)) image.push_back(w_of.at({x, y}));
    }
    t.spec.facets.push_back(std::move(image));
  }
  t.spec.canonicalize();
  t.graph = truncated_graph(g, t.map, d >= 3 ? lattice.faces(2) : std::vector<VertexSet>{});
  return t;
}

std::vector<VertexSet> pullback_facets(const std::vector<VertexSet>& facets,
                                       const TruncationMap& map) {
  const VertexSet cut = map.cut_facet();
  std::vector<Vertex> back(map.num_vertices, -1);
  for (std::size_t i = 0; i < map.new_to_old.size(); ++i) back[i] = map.new_to_old[i];
  for (const auto& c : map.cut) back[c.w] = c.x;

  bool seen_cut = false;
  std::vector<VertexSet> out;
  for (const auto& f : facets) {
    if (f == cut) {
      seen_cut = true;
      if (map.face_is_facet) out.push_back(map.face);
      continue;
    }
    VertexSet j;
    for (Vertex w : f) {
      if (w < 0 || w >= map.num_vertices)
        throw Error(ErrorCode::InvalidSpec, "vertex id out of range in pullback");
      j.push_back(back[w]);
    }
    canonicalize(j);
    out.push_back(std::move(j));
  }
  if (!seen_cut) throw Error(ErrorCode::CutFacetMissing, to_string(cut));
  canonicalize(out);
  return out;
}

}  // namespace skelrecon
