#include "skelrecon/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "skelrecon/error.hpp"

namespace skelrecon {
namespace {

// Fixed-width bit set; all sets of one lattice share the same word count.
struct Bits {
  std::vector<std::uint64_t> words;

  bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }

  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }

  Bits operator&(const Bits& o) const {
    Bits r{words};
    for (std::size_t i = 0; i < words.size(); ++i) r.words[i] &= o.words[i];
    return r;
  }

  VertexSet to_set() const {
    VertexSet out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto w = words[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Bits&, const Bits&) = default;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto w : b.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Bits make_bits(int n, std::span<const Vertex> set) {
  Bits b{std::vector<std::uint64_t>((n + 63) / 64, 0)};
  for (Vertex v : set) b.set(v);
  return b;
}

}  // namespace

void PolytopeSpec::canonicalize() { skelrecon::canonicalize(facets); }

void check_spec(const PolytopeSpec& spec) {
  if (spec.d < 2) throw Error(ErrorCode::InvalidSpec, "dimension must be at least 2");
  if (spec.n <= spec.d) throw Error(ErrorCode::InvalidSpec, "a d-polytope has more than d vertices");
  std::vector<int> incidence(spec.n, 0);
  for (const auto& f : spec.facets) {
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::InvalidSpec, "facet " + to_string(f) + " is not a sorted set");
    for (Vertex v : f) {
      if (v < 0 || v >= spec.n)
        throw Error(ErrorCode::InvalidSpec, "vertex id " + std::to_string(v) + " out of range");
      ++incidence[v];
    }
  }
  for (int v = 0; v < spec.n; ++v)
    if (incidence[v] < spec.d)
      throw Error(ErrorCode::InvalidSpec,
                  "vertex " + std::to_string(v) + " lies in fewer than d facets");
  for (std::size_t i = 0; i < spec.facets.size(); ++i)
    for (std::size_t j = 0; j < spec.facets.size(); ++j)
      if (i != j && is_subset(spec.facets[i], spec.facets[j]))
        throw Error(ErrorCode::InvalidSpec, "facet " + to_string(spec.facets[i]) +
                                                " is contained in " + to_string(spec.facets[j]));
}

const std::vector<VertexSet>& FaceLattice::faces(int rank) const {
  if (rank < -1 || rank > d_)
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(rank));
  return layers_[rank + 1];
}

const std::vector<int>& FaceLattice::covers_up(int rank, int index) const {
  if (rank < -1 || rank >= d_)
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(rank));
  return up_[rank + 1].at(index);
}

std::vector<long long> FaceLattice::f_vector() const {
  std::vector<long long> f;
  for (int r = 0; r < d_; ++r) f.push_back(static_cast<long long>(layers_[r + 1].size()));
  return f;
}

Graph FaceLattice::graph() const {
  std::vector<Edge> edges;
  if (d_ >= 1)
    for (const auto& e : layers_[2])
      if (e.size() == 2) edges.emplace_back(e[0], e[1]);
  return Graph::from_edges(n_, edges);
}

PolytopeSpec FaceLattice::spec() const { return PolytopeSpec{d_, n_, layers_[d_]}; }

struct LatticeBuilder {
  static FaceLattice build(const PolytopeSpec& spec, LatticeBuildOptions options) {
    if (options.require_polytope_spec) {
      check_spec(spec);
    } else {
      if (spec.d < 1 || spec.n < 1) throw Error(ErrorCode::InvalidSpec, "empty input");
      for (const auto& f : spec.facets)
        for (Vertex v : f)
          if (v < 0 || v >= spec.n) throw Error(ErrorCode::InvalidSpec, "vertex id out of range");
    }
    const int n = spec.n;
    std::vector<Bits> facets;
    for (const auto& f : spec.facets) facets.push_back(make_bits(n, f));

    // Intersection closure.
    std::vector<Bits> faces;
    std::unordered_map<Bits, int, BitsHash> index;
    auto insert = [&](Bits b) {
      auto [it, fresh] = index.emplace(b, static_cast<int>(faces.size()));
      if (fresh) faces.push_back(std::move(b));
      return it->second;
    };
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    const int top = insert(make_bits(n, all));
    insert(make_bits(n, {}));
    for (const auto& f : facets) insert(f);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (static_cast<int>(i) == top) continue;
      for (const auto& f : facets) insert(faces[i] & f);
    }

    // Lower covers: maximal elements of {F & J : J a facet not containing F}.
    const std::size_t m = faces.size();
    std::vector<std::vector<int>> lower(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<int> candidates;
      for (const auto& f : facets) {
        if (static_cast<int>(i) != top && faces[i].subset_of(f)) continue;
        const int c = index.at(static_cast<int>(i) == top ? f : faces[i] & f);
        if (c != static_cast<int>(i)) candidates.push_back(c);
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (int c : candidates) {
        bool maximal = true;
        for (int o : candidates)
          if (o != c && faces[c].subset_of(faces[o])) {
            maximal = false;
            break;
          }
        if (maximal) lower[i].push_back(c);
      }
    }

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> card(m);
    for (std::size_t i = 0; i < m; ++i) card[i] = faces[i].count();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return card[a] < card[b]; });
    std::vector<int> rank(m, -2);
    for (int i : order) {
      if (card[i] == 0) {
        rank[i] = -1;
        continue;
      }
      if (lower[i].empty()) throw Error(ErrorCode::NotGraded, "nonempty face without lower cover");
      const int r = rank[lower[i].front()];
      for (int c : lower[i])
        if (rank[c] != r)
          throw Error(ErrorCode::NotGraded,
                      "face " + to_string(faces[i].to_set()) + " covers faces of different ranks");
      rank[i] = r + 1;
    }
    if (rank[top] != spec.d)
      throw Error(ErrorCode::NotGraded, "top face has rank " + std::to_string(rank[top]) +
                                            ", expected " + std::to_string(spec.d));

    FaceLattice lattice;
    lattice.d_ = spec.d;
    lattice.n_ = n;
    lattice.layers_.assign(spec.d + 2, {});
    std::vector<std::vector<int>> members(spec.d + 2);
    for (std::size_t i = 0; i < m; ++i) members[rank[i] + 1].push_back(static_cast<int>(i));
    std::vector<int> position(m);
    for (int r = 0; r < spec.d + 2; ++r) {
      std::vector<std::pair<VertexSet, int>> layer;
      for (int i : members[r]) layer.emplace_back(faces[i].to_set(), i);
      std::sort(layer.begin(), layer.end());
      for (std::size_t p = 0; p < layer.size(); ++p) {
        position[layer[p].second] = static_cast<int>(p);
        lattice.layers_[r].push_back(std::move(layer[p].first));
      }
    }
    lattice.up_.assign(spec.d + 1, {});
    for (int r = 0; r <= spec.d; ++r) lattice.up_[r].assign(lattice.layers_[r].size(), {});
    for (std::size_t i = 0; i < m; ++i)
      for (int c : lower[i]) lattice.up_[rank[c] + 1][position[c]].push_back(position[i]);
    for (auto& layer : lattice.up_)
      for (auto& ups : layer) std::sort(ups.begin(), ups.end());
    return lattice;
  }
};

FaceLattice build_face_lattice(const PolytopeSpec& spec, LatticeBuildOptions options) {
  return LatticeBuilder::build(spec, options);
}

KSkeleton k_skeleton(const FaceLattice& lattice, int k) {
  if (k < 1 || k > lattice.dim() - 1)
    throw Error(ErrorCode::RankOutOfRange,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(lattice.dim() - 1));
  KSkeleton sk;
  sk.d = lattice.dim();
  sk.k = k;
  sk.graph = lattice.graph();
  for (int r = 0; r <= k; ++r) sk.faces_by_dim.push_back(lattice.faces(r));
  return sk;
}

KSkeleton two_skeleton(int d, Graph graph, std::vector<VertexSet> two_faces) {
  KSkeleton sk;
  sk.d = d;
  sk.k = 2;
  std::vector<VertexSet> vertices, edges;
  for (int v = 0; v < graph.num_vertices(); ++v) vertices.push_back({v});
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  canonicalize(two_faces);
  sk.graph = std::move(graph);
  sk.faces_by_dim = {std::move(vertices), std::move(edges), std::move(two_faces)};
  return sk;
}

VertexClasses classify_vertices(const Graph& g, int d) {
  VertexClasses c;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int deg = g.degree(v);
    c.degree.push_back(deg);
    if (deg < d)
      throw Error(ErrorCode::DegreeBelowDimension,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    (deg == d ? c.simple : c.nonsimple).push_back(v);
  }
  return c;
}

VertexClasses classify_vertices(const PolytopeSpec& spec) {
  return classify_vertices(build_face_lattice(spec).graph(), spec.d);
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const FaceLattice& lattice) {
  ValidationReport report;
  const int d = lattice.dim();

  // Construction already rejects ungraded posets; re-check the stored layers.
  bool graded = true;
  for (int r = -1; r < d && graded; ++r)
    for (std::size_t i = 0; i < lattice.faces(r).size() && graded; ++i)
      for (int up : lattice.covers_up(r, static_cast<int>(i)))
        if (!is_subset(lattice.faces(r)[i], lattice.faces(r + 1)[up])) graded = false;
  report.checks.push_back({"graded", graded, graded ? "" : "cover relation spans the wrong ranks"});

  bool diamond = true;
  std::string diamond_detail;
  for (int r = -1; r + 2 <= d && diamond; ++r) {
    const auto& low = lattice.faces(r);
    const auto& high = lattice.faces(r + 2);
    for (std::size_t i = 0; i < low.size() && diamond; ++i) {
      for (std::size_t j = 0; j < high.size(); ++j) {
        if (!is_subset(low[i], high[j])) continue;
        int between = 0;
        for (int mid : lattice.covers_up(r, static_cast<int>(i)))
          if (is_subset(lattice.faces(r + 1)[mid], high[j])) ++between;
        if (between != 2) {
          diamond = false;
          diamond_detail = "interval [" + to_string(low[i]) + ", " + to_string(high[j]) + "] has " +
                           std::to_string(between) + " intermediate faces";
          break;
        }
      }
    }
  }
  report.checks.push_back({"diamond", diamond, diamond_detail});

  const auto f = lattice.f_vector();
  long long alternating = 0;
  for (int k = 0; k < d; ++k) alternating += (k % 2 == 0 ? 1 : -1) * f[k];
  const long long expected = 1 - (d % 2 == 0 ? 1 : -1);
  report.checks.push_back({"euler", alternating == expected,
                           "sum = " + std::to_string(alternating) + ", expected " +
                               std::to_string(expected)});

  bool atoms = static_cast<int>(lattice.faces(0).size()) == lattice.num_vertices();
  for (const auto& v : lattice.faces(0)) atoms = atoms && v.size() == 1;
  report.checks.push_back({"vertices", atoms, atoms ? "" : "some vertex is not a rank-0 face"});

  const Graph g = lattice.graph();
  const bool connected = k_connected(g, d);
  report.checks.push_back(
      {"graph_connectivity", connected,
       connected ? "" : "graph is not " + std::to_string(d) + "-connected"});

  bool facets_ok = true;
  std::string facet_detail;
  if (d >= 2) {
    for (const auto& facet : lattice.faces(d - 1)) {
      if (!k_connected(g.induced(facet), d - 1)) {
        facets_ok = false;
        facet_detail = "facet " + to_string(facet) + " graph is not (d-1)-connected";
        break;
      }
    }
  }
  report.checks.push_back({"facet_connectivity", facets_ok, facet_detail});
  return report;
}

}  // namespace skelrecon
