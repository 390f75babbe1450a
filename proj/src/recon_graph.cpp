#include "skelrecon/recon_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/lattice.hpp"
#include "skelrecon/recon_2skel.hpp"

namespace skelrecon {
namespace {

constexpr long long kInfinity = std::numeric_limits<long long>::max();

void require_mask_size(const Graph& g) {
  if (g.num_vertices() > kMaskBits)
    throw Error(ErrorCode::TooLarge, "graph reconstruction needs at most 64 vertices");
}

VertexSet nonsimple_vertices(const Graph& g, int d) {
  return classify_vertices(g, d).nonsimple;
}

// Exact cover of the simple-rooted 2-frames by induced cycles, maximising
// the number of cycles. Counters in the style of Algorithm X: a cycle is
// alive while it shares no frame with a chosen cycle.
class CoverSearch {
 public:
  CoverSearch(std::vector<std::vector<int>> cycle_items, int items, long long target)
      : cycle_items_(std::move(cycle_items)), target_(target) {
    item_cycles_.assign(items, {});
    for (int c = 0; c < static_cast<int>(cycle_items_.size()); ++c)
      for (int it : cycle_items_[c]) item_cycles_[it].push_back(c);
    blocked_.assign(cycle_items_.size(), 0);
    covered_.assign(items, false);
    uncovered_ = items;
  }

  // Returns the best full cover found (stopping early at the target).
  std::optional<std::vector<int>> run() {
    search();
    return best_;
  }

 private:
  void search() {
    if (done_) return;
    if (uncovered_ == 0) {
      if (!best_ || chosen_.size() > best_->size()) best_ = chosen_;
      if (static_cast<long long>(chosen_.size()) >= target_) done_ = true;
      return;
    }
    // Pick the uncovered frame with fewest live cycles and bound the number
    // of cycles still to come: each frame contributes at most 1/(items of its
    // smallest live cycle).
    int pick = -1;
    int pick_live = std::numeric_limits<int>::max();
    double bound = 0;
    for (int it = 0; it < static_cast<int>(item_cycles_.size()); ++it) {
      if (covered_[it]) continue;
      int live = 0;
      std::size_t smallest = std::numeric_limits<std::size_t>::max();
      for (int c : item_cycles_[it])
        if (!blocked_[c]) {
          ++live;
          smallest = std::min(smallest, cycle_items_[c].size());
        }
      if (live == 0) return;
      bound += 1.0 / static_cast<double>(smallest);
      if (live < pick_live) {
        pick_live = live;
        pick = it;
      }
    }
    const long long reachable = static_cast<long long>(chosen_.size()) +
                                static_cast<long long>(bound + 1e-9);
    if (best_ && reachable <= static_cast<long long>(best_->size())) return;
    for (int c : item_cycles_[pick]) {
      if (blocked_[c]) continue;
      choose(c);
      search();
      unchoose(c);
      if (done_) return;
    }
  }

  void choose(int c) {
    chosen_.push_back(c);
    for (int it : cycle_items_[c]) {
      covered_[it] = true;
      --uncovered_;
      for (int other : item_cycles_[it]) ++blocked_[other];
    }
  }

  void unchoose(int c) {
    chosen_.pop_back();
    for (int it : cycle_items_[c]) {
      covered_[it] = false;
      ++uncovered_;
      for (int other : item_cycles_[it]) --blocked_[other];
    }
  }

  std::vector<std::vector<int>> cycle_items_;
  std::vector<std::vector<int>> item_cycles_;
  long long target_;
  std::vector<int> blocked_;
  std::vector<bool> covered_;
  int uncovered_ = 0;
  std::vector<int> chosen_;
  std::optional<std::vector<int>> best_;
  bool done_ = false;
};

// Ancestor masks of every vertex, computed along a topological order.
std::vector<Mask> all_ancestors(const Orientation& o) {
  std::vector<Mask> anc(o.order.size(), 0);
  for (Vertex x : o.order) {
    Mask a = bit(x);
    for (Mask m = o.in[x]; m; m &= m - 1) a |= anc[std::countr_zero(m)];
    anc[x] = a;
  }
  return anc;
}

class FeasibilityCache {
 public:
  FeasibilityCache(const Graph& g, int d) : g_(g), d_(d) {}
  bool operator()(Mask m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    const bool ok = is_feasible(g_, from_mask(m), d_);
    cache_.emplace(m, ok);
    return ok;
  }

 private:
  const Graph& g_;
  int d_;
  std::unordered_map<Mask, bool> cache_;
};

struct SweepSpec {
  OrientationConstraints constraints;
  Mask required = 0;   // nonsimple vertices a candidate must contain
  Mask forbidden = 0;  // and must avoid
  std::function<long long(const Orientation&)> extra;  // added to the objective
};

// One pass over the family: candidates are kept for the current minimum and
// dropped whenever a smaller value appears.
FamilyResult sweep(const Graph& g, int d, const SweepSpec& spec, const GraphReconOptions& options) {
  require_mask_size(g);
  const int n = g.num_vertices();
  Mask simple = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == d) simple |= bit(v);
  FeasibilityCache feasible(g, d);
  EnumerationOptions eo;
  eo.constraints = spec.constraints;
  eo.simple = simple;
  eo.max_vertices = options.max_vertices;

  long long best = kInfinity;
  std::set<Mask> found;
  std::size_t members = 0;
  std::vector<Mask> accepted;
  enumerate_acyclic_orientations(g, {}, [&](const Orientation& o) {
    long long value = objectives(o, d).facet_sinks;
    if (spec.extra) value += spec.extra(o);
    if (value > best) return;
    accepted.clear();
    const auto anc = all_ancestors(o);
    for (Mask m = simple; m; m &= m - 1) {
      const Mask a = anc[std::countr_zero(m)];
      if ((a & spec.required) != spec.required || (a & spec.forbidden)) continue;
      if (feasible(a)) accepted.push_back(a);
    }
    if (accepted.empty()) return;  // not in the family
    ++members;
    if (value < best) {
      best = value;
      found.clear();
    }
    found.insert(accepted.begin(), accepted.end());
  }, eo);
  if (best == kInfinity)
    throw Error(ErrorCode::EmptyFamily, "no acyclic orientation in the family");
  FamilyResult out;
  out.minimum = best;
  out.orientations = members;
  for (Mask m : found) out.facets.push_back(from_mask(m));
  canonicalize(out.facets);
  return out;
}

std::pair<Vertex, Vertex> two_nonsimple(const Graph& g, int d) {
  if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "graph reconstruction needs d >= 3");
  const auto ns = nonsimple_vertices(g, d);
  if (ns.size() != 2)
    throw Error(ErrorCode::PreconditionViolated,
                "expected exactly two nonsimple vertices, found " + std::to_string(ns.size()));
  return {ns[0], ns[1]};
}

// 2-faces of a facet T of a d-polytope from the subgraph it induces.
std::vector<VertexSet> two_faces_of_facet(const Graph& g, const VertexSet& facet, int d) {
  if (d - 1 == 2) return {facet};
  const Graph h = g.induced(facet);
  std::vector<VertexSet> out;
  for (const auto& s : max_two_system(h, d - 1).sets) {
    VertexSet global;
    for (Vertex x : s) global.push_back(facet[x]);
    out.push_back(std::move(global));
  }
  return out;
}

}  // namespace

TwoSystem max_two_system(const Graph& g, int d) {
  if (d < 3) throw Error(ErrorCode::DimensionTooSmall, "2-systems need d >= 3");
  const int n = g.num_vertices();
  if (n > kDynamicProgramMaxVertices)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the bound of " +
                                         std::to_string(kDynamicProgramMaxVertices));
  const auto ns = nonsimple_vertices(g, d);
  if (ns.size() > 1)
    throw Error(ErrorCode::PreconditionViolated, "more than one nonsimple vertex");

  OrientationConstraints c;
  if (!ns.empty()) c.sources = bit(ns[0]);
  const auto certificate = minimize_over_orientations(
      g, c, [](Vertex, int k) { return static_cast<long long>(k) * (k - 1) / 2; });
  if (!certificate) throw Error(ErrorCode::EmptyFamily, "no orientation with the source constraint");

  // Items: 2-frames at simple roots, numbered per root by neighbour pair.
  std::vector<int> offset(n, -1);
  int items = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == d) {
      offset[v] = items;
      items += d * (d - 1) / 2;
    }
  auto item_of = [&](Vertex r, Vertex a, Vertex b) {
    const auto nb = g.neighbors(r);
    int i = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), a) - nb.begin());
    int j = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), b) - nb.begin());
    if (i > j) std::swap(i, j);
    return offset[r] + i * (2 * d - i - 1) / 2 + (j - i - 1);
  };

  const auto cycles = induced_cycles(g);
  std::vector<std::vector<int>> cycle_items;
  std::vector<int> cycle_index;
  for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
    const auto& cyc = cycles[ci];
    const Mask m = to_mask(cyc);
    std::vector<int> its;
    for (Vertex r : cyc) {
      if (offset[r] < 0) continue;
      VertexSet inside;
      for (Vertex w : g.neighbors(r))
        if ((m >> w) & 1u) inside.push_back(w);
      its.push_back(item_of(r, inside[0], inside[1]));
    }
    if (its.empty()) continue;
    cycle_items.push_back(std::move(its));
    cycle_index.push_back(ci);
  }

  CoverSearch search(cycle_items, items, *certificate);
  const auto cover = search.run();
  if (!cover) throw Error(ErrorCode::NoCoverFound, "no 2-system covers the simple 2-frames");
  if (static_cast<long long>(cover->size()) != *certificate)
    throw Error(ErrorCode::CertificateMismatch,
                "best 2-system has " + std::to_string(cover->size()) +
                    " sets, orientation minimum is " + std::to_string(*certificate));

  TwoSystem ts;
  ts.certificate = *certificate;
  for (int c : *cover) ts.sets.push_back(cycles[cycle_index[c]]);
  std::sort(ts.sets.begin(), ts.sets.end());
  for (int s = 0; s < static_cast<int>(ts.sets.size()); ++s) {
    const Mask m = to_mask(ts.sets[s]);
    for (Vertex r : ts.sets[s]) {
      if (offset[r] < 0) continue;
      VertexSet inside;
      for (Vertex w : g.neighbors(r))
        if ((m >> w) & 1u) inside.push_back(w);
      ts.coverage.push_back({Frame{r, inside}, s});
    }
  }
  std::sort(ts.coverage.begin(), ts.coverage.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.root, a.first.leaves) < std::tie(b.first.root, b.first.leaves);
  });
  return ts;
}

std::vector<VertexSet> reconstruct_one_nonsimple(const Graph& g, int d) {
  auto ts = max_two_system(g, d);
  const KSkeleton sk = two_skeleton(d, g, std::move(ts.sets));
  auto out = reconstruct(sk, d);
  if (out.status != ReconstructionOutcome::Status::Complete)
    throw Error(ErrorCode::NotASkeleton, "2-skeleton reconstruction was ambiguous");
  return out.facets;
}

FamilyResult find_facets_avoiding(const Graph& g, int d, Vertex u, Vertex v, FamilyMode mode,
                                  const GraphReconOptions& options) {
  SweepSpec spec;
  switch (mode) {
    case FamilyMode::UMinusV:
      spec.constraints.sources = bit(u);
      spec.constraints.sinks = bit(v);
      spec.required = bit(u);
      spec.forbidden = bit(v);
      break;
    case FamilyMode::VMinusU:
      spec.constraints.sources = bit(v);
      spec.constraints.sinks = bit(u);
      spec.required = bit(v);
      spec.forbidden = bit(u);
      break;
    case FamilyMode::UV:
      spec.required = bit(u) | bit(v);
      break;
  }
  return sweep(g, d, spec, options);
}

FamilyResult find_facets_empty(const Graph& g, int d, Vertex u, Vertex v,
                               const std::vector<VertexSet>& known_u_minus_v, long long expected,
                               const GraphReconOptions& options) {
  if (expected <= 0) return {};
  std::vector<Mask> known;
  for (const auto& f : known_u_minus_v) known.push_back(to_mask(f));
  SweepSpec spec;
  spec.constraints.sinks = bit(v);
  spec.forbidden = bit(u) | bit(v);
  spec.extra = [known, u](const Orientation& o) {
    long long t = 0;
    for (Mask f : known)
      if ((o.out[u] & f) == 0) ++t;
    return t;
  };
  return sweep(g, d, spec, options);
}

bool detect_uv_facets(const Graph& g, int d, const std::vector<VertexSet>& known) {
  std::vector<Mask> masks;
  for (const auto& f : known) masks.push_back(to_mask(f));
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) != d) continue;
    const Mask closed = to_mask(g.neighbors(x)) | bit(x);
    for (Vertex excluded : g.neighbors(x)) {
      const Mask frame = closed & ~bit(excluded);
      bool covered = false;
      for (Mask f : masks)
        if ((f & frame) == frame) {
          covered = true;
          break;
        }
      if (!covered) return true;
    }
  }
  return false;
}

TwoNonsimpleReport reconstruct_two_nonsimple(const Graph& g, int d,
                                             const GraphReconOptions& options) {
  const auto [u, v] = two_nonsimple(g, d);
  TwoNonsimpleReport r;
  r.u = u;
  r.v = v;
  auto a = find_facets_avoiding(g, d, u, v, FamilyMode::UMinusV, options);
  auto b = find_facets_avoiding(g, d, u, v, FamilyMode::VMinusU, options);
  r.families.u_minus_v = a.facets;
  r.families.v_minus_u = b.facets;
  r.min_u = a.minimum;
  r.min_v = b.minimum;

  // min_u = f - f^v = f^{u-v} + f^empty, and symmetrically for v.
  const long long from_u = r.min_u - static_cast<long long>(a.facets.size());
  const long long from_v = r.min_v - static_cast<long long>(b.facets.size());
  if (from_u != from_v || from_u < 0)
    throw Error(ErrorCode::InconsistentCounts,
                "facets avoiding u and v: " + std::to_string(from_u) + " vs " +
                    std::to_string(from_v));
  r.expected_empty = from_u;
  if (r.expected_empty > 0) {
    auto e = find_facets_empty(g, d, u, v, a.facets, r.expected_empty, options);
    r.min_empty = e.minimum;
    r.families.empty = e.facets;
    if (static_cast<long long>(e.facets.size()) != r.expected_empty)
      throw Error(ErrorCode::InconsistentCounts,
                  "found " + std::to_string(e.facets.size()) + " facets avoiding u and v, expected " +
                      std::to_string(r.expected_empty));
  }

  std::vector<VertexSet> known = r.families.u_minus_v;
  known.insert(known.end(), r.families.v_minus_u.begin(), r.families.v_minus_u.end());
  known.insert(known.end(), r.families.empty.begin(), r.families.empty.end());
  if (detect_uv_facets(g, d, known)) {
    auto c = find_facets_avoiding(g, d, u, v, FamilyMode::UV, options);
    r.families.uv = c.facets;
    r.min_uv = c.minimum;
    const long long total = static_cast<long long>(known.size() + c.facets.size());
    if (c.minimum != total)
      throw Error(ErrorCode::InconsistentCounts,
                  "facet total " + std::to_string(total) + " differs from the family minimum " +
                      std::to_string(c.minimum));
  }
  r.facets = known;
  r.facets.insert(r.facets.end(), r.families.uv.begin(), r.families.uv.end());
  canonicalize(r.facets);
  return r;
}

TruncationReport reconstruct_two_nonsimple_via_truncation(const Graph& g, int d,
                                                          const GraphReconOptions& options) {
  const auto [u, v] = two_nonsimple(g, d);
  TruncationReport r;
  r.u = u;
  r.v = v;
  r.adjacent = g.adjacent(u, v);

  // 2-faces with exactly one of u, v, read off the facets with exactly one.
  std::vector<VertexSet> faces;
  for (auto mode : {FamilyMode::UMinusV, FamilyMode::VMinusU})
    for (const auto& facet : find_facets_avoiding(g, d, u, v, mode, options).facets)
      for (auto& f : two_faces_of_facet(g, facet, d))
        if (contains(f, u) != contains(f, v)) faces.push_back(std::move(f));

  VertexSet cut_face{u};
  if (r.adjacent) {
    // 2-faces through uv: induced cycles through u and v that are initial for
    // some minimiser of the sum of 2^indegree with u first and v second.
    OrientationConstraints c;
    c.sources = bit(u);
    for (Vertex w : g.neighbors(v))
      if (w != u) c.arcs.emplace_back(v, w);
    std::vector<Mask> through;
    for (const auto& cyc : induced_cycles(g))
      if (contains(cyc, u) && contains(cyc, v)) through.push_back(to_mask(cyc));
    long long best = kInfinity;
    std::set<Mask> initial;
    EnumerationOptions eo;
    eo.constraints = c;
    eo.max_vertices = options.max_vertices;
    enumerate_acyclic_orientations(g, {}, [&](const Orientation& o) {
      const long long k = objectives(o, d).sink_pairs;
      if (k > best) return;
      if (k < best) {
        best = k;
        initial.clear();
      }
      for (Mask m : through)
        if (is_initial(o, m)) initial.insert(m);
    }, eo);
    if (best == kInfinity) throw Error(ErrorCode::EmptyFamily, "no orientation with u, v first");
    for (Mask m : initial) faces.push_back(from_mask(m));
    cut_face = u < v ? VertexSet{u, v} : VertexSet{v, u};
  }
  canonicalize(faces);
  r.two_faces = faces;

  auto map = truncation_map(g, cut_face);
  Graph truncated = truncated_graph(g, map, faces);
  if (!r.adjacent) {
    // At most one edge w_{u y1} w_{u y2} can be missing; its ends are the
    // only vertices left with degree d - 1.
    VertexSet short_of;
    for (int x = 0; x < truncated.num_vertices(); ++x)
      if (truncated.degree(x) < d) short_of.push_back(x);
    if (!short_of.empty()) {
      if (short_of.size() != 2 || truncated.degree(short_of[0]) != d - 1 ||
          truncated.degree(short_of[1]) != d - 1 || truncated.adjacent(short_of[0], short_of[1]))
        throw Error(ErrorCode::RepairAmbiguous,
                    std::to_string(short_of.size()) + " vertices below degree d after truncation");
      auto edges = truncated.edges();
      edges.emplace_back(short_of[0], short_of[1]);
      std::sort(edges.begin(), edges.end());
      truncated = Graph::from_edges(truncated.num_vertices(), edges);
      r.repaired_edge = true;
    }
  }
  r.truncated_vertices = truncated.num_vertices();
  r.facets = pullback_facets(reconstruct_one_nonsimple(truncated, d), map);
  return r;
}

}  // namespace skelrecon
