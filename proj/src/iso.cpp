#include "skelrecon/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "skelrecon/error.hpp"

namespace skelrecon {
namespace {

// Graph plus face layers (edges are implied by the graph).
struct FaceSystem {
  const Graph* graph = nullptr;
  std::vector<const std::vector<VertexSet>*> layers;
};

using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

// Colour refinement run on both systems with a shared palette, so equal
// colours mean equal refined signatures.
std::pair<std::vector<int>, std::vector<int>> refine(const FaceSystem& a, const FaceSystem& b) {
  auto initial = [](const FaceSystem& s) {
    const int n = s.graph->num_vertices();
    std::vector<std::vector<long long>> sig(n);
    for (int v = 0; v < n; ++v) sig[v].push_back(s.graph->degree(v));
    for (const auto* layer : s.layers) {
      // membership count and the multiset of sizes of faces through v
      std::vector<std::vector<long long>> sizes(n);
      for (const auto& f : *layer)
        for (Vertex v : f) sizes[v].push_back(static_cast<long long>(f.size()));
      for (int v = 0; v < n; ++v) {
        std::sort(sizes[v].begin(), sizes[v].end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), sizes[v].begin(), sizes[v].end());
      }
    }
    return sig;
  };
  auto sa = initial(a), sb = initial(b);
  std::vector<int> ca(sa.size()), cb(sb.size());
  auto assign = [](std::vector<std::vector<long long>>& sa, std::vector<std::vector<long long>>& sb,
                   std::vector<int>& ca, std::vector<int>& cb) {
    std::map<std::vector<long long>, int> palette;
    for (const auto& s : sa) palette.emplace(s, 0);
    for (const auto& s : sb) palette.emplace(s, 0);
    int next = 0;
    for (auto& [s, c] : palette) c = next++;
    for (std::size_t v = 0; v < sa.size(); ++v) ca[v] = palette[sa[v]];
    for (std::size_t v = 0; v < sb.size(); ++v) cb[v] = palette[sb[v]];
    return next;
  };
  int classes = assign(sa, sb, ca, cb);
  for (;;) {
    auto step = [](const FaceSystem& s, const std::vector<int>& c) {
      const int n = s.graph->num_vertices();
      std::vector<std::vector<long long>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].push_back(c[v]);
        std::vector<long long> around;
        for (Vertex w : s.graph->neighbors(v)) around.push_back(c[w]);
        std::sort(around.begin(), around.end());
        sig[v].insert(sig[v].end(), around.begin(), around.end());
      }
      for (const auto* layer : s.layers) {
        std::vector<std::vector<long long>> faces(n);
        for (const auto& f : *layer) {
          // a face is summarised by the sorted colours of its vertices
          std::vector<long long> fc;
          for (Vertex v : f) fc.push_back(c[v]);
          std::sort(fc.begin(), fc.end());
          long long h = 1469598103934665603ll;
          for (long long x : fc) h = (h ^ (x + 0x9e37)) * 1099511628211ll;
          for (Vertex v : f) faces[v].push_back(h);
        }
        for (int v = 0; v < n; ++v) {
          std::sort(faces[v].begin(), faces[v].end());
          sig[v].push_back(-1);
          sig[v].insert(sig[v].end(), faces[v].begin(), faces[v].end());
        }
      }
      return sig;
    };
    auto na = step(a, ca), nb = step(b, cb);
    const int refined = assign(na, nb, ca, cb);
    if (refined == classes) break;
    classes = refined;
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const FaceSystem& a, const FaceSystem& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    n_ = a.graph->num_vertices();
    for (const auto* layer : b.layers) b_faces_.emplace_back(layer->begin(), layer->end());
    choose_order();
    map_.assign(n_, -1);
    used_.assign(n_, false);
  }

  bool run() { return extend(0); }
  const std::vector<Vertex>& witness() const { return map_; }

 private:
  // Most constrained first: small colour classes, then vertices adjacent to
  // those already placed.
  void choose_order() {
    std::vector<int> class_size(*std::max_element(ca_.begin(), ca_.end()) + 1, 0);
    for (int c : ca_) ++class_size[c];
    std::vector<bool> placed(n_, false);
    std::vector<int> links(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        auto key = [&](int x) { return std::make_tuple(-links[x], class_size[ca_[x]], x); };
        if (best < 0 || key(v) < key(best)) best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : a_.graph->neighbors(best)) ++links[w];
    }
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[order_[i]] = i;
    // Each face is checked once its last vertex (in search order) is placed.
    closing_.assign(n_, {});
    for (std::size_t r = 0; r < a_.layers.size(); ++r)
      for (const auto& f : *a_.layers[r]) {
        int last = 0;
        for (Vertex v : f) last = std::max(last, position[v]);
        closing_[last].push_back({r, &f});
      }
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    for (Vertex image = 0; image < n_; ++image) {
      if (used_[image] || cb_[image] != ca_[v]) continue;
      if (!consistent(v, image)) continue;
      map_[v] = image;
      used_[image] = true;
      if (faces_close(depth) && extend(depth + 1)) return true;
      used_[image] = false;
      map_[v] = -1;
    }
    return false;
  }

  bool consistent(Vertex v, Vertex image) const {
    for (int i = 0; i < n_; ++i) {
      if (map_[i] < 0) continue;
      if (a_.graph->adjacent(v, i) != b_.graph->adjacent(image, map_[i])) return false;
    }
    return true;
  }

  bool faces_close(int depth) const {
    for (const auto& [r, f] : closing_[depth]) {
      VertexSet image;
      for (Vertex v : *f) image.push_back(map_[v]);
      std::sort(image.begin(), image.end());
      if (!b_faces_[r].count(image)) return false;
    }
    return true;
  }

  const FaceSystem& a_;
  const FaceSystem& b_;
  std::vector<int> ca_, cb_;
  int n_ = 0;
  std::vector<FaceSet> b_faces_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::pair<std::size_t, const VertexSet*>>> closing_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

bool verify_witness(const FaceSystem& a, const FaceSystem& b, const std::vector<Vertex>& map) {
  const int n = a.graph->num_vertices();
  std::vector<bool> hit(n, false);
  for (Vertex v : map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (auto [u, v] : a.graph->edges())
    if (!b.graph->adjacent(map[u], map[v])) return false;
  if (a.graph->num_edges() != b.graph->num_edges()) return false;
  for (std::size_t r = 0; r < a.layers.size(); ++r) {
    FaceSet target(b.layers[r]->begin(), b.layers[r]->end());
    if (target.size() != a.layers[r]->size()) return false;
    for (const auto& f : *a.layers[r]) {
      VertexSet image;
      for (Vertex v : f) image.push_back(map[v]);
      std::sort(image.begin(), image.end());
      if (!target.count(image)) return false;
    }
  }
  return true;
}

IsoResult decide(const FaceSystem& a, const FaceSystem& b, int first_rank) {
  IsoResult result;
  const int n = a.graph->num_vertices();
  if (n != b.graph->num_vertices()) {
    result.obstruction = Obstruction::VertexCount;
    result.detail = std::to_string(n) + " != " + std::to_string(b.graph->num_vertices());
    return result;
  }
  if (a.graph->num_edges() != b.graph->num_edges()) {
    result.obstruction = Obstruction::FaceCounts;
    result.detail = "rank 1: " + std::to_string(a.graph->num_edges()) +
                    " != " + std::to_string(b.graph->num_edges());
    return result;
  }
  // Top rank first, so lattices report differing facet counts.
  for (std::size_t r = a.layers.size(); r-- > 0;)
    if (a.layers[r]->size() != b.layers[r]->size()) {
      result.obstruction = Obstruction::FaceCounts;
      result.detail = "rank " + std::to_string(first_rank + r) + ": " +
                      std::to_string(a.layers[r]->size()) +
                      " != " + std::to_string(b.layers[r]->size());
      return result;
    }
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.graph->degree(v);
    db[v] = b.graph->degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) {
    result.obstruction = Obstruction::DegreeMultiset;
    result.detail = "degree sequences differ";
    return result;
  }
  auto [ca, cb] = refine(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    result.obstruction = Obstruction::ColorRefinement;
    result.detail = "stable colour classes differ";
    return result;
  }
  if (n == 0) {
    result.isomorphic = true;
    return result;
  }
  Matcher matcher(a, b, std::move(ca), std::move(cb));
  if (!matcher.run()) {
    result.obstruction = Obstruction::ExhaustedSearch;
    result.detail = "no bijection preserves all faces";
    return result;
  }
  result.witness = matcher.witness();
  if (!verify_witness(a, b, result.witness))
    throw Error(ErrorCode::PreconditionViolated, "isomorphism witness failed verification");
  result.isomorphic = true;
  return result;
}

}  // namespace

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::VertexCount: return "vertex count";
    case Obstruction::FaceCounts: return "face counts";
    case Obstruction::DegreeMultiset: return "degree multiset";
    case Obstruction::ColorRefinement: return "colour refinement";
    case Obstruction::ExhaustedSearch: return "exhausted search";
  }
  return "unknown";
}

IsoResult isomorphic(const KSkeleton& a, const KSkeleton& b) {
  if (a.k != b.k || a.d != b.d)
    throw Error(ErrorCode::KindMismatch, "skeleta of different rank or dimension");
  FaceSystem sa{&a.graph, {}}, sb{&b.graph, {}};
  for (int r = 2; r <= a.k; ++r) {
    sa.layers.push_back(&a.faces(r));
    sb.layers.push_back(&b.faces(r));
  }
  return decide(sa, sb, 2);
}

IsoResult isomorphic(const FaceLattice& a, const FaceLattice& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::KindMismatch, "lattices of different dimension");
  const Graph ga = a.graph(), gb = b.graph();
  FaceSystem sa{&ga, {}}, sb{&gb, {}};
  for (int r = 2; r < a.dim(); ++r) {
    sa.layers.push_back(&a.faces(r));
    sb.layers.push_back(&b.faces(r));
  }
  return decide(sa, sb, 2);
}

IsoResult isomorphic(const Graph& a, const Graph& b) {
  return decide(FaceSystem{&a, {}}, FaceSystem{&b, {}}, 2);
}

}  // namespace skelrecon
