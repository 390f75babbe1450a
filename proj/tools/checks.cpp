#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/iso.hpp"
#include "skelrecon/recon_2skel.hpp"
#include "skelrecon/recon_graph.hpp"

namespace skelrecon::checks {
namespace {

// Collects failures; the line passes when nothing was recorded.
class Tally {
 public:
  explicit Tally(std::string id) : id_(std::move(id)) {}

  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) failures_.push_back(what);
  }

  void note(const std::string& s) { notes_.push_back(s); }

  CheckLine finish() const {
    CheckLine line{id_, failures_.empty(), ""};
    std::ostringstream out;
    out << checked_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    for (const auto& f : failures_) out << "; FAILED " << f;
    line.detail = out.str();
    return line;
  }

 private:
  std::string id_;
  int checked_ = 0;
  std::vector<std::string> failures_, notes_;
};

std::map<int, std::vector<VertexSet>> faces_by_rank(const SuiteOptions& o, const PolytopeSpec& s) {
  if (o.faces) return o.faces(s);
  const auto lat = build_face_lattice(s);
  std::map<int, std::vector<VertexSet>> out;
  for (int r = 0; r < s.d; ++r) out[r] = lat.faces(r);
  return out;
}

KSkeleton skeleton(const SuiteOptions& o, const PolytopeSpec& s, int k) {
  auto faces = faces_by_rank(o, s);
  std::vector<Edge> edges;
  for (const auto& e : faces[1]) edges.emplace_back(e[0], e[1]);
  KSkeleton sk;
  sk.d = s.d;
  sk.k = k;
  sk.graph = Graph::from_edges(s.n, edges);
  for (int r = 0; r <= k; ++r) {
    auto layer = faces[r];
    canonicalize(layer);
    sk.faces_by_dim.push_back(std::move(layer));
  }
  return sk;
}

Graph graph_of(const SuiteOptions& o, const PolytopeSpec& s) { return skeleton(o, s, 1).graph; }

std::string describe(const std::exception& e) { return e.what(); }

// Independent check that `w` maps the edge set of a onto that of b.
bool witness_ok(const Graph& a, const Graph& b, const std::vector<Vertex>& w) {
  if (static_cast<int>(w.size()) != a.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  std::vector<Vertex> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) return false;
  for (auto [u, v] : a.edges())
    if (!b.adjacent(w[u], w[v])) return false;
  return true;
}

std::string name_of(const char* family, int x) { return std::string(family) + "(" + std::to_string(x) + ")"; }

struct TruncationCase {
  std::string name;
  PolytopeSpec spec;
  VertexSet face;
};

// Twenty (polytope, face) pairs: for each base a vertex, an edge, a 2-face and
// the last facet (for 3-polytopes the first and last 2-face).
std::vector<TruncationCase> truncation_cases() {
  const std::vector<std::pair<std::string, PolytopeSpec>> bases = {
      {"cube(3)", cube(3)},
      {"simplex(4)", simplex(4)},
      {"cube(4)", cube(4)},
      {"pyramid(cube(3))", pyramid(cube(3))},
      {"polygon_prism(5)", polygon_prism(5)}};
  std::vector<TruncationCase> out;
  for (const auto& [name, spec] : bases) {
    const auto lat = build_face_lattice(spec);
    std::vector<std::pair<std::string, VertexSet>> faces = {
        {"vertex", lat.faces(0).front()},
        {"edge", lat.faces(1).front()},
        {"2-face", lat.faces(2).front()},
        {"facet", lat.faces(spec.d - 1).back()}};
    for (auto& [kind, f] : faces) out.push_back({name + " at " + kind, spec, f});
  }
  return out;
}

}  // namespace

std::vector<BenchRow> bench_prisms(const std::vector<int>& sizes, int repeats) {
  std::vector<KSkeleton> inputs;
  for (int m : sizes) inputs.push_back(polygon_prism_2skeleton(m));
  // Rounds sweep all sizes in turn, so slow drift in machine load hits every
  // size alike; round 0 is a warm-up and is not timed.
  std::vector<std::vector<double>> times(sizes.size());
  for (int round = 0; round <= repeats; ++round) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto out = reconstruct(inputs[i], 3);
      const auto t1 = std::chrono::steady_clock::now();
      if (out.facets.size() != static_cast<std::size_t>(sizes[i]) + 2)
        throw Error(ErrorCode::NotASkeleton, "prism reconstruction returned the wrong facet count");
      if (round > 0) times[i].push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
  }
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::sort(times[i].begin(), times[i].end());
    rows.push_back({sizes[i], 2 * sizes[i], times[i][times[i].size() / 2]});
  }
  return rows;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  const double n = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.m)), y = std::log(r.median_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckLine ac1_counterexamples(const SuiteOptions& o) {
  Tally t("AC1");
  for (int d = std::max(4, o.dmin); d <= std::min(7, o.dmax); ++d) {
    const auto a = q1(d).spec, b = q2(d).spec;
    const std::string tag = "d=" + std::to_string(d) + ": ";
    t.expect(a.n == 2 * d && b.n == 2 * d, tag + "vertex counts");
    t.expect(static_cast<int>(a.facets.size()) == 2 * d, tag + "q1 facet count");
    t.expect(static_cast<int>(b.facets.size()) == 2 * d - 1, tag + "q2 facet count");
    t.expect(static_cast<int>(classify_vertices(a).nonsimple.size()) == d - 1 &&
                 static_cast<int>(classify_vertices(b).nonsimple.size()) == d - 1,
             tag + "nonsimple counts");
    const auto low = isomorphic(skeleton(o, a, d - 3), skeleton(o, b, d - 3));
    t.expect(low.isomorphic, tag + "(d-3)-skeletons not isomorphic");
    if (low.isomorphic)
      t.expect(witness_ok(graph_of(o, a), graph_of(o, b), low.witness), tag + "witness");
    t.expect(!isomorphic(skeleton(o, a, d - 2), skeleton(o, b, d - 2)).isomorphic,
             tag + "(d-2)-skeletons isomorphic");
    t.expect(!isomorphic(build_face_lattice(a), build_face_lattice(b)).isomorphic,
             tag + "lattices isomorphic");
  }
  return t.finish();
}

CheckLine ac2_two_skeleton(const SuiteOptions& o) {
  Tally t("AC2");
  std::vector<std::pair<std::string, PolytopeSpec>> cases;
  for (int d = std::max(4, o.dmin); d <= std::min(7, o.dmax); ++d)
    cases.push_back({name_of("simplex", d), simplex(d)});
  for (int d = std::max(4, o.dmin); d <= std::min(6, o.dmax); ++d)
    cases.push_back({name_of("cube", d), cube(d)});
  cases.push_back({"pyramid(cube(3))", pyramid(cube(3))});
  cases.push_back({"pyramid(polygon_prism(5))", pyramid(polygon_prism(5))});
  // t apexes over a simple base of dimension >= 2 give t <= d-2 nonsimple vertices
  cases.push_back({"2-fold pyramid over polygon(5)", multifold_pyramid(polygon(5), 2)});
  cases.push_back({"2-fold pyramid over cube(3)", multifold_pyramid(cube(3), 2)});
  cases.push_back({"3-fold pyramid over polygon_prism(4)", multifold_pyramid(polygon_prism(4), 3)});
  cases.push_back({"2-fold pyramid over polygon_prism(3)", multifold_pyramid(polygon_prism(3), 2)});
  const auto trunc = truncation_cases();
  for (int i = 0; i < 10; ++i) {
    const auto& c = trunc[i * 2];
    cases.push_back({"truncated " + c.name, truncate(build_face_lattice(c.spec), c.face).spec});
  }
  int truncated = 0;
  for (const auto& [name, s] : cases) {
    try {
      const auto out = reconstruct(skeleton(o, s, 2), s.d);
      t.expect(out.status == ReconstructionOutcome::Status::Complete && out.facets == s.facets,
               name);
      truncated += name.rfind("truncated", 0) == 0;
    } catch (const std::exception& e) {
      t.expect(false, name + ": " + describe(e));
    }
  }
  t.note(std::to_string(cases.size()) + " polytopes, " + std::to_string(truncated) +
         " truncation-derived");
  return t.finish();
}

CheckLine ac3_parity(const SuiteOptions& o) {
  Tally t("AC3");
  const auto a = q1(5).spec, b = q2(5).spec;
  const auto ska = skeleton(o, a, 2), skb = skeleton(o, b, 2);
  t.expect(ska.faces_by_dim == skb.faces_by_dim, "q1(5) and q2(5) 2-skeletons differ");
  try {
    const auto out = reconstruct(ska, 5);
    t.expect(out.status == ReconstructionOutcome::Status::Ambiguous && out.ambiguity.has_value(),
             "not reported ambiguous");
    if (out.ambiguity) {
      const auto& amb = *out.ambiguity;
      t.expect(amb.split.size() == 10 && amb.merged.size() == 9, "completion sizes");
      t.note("completions of sizes " + std::to_string(amb.split.size()) + " and " +
             std::to_string(amb.merged.size()));
    }
    const auto even = reconstruct(ska, 5, Parity::Even);
    const auto odd = reconstruct(ska, 5, Parity::Odd);
    t.expect(even.facets == a.facets, "even parity does not give q1(5)");
    t.expect(odd.facets == b.facets, "odd parity does not give q2(5)");
  } catch (const std::exception& e) {
    t.expect(false, describe(e));
  }
  return t.finish();
}

CheckLine ac4_linear_time(const SuiteOptions& o) {
  Tally t("AC4");
  if (!o.timing) {
    t.note("skipped");
    return t.finish();
  }
  const auto rows = bench_prisms({1024, 2048, 4096, 8192, 16384});
  std::ostringstream ratios;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double r = rows[i].median_ms / rows[i - 1].median_ms;
    ratios << (i > 1 ? "," : "") << std::fixed;
    ratios.precision(2);
    ratios << r;
    t.expect(r >= 1.3 && r <= 2.7, "ratio " + std::to_string(r) + " at m=" + std::to_string(rows[i].m));
  }
  std::ostringstream slope;
  slope.precision(3);
  slope << loglog_slope(rows);
  t.note("ratios " + ratios.str() + ", slope " + slope.str());
  return t.finish();
}

CheckLine ac5_one_nonsimple(const SuiteOptions& o) {
  Tally t("AC5");
  std::vector<std::pair<std::string, PolytopeSpec>> cases = {{"pyramid(cube(3))", pyramid(cube(3))}};
  for (int m = 4; m <= 6; ++m)
    cases.push_back({"pyramid(polygon_prism(" + std::to_string(m) + "))", pyramid(polygon_prism(m))});
  for (const auto& [name, s] : cases) {
    try {
      const Graph g = graph_of(o, s);
      t.expect(reconstruct_one_nonsimple(g, s.d) == s.facets, name + " facets");
      const auto ts = max_two_system(g, s.d);
      t.expect(static_cast<long long>(ts.sets.size()) == ts.certificate, name + " certificate");
      t.expect(ts.sets == faces_by_rank(o, s)[2], name + " 2-system is not the 2-faces");
    } catch (const std::exception& e) {
      t.expect(false, name + ": " + describe(e));
    }
  }
  return t.finish();
}

CheckLine ac6_two_nonsimple(const SuiteOptions& o) {
  Tally t("AC6");
  const std::vector<std::pair<std::string, PolytopeSpec>> cases = {
      {"2-fold pyramid over square", multifold_pyramid(polygon(4), 2)},
      {"2-fold pyramid over triangle prism", multifold_pyramid(polygon_prism(3), 2)}};
  for (const auto& [name, s] : cases) {
    try {
      const Graph g = graph_of(o, s);
      const auto claims = reconstruct_two_nonsimple(g, s.d);
      const auto trunc = reconstruct_two_nonsimple_via_truncation(g, s.d);
      t.expect(claims.facets == s.facets, name + " claims route");
      t.expect(trunc.facets == s.facets, name + " truncation route");
      t.expect(claims.facets == trunc.facets, name + " routes disagree");
      const long long f = static_cast<long long>(s.facets.size());
      long long with_u = 0, with_v = 0;
      for (const auto& facet : s.facets) {
        with_u += contains(facet, claims.u);
        with_v += contains(facet, claims.v);
      }
      t.expect(claims.min_u == f - with_v, name + " minimum with u first");
      t.expect(claims.min_v == f - with_u, name + " minimum with v first");
      t.expect(claims.min_uv && *claims.min_uv == f, name + " unconstrained minimum");
    } catch (const std::exception& e) {
      t.expect(false, name + ": " + describe(e));
    }
  }
  return t.finish();
}

CheckLine ac7_negative_control(const SuiteOptions& o) {
  Tally t("AC7");
  const auto a = bipyramid(simplex(3));
  const auto b = pyramid(bipyramid(simplex(2)));
  t.expect(a.d == 4 && b.d == 4, "dimension");
  const Graph ga = graph_of(o, a), gb = graph_of(o, b);
  const auto g = isomorphic(ga, gb);
  t.expect(g.isomorphic && witness_ok(ga, gb, g.witness), "graphs");
  t.expect(!isomorphic(build_face_lattice(a), build_face_lattice(b)).isomorphic, "lattices");
  t.expect(classify_vertices(ga, 4).nonsimple.size() == 4, "bipyramid nonsimple count");
  t.expect(classify_vertices(gb, 4).nonsimple.size() == 4, "pyramid nonsimple count");
  return t.finish();
}

CheckLine ac8_truncation(const SuiteOptions& o) {
  Tally t("AC8");
  for (const auto& c : truncation_cases()) {
    try {
      const auto tr = truncate(build_face_lattice(c.spec), c.face);
      t.expect(validate(build_face_lattice(tr.spec)).passed(), c.name + " validate");
      t.expect(pullback_facets(tr.spec.facets, tr.map) == c.spec.facets, c.name + " round trip");
      if (o.faces) {
        // the truncated graph must agree with an independent face enumeration
        const auto edges = faces_by_rank(o, tr.spec)[1];
        std::vector<VertexSet> mine;
        for (auto [u, v] : tr.graph.edges()) mine.push_back({u, v});
        t.expect(mine == edges, c.name + " graph");
      }
    } catch (const std::exception& e) {
      t.expect(false, c.name + ": " + describe(e));
    }
  }
  return t.finish();
}

std::vector<CheckLine> run_all(const SuiteOptions& o) {
  return {ac1_counterexamples(o), ac2_two_skeleton(o), ac3_parity(o),     ac4_linear_time(o),
          ac5_one_nonsimple(o),   ac6_two_nonsimple(o), ac7_negative_control(o), ac8_truncation(o)};
}

}  // namespace skelrecon::checks
