#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/lattice.hpp"
#include "skelrecon/recon_graph.hpp"

using namespace skelrecon;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::PreconditionViolated;
}

Graph graph_of(const PolytopeSpec& s) { return build_face_lattice(s).graph(); }

std::vector<VertexSet> two_faces(const PolytopeSpec& s) {
  auto faces = oracle::faces_of(s).by_rank.at(2);
  canonicalize(faces);
  return faces;
}

// Polytopes with exactly two nonsimple vertices, small enough for the sweeps.
std::vector<std::pair<const char*, PolytopeSpec>> two_nonsimple_cases() {
  return {{"square two-fold pyramid", fixture::square_two_fold()},
          {"triangular prism two-fold pyramid", fixture::triangle_prism_two_fold()},
          {"prism over square pyramid", prism(pyramid(polygon(4)))},
          {"wedge", fixture::nonadjacent_pair()}};
}

}  // namespace

TEST_CASE("maximum 2-system of small polytopes") {
  CHECK(max_two_system(graph_of(simplex(4)), 4).sets.size() == 10);
  CHECK(max_two_system(graph_of(cube(3)), 3).sets.size() == 6);
  const auto p = pyramid(cube(3));
  const auto ts = max_two_system(graph_of(p), 4);
  CHECK(ts.sets.size() == 18);
  CHECK(ts.certificate == 18);
  CHECK(ts.sets == two_faces(p));
}

TEST_CASE("2-system matches the 2-faces and its certificate") {
  for (const auto& s : {simplex(3), simplex(5), cube(4), polygon_prism(5), prism(simplex(3)),
                        pyramid(polygon_prism(4)), bipyramid(polygon(4))}) {
    const Graph g = graph_of(s);
    if (classify_vertices(g, s.d).nonsimple.size() > 1) continue;
    const auto ts = max_two_system(g, s.d);
    CHECK(ts.sets == two_faces(s));
    CHECK(static_cast<long long>(ts.sets.size()) == ts.certificate);
    // every simple 2-frame is covered once
    std::size_t frames = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (g.degree(v) == s.d) frames += s.d * (s.d - 1) / 2;
    CHECK(ts.coverage.size() == frames);
  }
}

TEST_CASE("graphs with at most one nonsimple vertex reconstruct") {
  std::mt19937 rng(7);
  for (const auto& s : {simplex(4), cube(3), pyramid(cube(3)), polygon_prism(6),
                        pyramid(polygon_prism(5))}) {
    CHECK(reconstruct_one_nonsimple(graph_of(s), s.d) == s.facets);
    const auto p = oracle::random_permutation(s.n, rng);
    const auto r = oracle::relabel(s, p);
    CHECK(reconstruct_one_nonsimple(graph_of(r), r.d) == r.facets);
  }
}

TEST_CASE("facet families of the square two-fold pyramid") {
  const auto s = fixture::square_two_fold();
  const Graph g = graph_of(s);
  const auto a = find_facets_avoiding(g, 4, 4, 5, FamilyMode::UMinusV);
  CHECK(a.facets == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
  CHECK(a.minimum == 1);
  const auto b = find_facets_avoiding(g, 4, 4, 5, FamilyMode::VMinusU);
  CHECK(b.facets == std::vector<VertexSet>{{0, 1, 2, 3, 5}});
  const auto c = find_facets_avoiding(g, 4, 4, 5, FamilyMode::UV);
  CHECK(c.facets ==
        std::vector<VertexSet>{{0, 1, 4, 5}, {0, 3, 4, 5}, {1, 2, 4, 5}, {2, 3, 4, 5}});
  CHECK(c.minimum == 6);
  const auto r = reconstruct_two_nonsimple(g, 4);
  CHECK(r.expected_empty == 0);
  CHECK(r.families.empty.empty());
  CHECK(r.facets == s.facets);
}

TEST_CASE("facet avoiding both nonsimple vertices is found") {
  const auto s = prism(pyramid(polygon(4)));
  const auto r = reconstruct_two_nonsimple(graph_of(s), s.d);
  CHECK(r.expected_empty == 1);
  REQUIRE(r.families.empty.size() == 1);
  CHECK(r.families.empty[0].size() == 8);  // the cube
  REQUIRE(r.min_empty.has_value());
  REQUIRE(r.min_uv.has_value());
  CHECK(*r.min_uv == static_cast<long long>(s.facets.size()));
  CHECK(r.facets == s.facets);
}

TEST_CASE("minimum over the unconstrained family equals the facet count") {
  for (const auto& [name, s] : two_nonsimple_cases()) {
    CAPTURE(name);
    const auto r = reconstruct_two_nonsimple(graph_of(s), s.d);
    if (r.min_uv) CHECK(*r.min_uv == static_cast<long long>(s.facets.size()));
    std::size_t with_u = 0, with_v = 0;
    for (const auto& f : s.facets) {
      with_u += contains(f, r.u);
      with_v += contains(f, r.v);
    }
    CHECK(r.min_u == static_cast<long long>(s.facets.size() - with_v));
    CHECK(r.min_v == static_cast<long long>(s.facets.size() - with_u));
  }
}

TEST_CASE("both routes agree with the facets") {
  std::mt19937 rng(11);
  for (const auto& [name, s] : two_nonsimple_cases()) {
    CAPTURE(name);
    const auto p = oracle::relabel(s, oracle::random_permutation(s.n, rng));
    const Graph g = graph_of(p);
    const auto claims = reconstruct_two_nonsimple(g, p.d);
    const auto trunc = reconstruct_two_nonsimple_via_truncation(g, p.d);
    CHECK(claims.facets == p.facets);
    CHECK(trunc.facets == p.facets);
  }
}

TEST_CASE("nonadjacent pair needs the repair edge") {
  const auto s = fixture::nonadjacent_pair();
  const auto r = reconstruct_two_nonsimple_via_truncation(graph_of(s), s.d);
  CHECK_FALSE(r.adjacent);
  CHECK(r.repaired_edge);
  CHECK(r.facets == s.facets);
}

TEST_CASE("truncation route on the square two-fold pyramid") {
  const auto s = fixture::square_two_fold();
  const auto r = reconstruct_two_nonsimple_via_truncation(graph_of(s), 4);
  CHECK(r.adjacent);
  // 2-faces through u or v: triangles u v x (4), u x y and v x y (8)
  CHECK(r.two_faces.size() == 12);
  CHECK(r.truncated_vertices == 6 - 2 + 4 + 4);
  CHECK(r.facets == s.facets);
}

TEST_CASE("uv detection") {
  const auto s = fixture::square_two_fold();
  const Graph g = graph_of(s);
  CHECK(detect_uv_facets(g, 4, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}}));
  CHECK_FALSE(detect_uv_facets(g, 4, s.facets));
}

TEST_CASE("preconditions and guards") {
  const auto q = q1(4);
  CHECK(code_of([&] { reconstruct_two_nonsimple(graph_of(q.spec), 4); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { max_two_system(graph_of(fixture::square_two_fold()), 4); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { reconstruct_two_nonsimple(graph_of(cube(3)), 3); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { reconstruct_two_nonsimple(graph_of(polygon(5)), 2); }) ==
        ErrorCode::DimensionTooSmall);

  const auto big = prism(pyramid(polygon(6)));  // 14 vertices
  CHECK(code_of([&] { reconstruct_two_nonsimple(graph_of(big), 4); }) == ErrorCode::TooLarge);
  GraphReconOptions small;
  small.max_vertices = 5;
  CHECK(code_of([&] { reconstruct_two_nonsimple(graph_of(fixture::square_two_fold()), 4, small); }) ==
        ErrorCode::TooLarge);
  CHECK(code_of([&] { max_two_system(graph_of(cube(5)), 5); }) == ErrorCode::TooLarge);
}
