#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/lattice.hpp"

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

}  // namespace

TEST_CASE("q1(4) facet list") {
  auto c = q1(4);
  std::vector<VertexSet> expected{{0, 2, 4, 6},       {0, 1, 4, 6},       {0, 1, 2, 3, 6},
                                  {0, 1, 2, 3, 4, 5}, {1, 3, 4, 5, 6, 7}, {2, 3, 5, 6, 7},
                                  {2, 4, 5, 7},       {2, 4, 6, 7}};
  canonicalize(expected);
  CHECK(c.spec.facets == expected);
  CHECK(c.spec.n == 8);
  CHECK(c.X == VertexSet{2, 4, 6});
}

TEST_CASE("q1(3) is the six-vertex base case") {
  auto c = q1(3);
  std::vector<VertexSet> expected{{0, 2, 4}, {0, 1, 4}, {0, 1, 2, 3}, {1, 3, 4, 5}, {2, 3, 5}, {2, 4, 5}};
  canonicalize(expected);
  CHECK(c.spec.facets == expected);
  CHECK(validate(build_face_lattice(c.spec)).passed());
  // Checked rather than assumed: the even vertices 2 and 4 are the nonsimple ones.
  CHECK(classify_vertices(c.spec).nonsimple == VertexSet{2, 4});
}

TEST_CASE("q2(4) facet list") {
  auto c = q2(4);
  std::vector<VertexSet> expected{{0, 2, 4, 6, 7}, {0, 1, 4, 6},       {0, 1, 2, 3, 6},
                                  {0, 1, 2, 3, 4, 5}, {1, 3, 4, 5, 6, 7}, {2, 3, 5, 6, 7},
                                  {2, 4, 5, 7}};
  canonicalize(expected);
  CHECK(c.spec.facets == expected);
  CHECK(classify_vertices(c.spec).nonsimple == VertexSet{2, 4, 6});
}

TEST_CASE("Q families across dimensions") {
  for (int d = 3; d <= 7; ++d) {
    CAPTURE(d);
    auto a = q1(d);
    CHECK(a.spec.n == 2 * d);
    CHECK(a.spec.facets.size() == static_cast<std::size_t>(2 * d));
    CHECK(classify_vertices(a.spec).nonsimple == a.X);
    CHECK(validate(build_face_lattice(a.spec)).passed());
    if (d < 4) continue;
    auto b = q2(d);
    CHECK(b.spec.n == 2 * d);
    CHECK(b.spec.facets.size() == static_cast<std::size_t>(2 * d - 1));
    CHECK(classify_vertices(b.spec).nonsimple == b.X);
    CHECK(validate(build_face_lattice(b.spec)).passed());
    std::vector<VertexSet> diff;
    std::set_symmetric_difference(a.spec.facets.begin(), a.spec.facets.end(), b.spec.facets.begin(),
                                  b.spec.facets.end(), std::back_inserter(diff));
    CHECK(diff.size() == 3);
  }
  CHECK(q1(5).X == VertexSet{2, 4, 6, 8});
  CHECK(code_of([] { q1(2); }) == ErrorCode::DimensionTooSmall);
  CHECK(code_of([] { q2(3); }) == ErrorCode::DimensionTooSmall);
}

TEST_CASE("base families") {
  CHECK(pyramid(simplex(3)) == simplex(4));
  for (int m = 3; m <= 8; ++m) {
    auto p = polygon_prism(m);
    CHECK(p.n == 2 * m);
    CHECK(p.facets.size() == static_cast<std::size_t>(m + 2));
    CHECK(classify_vertices(p).nonsimple.empty());
    CHECK(validate(build_face_lattice(p)).passed());
  }
  auto bp = bipyramid(simplex(3));
  auto pb = pyramid(bipyramid(simplex(2)));
  CHECK(bp.d == 4);
  CHECK(pb.d == 4);
  CHECK(classify_vertices(bp).nonsimple.size() == 4);
  CHECK(classify_vertices(pb).nonsimple.size() == 4);
  CHECK(validate(build_face_lattice(bp)).passed());
  CHECK(validate(build_face_lattice(pb)).passed());
  auto two_fold = multifold_pyramid(polygon(4), 2);
  CHECK(two_fold.d == 4);
  CHECK(classify_vertices(two_fold).nonsimple == VertexSet{4, 5});
  CHECK(code_of([] { pyramid(PolytopeSpec{2, 3, {{0, 1}}}); }) == ErrorCode::InvalidBase);
  CHECK(code_of([] { bipyramid(PolytopeSpec{3, 4, {{0, 1, 2}}}); }) == ErrorCode::InvalidBase);
}

TEST_CASE("wedge fixture with two nonadjacent nonsimple vertices") {
  auto base = fixture::wedge_base();
  CHECK(validate(build_face_lattice(base)).passed());
  auto w = fixture::nonadjacent_pair();
  CHECK(w.d == 4);
  CHECK(w.n == 12);
  CHECK(w.facets.size() == 8);
  auto lattice = build_face_lattice(w);
  CHECK(validate(lattice).passed());
  CHECK(classify_vertices(w).nonsimple == VertexSet{2, 6});
  CHECK_FALSE(lattice.graph().adjacent(2, 6));
  CHECK(wedge(simplex(2), 0).facets.size() == 4);  // wedge over a triangle edge: a tetrahedron
}

TEST_CASE("prism 2-skeleton generator matches the lattice") {
  for (int m = 3; m <= 7; ++m) {
    auto direct = polygon_prism_2skeleton(m);
    auto via = k_skeleton(build_face_lattice(polygon_prism(m)), 2);
    CHECK(direct.graph == via.graph);
    auto a = direct.faces(2), b = via.faces(2);
    canonicalize(a);
    CHECK(a == b);
  }
}

TEST_CASE("truncating a cube vertex") {
  auto lattice = build_face_lattice(cube(3));
  auto t = truncate(lattice, {0});
  // 8 - 1 + 3 new vertices.
  CHECK(t.spec.n == 10);
  CHECK(t.spec.facets.size() == 7);
  auto cut = build_face_lattice(t.spec);
  CHECK(validate(cut).passed());
  CHECK(t.graph == cut.graph());
  CHECK(pullback_facets(t.spec.facets, t.map) == cube(3).facets);
}

TEST_CASE("truncating a simplex vertex") {
  for (int d = 3; d <= 6; ++d) {
    auto t = truncate(build_face_lattice(simplex(d)), {0});
    CHECK(t.spec.n == 2 * d);
    CHECK(t.spec.facets.size() == static_cast<std::size_t>(d + 2));
    CHECK(validate(build_face_lattice(t.spec)).passed());
  }
}

TEST_CASE("truncation round-trips and degree rule") {
  std::vector<PolytopeSpec> specs{cube(3), q1(4).spec, fixture::square_two_fold(),
                                  pyramid(cube(3)), fixture::nonadjacent_pair()};
  for (const auto& spec : specs) {
    auto lattice = build_face_lattice(spec);
    auto g = lattice.graph();
    for (int r = 0; r < spec.d; ++r)
      for (const auto& face : lattice.faces(r)) {
        CAPTURE(to_string(face));
        auto t = truncate(lattice, face);
        auto cut = build_face_lattice(t.spec);
        CHECK(validate(cut).passed());
        CHECK(t.graph == cut.graph());
        CHECK(pullback_facets(t.spec.facets, t.map) == spec.facets);
        for (const auto& c : t.map.cut)
          if (g.degree(c.y) == spec.d) CHECK(t.graph.degree(c.w) == spec.d);
        for (int y = 0; y < spec.n; ++y)
          if (!contains(face, y) && g.degree(y) == spec.d)
            CHECK(t.graph.degree(t.map.old_to_new[y]) == spec.d);
      }
  }
}

TEST_CASE("truncation at a simple vertex of q1(4) and at the apex edge") {
  auto q = q1(4).spec;
  auto t = truncate(build_face_lattice(q), {7});
  CHECK(pullback_facets(t.spec.facets, t.map) == q.facets);
  auto p = fixture::square_two_fold();
  auto tp = truncate(build_face_lattice(p), {4, 5});
  CHECK(classify_vertices(tp.spec).nonsimple.empty());
  CHECK(pullback_facets(tp.spec.facets, tp.map) == p.facets);
}

TEST_CASE("truncation errors") {
  auto lattice = build_face_lattice(cube(3));
  CHECK(code_of([&] { truncate(lattice, {0, 3}); }) == ErrorCode::NotAProperFace);
  CHECK(code_of([&] { truncate(lattice, {0, 1, 2, 3, 4, 5, 6, 7}); }) == ErrorCode::NotAProperFace);
  auto t = truncate(lattice, {0});
  auto facets = t.spec.facets;
  facets.erase(std::find(facets.begin(), facets.end(), t.map.cut_facet()));
  CHECK(code_of([&] { pullback_facets(facets, t.map); }) == ErrorCode::CutFacetMissing);
}
