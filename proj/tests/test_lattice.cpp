#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/lattice.hpp"

using namespace skelrecon;

namespace {

std::vector<PolytopeSpec> corpus() {
  return {simplex(3),
          simplex(5),
          cube(3),
          cube(4),
          polygon_prism(5),
          pyramid(cube(3)),
          bipyramid(simplex(3)),
          pyramid(bipyramid(simplex(2))),
          q1(3).spec,
          q1(4).spec,
          q2(4).spec,
          q1(5).spec,
          fixture::square_two_fold(),
          fixture::nonadjacent_pair()};
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("simplex(3) has f-vector (4,6,4)") {
  auto lattice = build_face_lattice(simplex(3));
  CHECK(lattice.f_vector() == std::vector<long long>{4, 6, 4});
  CHECK(lattice.faces(-1) == std::vector<VertexSet>{{}});
  CHECK(lattice.faces(3) == std::vector<VertexSet>{{0, 1, 2, 3}});
}

TEST_CASE("q1(4) has 8 facets and q2(4) has 7") {
  CHECK(build_face_lattice(q1(4).spec).faces(3).size() == 8);
  CHECK(build_face_lattice(q2(4).spec).faces(3).size() == 7);
}

TEST_CASE("faces agree with the closed-subset oracle") {
  for (const auto& spec : corpus()) {
    CAPTURE(spec.facets.size());
    auto lattice = build_face_lattice(spec);
    auto faces = oracle::faces_of(spec);
    CHECK(lattice.f_vector() == faces.f_vector);
    for (int r = -1; r <= spec.d; ++r) CHECK(lattice.faces(r) == faces.by_rank[r]);
  }
}

TEST_CASE("covers span exactly one rank and respect containment") {
  auto lattice = build_face_lattice(q1(5).spec);
  for (int r = -1; r < lattice.dim(); ++r) {
    const auto& layer = lattice.faces(r);
    for (int i = 0; i < static_cast<int>(layer.size()); ++i)
      for (int j : lattice.covers_up(r, i)) CHECK(is_subset(layer[i], lattice.faces(r + 1)[j]));
  }
}

TEST_CASE("spec round-trips through the lattice") {
  for (const auto& spec : corpus()) {
    auto lattice = build_face_lattice(spec);
    CHECK(lattice.spec() == spec);
    auto sk = k_skeleton(lattice, spec.d - 1);
    CHECK(sk.faces(spec.d - 1) == spec.facets);
  }
}

TEST_CASE("k_skeleton") {
  auto lattice = build_face_lattice(cube(3));
  auto sk = k_skeleton(lattice, 1);
  CHECK(sk.graph.num_edges() == 12);
  CHECK(sk.faces_by_dim.size() == 2);
  CHECK(k_skeleton(lattice, 2).faces(2).size() == 6);
  CHECK_THROWS_AS(k_skeleton(lattice, 0), Error);
  try {
    k_skeleton(lattice, 3);
    FAIL("expected RankOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankOutOfRange);
  }
}

TEST_CASE("classify_vertices") {
  CHECK(classify_vertices(cube(4)).nonsimple.empty());
  CHECK(classify_vertices(q1(4).spec).nonsimple == VertexSet{2, 4, 6});
  auto pc = classify_vertices(pyramid(cube(3)));
  CHECK(pc.nonsimple == VertexSet{8});
  CHECK(pc.degree[8] == 8);
  auto cycle = build_face_lattice(polygon(5)).graph();
  try {
    classify_vertices(cycle, 3);
    FAIL("expected DegreeBelowDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBelowDimension);
  }
}

TEST_CASE("validate") {
  CHECK(validate(build_face_lattice(simplex(4))).passed());
  CHECK(validate(build_face_lattice(q2(6).spec)).passed());
  for (const auto& spec : corpus()) CHECK(validate(build_face_lattice(spec)).passed());

  auto broken = cube(3);
  broken.facets.erase(broken.facets.begin());
  auto report = validate(build_face_lattice(broken, {.require_polytope_spec = false}));
  REQUIRE(report.find("euler") != nullptr);
  CHECK_FALSE(report.find("euler")->passed);
  CHECK_FALSE(report.passed());
}

TEST_CASE("check_spec rejects malformed incidences") {
  auto nested = simplex(3);
  nested.facets.push_back({0, 1});
  CHECK_THROWS_AS(check_spec(nested), Error);
  auto duplicate = simplex(3);
  duplicate.facets.push_back(duplicate.facets.front());
  CHECK_THROWS_AS(check_spec(duplicate), Error);
  PolytopeSpec out_of_range{2, 3, {{0, 1}, {1, 2}, {2, 3}}};
  CHECK_THROWS_AS(check_spec(out_of_range), Error);
}

TEST_CASE("non-graded incidences are rejected") {
  // The top element covers faces of ranks 1 and 2.
  PolytopeSpec mixed{3, 6, {{0, 1, 2, 3}, {2, 3, 5}, {3, 4}}};
  try {
    build_face_lattice(mixed, {.require_polytope_spec = false});
    FAIL("expected NotGraded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGraded);
  }
}

TEST_CASE("face counts are linear in f0 with few nonsimple vertices") {
  for (const auto& spec : corpus()) {
    auto lattice = build_face_lattice(spec);
    const int nonsimple = static_cast<int>(classify_vertices(spec).nonsimple.size());
    auto f = lattice.f_vector();
    for (int k = 0; k < spec.d; ++k)
      CHECK(f[k] <= f[0] * binom(spec.d, k) + binom(nonsimple, k + 1));
  }
}

TEST_CASE("the two face oracles agree") {
  for (const auto& s : {simplex(4), cube(3), pyramid(cube(3)), q1(5).spec, fixture::nonadjacent_pair()})
    CHECK(oracle::faces_of(s).by_rank == oracle::faces_by_intersection(s).by_rank);
  const auto big = cube(5);
  const auto f = oracle::faces_by_intersection(big);
  CHECK(f.f_vector == std::vector<long long>{32, 80, 80, 40, 10});
  CHECK(build_face_lattice(big).f_vector() == f.f_vector);
}
