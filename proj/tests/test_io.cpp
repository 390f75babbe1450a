#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "skelrecon/constructions.hpp"
#include "skelrecon/error.hpp"
#include "skelrecon/io.hpp"

using namespace skelrecon;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("incidence writer is canonical") {
  PolytopeSpec s{2, 3, {{2, 1}, {0, 2}, {1, 0}}};
  CHECK(write_incidence(s) == "d 2\nvertices 3\nfacet 0 1\nfacet 0 2\nfacet 1 2\n");
}

TEST_CASE("incidence round trip") {
  for (const auto& s : {simplex(4), cube(3), q1(4).spec, q2(5).spec, fixture::nonadjacent_pair()}) {
    const auto text = write_incidence(s);
    CHECK(parse_incidence(text) == s);
    CHECK(write_incidence(parse_incidence(text)) == text);
  }
}

TEST_CASE("comments, blank lines and CRLF") {
  const auto s = parse_incidence("# triangle\r\nd 2\r\n\r\nvertices 3\r\n  # edges\nfacet 1 0\nfacet 1 2\nfacet 0 2");
  CHECK(s == PolytopeSpec{2, 3, {{0, 1}, {0, 2}, {1, 2}}});
}

TEST_CASE("malformed incidence input") {
  for (const char* bad : {"", "d 3\n", "d 3\nvertices 4\nfacet 0 4\n", "d 3\nvertices 4\nfacet 0 x\n",
                          "d 3\nd 3\nvertices 4\n", "d 3\nvertices 4\nface 0 1\n",
                          "facet 0 1\nd 2\nvertices 2\n", "d 2\nvertices 3\nfacet\n",
                          "d 2\nvertices 3\nfacet 1 1\n", "d -1\nvertices 3\n"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_incidence(bad); }) == ErrorCode::ParseError);
  }
}

TEST_CASE("skeleton round trip") {
  const auto sk = k_skeleton(build_face_lattice(cube(4)), 2);
  const auto text = write_skeleton(sk);
  const auto back = parse_skeleton(text);
  CHECK(back.d == 4);
  CHECK(back.k == 2);
  CHECK(back.faces_by_dim == sk.faces_by_dim);
  CHECK(write_skeleton(back) == text);

  const auto sk3 = k_skeleton(build_face_lattice(simplex(5)), 3);
  const auto back3 = parse_skeleton(write_skeleton(sk3));
  CHECK(back3.k == 3);
  CHECK(back3.faces_by_dim == sk3.faces_by_dim);
}

TEST_CASE("skeleton parse") {
  const auto sk = parse_skeleton("d 3\nvertices 4\nedge 0 1\nedge 1 2\nedge 2 0\nedge 3 0\n"
                                 "edge 3 1\nedge 3 2\nface2 2 1 0\nface2 0 1 3\nface2 0 2 3\n"
                                 "face2 1 2 3\n");
  CHECK(sk.graph.num_edges() == 6);
  CHECK(sk.faces(2).front() == VertexSet{0, 1, 2});
  CHECK(code_of([] { parse_skeleton("d 3\nvertices 2\nedge 0 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_skeleton("d 3\nvertices 2\nedge 0 1\nedge 1 0\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_skeleton("d 3\nvertices 2\nfacet 0 1\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("edge list") {
  const auto g = build_face_lattice(cube(3)).graph();
  const auto back = parse_edge_list(write_edge_list(g, 3));
  CHECK(back.d == 3);
  CHECK(back.graph.edges() == g.edges());
  const auto bare = parse_edge_list("edge 0 1\nedge 1 4\n");
  CHECK(bare.graph.num_vertices() == 5);
  CHECK_FALSE(bare.d.has_value());
  CHECK(code_of([] { parse_edge_list("vertices 2\nedge 0 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_file("/nonexistent/file"); }) == ErrorCode::ParseError);
}
