#include "doctest.h"
#include "gmis/error.hpp"
#include "gmis/graph.hpp"
#include "gmis/state.hpp"
#include "helpers.hpp"

using namespace gmis;

TEST_CASE("parse and write round trip") {
  std::vector<std::string> warnings;
  Graph g = parse_graph("c demo\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", &warnings);
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(warnings.empty());
  CHECK(parse_graph(write_graph(g)) == g);
}

TEST_CASE("parse reports duplicates and rejects self loops") {
  std::vector<std::string> warnings;
  Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n", &warnings);
  CHECK(g.m() == 2);
  CHECK_FALSE(warnings.empty());
  try {
    parse_graph("p edge 3 1\ne 2 2\n");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), Error);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), Error);
}

TEST_CASE("components and induced subgraphs") {
  Graph g = disjoint_union(testing::cycle(3), testing::path(2));
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4});
  auto sub = induced_subgraph(g, {1, 2, 3});
  CHECK(sub.graph.n() == 3);
  CHECK(sub.graph.m() == 1);
  CHECK(sub.to_old == VertexSet{1, 2, 3});
}

TEST_CASE("independence and cover predicates") {
  Graph c5 = testing::cycle(5);
  CHECK(is_independent(c5, {0, 2}));
  CHECK_FALSE(is_independent(c5, {0, 1}));
  CHECK(is_maximal_independent(c5, {0, 2}));
  CHECK_FALSE(is_maximal_independent(c5, {0}));
  CHECK(is_vertex_cover(c5, complement(5, {0, 2})));
}

TEST_CASE("state removal tracks degrees and buckets") {
  Graph g = testing::star(3);
  GraphState st(g);
  CHECK(st.min_degree() == 1);
  int drops = 0;
  std::vector<int> gone{0};
  st.remove(gone, [&](int, int old_deg, int new_deg) {
    CHECK(old_deg == 1);
    CHECK(new_deg == 0);
    ++drops;
  });
  CHECK(drops == 3);
  CHECK(st.min_degree() == 0);
  CHECK(st.bucket(0).size() == 3);
  CHECK_THROWS_AS(st.remove(gone), Error);
}
