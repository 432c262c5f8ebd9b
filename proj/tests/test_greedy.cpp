#include <algorithm>

#include "doctest.h"
#include "gmis/error.hpp"
#include "gmis/forge.hpp"
#include "gmis/greedy.hpp"
#include "helpers.hpp"

using namespace gmis;

TEST_CASE("basic reduction tags") {
  Graph p3 = testing::path(3);
  GraphState st(p3);
  CHECK(classify_basic(st, 0).tag == "1.b");
  Graph k2 = testing::path(2);
  GraphState s2(k2);
  CHECK(classify_basic(s2, 0).tag == "1.a");
  Graph c4 = testing::cycle(4);
  GraphState s4(c4);
  auto b = classify_basic(s4, 0);
  CHECK(b.tag == "2.d");
  CHECK(b.ground == VertexSet{0, 1, 3});
}

TEST_CASE("greedy variants on small graphs") {
  CHECK(basic_greedy(testing::cycle(7)).size() == 3);
  CHECK(greedy_star(testing::cycle(7)).size() == 3);
  CHECK(greedy_star(testing::complete(3)).size() == 1);
  CHECK(greedy_star(testing::petersen()).size() == 4);
  CHECK(greedy_star(Graph::from_edges(0, {})).size() == 0);
  CHECK(greedy_star(Graph::from_edges(3, {})).size() == 3);
  CHECK(more_edges(testing::path(5)).size() == 3);
}

TEST_CASE("greedy star rejects degree above three") {
  try {
    greedy_star(testing::star(4));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBound);
  }
}

TEST_CASE("greedy outputs are maximal independent and replay as greedy executions") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = gen_random({RandomKind::Subcubic, 4 + static_cast<int>(seed % 30), 3, seed});
    for (auto* algo : {&basic_greedy, &more_edges}) {
      auto t = algo(g);
      CHECK(is_maximal_independent(g, t.solution));
      CHECK(check_greedy_trace(g, t) == "");
    }
    auto t = greedy_star(g);
    CHECK(is_maximal_independent(g, t.solution));
    CHECK(check_greedy_trace(g, t) == "");
  }
}

TEST_CASE("incremental greedy star matches the enumerating version") {
  for (uint64_t seed = 0; seed < 400; ++seed) {
    RandomKind kind = seed % 4 == 0 ? RandomKind::Cubic : RandomKind::Subcubic;
    int n = 4 + 2 * static_cast<int>(seed % 14);
    Graph g = gen_random({kind, n, 3, seed});
    auto fast = greedy_star(g, {true});
    auto ref = greedy_star_reference(g);
    CAPTURE(seed);
    REQUIRE(fast.reductions.size() == ref.reductions.size());
    for (size_t i = 0; i < fast.reductions.size(); ++i) {
      CHECK(fast.reductions[i].kind == ref.reductions[i].kind);
      CHECK(fast.reductions[i].roots == ref.reductions[i].roots);
    }
    CHECK(fast.solution == ref.solution);
    CHECK(fast.creation_time == ref.creation_time);
  }
}

TEST_CASE("random generator is deterministic and respects caps") {
  RandomSpec s{RandomKind::Subcubic, 20, 3, 7};
  CHECK(gen_random(s) == gen_random(s));
  Graph c = gen_random({RandomKind::Cubic, 10, 3, 3});
  for (int v = 0; v < c.n(); ++v) CHECK(c.degree(v) == 3);
  Graph tf = gen_random({RandomKind::TriangleFree, 16, 5, 11});
  CHECK(tf.max_degree() <= 5);
  for (auto [u, v] : tf.edges())
    for (int w : tf.neighbors(u)) CHECK_FALSE(tf.has_edge(v, w));
  CHECK(is_connected(gen_random({RandomKind::Subcubic, 15, 3, 5, true})));
}
