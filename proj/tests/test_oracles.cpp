#include <algorithm>

#include "doctest.h"
#include "gmis/error.hpp"
#include "gmis/forge.hpp"
#include "gmis/oracles.hpp"
#include "helpers.hpp"

using namespace gmis;

namespace {

int brute_alpha(const Graph& g) {
  int best = 0;
  for (uint32_t m = 0; m < (1u << g.n()); ++m) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if ((m >> u & 1) && (m >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(m));
  }
  return best;
}

// Plain recursion over minimum-degree choices, no memo.
void brute_greedy(const Graph& g, std::vector<char>& live, int size, int& hi, int& lo) {
  int dmin = -1;
  std::vector<int> deg(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (!live[v]) continue;
    for (int w : g.neighbors(v)) deg[v] += live[w];
    if (dmin < 0 || deg[v] < dmin) dmin = deg[v];
  }
  if (dmin < 0) {
    hi = std::max(hi, size);
    lo = std::min(lo, size);
    return;
  }
  for (int v = 0; v < g.n(); ++v) {
    if (!live[v] || deg[v] != dmin) continue;
    std::vector<char> next = live;
    next[v] = 0;
    for (int w : g.neighbors(v)) next[w] = 0;
    brute_greedy(g, next, size + 1, hi, lo);
  }
}

}  // namespace

TEST_CASE("exact_mis on named graphs") {
  CHECK(exact_mis(testing::cycle(7)).alpha == 3);
  CHECK(exact_mis(testing::petersen()).alpha == 4);
  CHECK(exact_mis(testing::complete(6)).alpha == 1);
  CHECK(exact_mis(Graph::from_edges(0, {})).alpha == 0);
  CHECK(exact_mvc(testing::cycle(6)).size == 3);
  CHECK(exact_mvc(testing::path(2)).size == 1);
  CHECK(exact_mvc(Graph::from_edges(0, {})).size == 0);
}

TEST_CASE("exact_mis agrees with subset enumeration") {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    RandomKind kind = seed % 3 == 0 ? RandomKind::MaxDegree : RandomKind::Subcubic;
    Graph g = gen_random({kind, 1 + static_cast<int>(seed % 16), 5, seed});
    auto r = exact_mis(g);
    CAPTURE(seed);
    CHECK(r.alpha == brute_alpha(g));
    CHECK(is_independent(g, r.witness));
    CHECK(is_vertex_cover(g, exact_mvc(g).witness));
  }
}

TEST_CASE("oracle budget errors") {
  Graph big = gen_random({RandomKind::Subcubic, 40, 3, 1});
  try {
    exact_mis(big);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Budget);
  }
  CHECK_THROWS_AS(exact_mis(big, {40, 3, 0}), Error);
  CHECK(exact_mis(big, {40, 50'000'000, 0}).alpha > 0);
}

TEST_CASE("max_greedy agrees with unmemoized recursion") {
  for (uint64_t seed = 0; seed < 120; ++seed) {
    RandomKind kind = seed % 2 ? RandomKind::MaxDegree : RandomKind::Subcubic;
    Graph g = gen_random({kind, 1 + static_cast<int>(seed % 11), 4, seed});
    std::vector<char> live(g.n(), 1);
    int hi = 0, lo = g.n() + 1;
    brute_greedy(g, live, 0, hi, lo);
    auto r = max_greedy(g);
    CAPTURE(seed);
    CHECK(r.alpha_plus == hi);
    CHECK(r.alpha_minus == lo);
    CHECK(check_greedy_trace(g, r.witness) == "");
    CHECK(r.alpha_plus <= exact_mis(g).alpha);
    if (is_connected(g) && g.max_degree() <= 3) CHECK(r.alpha_plus >= greedy_star(g).size());
  }
}

TEST_CASE("max_greedy on cycles and the rooted hard graph") {
  auto c7 = max_greedy(testing::cycle(7));
  CHECK(c7.alpha_plus == 3);
  CHECK(c7.alpha_minus == 3);
}

TEST_CASE("maximum independent sets are all found") {
  auto sets = maximum_independent_sets(testing::cycle(6));
  CHECK(sets.size() == 2);
  CHECK(maximum_independent_sets(testing::cycle(5)).size() == 5);
  CHECK(maximum_independent_sets(testing::complete(4)).size() == 4);
}
