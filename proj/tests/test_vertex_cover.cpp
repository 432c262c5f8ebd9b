#include <algorithm>
#include <functional>

#include "doctest.h"
#include "gmis/error.hpp"
#include "gmis/forge.hpp"
#include "gmis/oracles.hpp"
#include "gmis/vertex_cover.hpp"
#include "helpers.hpp"

using namespace gmis;

namespace {

void check_partition(const Graph& g, const NTPartition& p) {
  std::vector<int> part(g.n(), -1);
  for (int v : p.out) part[v] = 0;
  for (int v : p.in) part[v] = 1;
  for (int v : p.kernel) part[v] = 2;
  CHECK(p.out.size() + p.in.size() + p.kernel.size() == static_cast<size_t>(g.n()));
  CHECK(std::count(part.begin(), part.end(), -1) == 0);
  for (auto [u, v] : g.edges()) {
    CHECK_FALSE((part[u] == 0 && part[v] == 0));
    CHECK_FALSE((part[u] == 0 && part[v] == 2));
    CHECK_FALSE((part[u] == 2 && part[v] == 0));
  }
}

}  // namespace

TEST_CASE("nt partition on named graphs") {
  auto star = nt_partition(testing::star(3));
  CHECK(star.out == VertexSet{1, 2, 3});
  CHECK(star.in == VertexSet{0});
  CHECK(star.kernel.empty());

  auto k3 = nt_partition(testing::complete(3));
  CHECK(k3.kernel == VertexSet{0, 1, 2});

  auto none = nt_partition(Graph::from_edges(4, {}));
  CHECK(none.out == VertexSet{0, 1, 2, 3});
  CHECK(none.in.empty());
  CHECK(none.kernel.empty());
}

TEST_CASE("hopcroft karp matches exhaustive maximum") {
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    int l = 1 + static_cast<int>(rng.below(7)), r = 1 + static_cast<int>(rng.below(7));
    std::vector<std::vector<int>> adj(l);
    for (int u = 0; u < l; ++u)
      for (int v = 0; v < r; ++v)
        if (rng.below(3) == 0) adj[u].push_back(v);
    auto m = hopcroft_karp(adj, r);
    int size = 0;
    std::vector<int> used(r, 0);
    for (int u = 0; u < l; ++u) {
      if (m[u] < 0) continue;
      ++size;
      CHECK(std::find(adj[u].begin(), adj[u].end(), m[u]) != adj[u].end());
      CHECK(++used[m[u]] == 1);
    }
    // Best matching by trying every assignment order of the left side.
    int best = 0;
    std::vector<int> order(l);
    for (int u = 0; u < l; ++u) order[u] = u;
    std::function<void(int, std::vector<char>&, int)> rec = [&](int u, std::vector<char>& taken, int got) {
      if (u == l) {
        best = std::max(best, got);
        return;
      }
      rec(u + 1, taken, got);
      for (int v : adj[u])
        if (!taken[v]) {
          taken[v] = 1;
          rec(u + 1, taken, got + 1);
          taken[v] = 0;
        }
    };
    std::vector<char> taken(r, 0);
    rec(0, taken, 0);
    CHECK(size == best);
  }
}

TEST_CASE("nt partition properties on random graphs") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    RandomKind kind = seed % 2 ? RandomKind::MaxDegree : RandomKind::Subcubic;
    Graph g = gen_random({kind, 1 + static_cast<int>(seed % 18), 4, seed});
    auto p = nt_partition(g);
    CAPTURE(seed);
    check_partition(g, p);
    CHECK(p == nt_partition(g));
    int a3 = exact_mis(induced_subgraph(g, p.kernel).graph).alpha;
    CHECK(2 * a3 <= static_cast<int>(p.kernel.size()));
    CHECK(exact_mis(g).alpha == static_cast<int>(p.out.size()) + a3);
  }
}

TEST_CASE("complementary greedy and the six-fifths cover") {
  CHECK(complementary_greedy(testing::cycle(6)).size() == 3);
  CHECK(complementary_greedy(testing::path(2)).size() == 1);
  CHECK(mvc_six_fifths(testing::star(3)) == VertexSet{0});
  CHECK(mvc_six_fifths(testing::cycle(6)).size() == 3);
  CHECK_THROWS_AS(complementary_greedy(testing::star(4)), Error);
  CHECK_THROWS_AS(mvc_six_fifths(testing::star(4)), Error);
  for (uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = gen_random({RandomKind::Subcubic, 1 + static_cast<int>(seed % 16), 3, seed});
    int opt = exact_mvc(g).size;
    auto c = complementary_greedy(g);
    auto d = mvc_six_fifths(g);
    CAPTURE(seed);
    CHECK(is_vertex_cover(g, c));
    CHECK(is_vertex_cover(g, d));
    CHECK(4 * static_cast<int>(c.size()) <= 5 * opt);
    CHECK(5 * static_cast<int>(d.size()) <= 6 * opt);
    // Kernel share of the cover against the kernel's own optimum.
    auto p = nt_partition(g);
    int a3 = exact_mis(induced_subgraph(g, p.kernel).graph).alpha;
    int c3 = static_cast<int>(d.size() - p.in.size());
    CHECK(5 * c3 <= 6 * (static_cast<int>(p.kernel.size()) - a3));
  }
}
