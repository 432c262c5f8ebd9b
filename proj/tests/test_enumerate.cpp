#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "enumerate.hpp"

using namespace gmis;
using namespace gmis::testing;

namespace {

// Isomorphism classes of connected subcubic graphs on n vertices by trying
// every edge subset and every relabeling.
int64_t brute_force_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<Code> classes;
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    SmallGraph g{n, std::vector<uint32_t>(n, 0)};
    for (size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) {
        g.adj[pairs[e].first] |= 1u << pairs[e].second;
        g.adj[pairs[e].second] |= 1u << pairs[e].first;
      }
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && __builtin_popcount(g.adj[v]) <= 3;
    if (!ok || !is_connected(to_graph(g))) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Code best = ~Code(0);
    do best = std::min(best, code_under(g, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<int64_t>(classes.size());
}

}  // namespace

TEST_CASE("canonical code is invariant under relabeling") {
  SmallGraph g{6, std::vector<uint32_t>(6, 0)};
  auto add = [&](int u, int v) {
    g.adj[u] |= 1u << v;
    g.adj[v] |= 1u << u;
  };
  add(0, 1), add(1, 2), add(2, 0), add(2, 3), add(3, 4), add(4, 5), add(5, 3);
  Code c = canonical_code(g);
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  while (std::next_permutation(perm.begin(), perm.end())) {
    SmallGraph h{6, std::vector<uint32_t>(6, 0)};
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v)
        if (g.adj[u] >> v & 1) h.adj[perm[u]] |= 1u << perm[v];
    CHECK(canonical_code(h) == c);
  }
}

TEST_CASE("enumeration counts match brute force") {
  auto counts = for_each_connected_subcubic(7, [](const Graph& g) {
    CHECK(is_connected(g));
    CHECK(g.max_degree() <= 3);
  });
  for (int n = 1; n <= 6; ++n) CHECK(counts[n] == brute_force_count(n));
  // Known counts of connected graphs with maximum degree at most 3.
  CHECK(counts == std::vector<int64_t>{0, 1, 1, 2, 6, 10, 29, 64});
}
