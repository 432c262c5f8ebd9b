#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gmis/error.hpp"
#include "gmis/forge.hpp"
#include "gmis/greedy.hpp"
#include "gmis/oracles.hpp"
#include "helpers.hpp"

using namespace gmis;

namespace {

const OracleBudget kBig{400, 200'000'000, 0};

// Tops of every copy, parents before children.
void hy_tops(int i, int offset, std::vector<int>& out) {
  out.push_back(offset);
  if (i == 0) return;
  int child = gen_hy(i - 1, HyBase::H0).n();
  for (int c = 0; c < 4; ++c) hy_tops(i - 1, offset + 3 + c * child, out);
}

Graph remaining_after(const Graph& g, const std::vector<int>& roots) {
  std::vector<char> gone(g.n(), 0);
  for (int r : roots) {
    gone[r] = 1;
    for (int w : g.neighbors(r)) gone[w] = 1;
  }
  VertexSet keep;
  for (int v = 0; v < g.n(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

int count_literals(const CnfFormula& f, int lit) {
  int c = 0;
  for (const auto& cl : f.clauses) c += static_cast<int>(std::count(cl.begin(), cl.end(), lit));
  return c;
}

}  // namespace

TEST_CASE("hy family on the tight base") {
  for (int i = 0; i <= 2; ++i) {
    Graph g = gen_hy(i, HyBase::H0Prime);
    HyCounts c = hy_counts(i, HyBase::H0Prime);
    int s = greedy_star(g).size();
    CHECK(s == c.greedy);
    CHECK(5 * c.greedy == 4 * c.alpha + 1);
    CHECK(g.max_degree() == 3);
    if (i <= 1) CHECK(exact_mis(g, kBig).alpha == c.alpha);
  }
  // Every greedy execution on the base has the same size.
  auto mg = max_greedy(hy_base(HyBase::H0Prime));
  CHECK(mg.alpha_plus == 5);
  CHECK(mg.alpha_minus == 5);
}

TEST_CASE("hy family: taking the top leaves four copies") {
  for (HyBase base : {HyBase::H0, HyBase::H0Prime}) {
    Graph h0 = gen_hy(0, base), h1 = gen_hy(1, base);
    Graph rest = remaining_after(h1, {0});
    auto comps = connected_components(rest);
    REQUIRE(comps.size() == 4);
    for (const auto& c : comps) CHECK(induced_subgraph(rest, c).graph == h0);
  }
}

TEST_CASE("hy family on the 7-cycle base") {
  for (int i = 0; i <= 2; ++i) {
    Graph g = gen_hy(i, HyBase::H0);
    std::vector<int> tops;
    hy_tops(i, 0, tops);
    // Tops taken recursively leave only 7-cycles.
    std::vector<char> gone(g.n(), 0);
    for (int t : tops) {
      gone[t] = 1;
      for (int w : g.neighbors(t)) gone[w] = 1;
    }
    VertexSet keep;
    for (int v = 0; v < g.n(); ++v)
      if (!gone[v]) keep.push_back(v);
    Subgraph rest = induced_subgraph(g, keep);
    auto comps = connected_components(rest.graph);
    for (const auto& c : comps) CHECK(induced_subgraph(rest.graph, c).graph == testing::cycle(7));
    // And the whole sequence is a greedy execution.
    std::vector<int> roots = tops;
    for (const auto& red : basic_greedy(rest.graph).reductions)
      for (int r : red.roots) roots.push_back(rest.to_old[r]);
    HyCounts hc = hy_counts(i, HyBase::H0);
    CHECK(run_scripted(g, roots).size() == hc.greedy);
    CHECK(static_cast<int64_t>(tops.size() + 3 * comps.size()) == hc.greedy);
    if (i <= 1) CHECK(exact_mis(g, kBig).alpha == hc.alpha);
  }
  HyCounts far = hy_counts(12, HyBase::H0);
  CHECK(std::abs(static_cast<double>(far.alpha) / far.greedy - 17.0 / 13.0) < 1e-6);
}

TEST_CASE("delta chains") {
  struct Case {
    int delta, groups;
  };
  for (Case c : {Case{5, 2}, Case{5, 3}, Case{5, 4}, Case{8, 2}, Case{8, 3}, Case{6, 1}, Case{6, 2},
                 Case{7, 1}, Case{7, 2}, Case{9, 1}}) {
    CAPTURE(c.delta);
    CAPTURE(c.groups);
    Graph g = gen_delta_chain(c.delta, c.groups);
    ChainCounts k = delta_chain_counts(c.delta, c.groups);
    CHECK(g.max_degree() == c.delta);
    auto mg = max_greedy(g, kBig);
    CHECK(mg.alpha_plus == k.cliques);
    CHECK(mg.alpha_minus == k.cliques);
    CHECK(exact_mis(g, kBig).alpha == k.independent_total);
  }
  CHECK(gen_delta_chain(8, 2).n() == 15);
  CHECK(delta_chain_max_groups(7) == 7);
  CHECK_THROWS_AS(gen_delta_chain(4, 2), Error);
  CHECK_THROWS_AS(gen_delta_chain(7, 8), Error);
  // Full-length chain for delta = 7: greedy count 3(l(l-1)+1)+1, optimum (3l-1)(l(l-1)+1).
  ChainCounts full = delta_chain_counts(7, 7);
  CHECK(full.cliques == 22);
  CHECK(full.independent_total == 56);
  CHECK(gen_delta_chain(7, 7).max_degree() == 7);
}

TEST_CASE("general hard graph") {
  Graph b = gen_hard_general(4);
  CHECK(b.n() == 9);
  auto prof = degree_profile(b);
  CHECK(*prof.min_degree == 4);
  CHECK(prof.histogram[4] == 1);
  CHECK(b.degree(0) == 4);
  auto mg = max_greedy(b);
  CHECK(mg.alpha_plus == 2);
  CHECK(mg.alpha_minus == 2);
  CHECK(exact_mis(b).alpha == 4);
  VertexSet rest;
  for (int v = 1; v < b.n(); ++v) rest.push_back(v);
  auto without_root = max_greedy(induced_subgraph(b, rest).graph);
  CHECK(without_root.alpha_minus == 4);
}

TEST_CASE("bipartite hard graph") {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 3}, std::pair{3, 2}}) {
    CAPTURE(n);
    CAPTURE(k);
    Graph b = gen_hard_bipartite(n, k);
    CHECK(is_bipartite(b));
    CHECK(exact_mis(b).alpha == n * k);
    auto mg = max_greedy(b);
    CHECK(mg.alpha_plus == n + k);
    CHECK(mg.alpha_minus == n + k);
    // x_1..x_n then V' is an execution.
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) roots.push_back(n * k + k + i);
    for (int j = 0; j < k; ++j) roots.push_back(n * k + j);
    CHECK(run_scripted(b, roots).size() == n + k);
  }
  CHECK_FALSE(is_bipartite(testing::cycle(5)));
  CHECK(is_bipartite(testing::cycle(6)));
}

TEST_CASE("planar cubic gadget") {
  Graph h = planar_gadget();
  REQUIRE(h.n() == 22);
  CHECK(h.degree(0) == 2);
  CHECK(h.degree(1) == 2);
  for (int v = 2; v < 22; ++v) CHECK(h.degree(v) == 3);
  // Exhaustive over all vertex subsets of one gadget.
  int best = 0, best_without_ends = 0;
  std::vector<uint32_t> nb(22, 0);
  for (auto [u, v] : h.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  for (uint32_t m = 0; m < (1u << 22); ++m) {
    bool ok = true;
    for (uint32_t x = m; x && ok; x &= x - 1)
      if (nb[__builtin_ctz(x)] & m) ok = false;
    if (!ok) continue;
    int c = __builtin_popcount(m);
    best = std::max(best, c);
    if (!(m & 3u)) best_without_ends = std::max(best_without_ends, c);
  }
  CHECK(best == 9);
  CHECK(best_without_ends == 8);

  Graph k4 = testing::complete(4);
  Graph g = gadget_planar_cubic(k4);
  CHECK(g.n() == 4 + 22 * 6);
  CHECK(g.max_degree() == 3);
  CHECK(*degree_profile(g).min_degree == 3);
  CHECK(exact_mis(g, kBig).alpha == 1 + 9 * 6);
  CHECK_THROWS_AS(gadget_planar_cubic(testing::cycle(4)), Error);
}

TEST_CASE("normalize_sat") {
  CnfFormula once{3, {{1, 2, 3}}};
  CnfFormula n = normalize_sat(once);
  CHECK(is_normalized(n));
  for (int v = 1; v <= n.vars; ++v) {
    CHECK(count_literals(n, v) == 2);
    CHECK(count_literals(n, -v) == 1);
  }
  CHECK(brute_force_sat(n));

  CnfFormula ready{2, {{1, 2}, {-1, 2}, {1, -2}}};
  REQUIRE(is_normalized(ready));
  CnfFormula same = normalize_sat(ready);
  CHECK(same.vars == 2);
  CHECK(same.clauses.size() == 3);

  // Equisatisfiable on random small formulas.
  SplitMix64 rng(7);
  int sat = 0;
  for (int t = 0; t < 150; ++t) {
    CnfFormula f;
    f.vars = 1 + static_cast<int>(rng.below(4));
    int m = 1 + static_cast<int>(rng.below(6));
    for (int c = 0; c < m; ++c) {
      std::vector<int> cl;
      int len = 1 + static_cast<int>(rng.below(3));
      for (int j = 0; j < len; ++j) {
        int v = 1 + static_cast<int>(rng.below(f.vars));
        cl.push_back(rng.below(2) ? v : -v);
      }
      f.clauses.push_back(cl);
    }
    CnfFormula g = normalize_sat(f);
    CHECK(is_normalized(g));
    if (g.vars > 24) continue;
    CHECK(brute_force_sat(f) == brute_force_sat(g));
    sat += brute_force_sat(f);
  }
  CHECK(sat > 0);
  CHECK(sat < 150);
  CHECK_THROWS_AS(normalize_sat(CnfFormula{1, {{}}}), Error);
}

TEST_CASE("sat anchor") {
  Graph hard = gen_hard_general(4);
  CnfFormula sat_f{2, {{1, 2}, {-1, 2}, {1, -2}}};
  CnfFormula unsat_f{4, {{-4, 3}, {-3, -1}, {-2, 1}, {1, 2}, {2, 4}, {3, 4}}};
  REQUIRE(brute_force_sat(sat_f));
  REQUIRE_FALSE(brute_force_sat(unsat_f));
  for (const auto& f : {sat_f, unsat_f}) {
    AnchorGraph a = gen_sat_anchor(f, hard);
    // Literal vertices are 1..2*vars.
    for (int v = 1; v <= 2 * f.vars; ++v) CHECK(a.graph.degree(v) == 3);
    CHECK(a.graph.has_edge(a.r, a.r_prime));
    CHECK(a.r == a.hard_offset);
    auto res = greedy_can_avoid(a.graph, a.r, kBig);
    CHECK(res.avoidable == brute_force_sat(f));
  }
  CHECK_THROWS_AS(gen_sat_anchor(CnfFormula{1, {{1}}}, hard), Error);
  CHECK_THROWS_AS(gen_sat_anchor(sat_f, testing::cycle(5)), Error);
  CHECK_THROWS_AS(gen_sat_anchor(sat_f, gen_hard_general(3)), Error);
}
