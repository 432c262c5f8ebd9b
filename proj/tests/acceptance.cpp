// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "gmis/error.hpp"
#include "gmis/forge.hpp"
#include "gmis/graph.hpp"
#include "gmis/greedy.hpp"
#include "gmis/oracles.hpp"
#include "gmis/potential.hpp"
#include "gmis/vertex_cover.hpp"

using namespace gmis;

namespace {

const OracleBudget kBig{400, 200'000'000, 0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Shared between criteria 1, 4 and 5.
struct SubcubicSweep {
  int64_t graphs = 0, enumerated = 0, random = 0;
  int64_t ratio_violations = 0;
  int64_t audits = 0, identity_failures = 0;
  int64_t low_debt_checked = 0, at_minus_one = 0, unexplained = 0, below_floor = 0;
  std::vector<int64_t> counts;
  std::string first_failure;

  void note(const std::string& what, const Graph& g) {
    if (!first_failure.empty()) return;
    std::ostringstream s;
    s << what << " on n=" << g.n() << " edges";
    for (auto [u, v] : g.edges()) s << " " << u << "-" << v;
    first_failure = s.str();
  }

  void audit(const Graph& g, const ExecutionTrace& t, const VertexSet& black_set) {
    Coloring black = coloring_of(g.n(), black_set);
    ++audits;
    try {
      audit_execution(g, t, black, PotentialParams::subcubic());
    } catch (const Error& e) {
      ++identity_failures;
      note(std::string("identity: ") + e.what(), g);
    }
  }

  void visit(const Graph& g) {
    ++graphs;
    ExecutionTrace t = greedy_star(g);
    auto mis = exact_mis(g, kBig);
    if (5 * static_cast<int64_t>(t.size()) < 4 * static_cast<int64_t>(mis.alpha)) {
      ++ratio_violations;
      note("ratio", g);
    }
    // Up to four maximum independent sets as references.
    auto sets = maximum_independent_sets(g, 4, kBig);
    for (const auto& s : sets) {
      audit(g, t, s);
      if (!is_connected(g)) continue;
      auto low = check_low_debt(g, t, coloring_of(g.n(), s));
      ++low_debt_checked;
      at_minus_one += low.at_minus_one;
      if (!low.above_floor()) {
        ++below_floor;
        note("potential below -1", g);
      }
      if (!low.explained()) {
        ++unexplained;
        note("unexplained -1", g);
      }
    }
  }
};

SubcubicSweep g_sweep;
int64_t g_hy_audits = 0, g_hy_identity_failures = 0;

Outcome criterion1() {
  auto& s = g_sweep;
  s.counts = testing::for_each_connected_subcubic(12, [&](const Graph& g) {
    ++s.enumerated;
    s.visit(g);
  });
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    RandomSpec r;
    r.kind = RandomKind::Subcubic;
    r.n = 5 + static_cast<int>(seed % 16);
    r.seed = seed;
    r.connected = seed % 2 == 0;
    ++s.random;
    s.visit(gen_random(r));
  }
  const std::vector<int64_t> known{0, 1, 1, 2, 6, 10, 29, 64, 194, 531, 1733, 5524, 19430};
  std::ostringstream d;
  d << s.enumerated << " non-isomorphic connected graphs n<=12 + " << s.random << " random n<=20, "
    << s.ratio_violations << " violations of 5|S| >= 4a";
  if (s.counts != known) d << "; class counts differ from the known sequence";
  if (!s.first_failure.empty()) d << "; first: " << s.first_failure;
  return {s.ratio_violations == 0 && s.counts == known, d.str()};
}

Outcome criterion2() {
  bool ok = true;
  std::ostringstream d;
  for (int i = 0; i <= 2; ++i) {
    Graph g = gen_hy(i, HyBase::H0Prime);
    ExecutionTrace t = greedy_star(g);
    int64_t alpha;
    std::string source;
    VertexSet reference;
    if (i <= 1) {
      auto mis = exact_mis(g, kBig);
      alpha = mis.alpha;
      reference = mis.witness;
      source = "oracle";
    } else {
      alpha = hy_counts(i, HyBase::H0Prime).alpha;
      reference = t.solution;
      source = "closed form";
    }
    bool tight = 5 * static_cast<int64_t>(t.size()) == 4 * alpha + 1;
    ok = ok && tight;
    d << (i ? ", " : "") << "i=" << i << ": |S|=" << t.size() << " a=" << alpha << " (" << source << ")"
      << (tight ? "" : " NOT TIGHT");
    ++g_hy_audits;
    try {
      audit_execution(g, t, coloring_of(g.n(), reference), PotentialParams::subcubic());
    } catch (const Error&) {
      ++g_hy_identity_failures;
    }
  }
  return {ok, d.str()};
}

Outcome criterion3() {
  const std::map<Kind, int> expected{{Kind::Edge, -1}, {Kind::Path, 0},        {Kind::Point, 1},
                                     {Kind::Cycle, -1}, {Kind::Loop, 0},       {Kind::Branching, 1},
                                     {Kind::OddBackbone, -1}, {Kind::EvenBackbone, 0}};
  bool ok = true;
  std::ostringstream d;
  auto table = min_potential_table(PotentialParams::subcubic(), 9);
  int shapes = 0;
  for (const auto& e : table) {
    shapes += e.shapes;
    auto it = expected.find(e.kind);
    bool match = it != expected.end() && e.min == it->second;
    ok = ok && match;
    d << kind_name(e.kind) << ":" << rational_str(e.min) << (match ? "" : "(!)") << " ";
  }
  ok = ok && table.size() == expected.size();
  d << "over " << shapes << " shapes up to length 9";
  return {ok, d.str()};
}

Outcome criterion4() {
  const auto& s = g_sweep;
  int64_t audits = s.audits + g_hy_audits, failures = s.identity_failures + g_hy_identity_failures;
  std::ostringstream d;
  d << audits << " audited executions, " << failures << " with nonzero residual";
  return {failures == 0 && audits > 0, d.str()};
}

Outcome criterion5() {
  const auto& s = g_sweep;
  std::ostringstream d;
  d << s.low_debt_checked << " executions with maximum I, " << s.at_minus_one << " at -1, " << s.unexplained
    << " unexplained, " << s.below_floor << " below -1";
  return {s.unexplained == 0 && s.below_floor == 0 && s.low_debt_checked > 0, d.str()};
}

Outcome criterion6() {
  int64_t runs = 0, general_bad = 0, tf_bad = 0, f_bad = 0;
  for (int delta = 3; delta <= 8; ++delta)
    for (uint64_t seed = 0; seed < 500; ++seed) {
      RandomSpec r;
      r.kind = RandomKind::MaxDegree;
      r.delta = delta;
      r.n = 6 + static_cast<int>(seed % 13);
      r.seed = seed * 16 + delta;
      Graph g = gen_random(r);
      int d = std::max(1, g.max_degree());
      int64_t alpha = exact_mis(g, kBig).alpha, size = basic_greedy(g).size();
      ++runs;
      if (3 * alpha > (d + 2) * size) ++general_bad;
    }
  for (int delta = 3; delta <= 6; ++delta)
    for (uint64_t seed = 0; seed < 500; ++seed) {
      RandomSpec r;
      r.kind = RandomKind::TriangleFree;
      r.delta = delta;
      r.n = 6 + static_cast<int>(seed % 13);
      r.seed = seed * 16 + delta;
      Graph g = gen_random(r);
      int d = std::max(1, g.max_degree());
      int64_t alpha = exact_mis(g, kBig).alpha, size = basic_greedy(g).size();
      ++runs;
      if (4 * alpha > (d + 6) * size) ++tf_bad;
    }
  for (int delta = 1; delta <= 12; ++delta)
    for (int i = 0; i <= delta + 1; ++i)
      for (int l = 0; l <= delta + 1; ++l)
        if (reduction_potential_bound(delta, i, l) < 0) ++f_bad;
  std::ostringstream d;
  d << runs << " random graphs: " << general_bad << " above (D+2)/3, " << tf_bad
    << " triangle-free above (D+6)/4; " << f_bad << " negative reduction bounds for D<=12";
  return {general_bad == 0 && tf_bad == 0 && f_bad == 0, d.str()};
}

Outcome criterion7() {
  int64_t comp_bad = 0, six_bad = 0, violations = 0, checked = 0;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    RandomSpec r;
    r.kind = RandomKind::Subcubic;
    r.n = 4 + static_cast<int>(seed % 13);
    r.seed = 7'000 + seed;
    Graph g = gen_random(r);
    int64_t mvc = exact_mvc(g, kBig).size;
    if (4 * static_cast<int64_t>(complementary_greedy(g).size()) > 5 * mvc) ++comp_bad;
    if (5 * static_cast<int64_t>(mvc_six_fifths(g).size()) > 6 * mvc) ++six_bad;
    auto rep = duality_audit(g, greedy_star(g), coloring_of(g.n(), exact_mis(g, kBig).witness));
    violations += rep.violations;
    for (const auto& rec : rep.records) checked += rec.checked;
  }
  std::ostringstream d;
  d << "500 graphs: " << comp_bad << " complementary and " << six_bad << " six-fifths ratio violations; "
    << checked << " reductions checked, " << violations << " duality violations";
  return {comp_bad == 0 && six_bad == 0 && violations == 0, d.str()};
}

Outcome criterion8() {
  bool ok = true;
  std::ostringstream d;
  for (int groups : {2, 3}) {
    Graph g = gen_delta_chain(8, groups);
    auto c = delta_chain_counts(8, groups);
    auto mg = max_greedy(g);
    int alpha = exact_mis(g, kBig).alpha;
    bool match = mg.alpha_plus == c.cliques && mg.alpha_minus == c.cliques && alpha == c.independent_total;
    ok = ok && match;
    d << "chain groups=" << groups << " n=" << g.n() << ": a+=" << mg.alpha_plus << " a=" << alpha
      << (match ? "" : " (!)") << "; ";
  }
  Graph h = gen_hard_general(4);
  int ap = max_greedy(h).alpha_plus, a = exact_mis(h, kBig).alpha;
  ok = ok && ap == 2 && a == 4;
  d << "hard k=4: a+=" << ap << " a=" << a;
  return {ok, d.str()};
}

// Formula already in normalized shape: every variable occurs twice positive
// and once negative, in clauses of two or three distinct variables.
std::optional<CnfFormula> shaped_formula(SplitMix64& rng, int vars) {
  std::vector<int> lits;
  for (int v = 1; v <= vars; ++v) lits.insert(lits.end(), {v, v, -v});
  for (size_t i = lits.size(); i > 1; --i) std::swap(lits[i - 1], lits[rng.below(i)]);
  CnfFormula f{vars, {}};
  size_t at = 0;
  while (at < lits.size()) {
    size_t left = lits.size() - at;
    size_t len = left <= 3 ? left : 2 + rng.below(2);
    if (left - len == 1) len = 2 + (len == 2);
    std::vector<int> c(lits.begin() + at, lits.begin() + at + len);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (std::abs(c[i]) == std::abs(c[j])) return std::nullopt;
    f.clauses.push_back(c);
    at += len;
  }
  return f;
}

// Short clauses over few variables, so unsatisfiable draws are common.
CnfFormula random_formula(SplitMix64& rng) {
  CnfFormula f;
  f.vars = 1 + static_cast<int>(rng.below(3));
  int m = 2 + static_cast<int>(rng.below(4));
  int max_len = 1 + static_cast<int>(rng.below(3));
  for (int c = 0; c < m; ++c) {
    std::vector<int> cl;
    int len = 1 + static_cast<int>(rng.below(max_len));
    for (int j = 0; j < len; ++j) {
      int v = 1 + static_cast<int>(rng.below(f.vars));
      cl.push_back(rng.below(2) ? v : -v);
    }
    f.clauses.push_back(cl);
  }
  return f;
}

Outcome criterion9() {
  // The avoidance search grows about tenfold per normalized variable on
  // unsatisfiable inputs, so formulas stay at <= 5 variables after normalizing.
  const int kMaxVars = 5, kEach = 12;
  Graph hard = gen_hard_general(4);
  SplitMix64 rng(2024);
  int sat = 0, unsat = 0, wrong = 0, normalized_inputs = 0;
  std::set<std::vector<std::vector<int>>> seen;
  for (int tried = 0; (sat < kEach || unsat < kEach) && tried < 20000; ++tried) {
    std::optional<CnfFormula> f =
        tried % 2 ? shaped_formula(rng, 2 + static_cast<int>(rng.below(kMaxVars - 1))) : random_formula(rng);
    if (!f || !seen.insert(f->clauses).second) continue;
    CnfFormula nf = normalize_sat(*f);
    if (nf.vars > kMaxVars) continue;
    bool s = brute_force_sat(*f);
    if ((s && sat >= kEach) || (!s && unsat >= kEach)) continue;
    AnchorGraph a = gen_sat_anchor(nf, hard);
    bool avoid = greedy_can_avoid(a.graph, a.r, {4000, 200'000'000, 0}).avoidable;
    (s ? sat : unsat) += 1;
    normalized_inputs += !is_normalized(*f) ? 0 : 1;
    if (avoid != s) ++wrong;
  }
  std::ostringstream d;
  d << sat + unsat << " formulas (" << sat << " sat, " << unsat << " unsat, " << sat + unsat - normalized_inputs
    << " needing normalization, <= " << kMaxVars << " variables after): " << wrong
    << " where avoiding the root disagrees with satisfiability";
  return {wrong == 0 && sat == kEach && unsat == kEach, d.str()};
}

Outcome criterion10() {
  RandomSpec r;
  r.kind = RandomKind::Subcubic;
  r.n = 100'000;
  r.seed = 10;
  Graph g = gen_random(r);
  auto t0 = std::chrono::steady_clock::now();
  ExecutionTrace t = greedy_star(g);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool valid = is_maximal_independent(g, t.solution);
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << "n=100000 m=" << g.m() << ": " << secs << " s, |S|=" << t.size()
    << (valid ? "" : ", NOT a maximal independent set");
  return {valid && secs <= 60.0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
