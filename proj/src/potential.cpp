#include "gmis/potential.hpp"

#include <algorithm>
#include <functional>

#include "gmis/error.hpp"
#include "gmis/oracles.hpp"
#include "json.hpp"

namespace gmis {

Coloring coloring_of(int n, const VertexSet& black) {
  check_vertex_set(Graph::from_edges(n, {}), black);
  Coloring c(n, 0);
  for (int v : black) c[v] = 1;
  return c;
}

PotentialParams PotentialParams::subcubic() { return {Rational(5), Rational(4), 3, 0}; }

PotentialParams PotentialParams::general(int delta) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  int b = delta % 3 == 2 ? 1 : 0;
  return {Rational((delta + b) * (delta + 2), 3), Rational(delta + b), delta, b};
}

PotentialParams PotentialParams::triangle_free(int delta) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  return {Rational(delta * (delta + 6), 4), Rational(delta), delta, 0};
}

namespace {

struct Tally {
  int size = 0, black = 0;
  int64_t loan = 0, debt_lb = 0, debt_exact = 0;
};

void check_covered(const ExtendedReduction& r, size_t n) {
  for (const auto& b : r.basics) {
    for (int u : b.ground)
      if (u < 0 || static_cast<size_t>(u) >= n)
        throw Error(ErrorCode::Contract, "coloring does not cover vertex " + std::to_string(u));
    for (auto [m, x] : b.contact_edges)
      if (x < 0 || static_cast<size_t>(x) >= n)
        throw Error(ErrorCode::Contract, "coloring does not cover vertex " + std::to_string(x));
  }
  if (r.basics.size() != r.roots.size())
    throw Error(ErrorCode::Contract, "reduction has no basic records");
}

// `white(v)` decides loan and debt membership; the rest count as black.
template <class White>
Tally tally(const ExtendedReduction& r, White white, int delta, const Graph* original) {
  Tally t;
  t.size = r.size();
  for (const auto& b : r.basics) {
    for (auto [m, x] : b.contact_edges)
      if (white(x)) ++t.loan;
    for (size_t j = 0; j < b.ground.size(); ++j) {
      int u = b.ground[j];
      if (!white(u)) {
        ++t.black;
        continue;
      }
      t.debt_lb += delta - b.ground_degree[j];
      if (original) t.debt_exact += original->degree(u) - b.ground_degree[j];
    }
  }
  return t;
}

Tally tally_mis(const ExtendedReduction& r, const Coloring& black, int delta, const Graph* original) {
  check_covered(r, black.size());
  if (original && static_cast<size_t>(original->n()) > black.size())
    throw Error(ErrorCode::Contract, "coloring shorter than the graph");
  return tally(r, [&](int v) { return black[v] == 0; }, delta, original);
}

Rational phi_of(const Tally& t, const PotentialParams& p, int64_t debt) {
  return p.gamma * t.size - p.sigma * t.black + Rational(t.loan - debt);
}

void check_audit_input(const Graph& g, const ExecutionTrace& trace, const Coloring& black) {
  if (static_cast<int>(black.size()) != g.n())
    throw Error(ErrorCode::Contract, "coloring size differs from the vertex count");
  for (auto [u, v] : g.edges())
    if (black[u] && black[v]) throw Error(ErrorCode::Contract, "black vertices are not independent");
  std::vector<int> hits(g.n(), 0);
  for (const auto& r : trace.reductions) {
    check_covered(r, black.size());
    for (const auto& b : r.basics)
      for (int u : b.ground) ++hits[u];
  }
  for (int v = 0; v < g.n(); ++v)
    if (hits[v] != 1)
      throw Error(ErrorCode::Contract, "trace grounds do not partition the vertices (vertex " +
                                           std::to_string(v) + ")");
}

nlohmann::json rational_json(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).convert_to<int64_t>();
  return rational_str(r);
}

}  // namespace

int64_t loan(const ExtendedReduction& r, const Coloring& black) {
  return tally_mis(r, black, 0, nullptr).loan;
}

int64_t debt(const ExtendedReduction& r, const Coloring& black, DebtMode mode, int delta,
             const Graph* original) {
  if (mode == DebtMode::Exact && !original)
    throw Error(ErrorCode::Contract, "exact debt needs the original graph");
  Tally t = tally_mis(r, black, delta, mode == DebtMode::Exact ? original : nullptr);
  return mode == DebtMode::Exact ? t.debt_exact : t.debt_lb;
}

Rational phi(const ExtendedReduction& r, const Coloring& black, const PotentialParams& p,
             DebtMode mode, const Graph* original) {
  if (mode == DebtMode::Exact && !original)
    throw Error(ErrorCode::Contract, "exact potential needs the original graph");
  Tally t = tally_mis(r, black, p.delta, mode == DebtMode::Exact ? original : nullptr);
  return phi_of(t, p, mode == DebtMode::Exact ? t.debt_exact : t.debt_lb);
}

std::string PotentialReport::to_jsonl() const {
  std::string out;
  for (const auto& r : records) {
    nlohmann::json j{{"step", r.step},           {"kind", std::string(kind_name(r.kind))},
                     {"size", r.size},           {"loan", r.loan},
                     {"debt_lb", r.debt_lb},     {"debt_exact", r.debt_exact},
                     {"phi", rational_json(r.phi)}, {"phi_exact", rational_json(r.phi_exact)}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

PotentialReport audit_execution(const Graph& g, const ExecutionTrace& trace, const Coloring& black,
                                const PotentialParams& p) {
  check_audit_input(g, trace, black);
  PotentialReport rep;
  int step = 0;
  for (const auto& r : trace.reductions) {
    Tally t = tally_mis(r, black, p.delta, &g);
    ReductionRecord rec;
    rec.step = ++step;
    rec.kind = r.kind;
    rec.size = t.size;
    rec.black = t.black;
    rec.loan = t.loan;
    rec.debt_lb = t.debt_lb;
    rec.debt_exact = t.debt_exact;
    rec.phi = phi_of(t, p, t.debt_lb);
    rec.phi_exact = phi_of(t, p, t.debt_exact);
    rep.total_loan += t.loan;
    rep.total_debt_lb += t.debt_lb;
    rep.total_debt_exact += t.debt_exact;
    rep.phi += rec.phi;
    rep.phi_exact += rec.phi_exact;
    rep.picks += t.size;
    rep.black_total += t.black;
    rep.records.push_back(rec);
  }
  int64_t slack = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!black[v]) slack += p.delta - g.degree(v);
  rep.loan_debt_residual = rep.total_loan - rep.total_debt_exact;
  rep.sum_residual = rep.phi_exact - (p.gamma * rep.picks - p.sigma * rep.black_total);
  rep.slack_residual = rep.phi_exact - rep.phi - Rational(slack);
  if (rep.loan_debt_residual != 0 || rep.sum_residual != 0 || rep.slack_residual != 0)
    throw Error(ErrorCode::Identity, "potential identities violated: loan-debt " +
                                         std::to_string(rep.loan_debt_residual));
  return rep;
}

// ---- reduction potential table ----

namespace {

struct ShapeSpec {
  Graph g;
  ExtendedReduction r;
  int length = 0;
};

// Backbone or loop internal vertices start at `first`, chained in order.
void chain(std::vector<Edge>& e, int first, int count) {
  for (int i = 0; i + 1 < count; ++i) e.emplace_back(first + i, first + i + 1);
}

std::vector<ShapeSpec> shapes_of(Kind kind, int max_length) {
  std::vector<ShapeSpec> out;
  auto add = [&](int n, std::vector<Edge> e, int length, auto plan) {
    ShapeSpec s;
    s.g = Graph::from_edges(n, std::move(e));
    s.length = length;
    GraphState st(s.g);
    for (ExtendedReduction r : plan(st)) {
      if (r.kind != kind) throw Error(ErrorCode::Identity, "shape planned as the wrong kind");
      ShapeSpec c{s.g, std::move(r), length};
      out.push_back(std::move(c));
    }
  };
  auto low = [](const GraphState& st) { return std::vector{make_low_degree(st, 0)}; };
  switch (kind) {
    case Kind::Point: add(1, {}, 0, low); break;
    case Kind::Edge: add(2, {{0, 1}}, 0, low); break;
    case Kind::Path: add(3, {{0, 1}, {1, 2}}, 0, low); break;
    case Kind::Branching: add(4, {{0, 1}, {1, 2}, {1, 3}}, 0, low); break;
    case Kind::Cycle:
      for (int len = 3; len <= max_length; ++len) {
        std::vector<Edge> e;
        chain(e, 0, len);
        e.emplace_back(len - 1, 0);
        add(len, e, len, [](const GraphState& st) {
          return std::vector{make_cycle(st, walk_degree_two(st, 0))};
        });
      }
      break;
    case Kind::Loop:
      // w = 0, internal 1..len, contact len+1.
      for (int len = 2; len <= max_length; ++len) {
        std::vector<Edge> e{{0, 1}, {0, len}, {0, len + 1}};
        chain(e, 1, len);
        add(len + 2, e, len, [](const GraphState& st) {
          return std::vector{make_loop(st, walk_degree_two(st, 1))};
        });
      }
      break;
    case Kind::EvenBackbone:
    case Kind::OddBackbone:
      // w = 0, w2 = 1, internal 2..len+1, then contacts.
      for (int len = kind == Kind::EvenBackbone ? 1 : 2; len <= max_length; len += 2)
        for (bool adjacent : {false, true}) {
          std::vector<Edge> e{{0, 2}, {len + 1, 1}};
          chain(e, 2, len);
          int n = len + 2;
          if (adjacent) e.emplace_back(0, 1);
          for (int end : {0, 1})
            for (int c = 0; c < (adjacent ? 1 : 2); ++c) e.emplace_back(end, n++);
          add(n, e, len, [kind](const GraphState& st) {
            Walk w = walk_degree_two(st, 2);
            if (kind == Kind::EvenBackbone) return std::vector{make_even_backbone(st, w)};
            return std::vector{make_odd_backbone(st, w, true), make_odd_backbone(st, w, false)};
          });
        }
      break;
    case Kind::Basic: throw Error(ErrorCode::InvalidArgument, "no table for Basic steps");
  }
  return out;
}

// Calls f(mask) for every independent subset of `vs` in g, as a coloring of g.
void for_each_independent(const Graph& g, const VertexSet& vs, const std::function<void(const Coloring&)>& f) {
  int k = static_cast<int>(vs.size());
  std::vector<uint32_t> nb(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.has_edge(vs[i], vs[j])) nb[i] |= 1u << j;
  Coloring black(g.n(), 0);
  std::function<void(int, uint32_t)> rec = [&](int i, uint32_t banned) {
    if (i == k) {
      f(black);
      return;
    }
    rec(i + 1, banned);
    if (!(banned >> i & 1)) {
      black[vs[i]] = 1;
      rec(i + 1, banned | nb[i]);
      black[vs[i]] = 0;
    }
  };
  rec(0, 0);
}

VertexSet touched(const ExtendedReduction& r) {
  VertexSet vs = r.ground;
  vs.insert(vs.end(), r.contacts.begin(), r.contacts.end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

TableEntry min_potential(Kind kind, const PotentialParams& p, int max_length) {
  if (p.delta != 3) throw Error(ErrorCode::InvalidArgument, "potential table shapes are subcubic");
  if (max_length < 3) throw Error(ErrorCode::InvalidArgument, "max_length must be at least 3");
  TableEntry e;
  e.kind = kind;
  bool first = true;
  for (auto& s : shapes_of(kind, max_length)) {
    ++e.shapes;
    for_each_independent(s.g, touched(s.r), [&](const Coloring& black) {
      Rational v = phi(s.r, black, p);
      auto it = e.min_by_length.find(s.length);
      if (it == e.min_by_length.end() || v < it->second) e.min_by_length[s.length] = v;
      if (first || v < e.min) {
        e.min = v;
        e.argmins.clear();
        first = false;
      }
      if (v == e.min) e.argmins.push_back({s.g, s.r, black, v, s.length});
    });
  }
  for (auto [len, v] : e.min_by_length) {
    if (len < max_length - 1) continue;
    auto prev = e.min_by_length.find(len - 2);
    if (prev != e.min_by_length.end() && prev->second != v) e.stable = false;
  }
  return e;
}

std::vector<TableEntry> min_potential_table(const PotentialParams& p, int max_length) {
  std::vector<TableEntry> out;
  for (Kind k : {Kind::Point, Kind::Edge, Kind::Path, Kind::Branching, Kind::Loop, Kind::Cycle,
                 Kind::EvenBackbone, Kind::OddBackbone})
    out.push_back(min_potential(k, p, max_length));
  return out;
}

Rational min_potential_in(const Graph& host, const ExtendedReduction& r, const PotentialParams& p) {
  check_covered(r, host.n());
  VertexSet vs = touched(r);
  if (vs.size() > 30) throw Error(ErrorCode::Budget, "reduction too large for exhaustive coloring");
  std::optional<Rational> best;
  for_each_independent(host, vs, [&](const Coloring& black) {
    Rational v = phi(r, black, p);
    if (!best || v < *best) best = v;
  });
  return *best;
}

// ---- black and white types ----

const char* reduction_type_name(ReductionType t) {
  switch (t) {
    case ReductionType::Black: return "black";
    case ReductionType::White: return "white";
    case ReductionType::Neither: return "neither";
  }
  return "?";
}

bool is_alternating(const std::vector<int>& path, const Coloring& black) {
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (black.at(path[i]) == black.at(path[i + 1])) return false;
  return true;
}

ReductionType classify_black_white(const Graph& host, const ExtendedReduction& r,
                                   const Coloring& black) {
  check_covered(r, black.size());
  int root = r.root();
  int alt = r.alt_root < 0 ? root : r.alt_root;
  switch (r.kind) {
    case Kind::Path:
    case Kind::Branching: {
      int mid = r.basics.front().middle.front();
      if (black[root] && !black[mid]) return ReductionType::Black;
      if (!black[root] && black[mid]) return ReductionType::White;
      return ReductionType::Neither;
    }
    case Kind::Loop: {
      int in_ground = 0;
      for (int u : r.ground) in_ground += black[u] != 0;
      if (in_ground != exact_mis(induced_subgraph(host, r.ground).graph).alpha)
        return ReductionType::Neither;
      if (!black[root] && !black[alt]) return ReductionType::White;
      return ReductionType::Black;
    }
    case Kind::EvenBackbone:
      if (!is_alternating(r.path, black)) return ReductionType::Neither;
      if (!black[root] && !black[alt]) return ReductionType::White;
      if (black[root] && black[alt]) return ReductionType::Black;
      return ReductionType::Neither;
    default: return ReductionType::Neither;
  }
}

ProblematicWitness is_potentially_problematic(const Graph& g, const Coloring& black) {
  auto prof = degree_profile(g);
  if (!prof.min_degree || *prof.min_degree > 2 || !is_connected(g))
    throw Error(ErrorCode::Contract, "needs a connected graph with minimum degree at most 2");
  if (static_cast<int>(black.size()) != g.n())
    throw Error(ErrorCode::Contract, "coloring size differs from the vertex count");
  ProblematicWitness w;
  int n = g.n();
  int nb = static_cast<int>(std::count_if(black.begin(), black.end(), [](char c) { return c != 0; }));
  bool edge = n == 2 && g.m() == 1;
  bool odd_cycle = n >= 3 && n % 2 == 1 && prof.max_degree == 2 && *prof.min_degree == 2;
  if ((edge && nb == 1) || (odd_cycle && nb == (n - 1) / 2)) {
    w.holds = w.odd_cycle_or_edge = true;
    return w;
  }
  GraphState st(g);
  std::vector<ExtendedReduction> cands;
  for (int v : st.bucket(1)) {
    auto r = make_low_degree(st, v);
    if (r.kind == Kind::Path || r.kind == Kind::Branching) cands.push_back(std::move(r));
  }
  std::vector<char> seen(n, 0);
  for (int v : st.bucket(2)) {
    if (seen[v]) continue;
    Walk wk = walk_degree_two(st, v);
    for (int u : wk.internal) seen[u] = 1;
    if (wk.kind == WalkKind::Loop) cands.push_back(make_loop(st, wk));
    if (wk.kind == WalkKind::Backbone && wk.internal.size() % 2 == 1)
      cands.push_back(make_even_backbone(st, wk));
  }
  for (auto& r : cands) {
    ReductionType t = classify_black_white(g, r, black);
    if (t == ReductionType::Black && !w.black_type) w.black_type = r;
    if (t == ReductionType::White && !w.white_type) w.white_type = r;
  }
  w.holds = w.black_type && w.white_type;
  return w;
}

LowDebtCheck check_low_debt(const Graph& g, const ExecutionTrace& trace, const Coloring& black) {
  PotentialParams p = PotentialParams::subcubic();
  LowDebtCheck c;
  for (const auto& r : trace.reductions) c.phi += phi(r, black, p);
  c.at_minus_one = c.phi == -1;
  if (!c.at_minus_one) return c;
  const auto& first = trace.reductions.front();
  c.bad_odd_backbone_first =
      first.kind == Kind::OddBackbone && phi(first, black, p) == min_potential_in(g, first, p);
  auto prof = degree_profile(g);
  if (prof.min_degree && *prof.min_degree <= 2 && is_connected(g))
    c.problematic = is_potentially_problematic(g, black).holds;
  return c;
}

Rational reduction_potential_bound(int delta, int black, int white) {
  PotentialParams p = PotentialParams::general(delta);
  Rational i(black), l(white), d(delta);
  return l * l - (d - i + 1) * l + p.gamma - p.sigma * i + (i - 1) * i;
}

Rational reduction_potential_bound_real_min(int delta) {
  Rational b(PotentialParams::general(delta).b);
  return b / 3 - b * b / 3 - Rational(1, 3);
}

// ---- vertex cover dual ----

int64_t psi(const ExtendedReduction& r, const Coloring& in_cover, DebtMode mode, const Graph* original) {
  if (mode == DebtMode::Exact && !original)
    throw Error(ErrorCode::Contract, "exact potential needs the original graph");
  check_covered(r, in_cover.size());
  int64_t total = 0;
  for (const auto& b : r.basics) {
    ExtendedReduction one;
    one.roots = {b.root};
    one.basics = {b};
    Tally t = tally(one, [&](int v) { return in_cover[v] != 0; }, 3,
                    mode == DebtMode::Exact ? original : nullptr);
    int64_t covered = static_cast<int64_t>(b.ground.size()) - t.black;
    int64_t d = mode == DebtMode::Exact ? t.debt_exact : t.debt_lb;
    total += 4 * (static_cast<int64_t>(b.ground.size()) - 1) - 5 * covered - t.loan + d;
  }
  return total;
}

DualityReport duality_audit(const Graph& g, const ExecutionTrace& trace, const Coloring& black) {
  check_audit_input(g, trace, black);
  PotentialParams p = PotentialParams::subcubic();
  Coloring cover(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) cover[v] = !black[v];
  DualityReport rep;
  int step = 0;
  for (const auto& r : trace.reductions) {
    DualityRecord d;
    d.step = ++step;
    d.kind = r.kind;
    d.phi = phi(r, black, p);
    d.phi_exact = phi(r, black, p, DebtMode::Exact, &g);
    d.psi = psi(r, cover);
    d.psi_exact = psi(r, cover, DebtMode::Exact, &g);
    d.checked = r.kind != Kind::Point;
    if (d.checked) d.ok = -d.phi >= d.psi && -d.phi_exact >= d.psi_exact;
    if (!d.ok) ++rep.violations;
    rep.phi_exact_total += d.phi_exact;
    rep.psi_exact_total += d.psi_exact;
    rep.records.push_back(d);
  }
  rep.total_ok = rep.phi_exact_total < 0 || rep.psi_exact_total <= 0;
  return rep;
}

}  // namespace gmis
