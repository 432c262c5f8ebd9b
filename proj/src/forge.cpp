#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "gmis/error.hpp"
#include "gmis/forge.hpp"

namespace gmis {

namespace {

void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

// Edge list builder with fresh vertex allocation.
struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  int add() { return n++; }
  std::vector<int> add(int k) {
    std::vector<int> vs(k);
    for (int& v : vs) v = n++;
    return vs;
  }
  void edge(int u, int v) { edges.emplace_back(u, v); }
  void clique(const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
  }
  void join(const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b) edge(u, v);
  }
  void copy(const Graph& g, int offset) {
    for (auto [u, v] : g.edges()) edge(offset + u, offset + v);
  }
  Graph build() const { return Graph::from_edges(n, edges); }
};

// ---- H_i family ----

Graph base_h0() {
  // Top t, its neighbors p and q, and a 7-cycle c0..c6 with p on c0, c2 and
  // q on c4, c6.
  Builder b;
  int t = b.add(), p = b.add(), q = b.add();
  auto c = b.add(7);
  b.edge(t, p);
  b.edge(t, q);
  for (int i = 0; i < 7; ++i) b.edge(c[i], c[(i + 1) % 7]);
  b.edge(p, c[0]);
  b.edge(p, c[2]);
  b.edge(q, c[4]);
  b.edge(q, c[6]);
  return b.build();
}

Graph base_h0_prime() {
  // Top t with neighbors p, q; four triangles (a, b, c). p and q each see the
  // a-corners of two triangles; the b/c corners are linked in a ring.
  Builder b;
  int t = b.add(), p = b.add(), q = b.add();
  std::vector<std::vector<int>> tri;
  for (int i = 0; i < 4; ++i) {
    tri.push_back(b.add(3));
    b.clique(tri.back());
  }
  b.edge(t, p);
  b.edge(t, q);
  b.edge(p, tri[0][0]);
  b.edge(p, tri[1][0]);
  b.edge(q, tri[2][0]);
  b.edge(q, tri[3][0]);
  for (int i = 0; i < 4; ++i) b.edge(tri[i][2], tri[(i + 1) % 4][1]);
  return b.build();
}

// New top joined to p and q; four copies of h hang below them.
Graph lift(const Graph& h) {
  Builder b;
  int t = b.add(), p = b.add(), q = b.add();
  b.edge(t, p);
  b.edge(t, q);
  for (int c = 0; c < 4; ++c) {
    int off = b.n;
    b.add(h.n());
    b.copy(h, off);
    b.edge(c < 2 ? p : q, off);
  }
  return b.build();
}

// ---- planar cubic gadget ----

// Five vertices, independence number 2; vertex 1 has degree 2.
const std::vector<Edge> kSideBlock = {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
// Eight vertices, independence number 3 even without vertex 0 or vertex 1,
// which have degree 2.
const std::vector<Edge> kMiddleBlock = {{0, 1}, {0, 4}, {1, 5}, {2, 3}, {2, 6}, {2, 7},
                                        {3, 5}, {3, 6}, {4, 5}, {4, 7}, {6, 7}};

// Vertex order: a, g, b, d, side block at a (5), side block at g (5),
// middle block (8).
void add_gadget(Builder& bld, int u, int v) {
  int base = bld.n;
  bld.add(22);
  int a = base, g = base + 1, b = base + 2, d = base + 3;
  int side_a = base + 4, side_g = base + 9, mid = base + 14;
  bld.edge(a, b);
  bld.edge(b, d);
  bld.edge(d, g);
  for (auto [x, y] : kSideBlock) {
    bld.edge(side_a + x, side_a + y);
    bld.edge(side_g + x, side_g + y);
  }
  for (auto [x, y] : kMiddleBlock) bld.edge(mid + x, mid + y);
  bld.edge(a, side_a + 1);
  bld.edge(g, side_g + 1);
  bld.edge(b, mid);
  bld.edge(d, mid + 1);
  if (u >= 0) bld.edge(u, a);
  if (v >= 0) bld.edge(v, g);
}

// ---- CNF ----

struct Occurrence {
  size_t clause, pos;
};

void check_formula(const CnfFormula& f) {
  if (f.vars < 0) invalid("negative variable count");
  for (const auto& c : f.clauses) {
    if (c.empty()) invalid("empty clause");
    for (int l : c)
      if (l == 0 || std::abs(l) > f.vars) invalid("literal " + std::to_string(l) + " out of range");
  }
}

}  // namespace

Graph hy_base(HyBase base) { return base == HyBase::H0 ? base_h0() : base_h0_prime(); }

Graph gen_hy(int i, HyBase base) {
  if (i < 0) invalid("gen_hy needs i >= 0");
  Graph g = hy_base(base);
  for (int k = 0; k < i; ++k) g = lift(g);
  return g;
}

HyCounts hy_counts(int i, HyBase base) {
  if (i < 0) invalid("hy_counts needs i >= 0");
  // Taking the top removes p and q and leaves four copies of the level below.
  HyCounts c = base == HyBase::H0 ? HyCounts{4, 5} : HyCounts{5, 6};
  for (int k = 0; k < i; ++k) c = {4 * c.greedy + 1, 4 * c.alpha + 2};
  return c;
}

// ---- delta chains ----

namespace {

struct ChainShape {
  int ell = 0;
  int residue = 0;
};

ChainShape chain_shape(int delta) {
  if (delta < 5) invalid("delta chains need delta >= 5");
  switch (delta % 3) {
    case 2: return {(delta + 1) / 3, 2};
    case 1: return {(delta + 2) / 3, 1};
    default: return {delta / 3, 0};
  }
}

// Attaches each vertex of `from` to the least loaded vertex of `final_clique`.
void spread(Builder& b, const std::vector<int>& from, const std::vector<int>& final_clique,
            std::vector<int>& load) {
  for (int u : from) {
    size_t best = std::min_element(load.begin(), load.end()) - load.begin();
    b.edge(u, final_clique[best]);
    ++load[best];
  }
}

}  // namespace

int delta_chain_max_groups(int delta) {
  ChainShape s = chain_shape(delta);
  if (s.residue == 2) return -1;
  if (s.residue == 1) return s.ell * (s.ell - 1) + 1;
  return (s.ell * s.ell + 1) / 2;
}

ChainCounts delta_chain_counts(int delta, int groups) {
  ChainShape s = chain_shape(delta);
  if (s.residue == 2) return {groups + 1, groups * s.ell};
  if (s.residue == 1) return {3 * groups + 1, groups * (3 * s.ell - 1)};
  return {3 * groups + 1, groups * (3 * s.ell + 1)};
}

Graph gen_delta_chain(int delta, int groups) {
  ChainShape s = chain_shape(delta);
  if (groups < 1) invalid("delta chains need at least one group");
  int cap = delta_chain_max_groups(delta);
  if (cap >= 0 && groups > cap)
    invalid("delta " + std::to_string(delta) + " allows at most " + std::to_string(cap) + " groups");
  const int l = s.ell;
  Builder b;
  auto clique = [&](int k) {
    auto vs = b.add(k);
    b.clique(vs);
    return vs;
  };

  if (s.residue == 2) {
    // K_l - I_l - K_l - ... - I_l - K_l, consecutive parts fully joined.
    auto prev = clique(l);
    for (int i = 0; i < groups; ++i) {
      auto is = b.add(l);
      auto next = clique(l);
      b.join(prev, is);
      b.join(is, next);
      prev = next;
    }
    return b.build();
  }

  // Groups of six parts; parts[0], [2], [4] are cliques.
  std::vector<int> sizes = s.residue == 1 ? std::vector<int>{l - 1, l, l - 1, l, l, l - 1}
                                          : std::vector<int>{l - 1, l + 1, l, l, l, l};
  std::vector<std::vector<std::vector<int>>> parts(groups);
  for (auto& grp : parts)
    for (int k = 0; k < 6; ++k) {
      grp.push_back(k % 2 == 0 ? clique(sizes[k]) : b.add(sizes[k]));
      if (k > 0) b.join(grp[k - 1], grp[k]);
    }
  auto fin = clique(l);
  std::vector<int> load(l, 0);
  for (int i = 0; i < groups; ++i) {
    auto& grp = parts[i];
    bool last = i + 1 == groups;
    const auto& first_is = grp[1];
    const auto& last_is = grp[5];
    int matched = l - 1;
    if (!last) {
      const auto& nxt = parts[i + 1];
      b.join(last_is, nxt[0]);
      for (int j = 0; j < matched; ++j) b.edge(first_is[j], nxt[0][j]);
      if (s.residue == 0)
        for (int j = 0; j < l; ++j) b.edge(last_is[j], nxt[4][j]);
    } else {
      b.join(last_is, fin);
      spread(b, std::vector<int>(first_is.begin(), first_is.begin() + matched), fin, load);
    }
    spread(b, std::vector<int>(first_is.begin() + matched, first_is.end()), fin, load);
  }
  Graph g = b.build();
  if (g.max_degree() > delta) throw Error(ErrorCode::Identity, "delta chain exceeds its degree bound");
  return g;
}

// ---- hard graphs ----

Graph gen_hard_general(int k) {
  if (k < 2) invalid("hard_general needs k >= 2");
  Builder b;
  int r = b.add();
  auto cl = b.add(k);
  auto xs = b.add(k);
  b.clique(cl);
  b.join(xs, cl);
  for (int x : xs) b.edge(r, x);
  return b.build();
}

Graph gen_hard_bipartite(int n_groups, int k) {
  if (k < 2) invalid("hard_bipartite needs k >= 2");
  if (n_groups < 1) invalid("hard_bipartite needs at least one group");
  Builder b;
  std::vector<std::vector<int>> u(n_groups);
  for (auto& grp : u) grp = b.add(k);
  auto vp = b.add(k);
  auto xs = b.add(n_groups);
  for (int i = 0; i < n_groups; ++i) {
    b.join(u[i], vp);
    b.join(u[i], std::vector<int>(xs.begin() + i, xs.end()));
  }
  return b.build();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  std::queue<int> q;
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---- planar cubic ----

Graph planar_gadget() {
  Builder b;
  add_gadget(b, -1, -1);
  return b.build();
}

Graph gadget_planar_cubic(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) throw Error(ErrorCode::DegreeBound, "gadget substitution needs a cubic graph");
  Builder b;
  b.add(g.n());
  for (auto [u, v] : g.edges()) add_gadget(b, u, v);
  return b.build();
}

// ---- CNF ----

bool is_normalized(const CnfFormula& f) {
  std::vector<int> pos(f.vars + 1, 0), neg(f.vars + 1, 0);
  for (const auto& c : f.clauses) {
    if (c.size() < 2 || c.size() > 3) return false;
    for (int l : c) {
      if (l == 0 || std::abs(l) > f.vars) return false;
      ++(l > 0 ? pos : neg)[std::abs(l)];
    }
  }
  for (int v = 1; v <= f.vars; ++v)
    if (pos[v] != 2 || neg[v] != 1) return false;
  return true;
}

CnfFormula normalize_sat(const CnfFormula& f) {
  check_formula(f);
  int vars = f.vars;
  std::vector<std::vector<int>> clauses;
  for (const auto& c : f.clauses) {
    if (c.size() > 3) invalid("clauses have at most three literals");
    std::vector<int> lits;
    for (int l : c)
      if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
    if (lits.size() == 1) {
      // (l) becomes (l or z) and (l or not z).
      int z = ++vars;
      clauses.push_back({lits[0], z});
      clauses.push_back({lits[0], -z});
    } else {
      clauses.push_back(std::move(lits));
    }
  }

  std::vector<std::vector<Occurrence>> occ(vars + 1);
  for (size_t i = 0; i < clauses.size(); ++i)
    for (size_t j = 0; j < clauses[i].size(); ++j) occ[std::abs(clauses[i][j])].push_back({i, j});

  CnfFormula out;
  std::vector<std::vector<int>> extra;
  for (int v = 1; v <= vars; ++v) {
    int p = 0;
    for (auto o : occ[v]) p += clauses[o.clause][o.pos] > 0;
    int n = static_cast<int>(occ[v].size()) - p;
    if (occ[v].empty()) continue;
    if ((p == 2 && n == 1) || (p == 1 && n == 2)) {
      int id = ++out.vars;
      int flip = p == 2 ? 1 : -1;
      for (auto o : occ[v]) {
        int& l = clauses[o.clause][o.pos];
        l = (l > 0 ? id : -id) * flip;
      }
      continue;
    }
    // One fresh variable per occurrence, tied together by a ring of
    // implications y_i -> y_{i+1}.
    std::vector<int> ys;
    for (auto o : occ[v]) {
      int id = ++out.vars;
      ys.push_back(id);
      int& l = clauses[o.clause][o.pos];
      l = l > 0 ? id : -id;
    }
    size_t first_ring = extra.size();
    for (size_t i = 0; i < ys.size(); ++i) extra.push_back({-ys[i], ys[(i + 1) % ys.size()]});
    // Each y now occurs as in the original once, plus once each way in the
    // ring; flip the ones that came from a negative occurrence.
    for (size_t i = 0; i < ys.size(); ++i) {
      int& l = clauses[occ[v][i].clause][occ[v][i].pos];
      if (l > 0) continue;
      l = -l;
      for (size_t r = first_ring; r < extra.size(); ++r)
        for (int& x : extra[r])
          if (std::abs(x) == ys[i]) x = -x;
    }
  }
  out.clauses = std::move(clauses);
  out.clauses.insert(out.clauses.end(), extra.begin(), extra.end());
  if (!is_normalized(out)) throw Error(ErrorCode::Identity, "normalization left an irregular formula");
  return out;
}

bool brute_force_sat(const CnfFormula& f) {
  check_formula(f);
  if (f.vars > 24) invalid("truth-table check is limited to 24 variables");
  for (uint32_t a = 0; a < (1u << f.vars); ++a) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (int l : c)
        if (((a >> (std::abs(l) - 1)) & 1) == (l > 0 ? 1u : 0u)) {
          any = true;
          break;
        }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// ---- anchor ----

AnchorGraph gen_sat_anchor(const CnfFormula& f, const Graph& hard) {
  if (!is_normalized(f)) invalid("anchor needs a normalized formula");
  int root = -1, dmin = -1;
  bool unique = false;
  for (int v = 0; v < hard.n(); ++v) {
    if (dmin < 0 || hard.degree(v) < dmin) {
      dmin = hard.degree(v);
      root = v;
      unique = true;
    } else if (hard.degree(v) == dmin) {
      unique = false;
    }
  }
  if (!unique) throw Error(ErrorCode::Contract, "hard graph has no unique minimum-degree root");
  // The anchor settles r' while the minimum degree is at most 4; the hard
  // graph must not offer a root before that.
  for (int v = 0; v < hard.n(); ++v)
    if (hard.degree(v) < (v == root ? 4 : 5))
      throw Error(ErrorCode::Contract, "hard graph degrees too low for the anchor (root >= 4, others >= 5)");

  // Every padded vertex gets its own K6, joined to it by `count` edges.
  // Degrees: literals 3; clause vertices v, v' 5 and r_C, r' at least 5, so
  // literal choices finish first and the clause logic then runs at degree 4.
  constexpr int kPad = 3;
  Builder b;
  std::vector<std::pair<int, int>> pads;
  int rp = b.add();
  std::vector<int> lit_pos(f.vars + 1), lit_neg(f.vars + 1);
  for (int v = 1; v <= f.vars; ++v) {
    lit_pos[v] = b.add();
    lit_neg[v] = b.add();
    b.edge(lit_pos[v], lit_neg[v]);
    pads.emplace_back(lit_neg[v], 1);
  }
  for (const auto& c : f.clauses) {
    int rc = b.add();
    b.edge(rc, rp);
    pads.emplace_back(rc, kPad);
    for (int l : c) {
      int v = b.add(), w = b.add();
      b.edge(v, l > 0 ? lit_pos[l] : lit_neg[-l]);
      b.edge(v, w);
      b.edge(w, rc);
      pads.emplace_back(v, kPad);
      pads.emplace_back(w, kPad);
    }
  }
  pads.emplace_back(rp, kPad);
  for (auto [target, count] : pads) {
    auto k6 = b.add(6);
    b.clique(k6);
    for (int j = 0; j < count; ++j) b.edge(k6[j], target);
  }
  AnchorGraph out;
  out.hard_offset = b.n;
  b.add(hard.n());
  b.copy(hard, out.hard_offset);
  out.r = out.hard_offset + root;
  out.r_prime = rp;
  b.edge(rp, out.r);
  out.graph = b.build();
  return out;
}

}  // namespace gmis
