#include "gmis/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include "bits.hpp"
#include "gmis/error.hpp"

namespace gmis {

namespace {

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(g.n(), Bits(g.n()));
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.neighbors(v)) adj[v].set(w);
  return adj;
}

class Budgeted {
 public:
  explicit Budgeted(const OracleBudget& b) : b_(b), start_(std::chrono::steady_clock::now()) {}
  void tick() {
    if (++nodes_ > b_.max_nodes)
      throw Error(ErrorCode::Budget, "oracle node budget of " + std::to_string(b_.max_nodes) + " exceeded");
    if (b_.max_seconds > 0 && (nodes_ & 1023) == 0) {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (s > b_.max_seconds) throw Error(ErrorCode::Budget, "oracle time budget exceeded");
    }
  }
  int64_t nodes() const { return nodes_; }

 private:
  OracleBudget b_;
  std::chrono::steady_clock::time_point start_;
  int64_t nodes_ = 0;
};

void check_size(const Graph& g, const OracleBudget& b) {
  if (g.n() > b.max_vertices)
    throw Error(ErrorCode::Budget, "graph has " + std::to_string(g.n()) +
                                       " vertices, oracle budget allows " + std::to_string(b.max_vertices));
}

class MisSolver : public Budgeted {
 public:
  MisSolver(const Graph& g, const OracleBudget& b) : Budgeted(b), n_(g.n()), adj_(adjacency_bits(g)) {}

  // α of G[p]; a maximum independent set is appended to `out`.
  int solve(Bits p, VertexSet& out) {
    tick();
    VertexSet forced;
    reduce(p, forced);
    out.insert(out.end(), forced.begin(), forced.end());
    int total = static_cast<int>(forced.size());
    for (Bits& c : components(p)) {
      VertexSet best = lower_bound_set(c);
      VertexSet cur;
      branch(c, cur, best);
      out.insert(out.end(), best.begin(), best.end());
      total += static_cast<int>(best.size());
    }
    return total;
  }

 private:
  int deg(int v, const Bits& p) const { return adj_[v].count_and(p); }

  // Degree <= 1 vertices go in; a neighbor u of v with N[v] within N[u] goes out.
  void reduce(Bits& p, VertexSet& forced) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = p.first(); v >= 0 && !changed; v = next(p, v)) {
        int d = deg(v, p);
        if (d <= 1) {
          forced.push_back(v);
          p.reset(v);
          if (d == 1) p.and_not(adj_[v]);
          changed = true;
          break;
        }
        Bits nv = adj_[v];
        nv.and_with(p);
        nv.for_each([&](int u) {
          if (changed) return;
          Bits rest = nv;
          rest.reset(u);
          if (rest.subset_within(adj_[u], p)) {
            p.reset(u);
            changed = true;
          }
        });
      }
    }
  }

  int next(const Bits& p, int v) const {
    for (int u = v + 1; u < n_; ++u)
      if (p.test(u)) return u;
    return -1;
  }

  std::vector<Bits> components(const Bits& p) const {
    std::vector<Bits> out;
    Bits left = p;
    for (int s = left.first(); s >= 0; s = left.first()) {
      Bits c(n_);
      std::vector<int> stack{s};
      c.set(s);
      left.reset(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bits nb = adj_[v];
        nb.and_with(left);
        nb.for_each([&](int u) {
          c.set(u);
          left.reset(u);
          stack.push_back(u);
        });
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  VertexSet lower_bound_set(const Bits& p) const {
    VertexSet s;
    Bits left = p;
    while (left.any()) {
      int best = -1, bd = 0;
      left.for_each([&](int v) {
        int d = deg(v, left);
        if (best < 0 || d < bd) {
          best = v;
          bd = d;
        }
      });
      s.push_back(best);
      left.reset(best);
      left.and_not(adj_[best]);
    }
    return s;
  }

  // Greedy clique cover size.
  int upper_bound(const Bits& p) const {
    std::vector<Bits> cliques;
    p.for_each([&](int v) {
      for (auto& c : cliques)
        if (c.subset_within(adj_[v], c)) {
          c.set(v);
          return;
        }
      Bits c(n_);
      c.set(v);
      cliques.push_back(std::move(c));
    });
    return static_cast<int>(cliques.size());
  }

  void branch(Bits p, VertexSet& cur, VertexSet& best) {
    tick();
    size_t mark = cur.size();
    reduce(p, cur);
    auto undo = [&] { cur.resize(mark); };
    if (!p.any()) {
      if (cur.size() > best.size()) best = cur;
      return undo();
    }
    if (static_cast<int>(cur.size()) + upper_bound(p) <= static_cast<int>(best.size())) return undo();
    auto comps = components(p);
    if (comps.size() > 1) {
      VertexSet all = cur;
      for (auto& c : comps) solve(c, all);
      if (all.size() > best.size()) best = all;
      return undo();
    }
    int v = -1, vd = -1;
    p.for_each([&](int u) {
      int d = deg(u, p);
      if (d > vd) {
        v = u;
        vd = d;
      }
    });
    if (vd == 2) {
      // A cycle: every other vertex.
      std::vector<int> order{v};
      Bits seen(n_);
      seen.set(v);
      for (int x = v;;) {
        Bits nb = adj_[x];
        nb.and_with(p);
        nb.and_not(seen);
        int y = nb.first();
        if (y < 0) break;
        seen.set(y);
        order.push_back(y);
        x = y;
      }
      for (size_t i = 0; i + 1 < order.size(); i += 2) cur.push_back(order[i]);
      if (cur.size() > best.size()) best = cur;
      return undo();
    }
    Bits with = p;
    with.reset(v);
    with.and_not(adj_[v]);
    cur.push_back(v);
    branch(with, cur, best);
    cur.pop_back();
    Bits without = p;
    without.reset(v);
    branch(without, cur, best);
    undo();
  }

  int n_;
  std::vector<Bits> adj_;
};

}  // namespace

MisResult exact_mis(const Graph& g, const OracleBudget& budget) {
  check_size(g, budget);
  MisSolver s(g, budget);
  Bits all(g.n());
  for (int v = 0; v < g.n(); ++v) all.set(v);
  MisResult r;
  r.alpha = s.solve(all, r.witness);
  std::sort(r.witness.begin(), r.witness.end());
  r.nodes = s.nodes();
  if (!is_independent(g, r.witness) || static_cast<int>(r.witness.size()) != r.alpha)
    throw Error(ErrorCode::Identity, "exact_mis produced an inconsistent witness");
  return r;
}

MvcResult exact_mvc(const Graph& g, const OracleBudget& budget) {
  MisResult m = exact_mis(g, budget);
  return {g.n() - m.alpha, complement(g.n(), m.witness)};
}

namespace {

class MisEnumerator : public Budgeted {
 public:
  MisEnumerator(const Graph& g, int alpha, size_t cap, const OracleBudget& b)
      : Budgeted(b), g_(g), adj_(adjacency_bits(g)), alpha_(alpha), cap_(cap) {}

  void run(Bits p, VertexSet& cur) {
    tick();
    if (out.size() >= cap_) return;
    if (!p.any()) {
      if (static_cast<int>(cur.size()) == alpha_) {
        VertexSet s = cur;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
      return;
    }
    if (static_cast<int>(cur.size()) + p.count() < alpha_) return;
    int v = p.first();
    Bits with = p;
    with.reset(v);
    with.and_not(adj_[v]);
    cur.push_back(v);
    run(with, cur);
    cur.pop_back();
    Bits without = p;
    without.reset(v);
    run(without, cur);
  }

  std::vector<VertexSet> out;

 private:
  const Graph& g_;
  std::vector<Bits> adj_;
  int alpha_;
  size_t cap_;
};

}  // namespace

std::vector<VertexSet> maximum_independent_sets(const Graph& g, size_t cap,
                                                const OracleBudget& budget) {
  int alpha = exact_mis(g, budget).alpha;
  MisEnumerator e(g, alpha, cap, budget);
  Bits all(g.n());
  for (int v = 0; v < g.n(); ++v) all.set(v);
  VertexSet cur;
  e.run(all, cur);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

namespace {

struct Key {
  uint64_t a, b;
  bool operator==(const Key& o) const { return a == o.a && b == o.b; }
};

struct KeyHash {
  size_t operator()(const Key& k) const { return static_cast<size_t>(k.a ^ (k.b * 0x9e3779b97f4a7c15ULL)); }
};

uint64_t mix(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  return x ^ (x >> 33);
}

// Memoized DFS over every minimum-degree choice. States are live-vertex
// sets, keyed by a 128-bit hash.
// Live vertex set and degrees of a greedy execution, with undo.
class GreedyWalk : public Budgeted {
 public:
  GreedyWalk(const Graph& g, const OracleBudget& b)
      : Budgeted(b), g_(g), adj_(adjacency_bits(g)), live_(g.n()), deg_(g.n()) {
    for (int v = 0; v < g.n(); ++v) {
      live_.set(v);
      deg_[v] = g.degree(v);
    }
  }

 protected:
  // Roots worth branching on, one per distinct closed neighborhood. `skip`
  // is never offered.
  std::vector<int> candidates(int skip = -1) const {
    int dmin = -1;
    live_.for_each([&](int v) {
      if (dmin < 0 || deg_[v] < dmin) dmin = deg_[v];
    });
    std::vector<int> cands;
    live_.for_each([&](int v) {
      if (deg_[v] == dmin && v != skip) cands.push_back(v);
    });
    // A minimum-degree vertex whose closed neighborhood is a whole clique
    // component: taking it first loses nothing.
    for (int v : cands) {
      bool clique = true;
      Bits nv = closed(v);
      nv.for_each([&](int u) {
        if (clique && !(closed(u) == nv)) clique = false;
      });
      if (clique) return {v};
    }
    // True twins give the same state.
    std::vector<Bits> seen;
    std::vector<int> out;
    for (int v : cands) {
      Bits nv = closed(v);
      if (std::find(seen.begin(), seen.end(), nv) != seen.end()) continue;
      seen.push_back(std::move(nv));
      out.push_back(v);
    }
    return out;
  }

  Bits closed(int v) const {
    Bits b = adj_[v];
    b.and_with(live_);
    b.set(v);
    return b;
  }

  Key key() const {
    uint64_t a = 0x1234567, b = 0x89abcdef;
    for (size_t i = 0; i < live_.w.size(); ++i) {
      a = mix(a ^ live_.w[i]);
      b = mix(b + live_.w[i] * 0x9e3779b97f4a7c15ULL + i);
    }
    return {a, b};
  }

  std::vector<int> take(int v) {
    std::vector<int> removed;
    closed(v).for_each([&](int u) { removed.push_back(u); });
    remove(removed);
    return removed;
  }

  void remove(const std::vector<int>& vs) {
    for (int u : vs) live_.reset(u);
    for (int u : vs)
      for (int x : g_.neighbors(u))
        if (live_.test(x)) --deg_[x];
  }

  void restore(const std::vector<int>& vs) {
    for (int u : vs)
      for (int x : g_.neighbors(u))
        if (live_.test(x)) ++deg_[x];
    for (int u : vs) live_.set(u);
    // Degrees among the restored vertices themselves.
    for (int u : vs) {
      int d = 0;
      for (int x : g_.neighbors(u)) d += live_.test(x);
      deg_[u] = d;
    }
  }

  const Graph& g_;
  std::vector<Bits> adj_;
  Bits live_;
  std::vector<int> deg_;
};

class GreedySearch : public GreedyWalk {
 public:
  struct Entry {
    int16_t hi, lo;
    int32_t best_root;
  };

  using GreedyWalk::GreedyWalk;

  Entry search() {
    Key k = key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    tick();
    if (!live_.any()) return memo_[k] = {0, 0, -1};
    Entry e{-1, 0x7fff, -1};
    for (int v : candidates()) {
      auto removed = take(v);
      Entry sub = search();
      restore(removed);
      if (sub.hi + 1 > e.hi) {
        e.hi = static_cast<int16_t>(sub.hi + 1);
        e.best_root = v;
      }
      e.lo = static_cast<int16_t>(std::min<int>(e.lo, sub.lo + 1));
    }
    return memo_[k] = e;
  }

  // Roots of a maximum greedy execution, following the memo.
  std::vector<int> witness() {
    std::vector<int> roots;
    while (live_.any()) {
      int v = memo_.at(key()).best_root;
      roots.push_back(v);
      take(v);
    }
    return roots;
  }

  size_t states() const { return memo_.size(); }

 private:
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

// Depth-first search for an execution that never picks `target`.
class AvoidSearch : public GreedyWalk {
 public:
  AvoidSearch(const Graph& g, const OracleBudget& b, int target) : GreedyWalk(g, b), target_(target) {}

  bool search() {
    if (!live_.test(target_)) return true;
    // Executions of a disjoint union interleave executions of its parts
    // freely, so only the part holding the target matters.
    std::vector<int> others = outside_component();
    remove(others);
    bool found = explore();
    restore(others);
    return found;
  }

  // Roots of the avoiding execution inside the target's component. Other
  // components can be run in any order around them.
  const std::vector<int>& roots() const { return roots_; }
  size_t states() const { return failed_.size(); }

 private:
  bool explore() {
    Key k = key();
    if (failed_.count(k)) return false;
    tick();
    for (int v : candidates(target_)) {
      auto removed = take(v);
      roots_.push_back(v);
      bool found = search();
      restore(removed);
      if (found) return true;
      roots_.pop_back();
    }
    failed_.insert(k);
    return false;
  }

  std::vector<int> outside_component() const {
    Bits seen(g_.n()), frontier(g_.n());
    seen.set(target_);
    frontier.set(target_);
    while (frontier.any()) {
      Bits next(g_.n());
      frontier.for_each([&](int v) { next.or_with(adj_[v]); });
      next.and_with(live_);
      next.and_not(seen);
      seen.or_with(next);
      frontier = std::move(next);
    }
    std::vector<int> out;
    live_.for_each([&](int v) {
      if (!seen.test(v)) out.push_back(v);
    });
    return out;
  }

  int target_;
  std::vector<int> roots_;
  std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

MaxGreedyResult max_greedy(const Graph& g, OracleBudget budget) {
  check_size(g, budget);
  GreedySearch s(g, budget);
  auto e = s.search();
  MaxGreedyResult r;
  r.alpha_plus = e.hi;
  r.alpha_minus = e.lo;
  r.states = static_cast<int64_t>(s.states());
  r.witness = run_scripted(g, s.witness());
  if (r.witness.size() != r.alpha_plus)
    throw Error(ErrorCode::Identity, "max_greedy witness does not reach the reported size");
  return r;
}

AvoidResult greedy_can_avoid(const Graph& g, int v, OracleBudget budget) {
  check_size(g, budget);
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::OutOfRange, "vertex out of range");
  AvoidSearch s(g, budget, v);
  AvoidResult r;
  r.avoidable = s.search();
  r.roots = s.roots();
  r.states = static_cast<int64_t>(s.states());
  return r;
}

}  // namespace gmis
