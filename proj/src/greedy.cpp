#include "gmis/greedy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "gmis/error.hpp"
#include "greedy_internal.hpp"

namespace gmis {

namespace {

class SmallestIdAdvice : public BasicAdvice {
 public:
  int choose(const GraphState&, const ExecutionTrace&, const std::set<int>& c) override {
    return *c.begin();
  }
};

class MoreEdgesAdvice : public BasicAdvice {
 public:
  int choose(const GraphState& st, const ExecutionTrace&, const std::set<int>& c) override {
    for (int v : c) {
      if (st.degree(v) != 2) break;
      for (int w : st.graph().neighbors(v))
        if (st.live(w) && st.degree(w) == 3) return v;
    }
    return *c.begin();
  }
};

class ScriptedAdvice : public BasicAdvice {
 public:
  explicit ScriptedAdvice(const std::vector<int>& roots) : roots_(roots) {}
  int choose(const GraphState&, const ExecutionTrace&, const std::set<int>&) override {
    if (next_ >= roots_.size()) throw Error(ErrorCode::Contract, "script ended before the graph");
    return roots_[next_++];
  }

 private:
  const std::vector<int>& roots_;
  size_t next_ = 0;
};

Kind kind_for_tag(const std::string& tag) {
  if (tag == "0.a") return Kind::Point;
  if (tag == "1.a") return Kind::Edge;
  if (tag == "1.b") return Kind::Path;
  if (tag == "1.c") return Kind::Branching;
  if (tag == "2.a") return Kind::Cycle;
  return Kind::Basic;
}

struct Recorder {
  GraphState st;
  ExecutionTrace tr;
  int step = 0;
  DegreeListener listener;

  explicit Recorder(const Graph& g) : st(g) {
    tr.creation_time.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) <= 2) tr.creation_time[v] = 0;
    listener = [this](int v, int old, int nw) {
      if (old >= 3 && nw <= 2) tr.creation_time[v] = step;
    };
  }

  void run(const ExtendedReduction& r) {
    ++step;
    ExtendedReduction done = execute_reduction(st, r, listener);
    for (int v : done.roots) tr.solution.push_back(v);
    tr.component.push_back(0);
    tr.reductions.push_back(std::move(done));
  }

  ExecutionTrace finish() {
    std::sort(tr.solution.begin(), tr.solution.end());
    return std::move(tr);
  }
};

void remap(ExtendedReduction& r, const std::vector<int>& to_old) {
  auto m = [&](int& v) {
    if (v >= 0) v = to_old[v];
  };
  for (auto& b : r.basics) {
    m(b.root);
    for (int& v : b.ground) m(v);
    for (int& v : b.middle) m(v);
    for (auto& [a, c] : b.contact_edges) {
      m(a);
      m(c);
    }
  }
  for (int& v : r.roots) m(v);
  for (int& v : r.ground) m(v);
  for (int& v : r.contacts) m(v);
  for (int& v : r.path) m(v);
  m(r.alt_root);
}

std::vector<int> component_of(const GraphState& st, int src) {
  std::vector<int> comp{src};
  std::vector<char> seen(st.n(), 0);
  seen[src] = 1;
  for (size_t i = 0; i < comp.size(); ++i)
    for (int w : st.graph().neighbors(comp[i]))
      if (st.live(w) && !seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
  return comp;
}

}  // namespace

std::unique_ptr<BasicAdvice> smallest_id_advice() { return std::make_unique<SmallestIdAdvice>(); }
std::unique_ptr<BasicAdvice> more_edges_advice() { return std::make_unique<MoreEdgesAdvice>(); }

ExecutionTrace run_greedy(const Graph& g, BasicAdvice& advice) {
  Recorder rec(g);
  auto comps = connected_components(g);
  std::vector<int> comp_id(g.n());
  for (size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) comp_id[v] = static_cast<int>(i);
  while (!rec.st.empty()) {
    const auto& cands = rec.st.bucket(rec.st.min_degree());
    int v = advice.choose(rec.st, rec.tr, cands);
    if (!cands.count(v))
      throw Error(ErrorCode::Contract, "advice returned non-candidate vertex " + std::to_string(v));
    ExtendedReduction r;
    r.kind = Kind::Basic;
    r.roots = {v};
    rec.run(r);
    auto& done = rec.tr.reductions.back();
    done.kind = kind_for_tag(done.basics[0].tag);
    if (done.kind == Kind::Edge) done.alt_root = done.basics[0].middle[0];
    rec.tr.component.back() = comp_id[v];
  }
  return rec.finish();
}

ExecutionTrace run_extended(const Graph& g, ExtendedAdvice& advice) {
  Recorder rec(g);
  auto comps = connected_components(g);
  std::vector<int> comp_id(g.n());
  for (size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) comp_id[v] = static_cast<int>(i);
  while (!rec.st.empty()) {
    std::vector<ExtendedReduction> cands;
    if (rec.st.min_degree() <= 2) {
      cands = enumerate_extended(rec.st);
    } else {
      for (int v : rec.st.bucket(rec.st.min_degree()))
        cands.push_back(plan_reduction(rec.st, Kind::Basic, {v}));
    }
    size_t idx = advice.choose(rec.st, rec.tr, cands);
    if (idx >= cands.size()) throw Error(ErrorCode::Contract, "advice returned a non-candidate");
    rec.run(cands[idx]);
    rec.tr.component.back() = comp_id[cands[idx].root()];
  }
  return rec.finish();
}

ExecutionTrace run_scripted(const Graph& g, const std::vector<int>& roots) {
  ScriptedAdvice a(roots);
  return run_greedy(g, a);
}

ExecutionTrace basic_greedy(const Graph& g) {
  auto a = smallest_id_advice();
  return run_greedy(g, *a);
}

ExecutionTrace more_edges(const Graph& g) {
  auto a = more_edges_advice();
  return run_greedy(g, *a);
}

ExecutionTrace run_components(const Graph& g,
                              const std::function<ExecutionTrace(const Graph&)>& algo) {
  ExecutionTrace out;
  out.creation_time.assign(g.n(), -1);
  auto comps = connected_components(g);
  std::vector<int> pos(g.n(), -1);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    // Components are closed under adjacency, so one shared index map suffices.
    Subgraph sub;
    sub.to_old = comps[ci];
    for (int i = 0; i < static_cast<int>(sub.to_old.size()); ++i) pos[sub.to_old[i]] = i;
    std::vector<Edge> es;
    for (int i = 0; i < static_cast<int>(sub.to_old.size()); ++i)
      for (int w : g.neighbors(sub.to_old[i]))
        if (pos[w] > i) es.emplace_back(i, pos[w]);
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_old.size()), std::move(es));
    ExecutionTrace t = algo(sub.graph);
    int offset = static_cast<int>(out.reductions.size());
    for (int nv = 0; nv < sub.graph.n(); ++nv) {
      int ct = t.creation_time[nv];
      out.creation_time[sub.to_old[nv]] = ct > 0 ? ct + offset : ct;
    }
    for (auto& r : t.reductions) {
      remap(r, sub.to_old);
      out.reductions.push_back(std::move(r));
      out.component.push_back(static_cast<int>(ci));
    }
    for (int v : t.solution) out.solution.push_back(sub.to_old[v]);
  }
  std::sort(out.solution.begin(), out.solution.end());
  return out;
}

std::string check_greedy_trace(const Graph& g, const ExecutionTrace& trace) {
  std::ostringstream err;
  GraphState st(g);
  auto comps = connected_components(g);
  std::vector<int> comp_id(g.n());
  for (size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) comp_id[v] = static_cast<int>(i);
  VertexSet roots;
  for (size_t s = 0; s < trace.reductions.size(); ++s) {
    const auto& r = trace.reductions[s];
    if (r.basics.size() != r.roots.size()) return "step " + std::to_string(s + 1) + ": basic count mismatch";
    for (const auto& b : r.basics) {
      if (!st.live(b.root)) return "step " + std::to_string(s + 1) + ": root not live";
      int cmin = -1;
      for (int v : comps[comp_id[b.root]])
        if (st.live(v) && (cmin < 0 || st.degree(v) < cmin)) cmin = st.degree(v);
      if (st.degree(b.root) != cmin)
        return "step " + std::to_string(s + 1) + ": root " + std::to_string(b.root) +
               " has degree " + std::to_string(st.degree(b.root)) + ", minimum is " + std::to_string(cmin);
      VertexSet ground = st.live_neighbors(b.root);
      ground.insert(std::lower_bound(ground.begin(), ground.end(), b.root), b.root);
      if (ground != b.ground) return "step " + std::to_string(s + 1) + ": ground mismatch";
      st.remove(ground);
      roots.push_back(b.root);
    }
  }
  if (!st.empty()) return "grounds do not cover the vertex set";
  std::sort(roots.begin(), roots.end());
  if (roots != trace.solution) return "solution differs from the union of roots";
  if (!is_maximal_independent(g, trace.solution)) return "solution is not a maximal independent set";
  return {};
}

ExtendedReduction select_even_backbone(const GraphState& st) {
  auto cands = enumerate_extended(st);
  if (cands.empty() || priority_class(cands.front().kind) != 2)
    throw Error(ErrorCode::Contract, "priority reduction is not an even backbone");
  // Component of the smallest even-backbone root.
  auto comp = component_of(st, cands.front().root());
  std::vector<char> in_comp(st.n(), 0);
  for (int v : comp) in_comp[v] = 1;
  int anchor = -1;
  for (int v : comp)
    if (st.degree(v) >= 3 && (anchor < 0 || v < anchor)) anchor = v;
  // Contract every even backbone of the component to one node.
  std::map<int, int> node;
  std::vector<const ExtendedReduction*> evens;
  for (auto& r : cands)
    if (r.kind == Kind::EvenBackbone && in_comp[r.root()]) {
      int id = -1 - static_cast<int>(evens.size());
      for (int v : r.path) node[v] = id;
      evens.push_back(&r);
    }
  auto node_of = [&](int v) {
    auto it = node.find(v);
    return it == node.end() ? v : it->second;
  };
  std::map<int, std::set<int>> adj;
  for (int v : comp)
    for (int w : st.graph().neighbors(v))
      if (st.live(w) && node_of(v) != node_of(w)) adj[node_of(v)].insert(node_of(w));
  std::map<int, int> dist{{anchor, 0}};
  std::deque<int> q{anchor};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adj[x])
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  const ExtendedReduction* best = nullptr;
  int best_d = -1;
  for (size_t i = 0; i < evens.size(); ++i) {
    int d = dist.at(-1 - static_cast<int>(i));
    if (d > best_d || (d == best_d && evens[i]->root() < best->root())) {
      best = evens[i];
      best_d = d;
    }
  }
  return *best;
}

ExtendedReduction select_odd_backbone(const GraphState& st, const ExecutionTrace& trace) {
  auto cands = enumerate_extended(st);
  if (cands.empty() || priority_class(cands.front().kind) != 3)
    throw Error(ErrorCode::Contract, "priority reduction is not an odd backbone");
  const ExtendedReduction* best = nullptr;
  int best_t = -1;
  for (auto& r : cands) {
    if (r.kind != Kind::OddBackbone) continue;
    int t = 0;
    for (int v : r.path) t = std::max(t, trace.creation_time[v]);
    if (t > best_t || (t == best_t && r.root() < best->root())) {
      best = &r;
      best_t = t;
    }
  }
  return *best;
}

size_t GreedyStarAdvice::choose(const GraphState& st, const ExecutionTrace& trace,
                                const std::vector<ExtendedReduction>& cands) {
  auto find_root = [&](Kind k, int root) -> size_t {
    for (size_t i = 0; i < cands.size(); ++i)
      if (cands[i].kind == k && cands[i].root() == root) return i;
    throw Error(ErrorCode::Contract, "selected reduction missing from candidates");
  };
  if (st.min_degree() >= 3) {
    if (first_root_ < 0) throw Error(ErrorCode::Contract, "cubic state needs a first root");
    return find_root(Kind::Basic, first_root_);
  }
  int c = priority_class(cands.front().kind);
  if (c <= 1) return 0;
  if (c == 2) return find_root(Kind::EvenBackbone, select_even_backbone(st).root());
  return find_root(Kind::OddBackbone, select_odd_backbone(st, trace).root());
}

namespace {

bool all_cubic(const Graph& h) {
  if (h.n() == 0) return false;
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) != 3) return false;
  return true;
}

}  // namespace

// Runs `from(root)` for every root in N[0] and keeps the largest; the earliest wins ties.
ExecutionTrace best_cubic_start(const Graph& h, const std::function<ExecutionTrace(int)>& from) {
  std::vector<int> starts{0};
  for (int w : h.neighbors(0)) starts.push_back(w);
  std::sort(starts.begin(), starts.end());
  ExecutionTrace best;
  bool have = false;
  for (int v : starts) {
    ExecutionTrace t = from(v);
    if (!have || t.size() > best.size()) {
      best = std::move(t);
      have = true;
    }
  }
  return best;
}

void check_subcubic(const Graph& g) {
  if (g.max_degree() > 3)
    throw Error(ErrorCode::DegreeBound,
                "input has maximum degree " + std::to_string(g.max_degree()) + ", expected <= 3");
}

ExecutionTrace greedy_star_reference(const Graph& g) {
  check_subcubic(g);
  return run_components(g, [](const Graph& h) {
    if (all_cubic(h))
      return best_cubic_start(h, [&](int v) {
        GreedyStarAdvice a(v);
        return run_extended(h, a);
      });
    GreedyStarAdvice a;
    return run_extended(h, a);
  });
}

bool even_rule_separation_holds(const GraphState& st, const ExtendedReduction& chosen) {
  auto comp = component_of(st, chosen.root());
  std::vector<char> blocked(st.n(), 0), in_comp(st.n(), 0);
  for (int v : chosen.ground) blocked[v] = 1;
  for (int v : comp) in_comp[v] = 1;
  std::vector<int> label(st.n(), -1);
  int labels = 0;
  for (int s : comp) {
    if (blocked[s] || label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = labels;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : st.graph().neighbors(v))
        if (st.live(w) && !blocked[w] && label[w] < 0) {
          label[w] = labels;
          stack.push_back(w);
        }
    }
    ++labels;
  }
  std::set<int> spanned;
  std::vector<char> seen(st.n(), 0);
  for (int v : comp) {
    if (seen[v] || blocked[v] || st.degree(v) != 2) continue;
    Walk w = walk_degree_two(st, v);
    for (int u : w.internal) seen[u] = 1;
    if (w.kind != WalkKind::Backbone || w.internal.size() % 2 == 0) continue;
    int r = w.internal.front(), r2 = w.internal.back();
    if (std::binary_search(chosen.contacts.begin(), chosen.contacts.end(), r) ||
        std::binary_search(chosen.contacts.begin(), chosen.contacts.end(), r2))
      continue;
    spanned.insert(label[r]);
  }
  return spanned.size() <= 1;
}

}  // namespace gmis
