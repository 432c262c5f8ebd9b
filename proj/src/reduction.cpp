#include "gmis/reduction.hpp"

#include <algorithm>
#include <unordered_set>

#include "gmis/error.hpp"

namespace gmis {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Point: return "Point";
    case Kind::Edge: return "Edge";
    case Kind::Path: return "Path";
    case Kind::Branching: return "Branching";
    case Kind::Loop: return "Loop";
    case Kind::Cycle: return "Cycle";
    case Kind::EvenBackbone: return "EvenBackbone";
    case Kind::OddBackbone: return "OddBackbone";
    case Kind::Basic: return "Basic";
  }
  return "?";
}

std::optional<Kind> kind_from_name(std::string_view s) {
  for (Kind k : {Kind::Point, Kind::Edge, Kind::Path, Kind::Branching, Kind::Loop, Kind::Cycle,
                 Kind::EvenBackbone, Kind::OddBackbone, Kind::Basic})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

int priority_class(Kind k) {
  switch (k) {
    case Kind::Point:
    case Kind::Edge:
    case Kind::Path:
    case Kind::Branching: return 0;
    case Kind::Cycle:
    case Kind::Loop: return 1;
    case Kind::EvenBackbone: return 2;
    case Kind::OddBackbone: return 3;
    case Kind::Basic: return 4;
  }
  return 4;
}

namespace {

// Live view of a state with some vertices virtually removed.
struct View {
  const GraphState& st;
  const std::unordered_set<int>* gone = nullptr;

  bool live(int v) const { return st.live(v) && !(gone && gone->count(v)); }
  std::vector<int> nbrs(int v) const {
    std::vector<int> out;
    for (int w : st.graph().neighbors(v))
      if (live(w)) out.push_back(w);
    return out;
  }
  int degree(int v) const {
    if (!gone || gone->empty()) return st.degree(v);
    int d = 0;
    for (int w : st.graph().neighbors(v))
      if (live(w)) ++d;
    return d;
  }
};

std::string tag_of(const View& vw, int root, const std::vector<int>& middle) {
  int d = static_cast<int>(middle.size());
  if (d == 0) return "0.a";
  if (d == 1) {
    int md = vw.degree(middle[0]);
    return md == 1 ? "1.a" : md == 2 ? "1.b" : "1.c";
  }
  if (d == 2) {
    int a = vw.degree(middle[0]), b = vw.degree(middle[1]);
    if (a > b) std::swap(a, b);
    if (a < 2) return "2.x";
    bool adj = vw.st.graph().has_edge(middle[0], middle[1]);
    int hi = b >= 3 ? 3 : 2;
    if (adj) return a == 2 ? (hi == 2 ? "2.a" : "2.b") : "2.c";
    return a == 2 ? (hi == 2 ? "2.d" : "2.e") : "2.f";
  }
  (void)root;
  return std::to_string(d) + ".x";
}

BasicReduction build_basic(const View& vw, int root) {
  BasicReduction b;
  b.root = root;
  b.middle = vw.nbrs(root);
  b.degree = static_cast<int>(b.middle.size());
  b.ground = b.middle;
  b.ground.insert(std::lower_bound(b.ground.begin(), b.ground.end(), root), root);
  for (int u : b.ground) b.ground_degree.push_back(vw.degree(u));
  for (int m : b.middle)
    for (int x : vw.nbrs(m))
      if (!std::binary_search(b.ground.begin(), b.ground.end(), x)) b.contact_edges.emplace_back(m, x);
  b.tag = tag_of(vw, root, b.middle);
  return b;
}

void finish(ExtendedReduction& r) {
  VertexSet g;
  for (auto& b : r.basics) g.insert(g.end(), b.ground.begin(), b.ground.end());
  std::sort(g.begin(), g.end());
  r.ground = std::move(g);
  VertexSet c;
  for (auto& b : r.basics)
    for (auto [m, x] : b.contact_edges)
      if (!std::binary_search(r.ground.begin(), r.ground.end(), x)) c.push_back(x);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  r.contacts = std::move(c);
}

std::vector<int> every_other(const std::vector<int>& seq, size_t len) {
  std::vector<int> out;
  for (size_t i = 0; i < len; i += 2) out.push_back(seq[i]);
  return out;
}

}  // namespace

Walk walk_degree_two(const GraphState& st, int v) {
  if (!st.live(v) || st.degree(v) != 2)
    throw Error(ErrorCode::Contract, "walk start " + std::to_string(v) + " is not a live degree-2 vertex");
  auto nb = st.live_neighbors(v);
  // Extend from v through neighbor `first`; returns visited degree-2 vertices and the stop vertex.
  auto extend = [&](int first, std::vector<int>& seq) -> int {
    int prev = v, cur = first;
    while (cur != v && st.degree(cur) == 2) {
      seq.push_back(cur);
      auto cn = st.live_neighbors(cur);
      int nxt = cn[0] == prev ? cn[1] : cn[0];
      prev = cur;
      cur = nxt;
    }
    return cur;
  };
  Walk w;
  std::vector<int> right;
  int stop = extend(nb[1], right);
  if (stop == v) {
    w.kind = WalkKind::Cycle;
    std::vector<int> cyc{v};
    cyc.insert(cyc.end(), right.begin(), right.end());
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    w.internal = std::move(cyc);
    return w;
  }
  std::vector<int> left;
  int stop_left = extend(nb[0], left);
  std::reverse(left.begin(), left.end());
  w.internal = std::move(left);
  w.internal.push_back(v);
  w.internal.insert(w.internal.end(), right.begin(), right.end());
  w.w = stop_left;
  w.w2 = stop;
  if (w.internal.front() > w.internal.back() ||
      (w.internal.size() == 1 && w.w > w.w2)) {
    std::reverse(w.internal.begin(), w.internal.end());
    std::swap(w.w, w.w2);
  }
  if (st.degree(w.w) < 3 || st.degree(w.w2) < 3)
    w.kind = WalkKind::Open;
  else
    w.kind = w.w == w.w2 ? WalkKind::Loop : WalkKind::Backbone;
  return w;
}

BasicReduction classify_basic(const GraphState& st, int v) {
  if (v < 0 || v >= st.n() || !st.live(v))
    throw Error(ErrorCode::Contract, "vertex " + std::to_string(v) + " is not live");
  if (st.degree(v) != st.min_degree())
    throw Error(ErrorCode::Contract, "vertex " + std::to_string(v) + " does not have minimum degree");
  return build_basic(View{st}, v);
}

Backbone find_backbone(const GraphState& st, int v) {
  Walk w = walk_degree_two(st, v);
  if (w.kind == WalkKind::Cycle) throw Error(ErrorCode::Contract, "pure-cycle");
  if (w.kind == WalkKind::Open) throw Error(ErrorCode::Contract, "not a backbone: path ends below degree 3");
  Backbone b;
  b.w = w.w;
  b.w2 = w.w2;
  b.internal = std::move(w.internal);
  b.loop = w.kind == WalkKind::Loop;
  return b;
}

std::vector<Backbone> enumerate_backbones(const GraphState& st) {
  std::vector<Backbone> out;
  std::vector<char> seen(st.n(), 0);
  for (int v : st.bucket(2)) {
    if (seen[v]) continue;
    Walk w = walk_degree_two(st, v);
    for (int u : w.internal) seen[u] = 1;
    if (w.kind != WalkKind::Loop && w.kind != WalkKind::Backbone) continue;
    Backbone b;
    b.w = w.w;
    b.w2 = w.w2;
    b.internal = std::move(w.internal);
    b.loop = w.kind == WalkKind::Loop;
    out.push_back(std::move(b));
  }
  return out;
}

ExtendedReduction plan_reduction(const GraphState& st, Kind kind, std::vector<int> roots,
                                 std::vector<int> path, int alt_root) {
  ExtendedReduction r;
  r.kind = kind;
  r.roots = std::move(roots);
  r.path = std::move(path);
  r.alt_root = alt_root;
  std::unordered_set<int> gone;
  View vw{st, &gone};
  for (int root : r.roots) {
    if (!vw.live(root))
      throw Error(ErrorCode::Contract, "planned root " + std::to_string(root) + " is not live");
    BasicReduction b = build_basic(vw, root);
    for (int u : b.ground) gone.insert(u);
    r.basics.push_back(std::move(b));
  }
  finish(r);
  return r;
}

ExtendedReduction outline(Kind kind, const Walk& w, bool from_front) {
  ExtendedReduction r;
  r.kind = kind;
  r.path = w.internal;
  if (!from_front) std::reverse(r.path.begin(), r.path.end());
  const auto& p = r.path;
  switch (kind) {
    case Kind::Cycle:
      r.roots = every_other(p, p.size() - 1);
      break;
    case Kind::Loop:
    case Kind::EvenBackbone:
      r.roots = every_other(p, p.size());
      if (p.size() >= 2) r.alt_root = p.back();
      break;
    case Kind::OddBackbone:
      r.roots = every_other(p, p.size());
      break;
    default:
      throw Error(ErrorCode::InvalidArgument, "outline needs a walk-based kind");
  }
  return r;
}

namespace {
ExtendedReduction plan_outline(const GraphState& st, ExtendedReduction o) {
  return plan_reduction(st, o.kind, std::move(o.roots), std::move(o.path), o.alt_root);
}
}  // namespace

ExtendedReduction make_cycle(const GraphState& st, const Walk& w) {
  return plan_outline(st, outline(Kind::Cycle, w));
}

ExtendedReduction make_loop(const GraphState& st, const Walk& w) {
  return plan_outline(st, outline(Kind::Loop, w));
}

ExtendedReduction make_even_backbone(const GraphState& st, const Walk& w) {
  return plan_outline(st, outline(Kind::EvenBackbone, w));
}

ExtendedReduction make_odd_backbone(const GraphState& st, const Walk& w, bool from_front) {
  return plan_outline(st, outline(Kind::OddBackbone, w, from_front));
}

ExtendedReduction make_low_degree(const GraphState& st, int v) {
  int d = st.degree(v);
  if (d == 0) return plan_reduction(st, Kind::Point, {v});
  if (d != 1) throw Error(ErrorCode::Contract, "low-degree reduction needs degree <= 1");
  int u = st.live_neighbors(v)[0];
  int du = st.degree(u);
  if (du == 1) return plan_reduction(st, Kind::Edge, {v}, {}, u);
  return plan_reduction(st, du == 2 ? Kind::Path : Kind::Branching, {v});
}

std::vector<ExtendedReduction> enumerate_extended(const GraphState& st) {
  std::vector<ExtendedReduction> out;
  int d = st.min_degree();
  if (d < 0) return out;
  if (d >= 3) throw Error(ErrorCode::Contract, "needs-cubic-start");
  if (d <= 1) {
    for (int v : st.bucket(d)) {
      if (d == 1) {
        int u = st.live_neighbors(v)[0];
        if (st.degree(u) == 1 && u < v) continue;
      }
      out.push_back(make_low_degree(st, v));
    }
    return out;
  }
  std::vector<char> seen(st.n(), 0);
  for (int v : st.bucket(2)) {
    if (seen[v]) continue;
    Walk w = walk_degree_two(st, v);
    for (int u : w.internal) seen[u] = 1;
    switch (w.kind) {
      case WalkKind::Cycle: out.push_back(make_cycle(st, w)); break;
      case WalkKind::Loop: out.push_back(make_loop(st, w)); break;
      case WalkKind::Backbone:
        if (w.internal.size() % 2 == 1) {
          out.push_back(make_even_backbone(st, w));
        } else {
          out.push_back(make_odd_backbone(st, w, true));
          out.push_back(make_odd_backbone(st, w, false));
        }
        break;
      case WalkKind::Open: break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ExtendedReduction& a, const ExtendedReduction& b) {
    int ca = priority_class(a.kind), cb = priority_class(b.kind);
    if (ca != cb) return ca < cb;
    return a.root() < b.root();
  });
  return out;
}

ExtendedReduction execute_reduction(GraphState& st, const ExtendedReduction& r,
                                    const DegreeListener& on_drop) {
  ExtendedReduction done;
  done.kind = r.kind;
  done.roots = r.roots;
  done.path = r.path;
  done.alt_root = r.alt_root;
  if (!r.basics.empty() && r.basics.size() != r.roots.size())
    throw Error(ErrorCode::Contract, "reduction has inconsistent basic sequence");
  for (size_t i = 0; i < r.roots.size(); ++i) {
    int root = r.roots[i];
    if (root < 0 || root >= st.n() || !st.live(root))
      throw Error(ErrorCode::Contract, "stale reduction: root " + std::to_string(root) + " not live");
    BasicReduction b = build_basic(View{st}, root);
    if (!r.basics.empty() && r.basics[i].ground != b.ground)
      throw Error(ErrorCode::Contract, "stale reduction: ground changed at root " + std::to_string(root));
    st.remove(b.ground, on_drop);
    done.basics.push_back(std::move(b));
  }
  finish(done);
  return done;
}

}  // namespace gmis
