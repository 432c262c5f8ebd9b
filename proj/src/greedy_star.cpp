// Incremental Greedy* on one connected component.
//
// Backbones, loops and cycles are kept as records in ordered sets and checked
// lazily: a record is re-walked when it reaches the front of its set and
// dropped if the structure changed. A structure can only change if one of its
// vertices lost degree, so walking from every vertex whose degree changed
// since the last degree-2 step finds all new structures.
#include <algorithm>
#include <set>
#include <tuple>

#include "gmis/error.hpp"
#include "gmis/greedy.hpp"
#include "greedy_internal.hpp"

namespace gmis {

namespace {

class StarEngine {
 public:
  StarEngine(const Graph& h, const StarOptions& opt)
      : h_(h), opt_(opt), st_(h), in_dirty_(h.n(), 0), stamp_(h.n(), 0), mark_(h.n()),
        run_of_(h.n(), -1) {
    tr_.creation_time.assign(h.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
      if (h.degree(v) <= 2) tr_.creation_time[v] = 0;
      if (h.degree(v) == 2) mark(v);
    }
    listener_ = [this](int v, int old, int nw) {
      if (old >= 3 && nw <= 2) tr_.creation_time[v] = step_;
      mark(v);
    };
  }

  ExecutionTrace run(int first_root) {
    if (first_root >= 0) {
      ExtendedReduction r;
      r.kind = Kind::Basic;
      r.roots = {first_root};
      execute(r);
    }
    while (!st_.empty()) {
      int d = st_.min_degree();
      if (d <= 1) {
        int v = *st_.bucket(d).begin();
        ExtendedReduction r;
        r.roots = {v};
        if (d == 0) {
          r.kind = Kind::Point;
        } else {
          int u = st_.live_neighbors(v)[0];
          int du = st_.degree(u);
          r.kind = du == 1 ? Kind::Edge : du == 2 ? Kind::Path : Kind::Branching;
          if (du == 1) r.alt_root = u;
        }
        execute(r);
      } else if (d == 2) {
        step_degree_two();
      } else {
        throw Error(ErrorCode::Contract, "needs-cubic-start");
      }
    }
    std::sort(tr_.solution.begin(), tr_.solution.end());
    return std::move(tr_);
  }

 private:
  struct Rec {
    WalkKind kind;
    int front, back, w, w2, len, created;
  };

  void mark(int v) {
    if (!in_dirty_[v]) {
      in_dirty_[v] = 1;
      dirty_.push_back(v);
    }
  }

  void execute(const ExtendedReduction& r) {
    ++step_;
    ExtendedReduction done = execute_reduction(st_, r, listener_);
    for (int v : done.roots) tr_.solution.push_back(v);
    tr_.component.push_back(0);
    tr_.reductions.push_back(std::move(done));
  }

  void process_dirty() {
    ++round_;
    for (int v : dirty_) {
      in_dirty_[v] = 0;
      if (!st_.live(v) || st_.degree(v) != 2 || stamp_[v] == round_) continue;
      Walk w = walk_degree_two(st_, v);
      for (int u : w.internal) stamp_[u] = round_;
      add_record(w);
    }
    dirty_.clear();
  }

  void add_record(const Walk& w) {
    int created = 0;
    for (int u : w.internal) created = std::max(created, tr_.creation_time[u]);
    int id = static_cast<int>(recs_.size());
    recs_.push_back({w.kind, w.internal.front(), w.internal.back(), w.w, w.w2,
                     static_cast<int>(w.internal.size()), created});
    rec_seen_.push_back(0);
    for (int u : w.internal) run_of_[u] = id;
    switch (w.kind) {
      case WalkKind::Cycle:
      case WalkKind::Loop: cyc_loop_.emplace(w.internal.front(), id); break;
      case WalkKind::Backbone:
        if (w.internal.size() % 2 == 1) {
          even_.emplace(w.internal.front(), id);
        } else {
          odd_.emplace(-created, w.internal.front(), id);
          odd_.emplace(-created, w.internal.back(), id);
        }
        break;
      case WalkKind::Open: break;
    }
  }

  // Re-walks the record; returns true and fills `out` if it is unchanged.
  bool valid(int id, Walk& out) {
    const Rec& r = recs_[id];
    if (!st_.live(r.front) || st_.degree(r.front) != 2) return false;
    out = walk_degree_two(st_, r.front);
    return out.kind == r.kind && out.internal.front() == r.front && out.internal.back() == r.back &&
           static_cast<int>(out.internal.size()) == r.len && out.w == r.w && out.w2 == r.w2;
  }

  void step_degree_two() {
    process_dirty();
    Walk w;
    while (!cyc_loop_.empty()) {
      auto [root, id] = *cyc_loop_.begin();
      cyc_loop_.erase(cyc_loop_.begin());
      if (!valid(id, w)) continue;
      execute(outline(w.kind == WalkKind::Cycle ? Kind::Cycle : Kind::Loop, w));
      return;
    }
    while (!even_.empty()) {
      auto [root, id] = *even_.begin();
      if (!valid(id, w)) {
        even_.erase(even_.begin());
        continue;
      }
      even_rule(root);
      return;
    }
    while (!odd_.empty()) {
      auto [neg, root, id] = *odd_.begin();
      odd_.erase(odd_.begin());
      if (!valid(id, w)) continue;
      execute(outline(Kind::OddBackbone, w, root == w.internal.front()));
      return;
    }
    throw Error(ErrorCode::Contract, "no reduction available at minimum degree two");
  }

  // Farthest even backbone from the anchor in the contracted component of `root0`.
  // Runs once per even-backbone step, so it avoids allocation and re-walking.
  void even_rule(int root0) {
    // The smallest degree-3 vertex overall is the anchor whenever it shares
    // the component of root0; otherwise scan that component.
    if (!bfs_from(*st_.bucket(3).begin(), root0)) {
      ++bfs_round_;
      int anchor = -1;
      stack_.assign(1, root0);
      mark_[root0].stamp = bfs_round_;
      while (!stack_.empty()) {
        int v = stack_.back();
        stack_.pop_back();
        if (st_.degree(v) >= 3 && (anchor < 0 || v < anchor)) anchor = v;
        for (int x : h_.neighbors(v))
          if (mark_[x].stamp != bfs_round_ && st_.live(x)) {
            mark_[x].stamp = bfs_round_;
            stack_.push_back(x);
          }
      }
      bfs_from(anchor, root0);
    }
    int best = -1, best_d = -1;
    for (auto [front, d] : evens_) {
      if (d > best_d || (d == best_d && front < best)) {
        best = front;
        best_d = d;
      }
    }
    ExtendedReduction r = outline(Kind::EvenBackbone, walk_degree_two(st_, best));
    if (opt_.validate_even_rule) {
      ExtendedReduction planned = plan_reduction(st_, r.kind, r.roots, r.path, r.alt_root);
      if (!even_rule_separation_holds(st_, planned))
        throw Error(ErrorCode::Contract, "even-backbone choice violates the separation property");
    }
    execute(r);
  }

  // Shortest paths in the graph where each even backbone is one node, run
  // over the degree-3 vertices only: crossing an even backbone costs 2 and
  // crossing any other backbone of b vertices costs b + 1. Returns whether the
  // backbone through `target` was reached.
  bool bfs_from(int anchor, int target) {
    ++bfs_round_;
    evens_.clear();
    auto relax = [&](int v, int d) {
      if (mark_[v].stamp == bfs_round_ && mark_[v].dist <= d) return;
      mark_[v] = {bfs_round_, d};
      if (static_cast<int>(queue_.size()) <= d) queue_.resize(d + 1);
      queue_[d].push_back(v);
      ++pending_;
    };
    relax(anchor, 0);
    for (int d = 0; pending_ > 0; ++d) {
      for (size_t i = 0; i < queue_[d].size(); ++i) {
        int w = queue_[d][i];
        --pending_;
        if (mark_[w].dist != d) continue;
        for (int x : h_.neighbors(w)) {
          if (!st_.live(x)) continue;
          if (st_.degree(x) != 2) {
            relax(x, d + 1);
            continue;
          }
          int id = run_of_[x];
          const Rec& r = recs_[id];
          int far = r.w == w ? r.w2 : r.w;
          if (r.len % 2 == 1) {
            if (rec_seen_[id] != bfs_round_) {
              rec_seen_[id] = bfs_round_;
              evens_.emplace_back(r.front, d + 1);
            }
            relax(far, d + 2);
          } else {
            relax(far, d + r.len + 1);
          }
        }
      }
      queue_[d].clear();
    }
    return rec_seen_[run_of_[target]] == bfs_round_;
  }

  const Graph& h_;
  StarOptions opt_;
  GraphState st_;
  ExecutionTrace tr_;
  DegreeListener listener_;
  int step_ = 0;

  std::vector<int> dirty_;
  std::vector<char> in_dirty_;
  std::vector<int> stamp_;
  int round_ = 0;

  std::vector<Rec> recs_;
  std::set<std::pair<int, int>> cyc_loop_, even_;
  std::set<std::tuple<int, int, int>> odd_;

  // Per-vertex scratch of the even rule, packed for locality.
  struct Mark {
    int stamp = 0, dist = 0;
  };
  std::vector<Mark> mark_;
  std::vector<int> stack_;
  std::vector<std::pair<int, int>> evens_;  // (front, distance)
  std::vector<std::vector<int>> queue_;
  long long pending_ = 0;
  std::vector<int> run_of_, rec_seen_;
  int bfs_round_ = 0;
};

bool all_cubic(const Graph& h) {
  if (h.n() == 0) return false;
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) != 3) return false;
  return true;
}

}  // namespace

ExecutionTrace greedy_star(const Graph& g, const StarOptions& opt) {
  check_subcubic(g);
  return run_components(g, [&](const Graph& h) {
    if (all_cubic(h))
      return best_cubic_start(h, [&](int v) { return StarEngine(h, opt).run(v); });
    return StarEngine(h, opt).run(-1);
  });
}

}  // namespace gmis
