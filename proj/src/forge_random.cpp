#include <algorithm>
#include <set>

#include "gmis/error.hpp"
#include "gmis/forge.hpp"

namespace gmis {

uint64_t SplitMix64::next() {
  uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) return 0;
  // Rejection keeps the draw unbiased.
  uint64_t limit = ~0ULL - (~0ULL % bound);
  uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

namespace {

Graph capped_insertion(int n, int cap, bool triangle_free, SplitMix64& rng) {
  long long most = static_cast<long long>(n) * cap / 2;
  long long lo = std::max(0, n - 1);
  long long target = lo >= most ? most : lo + static_cast<long long>(rng.below(most - lo + 1));
  std::vector<std::set<int>> adj(n);
  std::vector<Edge> edges;
  long long attempts = 30 * (target + 1);
  while (static_cast<long long>(edges.size()) < target && attempts-- > 0) {
    int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
    if (u == v || adj[u].count(v)) continue;
    if (static_cast<int>(adj[u].size()) >= cap || static_cast<int>(adj[v].size()) >= cap) continue;
    if (triangle_free) {
      bool closes = false;
      for (int w : adj[u])
        if (adj[v].count(w)) {
          closes = true;
          break;
        }
      if (closes) continue;
    }
    adj[u].insert(v);
    adj[v].insert(u);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, edges);
}

Graph pairing_cubic(int n, SplitMix64& rng) {
  for (;;) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < 3; ++j) points.push_back(v);
    for (size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng.below(i)]);
    std::set<Edge> seen;
    bool ok = true;
    for (size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second) ok = false;
    }
    if (ok) return Graph::from_edges(n, std::vector<Edge>(seen.begin(), seen.end()));
  }
}

}  // namespace

Graph gen_random(const RandomSpec& spec) {
  if (spec.n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  int cap = spec.kind == RandomKind::Subcubic || spec.kind == RandomKind::Cubic ? 3 : spec.delta;
  if (cap < 0) throw Error(ErrorCode::InvalidArgument, "negative degree cap");
  if (spec.kind == RandomKind::Cubic && (spec.n % 2 != 0 || spec.n < 4))
    throw Error(ErrorCode::InvalidArgument, "cubic graphs need an even n >= 4");
  if (spec.connected && spec.n > 1 && cap < (spec.n > 2 ? 2 : 1))
    throw Error(ErrorCode::InvalidArgument, "degree cap too small for a connected graph");
  SplitMix64 rng(spec.seed);
  for (;;) {
    Graph g = spec.kind == RandomKind::Cubic
                  ? pairing_cubic(spec.n, rng)
                  : capped_insertion(spec.n, cap, spec.kind == RandomKind::TriangleFree, rng);
    if (!spec.connected || is_connected(g)) return g;
  }
}

}  // namespace gmis
