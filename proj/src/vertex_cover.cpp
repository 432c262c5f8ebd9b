#include "gmis/vertex_cover.hpp"

#include <algorithm>
#include <limits>

#include "gmis/error.hpp"
#include "gmis/greedy.hpp"

namespace gmis {

namespace {

void require_subcubic(const Graph& g) {
  if (g.max_degree() > 3) throw Error(ErrorCode::DegreeBound, "vertex cover algorithms need max degree 3");
}

}  // namespace

std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& adj, int right) {
  const int n = static_cast<int>(adj.size());
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> match_l(n, -1), match_r(right, -1), dist(n), it(n);
  std::vector<int> queue, stack;
  auto bfs = [&]() {
    queue.clear();
    for (int u = 0; u < n; ++u) {
      dist[u] = match_l[u] < 0 ? 0 : inf;
      if (match_l[u] < 0) queue.push_back(u);
    }
    bool found = false;
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w < 0) found = true;
        else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };
  // Iterative layered DFS from a free left vertex.
  auto augment = [&](int root) {
    stack.assign(1, root);
    while (!stack.empty()) {
      int u = stack.back();
      if (it[u] == static_cast<int>(adj[u].size())) {
        dist[u] = inf;
        stack.pop_back();
        continue;
      }
      int v = adj[u][it[u]];
      int w = match_r[v];
      if (w < 0) {
        // Flip the path held on the stack.
        for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
          int x = stack[i];
          int y = adj[x][it[x]];
          match_r[y] = x;
          match_l[x] = y;
        }
        return true;
      }
      if (dist[w] == dist[u] + 1) {
        stack.push_back(w);
      } else {
        ++it[u];
      }
    }
    return false;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < n; ++u)
      if (match_l[u] < 0) augment(u);
  }
  return match_l;
}

NTPartition nt_partition(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<int> match_l = hopcroft_karp(adj, n);
  std::vector<int> match_r(n, -1);
  for (int u = 0; u < n; ++u)
    if (match_l[u] >= 0) match_r[match_l[u]] = u;
  // König: Z = vertices reachable from free left vertices by alternating paths;
  // the cover is (L ∖ Z) ∪ (R ∩ Z).
  std::vector<char> zl(n, 0), zr(n, 0);
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (match_l[u] < 0) {
      zl[u] = 1;
      queue.push_back(u);
    }
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int v : adj[u]) {
      if (zr[v]) continue;
      zr[v] = 1;
      int w = match_r[v];
      if (w >= 0 && !zl[w]) {
        zl[w] = 1;
        queue.push_back(w);
      }
    }
  }
  NTPartition p;
  for (int v = 0; v < n; ++v) {
    int x = (zl[v] ? 0 : 1) + (zr[v] ? 1 : 0);
    (x == 0 ? p.out : x == 2 ? p.in : p.kernel).push_back(v);
  }
  return p;
}

VertexSet complementary_greedy(const Graph& g) {
  require_subcubic(g);
  return complement(g.n(), greedy_star(g).solution);
}

VertexSet mvc_six_fifths(const Graph& g) {
  require_subcubic(g);
  NTPartition p = nt_partition(g);
  Subgraph k = induced_subgraph(g, p.kernel);
  std::vector<char> picked(k.graph.n(), 0);
  for (int v : greedy_star(k.graph).solution) picked[v] = 1;
  VertexSet c = p.in;
  for (int v = 0; v < k.graph.n(); ++v)
    if (!picked[v]) c.push_back(k.to_old[v]);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace gmis
