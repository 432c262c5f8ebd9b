#pragma once

#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

// Half-integral optimum of the vertex cover LP: x = 0 on `out`, 1 on `in`,
// 1/2 on `kernel`. Some maximum independent set contains `out` and avoids `in`.
struct NTPartition {
  VertexSet out;     // x = 0, independent
  VertexSet in;      // x = 1
  VertexSet kernel;  // x = 1/2, α(G[kernel]) <= |kernel| / 2

  bool operator==(const NTPartition&) const = default;
};

// Via a maximum matching in the bipartite double cover (Hopcroft-Karp) and
// the König cover derived from it. Deterministic for a fixed input.
NTPartition nt_partition(const Graph& g);

// Maximum matching of a bipartite graph given as left adjacency lists into
// [0, right). Returns the right partner of each left vertex, or -1.
std::vector<int> hopcroft_karp(const std::vector<std::vector<int>>& left_adj, int right);

// V ∖ greedy_star(g). Throws DegreeBound above degree 3.
VertexSet complementary_greedy(const Graph& g);

// in ∪ (kernel ∖ greedy_star(G[kernel])). Throws DegreeBound above degree 3.
VertexSet mvc_six_fifths(const Graph& g);

}  // namespace gmis
