#pragma once

#include <cstdint>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/greedy.hpp"

namespace gmis {

struct OracleBudget {
  int max_vertices = 30;
  int64_t max_nodes = 50'000'000;  // branch nodes / memo entries
  double max_seconds = 0;          // 0 = no wall-clock cap
};

struct MisResult {
  int alpha = 0;
  VertexSet witness;
  int64_t nodes = 0;
};

// Branch and bound. Throws Budget when the budget is exceeded.
MisResult exact_mis(const Graph& g, const OracleBudget& budget = {});

struct MvcResult {
  int size = 0;
  VertexSet witness;
};
MvcResult exact_mvc(const Graph& g, const OracleBudget& budget = {});

struct MaxGreedyResult {
  int alpha_plus = 0;
  int alpha_minus = 0;        // smallest greedy set
  ExecutionTrace witness;     // basic steps reaching alpha_plus
  int64_t states = 0;
};

// Exhaustive search over all minimum-degree choices. Default budget: n <= 22.
MaxGreedyResult max_greedy(const Graph& g, OracleBudget budget = {22, 50'000'000, 0});

struct AvoidResult {
  bool avoidable = false;
  std::vector<int> roots;  // prefix of an execution that removes v unpicked
  int64_t states = 0;      // failed states memoized
};

// Whether some greedy execution never picks v. The search stops once v is
// removed, so the rest of the graph only costs what precedes that point.
AvoidResult greedy_can_avoid(const Graph& g, int v, OracleBudget budget = {22, 50'000'000, 0});

// All maximum independent sets, up to `cap` of them.
std::vector<VertexSet> maximum_independent_sets(const Graph& g, size_t cap = 1000,
                                                const OracleBudget& budget = {});

}  // namespace gmis
