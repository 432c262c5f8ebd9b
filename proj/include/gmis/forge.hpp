#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

// splitmix64; the only generator used by the random families.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : s_(seed) {}
  uint64_t next();
  // Uniform in [0, bound).
  uint64_t below(uint64_t bound);

 private:
  uint64_t s_;
};

enum class RandomKind { Subcubic, MaxDegree, TriangleFree, Cubic };

struct RandomSpec {
  RandomKind kind = RandomKind::Subcubic;
  int n = 0;
  int delta = 3;           // degree cap for MaxDegree / TriangleFree
  uint64_t seed = 0;
  bool connected = false;  // resample until connected
};

Graph gen_random(const RandomSpec& spec);

// H_i on top of a base graph. The base's vertex 0 is its top vertex.
enum class HyBase { H0, H0Prime };
Graph hy_base(HyBase base);
// Vertex 0 is always the top; 1 and 2 its two neighbors.
Graph gen_hy(int i, HyBase base);
// Closed forms for the top-first execution on gen_hy: greedy size and alpha.
struct HyCounts {
  int64_t greedy = 0;
  int64_t alpha = 0;
};
HyCounts hy_counts(int i, HyBase base);

// Largest supported group count for a degree bound (-1 when unbounded).
int delta_chain_max_groups(int delta);
Graph gen_delta_chain(int delta, int groups);
// Ground truth for gen_delta_chain: number of cliques (what every greedy set
// picks) and the total size of the independent parts.
struct ChainCounts {
  int cliques = 0;
  int independent_total = 0;
};
ChainCounts delta_chain_counts(int delta, int groups);

// Vertex 0 is the root r; vertices 1..k the clique; k+1..2k the x vertices.
Graph gen_hard_general(int k);

// Groups U_1..U_n of size k, V' of size k, and x_1..x_n; vertex order:
// U_1..U_n, V', x_1..x_n.
Graph gen_hard_bipartite(int n_groups, int k);
bool is_bipartite(const Graph& g);

// Replaces every edge of a cubic graph by a 22-vertex gadget.
Graph gadget_planar_cubic(const Graph& g);
// One gadget on its own, with the two attachment vertices first.
Graph planar_gadget();

// Literal +v / -v with variables 1-based.
struct CnfFormula {
  int vars = 0;
  std::vector<std::vector<int>> clauses;
};

bool is_normalized(const CnfFormula& f);
CnfFormula normalize_sat(const CnfFormula& f);
// Truth-table satisfiability; at most 24 variables.
bool brute_force_sat(const CnfFormula& f);

struct AnchorGraph {
  Graph graph;
  int r = -1;        // root of the hard part
  int r_prime = -1;  // anchor vertex joined to r
  int hard_offset = 0;
};
// `hard` must have a unique minimum-degree vertex, which becomes r.
AnchorGraph gen_sat_anchor(const CnfFormula& f, const Graph& hard);

}  // namespace gmis
