#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmis {

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Builds a canonical graph. Duplicate edges collapse; self-loops and
  // out-of-range ids throw. `duplicates` receives the number of collapsed edges.
  static Graph from_edges(int n, std::vector<Edge> edges, int* duplicates = nullptr);

  int n() const { return n_; }
  int64_t m() const { return static_cast<int64_t>(adj_.size()) / 2; }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], static_cast<size_t>(degree(v))};
  }
  bool has_edge(int u, int v) const;
  int max_degree() const;
  // Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && off_ == o.off_ && adj_ == o.adj_;
  }

 private:
  int n_ = 0;
  std::vector<int> off_{0};
  std::vector<int> adj_;
};

struct Subgraph {
  Graph graph;
  std::vector<int> to_old;  // new id -> old id
  std::vector<int> to_new;  // old id -> new id, -1 if dropped
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct DegreeProfile {
  std::optional<int> min_degree;  // absent for the empty graph
  int max_degree = 0;
  std::map<int, int> histogram;
};
DegreeProfile degree_profile(const Graph& g);

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_graph(const Graph& g);

// Membership helpers.
std::vector<char> to_mask(int n, const VertexSet& s);
VertexSet from_mask(const std::vector<char>& mask);
VertexSet complement(int n, const VertexSet& s);
void check_vertex_set(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// Disjoint union; vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace gmis
