#pragma once

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

// Called for every surviving vertex whose live degree drops during a removal.
using DegreeListener = std::function<void(int v, int old_deg, int new_deg)>;

// A Graph plus a live-vertex mask and live degrees, with degree buckets for
// minimum-degree queries. Removal costs O(sum of degrees * log n).
class GraphState {
 public:
  explicit GraphState(const Graph& g);

  const Graph& graph() const { return *g_; }
  int n() const { return g_->n(); }
  bool live(int v) const { return live_[v] != 0; }
  int degree(int v) const { return deg_[v]; }
  int live_count() const { return live_count_; }
  bool empty() const { return live_count_ == 0; }

  // -1 when empty.
  int min_degree() const;
  // Live vertices of the given degree, ascending.
  const std::set<int>& bucket(int d) const;
  std::vector<int> live_neighbors(int v) const;
  std::vector<int> live_vertices() const;

  // Removes the given live vertices. Throws Contract if one is not live.
  void remove(std::span<const int> vs, const DegreeListener& on_drop = {});

 private:
  const Graph* g_;
  std::vector<char> live_;
  std::vector<int> deg_;
  std::vector<std::set<int>> buckets_;
  int live_count_ = 0;
};

}  // namespace gmis
