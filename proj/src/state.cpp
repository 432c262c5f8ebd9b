#include "gmis/state.hpp"

#include "gmis/error.hpp"

namespace gmis {

GraphState::GraphState(const Graph& g)
    : g_(&g), live_(g.n(), 1), deg_(g.n()), buckets_(g.max_degree() + 1), live_count_(g.n()) {
  for (int v = 0; v < g.n(); ++v) {
    deg_[v] = g.degree(v);
    buckets_[deg_[v]].insert(buckets_[deg_[v]].end(), v);
  }
}

int GraphState::min_degree() const {
  for (int d = 0; d < static_cast<int>(buckets_.size()); ++d)
    if (!buckets_[d].empty()) return d;
  return -1;
}

const std::set<int>& GraphState::bucket(int d) const {
  static const std::set<int> kEmpty;
  if (d < 0 || d >= static_cast<int>(buckets_.size())) return kEmpty;
  return buckets_[d];
}

std::vector<int> GraphState::live_neighbors(int v) const {
  std::vector<int> out;
  for (int w : g_->neighbors(v))
    if (live_[w]) out.push_back(w);
  return out;
}

std::vector<int> GraphState::live_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (live_[v]) out.push_back(v);
  return out;
}

void GraphState::remove(std::span<const int> vs, const DegreeListener& on_drop) {
  for (int v : vs) {
    if (v < 0 || v >= n() || !live_[v])
      throw Error(ErrorCode::Contract, "removing non-live vertex " + std::to_string(v));
  }
  for (int v : vs) {
    live_[v] = 0;
    buckets_[deg_[v]].erase(v);
    --live_count_;
  }
  for (int v : vs) {
    for (int w : g_->neighbors(v)) {
      if (!live_[w]) continue;
      int old = deg_[w];
      buckets_[old].erase(w);
      deg_[w] = old - 1;
      buckets_[old - 1].insert(w);
      if (on_drop) on_drop(w, old, old - 1);
    }
  }
}

}  // namespace gmis
