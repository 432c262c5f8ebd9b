#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/reduction.hpp"
#include "gmis/state.hpp"

namespace gmis {

struct ExecutionTrace {
  std::vector<ExtendedReduction> reductions;
  VertexSet solution;
  // Step (1-based) at which the vertex's live degree fell from >= 3 to <= 2;
  // 0 if its input degree is <= 2; -1 if it never happened.
  std::vector<int> creation_time;
  std::vector<int> component;  // input component of each reduction

  int size() const { return static_cast<int>(solution.size()); }
};

// Picks one root among the minimum-degree vertices.
class BasicAdvice {
 public:
  virtual ~BasicAdvice() = default;
  virtual int choose(const GraphState& st, const ExecutionTrace& trace,
                     const std::set<int>& candidates) = 0;
};

// Picks one extended reduction among the enumerated candidates.
class ExtendedAdvice {
 public:
  virtual ~ExtendedAdvice() = default;
  virtual size_t choose(const GraphState& st, const ExecutionTrace& trace,
                        const std::vector<ExtendedReduction>& candidates) = 0;
};

// Smallest-id minimum-degree vertex.
std::unique_ptr<BasicAdvice> smallest_id_advice();
// Prefers a degree-2 root with a degree-3 neighbor, then the smallest id.
std::unique_ptr<BasicAdvice> more_edges_advice();

// One basic reduction per step.
ExecutionTrace run_greedy(const Graph& g, BasicAdvice& advice);
// One extended reduction per step; states with minimum degree >= 3 offer
// Basic candidates rooted at every minimum-degree vertex.
ExecutionTrace run_extended(const Graph& g, ExtendedAdvice& advice);

// Basic steps at the given roots, in order. Throws Contract if a root is not
// a minimum-degree vertex when its turn comes.
ExecutionTrace run_scripted(const Graph& g, const std::vector<int>& roots);

ExecutionTrace basic_greedy(const Graph& g);
ExecutionTrace more_edges(const Graph& g);

// Runs `algo` on each component (smallest id first) and merges the traces.
ExecutionTrace run_components(const Graph& g,
                              const std::function<ExecutionTrace(const Graph&)>& algo);

struct StarOptions {
  // Check the even-backbone separation property on every even-backbone choice.
  bool validate_even_rule = false;
};

ExecutionTrace greedy_star(const Graph& g, const StarOptions& opt = {});
// Same algorithm built from enumerate_extended and the select_* rules.
ExecutionTrace greedy_star_reference(const Graph& g);

// Priority rules on a state whose priority class is EvenBackbone / OddBackbone.
ExtendedReduction select_even_backbone(const GraphState& st);
ExtendedReduction select_odd_backbone(const GraphState& st, const ExecutionTrace& trace);

// Extended advice following the Greedy* order. For a state of minimum degree
// >= 3 it picks `first_root`.
class GreedyStarAdvice : public ExtendedAdvice {
 public:
  explicit GreedyStarAdvice(int first_root = -1) : first_root_(first_root) {}
  size_t choose(const GraphState& st, const ExecutionTrace& trace,
                const std::vector<ExtendedReduction>& candidates) override;

 private:
  int first_root_;
};

// For `chosen` among the even backbones of its component: whenever two other
// even backbones have roots in different components after removing the
// ground of `chosen`, one of their four roots is a contact vertex of `chosen`.
bool even_rule_separation_holds(const GraphState& st, const ExtendedReduction& chosen);

// Replays the trace and checks the minimum-degree rule at every basic step.
// Returns an empty string on success, else a description of the first problem.
std::string check_greedy_trace(const Graph& g, const ExecutionTrace& trace);

}  // namespace gmis
