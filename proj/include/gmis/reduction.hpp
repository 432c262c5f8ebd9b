#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/state.hpp"

namespace gmis {

// Basic is an ungrouped single step (basic greedy steps, degree >= 3 steps).
enum class Kind { Point, Edge, Path, Branching, Loop, Cycle, EvenBackbone, OddBackbone, Basic };

std::string_view kind_name(Kind k);
std::optional<Kind> kind_from_name(std::string_view s);
// 0: Point/Edge/Path/Branching, 1: Cycle/Loop, 2: EvenBackbone, 3: OddBackbone, 4: Basic.
int priority_class(Kind k);

struct BasicReduction {
  int root = -1;
  VertexSet ground;             // closed neighborhood of root, sorted
  VertexSet middle;             // open neighborhood, sorted
  std::vector<Edge> contact_edges;  // (middle, contact), contact outside ground
  std::vector<int> ground_degree;   // live degree at execution, aligned with ground
  int degree = 0;
  std::string tag;              // 0.a .. 2.f, or "<d>.x" for degree >= 3
};

struct Backbone {
  int w = -1, w2 = -1;        // endpoints, equal for a loop
  std::vector<int> internal;  // v1..vb, ordered from w to w2
  bool loop = false;
  bool even() const { return internal.size() % 2 == 1; }
};

struct ExtendedReduction {
  Kind kind = Kind::Basic;
  std::vector<BasicReduction> basics;
  std::vector<int> roots;     // per-basic roots in execution order
  VertexSet ground;
  VertexSet contacts;         // contact vertices outside the ground
  int alt_root = -1;          // second admissible first root, -1 if none
  std::vector<int> path;      // backbone internal order from the first root, or cycle order

  int size() const { return static_cast<int>(roots.size()); }
  int root() const { return roots.front(); }
};

enum class WalkKind { Cycle, Loop, Backbone, Open };

// Maximal run of degree-2 vertices through v. For Cycle, `internal` starts at
// the smallest vertex and proceeds toward its smaller neighbor. Otherwise it is
// oriented so that internal.front() <= internal.back(); w/w2 are the first
// non-degree-2 vertices beyond each end.
struct Walk {
  WalkKind kind = WalkKind::Open;
  std::vector<int> internal;
  int w = -1, w2 = -1;
};

Walk walk_degree_two(const GraphState& st, int v);

BasicReduction classify_basic(const GraphState& st, int v);
Backbone find_backbone(const GraphState& st, int v);
// All loops and backbones (maximal degree-2 paths between vertices of degree >= 3).
std::vector<Backbone> enumerate_backbones(const GraphState& st);

// Simulates the basic sequence without touching the state.
ExtendedReduction plan_reduction(const GraphState& st, Kind kind, std::vector<int> roots,
                                 std::vector<int> path = {}, int alt_root = -1);

// Kind, roots, path and alt root for a walk, without basics. Backbone kinds
// take every other internal vertex from the first root; Cycle stops one short.
ExtendedReduction outline(Kind kind, const Walk& w, bool from_front = true);

ExtendedReduction make_cycle(const GraphState& st, const Walk& w);
ExtendedReduction make_loop(const GraphState& st, const Walk& w);
ExtendedReduction make_even_backbone(const GraphState& st, const Walk& w);
// from_front: root at internal.front() with ground {w} + internal.
ExtendedReduction make_odd_backbone(const GraphState& st, const Walk& w, bool from_front);
// Point/Edge/Path/Branching rooted at a vertex of degree <= 1.
ExtendedReduction make_low_degree(const GraphState& st, int v);

std::vector<ExtendedReduction> enumerate_extended(const GraphState& st);

// Executes basic by basic. If `r.basics` is filled, the live grounds must
// match them. Returns the executed record.
ExtendedReduction execute_reduction(GraphState& st, const ExtendedReduction& r,
                                    const DegreeListener& on_drop = {});

}  // namespace gmis
