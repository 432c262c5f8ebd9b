#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/greedy.hpp"
#include "gmis/rational.hpp"
#include "gmis/reduction.hpp"

namespace gmis {

// Black = in the reference independent set. Indexed by vertex id.
using Coloring = std::vector<char>;

Coloring coloring_of(int n, const VertexSet& black);

struct PotentialParams {
  Rational gamma{5}, sigma{4};
  int delta = 3;
  int b = 0;

  // (5, 4) with Δ = 3.
  static PotentialParams subcubic();
  // ((Δ+b)(Δ+2)/3, Δ+b), b = 1 iff Δ ≡ 2 mod 3.
  static PotentialParams general(int delta);
  // (Δ(Δ+6)/4, Δ).
  static PotentialParams triangle_free(int delta);
};

enum class DebtMode { LowerBound, Exact };

// Contact edges whose contact vertex is white, summed over the basics.
int64_t loan(const ExtendedReduction& r, const Coloring& black);
// Sum over white ground vertices of (Δ - degree at execution), or of
// (d_G - degree at execution) in exact mode, which needs `original`.
int64_t debt(const ExtendedReduction& r, const Coloring& black, DebtMode mode, int delta,
             const Graph* original = nullptr);
// γ·size − σ·|I ∩ ground| + loan − debt.
Rational phi(const ExtendedReduction& r, const Coloring& black, const PotentialParams& p,
             DebtMode mode = DebtMode::LowerBound, const Graph* original = nullptr);

struct ReductionRecord {
  int step = 0;  // 1-based
  Kind kind = Kind::Basic;
  int size = 0;
  int black = 0;  // |I ∩ ground|
  int64_t loan = 0, debt_lb = 0, debt_exact = 0;
  Rational phi, phi_exact;
};

struct PotentialReport {
  std::vector<ReductionRecord> records;
  int64_t total_loan = 0, total_debt_lb = 0, total_debt_exact = 0;
  Rational phi, phi_exact;
  int picks = 0;        // k, the number of basic steps
  int black_total = 0;  // |I|
  // Zero on every valid run.
  int64_t loan_debt_residual = 0;  // Σloan − Σdebt_exact
  Rational sum_residual;           // Φ_{G,I} − (γk − σ|I|)
  Rational slack_residual;         // Φ_{G,I} − Φ_I − Σ_{v∉I}(Δ − d_G(v))

  // One JSON object per reduction: step, kind, size, loan, debt_lb,
  // debt_exact, phi, phi_exact. Rationals that are not integers print as "p/q".
  std::string to_jsonl() const;
};

// Audits a complete execution. Throws Contract if the trace grounds do not
// partition V or `black` is not independent, and Identity if a residual is nonzero.
PotentialReport audit_execution(const Graph& g, const ExecutionTrace& trace, const Coloring& black,
                                const PotentialParams& p);

// A reduction on a small host graph with a black/white assignment.
struct ColoredShape {
  Graph shape;
  ExtendedReduction reduction;
  Coloring black;
  Rational value;
  int length = 0;  // internal vertices for backbones and loops, vertices for cycles, 0 otherwise
};

struct TableEntry {
  Kind kind = Kind::Basic;
  Rational min;
  std::vector<ColoredShape> argmins;
  std::map<int, Rational> min_by_length;
  // Per-length minima repeat with period two over the last lengths.
  bool stable = true;
  int shapes = 0;
};

// Minimum lower-bound potential over all shapes of the kind up to `max_length`
// and all independent colorings of ground ∪ contact. Contacts are distinct
// pendant vertices, which can only lower the minimum. Δ must be 3.
TableEntry min_potential(Kind kind, const PotentialParams& p, int max_length = 9);
std::vector<TableEntry> min_potential_table(const PotentialParams& p, int max_length = 9);

// Minimum of phi over independent sets of host[ground ∪ contact]. Throws
// Budget above 30 vertices.
Rational min_potential_in(const Graph& host, const ExtendedReduction& r, const PotentialParams& p);

enum class ReductionType { Black, White, Neither };
const char* reduction_type_name(ReductionType t);

// Path/Branching by root and middle colors; Loop when I is maximum on the
// ground, by its two root vertices; Even-backbone when the backbone alternates,
// by its two root vertices. `host` is the graph the reduction lives in.
ReductionType classify_black_white(const Graph& host, const ExtendedReduction& r,
                                   const Coloring& black);
// Consecutive backbone vertices have different colors.
bool is_alternating(const std::vector<int>& path, const Coloring& black);

struct ProblematicWitness {
  bool holds = false;
  bool odd_cycle_or_edge = false;
  std::optional<ExtendedReduction> black_type, white_type;
};

// Odd cycle or edge with I maximum, or a black-type and a white-type reduction
// both present. Requires g connected with minimum degree <= 2.
ProblematicWitness is_potentially_problematic(const Graph& g, const Coloring& black);

struct LowDebtCheck {
  Rational phi;  // Φ_I(E) at subcubic params
  bool at_minus_one = false;
  bool bad_odd_backbone_first = false;
  bool problematic = false;
  bool explained() const { return !at_minus_one || bad_odd_backbone_first || problematic; }
  bool above_floor() const { return phi >= -1; }
};

// Φ_I(E) ≥ −1, and at −1 either the first reduction is an odd backbone whose
// potential is minimal for I, or g is potentially problematic. Graphs with
// minimum degree 3 are never problematic.
LowDebtCheck check_low_debt(const Graph& g, const ExecutionTrace& trace, const Coloring& black);

// Lower bound on the potential of a degree-(i+ℓ−1) basic reduction with i black
// and ℓ white ground vertices, at general params for Δ.
Rational reduction_potential_bound(int delta, int black, int white);
// Its minimum over real arguments: b/3 − b²/3 − 1/3.
Rational reduction_potential_bound_real_min(int delta);

// Vertex cover side: white = in the cover C.
// Σ over basics of 4(|ground|−1) − 5|C ∩ ground| − loan_C + debt_C. Δ = 3 only.
int64_t psi(const ExtendedReduction& r, const Coloring& in_cover, DebtMode mode = DebtMode::LowerBound,
            const Graph* original = nullptr);

struct DualityRecord {
  int step = 0;
  Kind kind = Kind::Basic;
  Rational phi, phi_exact;
  int64_t psi = 0, psi_exact = 0;
  bool checked = false;  // Point reductions are skipped
  bool ok = true;
};

struct DualityReport {
  std::vector<DualityRecord> records;
  int violations = 0;
  Rational phi_exact_total;
  int64_t psi_exact_total = 0;
  // Ψ_{G,C}(E) ≤ 0 whenever Φ_{G,I}(E) ≥ 0.
  bool total_ok = true;
};

// Subcubic params; C = V ∖ I.
DualityReport duality_audit(const Graph& g, const ExecutionTrace& trace, const Coloring& black);

}  // namespace gmis
