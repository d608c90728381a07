#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdivlab/bigraph.hpp"
#include "subdivlab/rational.hpp"

namespace subdivlab {

// Two-phase reduction of an unbalanced bipartite graph to a nearly
// biregular subgraph. All fractional set sizes are floored exactly (integer
// root arithmetic); "largest degree" selections break ties by ascending
// original vertex index.

struct Phase1Round {
  std::size_t index = 0;
  std::size_t left = 0;   // |U_i|
  std::size_t right = 0;  // |V_i|
  std::size_t edges = 0;  // |E_i|
  // Filled for every round that selected V_{i+1}.
  std::size_t next_right = 0;       // |V_{i+1}| = floor(|V_i| / 16)
  std::size_t adjacent_edges = 0;   // edges of G_i incident to V_{i+1}
  // For rounds that continued: |E(U_{i+1}, V_{i+1})| / (|E_i| / 16^{s/(2s-1)}).
  std::optional<double> achieved_ratio;
};

struct CarveRecord {
  std::size_t ell_edges = 0;       // |E_ell|
  std::size_t ell_next_right = 0;  // |V_{ell+1}|
  std::size_t right = 0;           // |Ṽ| = |V_ell| - |V_{ell+1}|
  std::size_t left = 0;            // |U'|
  std::size_t edges = 0;           // |E'|
};

struct Phase2Round {
  std::size_t index = 0;
  std::size_t left = 0;   // |U'_i|
  std::size_t edges = 0;  // |E'_i|
};

enum class Termination { half_rule, iteration_cap };
const char* to_string(Termination t);

// One proved inequality evaluated on the run.
struct BoundCheck {
  bool holds = false;
  double lhs = 0;
  double rhs = 0;
};

struct ReductionTrace {
  std::vector<Phase1Round> phase1_rounds;
  std::size_t ell = 0;
  CarveRecord carve;
  std::vector<Phase2Round> phase2_rounds;
  std::size_t iteration_cap = 0;  // ceil(s ln s)
  Termination termination = Termination::half_rule;

  BoundCheck ell_bound;              // ell <= log2(|U_0|) / 3
  BoundCheck degree_bound;           // Δ_{G'}(Ṽ) <= 30 (16/15)^{s/(2s-1)} |E'| / |Ṽ|
  std::optional<BoundCheck> left_degree_bound;  // half-rule: Δ(Ũ) <= 2|Ẽ| / |Ũ|^{1-1/s}
  std::optional<BoundCheck> left_size_bound;    // cap: |Ũ| <= |Ṽ|^{1/s}
};

struct AchievedConstants {
  bool c_I = false;                  // |Ṽ| >= |Ũ|^{2-1/s}
  Rational c_II;                     // |Ẽ| / (δ |Ṽ|)
  std::optional<Rational> c_III;     // (|Ẽ|/|Ṽ|) / Δ(Ṽ); nullopt when unbounded
  std::optional<double> c_IV;        // largest c with c δ^c |Ũ| Δ(Ũ)^{1-1/s} <= |Ẽ|
  std::optional<double> c_size;      // ln|Ũ| / ln|U|
  friend bool operator==(const AchievedConstants&, const AchievedConstants&) = default;
};

struct ReductionCertificate {
  Bigraph subgraph;                  // G̃ on Ũ ⊔ Ṽ, local indices
  std::vector<Vertex> left_vertices;   // original index of each vertex of Ũ
  std::vector<Vertex> right_vertices;  // original index of each vertex of Ṽ
  std::size_t source_left_count = 0;   // |U| of the input graph
  int s = 2;
  Rational delta;
  AchievedConstants achieved;
};

struct ReductionResult {
  ReductionTrace trace;
  ReductionCertificate cert;
};

// Throws InputError on violated preconditions (s >= 2, δ >= 1,
// |V| >= |U|^{2-1/s}, |E| >= δ|V|) and DegenerateInputError when flooring
// empties a set the procedure needs.
ReductionResult reduce(const Bigraph& g, int s, const Rational& delta);

// Constants achieved by a subgraph, recomputed from scratch.
AchievedConstants achieved_constants(const Bigraph& subgraph, int s, const Rational& delta,
                                     std::size_t source_left_count);

// Constant c_s implied by the construction's own bookkeeping: the smaller of
// (15/16)^{s/(2s-1)} / 2^{cap+1} (edge retention) and
// 1 / (30 (16/15)^{s/(2s-1)} 2^{cap}) (right-degree regularity).
double construction_constant(int s);

std::size_t iteration_cap(int s);

struct ConditionReport {
  double c_s = 0;
  bool condition_I = false;
  bool condition_II = false;
  bool condition_III = false;
  bool condition_IV = false;
  bool integrity = false;  // stored constants match the recomputation
  AchievedConstants recomputed;
  bool all_pass() const { return condition_I && condition_II && condition_III && condition_IV && integrity; }
};

// Re-derives all four conditions from cert.subgraph alone. c_s defaults to
// construction_constant(cert.s).
ConditionReport verify_conditions(const ReductionCertificate& cert, std::optional<double> c_s = std::nullopt);

}  // namespace subdivlab
