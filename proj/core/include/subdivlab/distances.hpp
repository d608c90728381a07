#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "subdivlab/bigraph.hpp"
#include "subdivlab/geometry.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/rational.hpp"

namespace subdivlab {

using PointSet = std::vector<RPoint>;

// Throws InputError on repeated points.
void require_distinct_points(const PointSet& points);

Rational squared_distance(const RPoint& a, const RPoint& b);

// Distinct squared distances over unordered pairs.
std::size_t distinct_distance_count(const PointSet& points);
std::size_t distinct_distance_count(const PointSet& points, const std::vector<std::uint32_t>& subset);

inline constexpr std::uint64_t default_subset_budget = 5'000'000;

struct LocalConditionReport {
  bool holds = true;
  std::optional<std::vector<std::uint32_t>> violating_subset;  // indices into the point set
};

// Every p-subset determines at least q distinct distances. Throws
// BudgetError when C(|P|, p) exceeds the subset budget.
LocalConditionReport check_local_condition(const PointSet& points, std::uint32_t p, std::int64_t q,
                                           std::uint64_t subset_budget = default_subset_budget);

struct DistanceClass {
  Rational squared_distance;
  std::uint64_t ordered_pair_count = 0;
  friend bool operator==(const DistanceClass&, const DistanceClass&) = default;
};

struct EnergyReport {
  std::vector<DistanceClass> classes;  // ascending squared distance
  std::uint64_t energy = 0;            // sum of squared class sizes
  friend bool operator==(const EnergyReport&, const EnergyReport&) = default;
};

EnergyReport energy(const PointSet& points);
// Direct count of quadruples (a, b, c, d) with |ac| = |bd| > 0.
std::uint64_t energy_bruteforce(const PointSet& points);

// C(p,2) - p + 3 floor(p/(2s)) + 2s + 2.
std::int64_t q_formula(std::int64_t p, std::int64_t s);

struct OrderedPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// Random equitable split of P x P. The pairs in `lifted` become points
// v_{a,b} = (a_x, a_y, b_x, b_y) of R^4 (right side of `graph`); the pairs in
// `quadrics` become Q_{c,d}: (x-c_x)^2 + (y-c_y)^2 = (z-d_x)^2 + (w-d_y)^2
// (left side). Both lists are in ascending pair order.
struct LiftedSystem {
  PointSet points;
  std::vector<OrderedPair> lifted;    // P1, |P1| = ceil(n^2 / 2)
  std::vector<OrderedPair> quadrics;  // P2
  Bigraph graph;
  std::uint64_t seed = 0;
};

// Throws StructuralError if an incidence ever disagrees with |ac| = |bd|.
LiftedSystem lift(const PointSet& points, std::uint64_t seed);

// Which side of the lifted graph the pattern's left part was searched on.
enum class Orientation { quadrics_left, points_left };
const char* to_string(Orientation o);

struct UnorderedPair {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  friend bool operator==(const UnorderedPair&, const UnorderedPair&) = default;
  friend auto operator<=>(const UnorderedPair&, const UnorderedPair&) = default;
};

struct LabelEvent {
  UnorderedPair pair;
  UnorderedPair label;
  friend bool operator==(const LabelEvent&, const LabelEvent&) = default;
};

struct WitnessRound {
  std::size_t index = 0;
  std::size_t added = 0;    // p_i
  std::size_t labeled = 0;  // ell_i
  bool complete = true;     // false for the round cut short by the size cap
  bool claim_holds = true;  // ell_i <= 2s-2 implies p_i <= ell_i (complete rounds)
  std::vector<LabelEvent> labels;
  friend bool operator==(const WitnessRound&, const WitnessRound&) = default;
};

struct WitnessTrace {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  Orientation orientation = Orientation::quadrics_left;
  std::vector<std::uint32_t> s_points;    // the points of the S vertices
  std::vector<OrderedPair> t_prime;       // pairs of the selected T vertices, in order
  std::vector<WitnessRound> rounds;
  std::vector<std::uint32_t> A;           // final p points, ascending
  bool padded = false;
  std::size_t x = 0, y = 0, z = 0;        // rounds with p_i = 2s, 2s+1, 2s+2
  std::size_t labeled_total = 0;          // sum of ell_i
  std::size_t distinct_count = 0;         // recounted on A
  std::int64_t q = 0;
  bool claim_violated = false;
  bool tally_bound_holds = true;          // x+y+z <= floor(p/(2s)) and p_i <= 2s+2
  bool labels_consistent = true;          // each labeled pair matches its label's distance
  bool count_bound_holds = true;          // distinct_count <= C(p,2) - labeled_total
  friend bool operator==(const WitnessTrace&, const WitnessTrace&) = default;
};

// Runs the round-based labeling procedure on a copy of [s, t] in the lifted
// graph (or its transpose, per `orientation`). Throws StructuralError when
// fewer than p+1 T vertices qualify or the procedure stops short of p-1 points.
WitnessTrace extract_witness(const LiftedSystem& sys, const Embedding& embedding, std::uint32_t p,
                             std::uint32_t s, Orientation orientation = Orientation::quadrics_left);

struct Violation {
  std::vector<std::uint32_t> A;
  std::size_t distinct = 0;
  std::int64_t q = 0;
  std::uint64_t attempt = 0;  // index of the partition seed that worked
  WitnessTrace trace;
};

struct ViolationOptions {
  SearchOptions search;
  std::uint64_t attempts = 256;  // independent random partitions tried
};

// t = (2s+p)^2 + 1. Tries derive_seed(seed, k) partitions for k < attempts,
// both orientations each, returning the first witness with fewer than
// q_formula(p, s) distinct distances. nullopt when no copy exists in any
// attempt; BudgetError when a search ran out of budget and nothing was found.
std::optional<Violation> find_violation(const PointSet& points, std::uint32_t p, std::uint32_t s,
                                        std::uint64_t seed, const ViolationOptions& options = {});

}  // namespace subdivlab
