#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subdivlab/bigraph.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/rational.hpp"

namespace subdivlab {

struct ConstructionReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  Rational epsilon;
  Rational p;  // exact value of the binary64 probability actually sampled
  std::uint64_t edges_before = 0;
  std::uint64_t copies_found = 0;  // deletion rounds, one copy each
  std::uint64_t deleted_left = 0;
  std::uint64_t edges_after = 0;
  std::uint64_t seed = 0;
  bool certified = true;  // false when a search ran out of budget
  bool in_regime = true;  // n <= m^{2-1/s-1/t}
  double expected_copies_bound = 0;  // m^{s+t} n^{st} p^{2st}
  std::optional<std::uint64_t> embeddings_before;  // all labeled copies in the sampled graph
  friend bool operator==(const ConstructionReport&, const ConstructionReport&) = default;
};

struct Construction {
  Bigraph graph;
  ConstructionReport report;
};

struct ConstructionOptions {
  SearchOptions search;
  // Also count every embedding of the sampled graph (exhaustive, small m only).
  bool count_embeddings_before = false;
};

// p = (eps m^{1-s-t} n^{-st})^{1/(2st-1)}, clamped to (0, 1].
double edge_probability(std::uint64_t m, std::uint64_t n, std::uint32_t s, std::uint32_t t,
                        const Rational& epsilon);

// Samples G(m, n, p) with seeded Bernoulli edges in row-major order, then
// repeatedly finds a K_{s,t}' copy and isolates its lowest-index left vertex.
// Requires 1 <= s <= t, m, n >= 1 and eps > 0. Parameters outside the
// regime n <= m^{2-1/s-1/t} still run; the report flags them.
Construction random_lower_bound_graph(std::uint64_t m, std::uint64_t n, std::uint32_t s,
                                      std::uint32_t t, const Rational& epsilon, std::uint64_t seed,
                                      const ConstructionOptions& options = {});

struct KstCertificate {
  BigInt lhs;  // sum over right vertices of C(deg v, s)
  BigInt rhs;  // (t - 1) C(|U|, s)
  bool holds = false;
};

KstCertificate kst_certificate(const Bigraph& g, std::uint32_t s, std::uint32_t t);

struct ExtremalResult {
  std::uint64_t lower = 0;  // edges of the best pattern-free graph found
  std::uint64_t upper = 0;
  bool exact = false;
  std::vector<Edge> best_edges;
};

// Largest edge count of an m x n bigraph without a copy of `pattern`, by
// branch and bound over the edge set. When the node budget runs out the
// result is a bracket [lower, upper] instead.
ExtremalResult brute_extremal(std::uint64_t m, std::uint64_t n, const SubdividedPattern& pattern,
                              std::uint64_t node_budget = 2'000'000);

struct ScanRow {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  Rational exponent;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Rational p;
  std::uint64_t edges_before = 0;
  std::uint64_t copies = 0;
  std::uint64_t edges_after = 0;
  Rational ratio;  // edges_after / n
  bool certified = true;
};

struct ScanSummary {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  double mean_ratio = 0;
};

// n = floor(m^exponent) for each m; trials run in parallel with seeds
// derive_seed(derive_seed(seed, m), trial). Rows are ordered by (m, trial).
std::vector<ScanRow> threshold_scan(std::uint32_t s, std::uint32_t t, const Rational& exponent,
                                    const std::vector<std::uint64_t>& m_list, std::uint64_t trials,
                                    std::uint64_t seed, const Rational& epsilon = Rational(1),
                                    const SearchOptions& search = {});

// Mean ratio per m, in the order the m values first appear.
std::vector<ScanSummary> summarize(const std::vector<ScanRow>& rows);

}  // namespace subdivlab
