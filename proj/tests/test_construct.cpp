#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "subdivlab/construct.hpp"
#include "subdivlab/errors.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/rng.hpp"

using namespace subdivlab;

namespace {

Bigraph cycle6() { return Bigraph(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}}); }

// Exhaustive maximum over all edge subsets, for tiny m x n.
std::uint64_t exhaustive_extremal(std::size_t m, std::size_t n, const std::vector<std::uint32_t>& parts) {
  std::uint64_t best = 0;
  const std::size_t cells = m * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    const auto bits = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (bits <= best) continue;
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < cells; ++c)
      if (mask >> c & 1) edges.emplace_back(static_cast<Vertex>(c / n), static_cast<Vertex>(c % n));
    if (!oracle::contains_pattern(Bigraph(m, n, edges), parts)) best = bits;
  }
  return best;
}

}  // namespace

TEST(EdgeProbability, ClosedForm) {
  const double p = edge_probability(256, 446, 2, 3, Rational(1));
  const double expect = std::pow(std::pow(256.0, -4) * std::pow(446.0, -6), 1.0 / 11);
  EXPECT_NEAR(p, expect, 1e-15);
  EXPECT_NEAR(edge_probability(256, 446, 2, 3, Rational(2)), expect * std::pow(2.0, 1.0 / 11), 1e-15);
  EXPECT_DOUBLE_EQ(edge_probability(1, 1, 1, 1, Rational(1)), 1.0);
}

TEST(RandomLowerBoundGraph, SmallExampleIsPatternFree) {
  const auto c = random_lower_bound_graph(4, 4, 1, 2, Rational(1), 7);
  EXPECT_FALSE(find_embedding(c.graph, SubdividedPattern::complete_bipartite(1, 2)));
  EXPECT_FALSE(oracle::contains_pattern(c.graph, {1, 2}));
  EXPECT_TRUE(c.report.certified);
  EXPECT_EQ(c.report.edges_after, c.graph.edge_count());
  EXPECT_EQ(c.report.p, Rational(edge_probability(4, 4, 1, 2, Rational(1))));
}

TEST(RandomLowerBoundGraph, Preconditions) {
  EXPECT_THROW(random_lower_bound_graph(4, 4, 1, 2, Rational(0), 7), InputError);
  EXPECT_THROW(random_lower_bound_graph(4, 4, 1, 2, Rational(-1), 7), InputError);
  EXPECT_THROW(random_lower_bound_graph(4, 4, 3, 2, Rational(1), 7), InputError);
  EXPECT_THROW(random_lower_bound_graph(0, 4, 1, 2, Rational(1), 7), InputError);
  EXPECT_THROW(random_lower_bound_graph(4, 4, 0, 2, Rational(1), 7), InputError);
  EXPECT_FALSE(random_lower_bound_graph(4, 100, 2, 3, Rational(1), 7).report.in_regime);
  EXPECT_TRUE(random_lower_bound_graph(4, 2, 1, 2, Rational(1), 7).report.in_regime);
  EXPECT_FALSE(random_lower_bound_graph(4, 3, 1, 2, Rational(1), 7).report.in_regime);
}

TEST(RandomLowerBoundGraph, DeterministicAndAccounted) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ConstructionOptions opt;
    opt.count_embeddings_before = true;
    const auto a = random_lower_bound_graph(12, 20, 2, 3, Rational(4), seed, opt);
    const auto b = random_lower_bound_graph(12, 20, 2, 3, Rational(4), seed, opt);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.report, b.report);
    EXPECT_TRUE(a.report.certified);
    EXPECT_FALSE(oracle::contains_pattern(a.graph, {2, 3}));
    EXPECT_EQ(a.report.deleted_left, a.report.copies_found);
    EXPECT_LE(a.report.edges_after, a.report.edges_before);
    ASSERT_TRUE(a.report.embeddings_before);
    EXPECT_EQ(*a.report.embeddings_before == 0, a.report.copies_found == 0);
    EXPECT_LE(a.report.copies_found, *a.report.embeddings_before);
  }
}

TEST(RandomLowerBoundGraph, ExhaustedBudgetIsNotCertified) {
  ConstructionOptions opt;
  opt.search.node_budget = 1;
  const auto c = random_lower_bound_graph(10, 10, 1, 2, Rational(1'000'000), 3, opt);
  EXPECT_FALSE(c.report.certified);
}

TEST(KstCertificate, Examples) {
  const auto c6 = kst_certificate(cycle6(), 2, 2);
  EXPECT_EQ(c6.lhs, 3);
  EXPECT_EQ(c6.rhs, 3);
  EXPECT_TRUE(c6.holds);
  const auto k22 = kst_certificate(Bigraph::complete(2, 2), 2, 2);
  EXPECT_EQ(k22.lhs, 2);
  EXPECT_EQ(k22.rhs, 1);
  EXPECT_FALSE(k22.holds);
  EXPECT_TRUE(contains_biclique(Bigraph::complete(2, 2), 2, 2));
  const auto none = kst_certificate(Bigraph::empty(4, 4), 2, 3);
  EXPECT_EQ(none.lhs, 0);
  EXPECT_TRUE(none.holds);
}

TEST(KstCertificate, SoundOnBicliqueFreeGraphs) {
  std::mt19937_64 rng(17);
  int free_graphs = 0;
  for (int it = 0; it < 400; ++it) {
    const auto g = oracle::random_bigraph(rng, 2 + rng() % 5, 2 + rng() % 6, 0.5);
    for (auto [s, t] : {std::pair{1u, 2u}, {2u, 2u}, {2u, 3u}}) {
      const bool has = oracle::has_biclique(g, s, t);
      const auto cert = kst_certificate(g, s, t);
      if (!has) {
        ++free_graphs;
        EXPECT_TRUE(cert.holds);
      }
      if (!cert.holds) EXPECT_TRUE(has);
    }
  }
  EXPECT_GT(free_graphs, 100);
}

TEST(BruteExtremal, Examples) {
  const auto a = brute_extremal(2, 3, SubdividedPattern({1, 1}));
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.lower, 3u);
  EXPECT_EQ(brute_extremal(2, 2, SubdividedPattern({1, 2})).lower, 4u);
  EXPECT_EQ(brute_extremal(1, 1, SubdividedPattern({2, 2})).lower, 1u);
  EXPECT_EQ(brute_extremal(1, 1, SubdividedPattern({1, 1})).lower, 1u);
  for (std::uint64_t m = 1; m <= 4; ++m)
    for (std::uint64_t n = 1; m * n <= 20 && n <= 5; ++n) {
      const auto r = brute_extremal(m, n, SubdividedPattern({1, 1}));
      EXPECT_TRUE(r.exact);
      EXPECT_EQ(r.lower, n);
      EXPECT_EQ(r.upper, n);
    }
}

TEST(BruteExtremal, MatchesExhaustiveSearch) {
  for (auto parts : {std::vector<std::uint32_t>{1, 2}, {2, 2}}) {
    for (std::size_t m = 2; m <= 3; ++m)
      for (std::size_t n = 2; n <= 4; ++n) {
        const auto r = brute_extremal(m, n, SubdividedPattern(parts));
        ASSERT_TRUE(r.exact);
        EXPECT_EQ(r.lower, exhaustive_extremal(m, n, parts)) << m << "x" << n;
        EXPECT_EQ(r.best_edges.size(), r.lower);
        EXPECT_FALSE(oracle::contains_pattern(Bigraph(m, n, r.best_edges), parts));
      }
  }
}

TEST(BruteExtremal, BudgetGivesBracket) {
  const auto r = brute_extremal(5, 6, SubdividedPattern({2, 2}), 10);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.lower, r.upper);
  EXPECT_EQ(r.upper, 30u);
}

TEST(ThresholdScan, EdgeCases) {
  EXPECT_TRUE(threshold_scan(2, 3, Rational(11, 10), {16, 32}, 0, 1).empty());
  EXPECT_THROW(threshold_scan(1, 1, Rational(1, 2), {16}, 2, 1), InputError);
  EXPECT_THROW(threshold_scan(2, 4, Rational(5, 4), {16}, 2, 1), InputError);
  EXPECT_THROW(threshold_scan(2, 4, Rational(0), {16}, 2, 1), InputError);
}

TEST(ThresholdScan, RowsAreOrderedAndReproducible) {
  const auto rows = threshold_scan(2, 3, Rational(11, 10), {16, 24}, 3, 9);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].m, i < 3 ? 16u : 24u);
    EXPECT_EQ(rows[i].trial, i % 3);
    EXPECT_EQ(rows[i].n, floor_power(BigInt(static_cast<unsigned long>(rows[i].m)), 11, 10).get_ui());
    EXPECT_EQ(rows[i].seed, derive_seed(derive_seed(9, rows[i].m), rows[i].trial));
    const auto single = random_lower_bound_graph(rows[i].m, rows[i].n, 2, 3, Rational(1), rows[i].seed);
    EXPECT_EQ(single.report.edges_after, rows[i].edges_after);
    Rational ratio(static_cast<unsigned long>(rows[i].edges_after), static_cast<unsigned long>(rows[i].n));
    ratio.canonicalize();
    EXPECT_EQ(rows[i].ratio, ratio);
  }
  const auto summary = summarize(rows);
  ASSERT_EQ(summary.size(), 2u);
  EXPECT_EQ(summary[0].trials, 3u);
  double mean = 0;
  for (int i = 0; i < 3; ++i) mean += to_double(rows[i].ratio) / 3;
  EXPECT_NEAR(summary[0].mean_ratio, mean, 1e-12);
}
