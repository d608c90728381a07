#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "subdivlab/errors.hpp"
#include "subdivlab/regularize.hpp"

using namespace subdivlab;

namespace {

BigInt big(std::size_t x) { return BigInt(std::to_string(x), 10); }

// Largest k with k^{2s-1} 16^s <= u^{2s-1}, by linear search.
std::size_t phase1_left_size(std::size_t u, int s) {
  std::size_t k = 0;
  const auto e = static_cast<unsigned long>(2 * s - 1);
  BigInt bound;
  mpz_pow_ui(bound.get_mpz_t(), big(u).get_mpz_t(), e);
  for (;;) {
    BigInt lhs, sixteen;
    mpz_pow_ui(lhs.get_mpz_t(), big(k + 1).get_mpz_t(), e);
    mpz_ui_pow_ui(sixteen.get_mpz_t(), 16, static_cast<unsigned long>(s));
    if (lhs * sixteen > bound) return k;
    ++k;
  }
}

// Heavy block of |V|/16 right vertices joined to every left vertex, the rest
// of the right side with one random neighbour each: phase 1 runs a round.
Bigraph planted(std::size_t left, std::size_t right, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < right; ++v) {
    if (v < right / 16) {
      for (Vertex u = 0; u < left; ++u) edges.emplace_back(u, v);
    } else {
      edges.emplace_back(static_cast<Vertex>(rng() % left), v);
    }
  }
  return Bigraph(left, right, edges);
}

}  // namespace

TEST(Reduce, CompleteSixteenBySixtyFour) {
  const auto r = reduce(Bigraph::complete(16, 64), 2, Rational(1));
  ASSERT_EQ(r.trace.phase1_rounds.size(), 1u);
  EXPECT_EQ(r.trace.ell, 0u);
  EXPECT_EQ(r.trace.phase1_rounds[0].next_right, 4u);
  EXPECT_EQ(r.trace.phase1_rounds[0].adjacent_edges, 64u);
  EXPECT_EQ(r.trace.carve.right, 60u);
  EXPECT_EQ(r.trace.carve.left, 15u);
  EXPECT_EQ(r.trace.carve.edges, 900u);
  EXPECT_EQ(r.trace.termination, Termination::half_rule);
  EXPECT_EQ(r.cert.subgraph.left_count(), 12u);
  EXPECT_EQ(r.cert.subgraph.edge_count(), 720u);
  EXPECT_TRUE(r.cert.achieved.c_I);
  EXPECT_GE(r.cert.achieved.c_II, Rational(1, 2));
  EXPECT_TRUE(r.trace.degree_bound.holds);
  ASSERT_TRUE(r.trace.left_degree_bound);
  EXPECT_TRUE(r.trace.left_degree_bound->holds);
  EXPECT_TRUE(r.trace.ell_bound.holds);
  EXPECT_TRUE(verify_conditions(r.cert).all_pass());
}

TEST(Reduce, RightSelectionFollowsOriginalIndices) {
  const auto r = reduce(Bigraph::complete(16, 64), 2, Rational(1));
  std::vector<Vertex> expect(60);
  std::iota(expect.begin(), expect.end(), 4u);
  EXPECT_EQ(r.cert.right_vertices, expect);
  EXPECT_EQ(r.cert.left_vertices, (std::vector<Vertex>{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}));
}

TEST(Reduce, PlantedBlockRunsAPhaseOneRound) {
  std::mt19937_64 rng(5);
  const auto r = reduce(planted(16, 1024, rng), 2, Rational(1));
  EXPECT_EQ(r.trace.ell, 1u);
  ASSERT_EQ(r.trace.phase1_rounds.size(), 2u);
  EXPECT_EQ(r.trace.phase1_rounds[1].left, phase1_left_size(16, 2));
  EXPECT_EQ(r.trace.phase1_rounds[1].right, 64u);
  ASSERT_TRUE(r.trace.phase1_rounds[0].achieved_ratio);
  // Half the edges survive up to the flooring of |U_1|.
  const double exact_left = 16 / std::pow(16.0, 2.0 / 3.0);
  EXPECT_GE(*r.trace.phase1_rounds[0].achieved_ratio, 0.5 * 2 / exact_left);
  EXPECT_EQ(r.trace.termination, Termination::iteration_cap);
  ASSERT_TRUE(r.trace.left_size_bound);
  EXPECT_TRUE(r.trace.left_size_bound->holds);
  EXPECT_TRUE(verify_conditions(r.cert).all_pass());
}

TEST(Reduce, Preconditions) {
  EXPECT_THROW(reduce(Bigraph::complete(16, 64), 1, Rational(1)), InputError);
  EXPECT_THROW(reduce(Bigraph::complete(16, 64), 2, Rational(1, 2)), InputError);
  EXPECT_THROW(reduce(Bigraph::complete(16, 63), 2, Rational(1)), InputError);
  EXPECT_THROW(reduce(Bigraph::empty(16, 64), 2, Rational(1)), InputError);
  EXPECT_THROW(reduce(Bigraph::complete(16, 64), 2, Rational(17)), InputError);
}

TEST(Reduce, FlooringToEmptyIsReported) {
  EXPECT_THROW(reduce(Bigraph::complete(2, 10), 2, Rational(1)), DegenerateInputError);
}

TEST(VerifyConditions, DetectsTampering) {
  auto r = reduce(Bigraph::complete(16, 64), 2, Rational(1));
  auto edges = r.cert.subgraph.edges();
  edges.pop_back();
  r.cert.subgraph = Bigraph(r.cert.subgraph.left_count(), r.cert.subgraph.right_count(), edges);
  const auto report = verify_conditions(r.cert);
  EXPECT_FALSE(report.integrity);
  EXPECT_FALSE(report.all_pass());
}

TEST(AchievedConstants, Definitions) {
  const Bigraph g = Bigraph::complete(3, 9);
  const auto c = achieved_constants(g, 2, Rational(2), 16);
  EXPECT_TRUE(c.c_I);
  EXPECT_EQ(c.c_II, Rational(3, 2));
  ASSERT_TRUE(c.c_III);
  EXPECT_EQ(*c.c_III, Rational(1));
  ASSERT_TRUE(c.c_IV);
  const double k = 3 * std::pow(9.0, 0.5);
  EXPECT_LE(*c.c_IV * std::pow(2.0, *c.c_IV) * k, 27.0 * (1 + 1e-12));
  EXPECT_GT((*c.c_IV + 1e-6) * std::pow(2.0, *c.c_IV + 1e-6) * k, 27.0);
  ASSERT_TRUE(c.c_size);
  EXPECT_NEAR(*c.c_size, std::log(3.0) / std::log(16.0), 1e-12);
}

TEST(AchievedConstants, SingleLeftVertexIsWellDefined) {
  const auto c = achieved_constants(Bigraph::complete(1, 4), 2, Rational(1), 8);
  EXPECT_TRUE(c.c_I);
}

TEST(ConstructionConstant, MatchesClosedForm) {
  EXPECT_EQ(iteration_cap(2), 2u);
  EXPECT_EQ(iteration_cap(3), 4u);
  const double a = 2.0 / 3.0;
  EXPECT_NEAR(construction_constant(2), 1.0 / (30 * std::pow(16.0 / 15.0, a) * 4), 1e-15);
}

TEST(Reduce, RandomInputsKeepAllBoundsAndAreDeterministic) {
  std::mt19937_64 rng(31);
  int runs = 0;
  for (int it = 0; it < 60; ++it) {
    const int s = 2 + static_cast<int>(rng() % 2);
    const std::size_t u = 8 + rng() % 24;
    const std::size_t v = static_cast<std::size_t>(std::ceil(std::pow(double(u), 2.0 - 1.0 / s))) * (1 + rng() % 2) + 64;
    Bigraph g = oracle::random_bigraph(rng, u, v, 0.2 + 0.6 * (rng() % 100) / 100.0);
    if (g.edge_count() < v) continue;
    const Rational delta(static_cast<unsigned long>(g.edge_count() / v));
    const auto r = reduce(g, s, delta);
    ++runs;
    EXPECT_TRUE(r.trace.degree_bound.holds);
    if (r.trace.left_degree_bound) {
      EXPECT_TRUE(r.trace.left_degree_bound->holds);
      EXPECT_TRUE(r.trace.ell_bound.holds);
    }
    if (r.trace.left_size_bound) EXPECT_TRUE(r.trace.left_size_bound->holds);
    for (std::size_t i = 0; i + 1 < r.trace.phase1_rounds.size(); ++i) {
      const auto& a = r.trace.phase1_rounds[i];
      const auto& b = r.trace.phase1_rounds[i + 1];
      EXPECT_EQ(b.right, a.right / 16);
      EXPECT_EQ(b.left, phase1_left_size(a.left, s));
    }
    EXPECT_EQ(r.trace.carve.right,
              r.trace.phase1_rounds.back().right - r.trace.phase1_rounds.back().next_right);
    const auto report = verify_conditions(r.cert);
    EXPECT_TRUE(report.condition_I && report.condition_II && report.condition_III && report.integrity);
    const auto again = reduce(g, s, delta);
    EXPECT_EQ(again.cert.subgraph, r.cert.subgraph);
    EXPECT_EQ(again.cert.achieved, r.cert.achieved);
  }
  EXPECT_GT(runs, 40);
}
