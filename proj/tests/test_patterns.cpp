#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subdivlab/errors.hpp"
#include "subdivlab/patterns.hpp"

using namespace subdivlab;

TEST(Pattern, Instantiation) {
  Bigraph p11 = pattern_instantiate(SubdividedPattern({1, 1}));
  EXPECT_EQ(p11, Bigraph(2, 1, {{0, 0}, {1, 0}}));

  Bigraph p22 = pattern_instantiate(SubdividedPattern({2, 2}));
  EXPECT_EQ(p22.left_count(), 4u);
  EXPECT_EQ(p22.right_count(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(p22.degree(Side::right, v), 2u);
  for (Vertex u = 0; u < 4; ++u) EXPECT_EQ(p22.degree(Side::left, u), 2u);

  Bigraph p222 = pattern_instantiate(SubdividedPattern({2, 2, 2}));
  EXPECT_EQ(p222.left_count(), 6u);
  EXPECT_EQ(p222.right_count(), 8u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(p222.degree(Side::right, v), 3u);
}

TEST(Pattern, TupleIndexing) {
  SubdividedPattern p({2, 3, 2});
  for (Vertex r = 0; r < p.right_size(); ++r) EXPECT_EQ(p.right_index(p.tuple_of(r)), r);
  EXPECT_EQ(p.left_index(1, 2), 4u);
  EXPECT_EQ(p.part_of(4), 1u);
  EXPECT_EQ(p.left_degree(1), 4u);
}

TEST(Pattern, RejectsBadParts) {
  EXPECT_THROW(SubdividedPattern({}), InputError);
  EXPECT_THROW(SubdividedPattern({2, 0}), InputError);
  EXPECT_THROW(SubdividedPattern({1000, 1000, 1000}), CapacityError);
}

TEST(FindEmbedding, SmallCases) {
  const SubdividedPattern p22({2, 2});
  auto self = find_embedding(pattern_instantiate(p22), p22);
  ASSERT_TRUE(self);
  EXPECT_TRUE(is_valid_embedding(pattern_instantiate(p22), p22, *self));

  auto complete = find_embedding(Bigraph::complete(4, 4), p22);
  ASSERT_TRUE(complete);
  EXPECT_TRUE(is_valid_embedding(Bigraph::complete(4, 4), p22, *complete));

  Bigraph c6(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  EXPECT_FALSE(find_embedding(c6, p22));
  EXPECT_FALSE(oracle::contains_pattern(c6, {2, 2}));
}

TEST(FindEmbedding, BudgetIsDistinctFromAbsence) {
  SearchOptions tiny{1};
  EXPECT_THROW(find_embedding(Bigraph::complete(6, 8), SubdividedPattern({2, 3}), tiny), BudgetError);
}

TEST(CountEmbeddings, SmallCases) {
  const SubdividedPattern p11({1, 1});
  EXPECT_EQ(count_embeddings(pattern_instantiate(p11), p11), 2u);
  EXPECT_EQ(count_embeddings(Bigraph::empty(3, 3), p11), 0u);
  EXPECT_EQ(count_embeddings(Bigraph::complete(2, 1), p11), 2u);
}

TEST(CountEmbeddings, MatchesBruteForceCounts) {
  std::mt19937_64 rng(21);
  const std::vector<std::vector<std::uint32_t>> patterns = {{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}};
  for (int it = 0; it < 400; ++it) {
    Bigraph g = oracle::random_bigraph(rng, 2 + rng() % 4, 1 + rng() % 6, 0.3 + 0.5 * (rng() % 100) / 100.0);
    for (const auto& parts : patterns)
      ASSERT_EQ(count_embeddings(g, SubdividedPattern(parts)), oracle::count_pattern(g, parts));
  }
}

TEST(FindEmbedding, AgreesWithBruteForceIncludingHypergraphPatterns) {
  std::mt19937_64 rng(22);
  const std::vector<std::vector<std::uint32_t>> patterns = {{2, 2, 1}, {1, 1, 1}, {3, 1}, {1, 3}};
  for (int it = 0; it < 500; ++it) {
    Bigraph g = oracle::random_bigraph(rng, 1 + rng() % 6, 1 + rng() % 8, 0.4 + 0.5 * (rng() % 100) / 100.0);
    for (const auto& parts : patterns) {
      const SubdividedPattern p(parts);
      auto emb = find_embedding(g, p);
      ASSERT_EQ(emb.has_value(), oracle::contains_pattern(g, parts));
      if (emb) ASSERT_TRUE(is_valid_embedding(g, p, *emb));
    }
  }
}

TEST(FindEmbedding, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(23);
  const SubdividedPattern p({2, 2});
  for (int it = 0; it < 300; ++it) {
    Bigraph g = oracle::random_bigraph(rng, 5, 7, 0.5);
    if (!find_embedding(g, p)) continue;
    auto edges = g.edges();
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = 0; v < 7; ++v)
        if (!g.has_edge(u, v)) {
          auto more = edges;
          more.emplace_back(u, v);
          ASSERT_TRUE(find_embedding(Bigraph(5, 7, more), p));
          u = 5;
          break;
        }
  }
}

TEST(FindEmbedding, SubpatternsOfInstantiatedPatterns) {
  for (std::uint32_t s = 1; s <= 3; ++s)
    for (std::uint32_t t = s; t <= 3; ++t) {
      Bigraph host = pattern_instantiate(SubdividedPattern({s, t}));
      for (std::uint32_t a = 1; a <= s; ++a)
        for (std::uint32_t b = 1; b <= t; ++b) EXPECT_TRUE(find_embedding(host, SubdividedPattern({a, b})));
    }
}

TEST(FindEmbedding, LargeStarNeedsDistinctPaths) {
  // One hub with many two-paths to distinct leaves.
  std::vector<Edge> edges;
  for (Vertex k = 0; k < 120; ++k) {
    edges.emplace_back(0, k);
    edges.emplace_back(1 + k, k);
  }
  Bigraph g(121, 120, edges);
  EXPECT_TRUE(find_embedding(g, SubdividedPattern({1, 101})));
  EXPECT_FALSE(find_embedding(g, SubdividedPattern({1, 121})));
}

TEST(IsValidEmbedding, RejectsBrokenMaps) {
  const SubdividedPattern p({1, 1});
  Bigraph g = Bigraph::complete(2, 2);
  EXPECT_TRUE(is_valid_embedding(g, p, {{0, 1}, {0}}));
  EXPECT_FALSE(is_valid_embedding(g, p, {{0, 0}, {0}}));
  EXPECT_FALSE(is_valid_embedding(Bigraph(2, 1, {{0, 0}}), p, {{0, 1}, {0}}));
  EXPECT_FALSE(is_valid_embedding(g, p, {{0}, {0}}));
}

TEST(ContainsBiclique, SmallCasesAndOracle) {
  EXPECT_TRUE(contains_biclique(Bigraph::complete(2, 3), 2, 3));
  EXPECT_FALSE(contains_biclique(Bigraph::empty(3, 3), 1, 1));
  std::mt19937_64 rng(24);
  for (int it = 0; it < 2000; ++it) {
    Bigraph g = oracle::random_bigraph(rng, 1 + rng() % 6, 1 + rng() % 8, 0.5);
    const std::uint32_t s = 1 + rng() % 3, t = 1 + rng() % 3;
    ASSERT_EQ(contains_biclique(g, s, t), oracle::has_biclique(g, s, t));
  }
}

TEST(Oracles, TwoPartSearchMatchesFullEnumeration) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 150; ++it) {
    const auto g = oracle::random_bigraph(rng, 2 + rng() % 5, 3 + rng() % 6, 0.3 + 0.5 * (rng() % 10) / 10.0);
    for (auto [a, b] : {std::pair{1u, 2u}, {2u, 2u}, {2u, 3u}})
      EXPECT_EQ(oracle::contains_two_part_pattern(g, a, b), oracle::contains_pattern(g, {a, b}));
  }
}
