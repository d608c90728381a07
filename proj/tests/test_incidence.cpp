#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subdivlab/errors.hpp"
#include "subdivlab/geometry.hpp"
#include "subdivlab/incidence.hpp"

using namespace subdivlab;

namespace {

Rational R(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}
RPoint P(long x, long y) { return {R(x), R(y)}; }
RLine L(long a, long b, long c) { return RLine(R(a), R(b), R(c)); }

RealConfig unit_square() {
  return {{P(0, 0), P(0, 1), P(1, 0), P(1, 1)}, {L(1, 0, 0), L(1, 0, 1), L(0, 1, 0), L(0, 1, 1)}};
}

// Row k encodes sum_j rows[k][j] x_j + rows[k][4] = 0.
bool on_flat(const Flat& f, const std::array<Rational, 4>& x) {
  for (const auto& row : f.rows) {
    Rational acc = row[4];
    for (int j = 0; j < 4; ++j) acc += row[j] * x[j];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

TEST(IncidenceGraph, Examples) {
  EXPECT_EQ(incidence_graph(RealConfig{{P(0, 0)}, {L(0, 1, 0)}}).edge_count(), 1u);
  const auto g = incidence_graph(unit_square());
  EXPECT_EQ(g.left_count(), 4u);
  EXPECT_EQ(g.edge_count(), 8u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(Side::right, v), 2u);
  const CLine zw(Complex(R(1)), Complex(R(1)), Complex(R(0)));
  const CPoint p{Complex(R(1)), Complex(R(-1))};
  EXPECT_TRUE(zw.contains(p));
  EXPECT_EQ(incidence_graph(ComplexConfig{{p}, {zw}}).edge_count(), 1u);
}

TEST(IncidenceGraph, RejectsDuplicates) {
  EXPECT_THROW(incidence_graph(RealConfig{{P(0, 0)}, {L(1, 1, 1), L(2, 2, 2)}}), InputError);
  EXPECT_THROW(incidence_graph(RealConfig{{P(0, 0), P(0, 0)}, {L(1, 1, 1)}}), InputError);
}

TEST(Lines, CanonicalForm) {
  EXPECT_EQ(L(2, 4, 6), L(1, 2, 3));
  EXPECT_EQ(L(0, -3, 3), L(0, 1, -1));
  EXPECT_THROW(L(0, 0, 1), InputError);
  const CLine a(Complex(R(2)), Complex(R(0), R(2)), Complex(R(4)));
  const CLine b(Complex(R(1)), Complex(R(0), R(1)), Complex(R(2)));
  EXPECT_EQ(a, b);
}

TEST(DetectGrid, Examples) {
  const auto cfg = unit_square();
  const auto w = detect_grid(cfg, 2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_grid(cfg, *w));
  auto missing = cfg;
  missing.points.pop_back();
  EXPECT_FALSE(detect_grid(missing, 2));
  // s = 1: a point on two distinct lines.
  EXPECT_TRUE(detect_grid(RealConfig{{P(0, 0)}, {L(1, 0, 0), L(0, 1, 0)}}, 1));
  EXPECT_FALSE(detect_grid(RealConfig{{P(0, 0)}, {L(1, 0, 0), L(1, 0, 1)}}, 1));
}

TEST(DetectGrid, ComplexConfiguration) {
  // z = 0, z = 1 against w = 0, w = 1 with the four corners.
  const Complex zero(R(0)), one(R(1)), mone(R(-1));
  ComplexConfig c;
  c.lines = {CLine(one, zero, zero), CLine(one, zero, mone), CLine(zero, one, zero), CLine(zero, one, mone)};
  for (auto z : {zero, one})
    for (auto w : {zero, one}) c.points.push_back({z, w});
  const auto w = detect_grid(c, 2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_grid(c, *w));
  c.points.pop_back();
  EXPECT_FALSE(detect_grid(c, 2));
}

TEST(VerifyGrid, RejectsBrokenWitness) {
  const auto cfg = unit_square();
  auto w = *detect_grid(cfg, 2);
  std::swap(w.points[0][0], w.points[1][1]);
  EXPECT_FALSE(verify_grid(cfg, w));
}

TEST(DetectGrid, AgreesWithGeometricBruteForce) {
  std::mt19937_64 rng(123);
  int found = 0;
  for (int it = 0; it < 150; ++it) {
    const auto cfg = oracle::random_config(rng);
    for (std::uint32_t s : {2u, 3u}) {
      const auto w = detect_grid(cfg, s);
      const bool embeds = find_embedding(incidence_graph(cfg), SubdividedPattern({s, s})).has_value();
      EXPECT_EQ(w.has_value(), embeds);
      EXPECT_EQ(w.has_value(), oracle::has_grid(cfg.points, cfg.lines, s));
      if (w) {
        ++found;
        EXPECT_TRUE(verify_grid(cfg, *w));
      }
    }
  }
  EXPECT_GT(found, 10);
}

TEST(DetectTriangle, Examples) {
  RealConfig tri{{P(0, 0), P(1, 0), P(0, 1)}, {L(1, 0, 0), L(0, 1, 0), L(1, 1, 1)}};
  const auto w = detect_triangle(tri);
  ASSERT_TRUE(w);
  for (int k = 0; k < 3; ++k) {
    const auto& p = tri.points[w->points[k]];
    EXPECT_FALSE(tri.lines[w->lines[k]].contains(p));
    EXPECT_TRUE(tri.lines[w->lines[(k + 1) % 3]].contains(p));
    EXPECT_TRUE(tri.lines[w->lines[(k + 2) % 3]].contains(p));
  }
  RealConfig concurrent{{P(0, 0)}, {L(1, 0, 0), L(0, 1, 0), L(1, 1, 0)}};
  EXPECT_FALSE(detect_triangle(concurrent));
  RealConfig two{{P(0, 0)}, {L(1, 0, 0), L(0, 1, 0)}};
  EXPECT_FALSE(detect_triangle(two));
  tri.points.pop_back();
  EXPECT_FALSE(detect_triangle(tri));
}

TEST(Flats, Examples) {
  const Complex zero(R(0)), one(R(1)), mone(R(-1));
  const Flat z0 = complex_line_to_flat(CLine(one, zero, zero));
  EXPECT_TRUE(on_flat(z0, {R(0), R(0), R(3), R(-7, 2)}));
  EXPECT_FALSE(on_flat(z0, {R(1), R(0), R(0), R(0)}));
  EXPECT_FALSE(on_flat(z0, {R(0), R(1), R(0), R(0)}));
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : z0.rows) rows.emplace_back(r.begin(), r.begin() + 4);
  EXPECT_EQ(matrix_rank(rows), 2u);

  const Flat a = complex_line_to_flat(CLine(one, one, zero));
  const Flat b = complex_line_to_flat(CLine(one, mone, zero));
  const auto meet = flat_intersection(a, b);
  EXPECT_FALSE(meet.empty);
  EXPECT_EQ(meet.dimension, 0);
  ASSERT_TRUE(meet.point);
  for (const auto& x : *meet.point) EXPECT_EQ(x, 0);
  EXPECT_TRUE(pairwise_flat_check({a, b, z0}));

  // Parallel complex lines give disjoint flats.
  const Flat c = complex_line_to_flat(CLine(one, one, mone));
  EXPECT_TRUE(flat_intersection(a, c).empty);
  // Complex scaling by i leaves the flat unchanged.
  const Complex i(R(0), R(1));
  const auto same = flat_intersection(a, complex_line_to_flat(CLine(i, i, zero)));
  EXPECT_EQ(same.dimension, 2);
}

TEST(Exponents, Examples) {
  const Rational sigma = R(3, 2);
  EXPECT_EQ(threshold2incidence_exponents(2, sigma), std::make_pair(R(3, 4), R(1, 2)));
  EXPECT_EQ(grid2flat_exponents(2), std::make_pair(R(3, 4), R(1, 2)));
  EXPECT_EQ(grid_total_exponent(1), R(1));
  EXPECT_EQ(grid_total_exponent(2), R(5, 4));
  EXPECT_THROW(threshold2incidence_exponents(1, R(1)), DomainError);
  EXPECT_THROW(grid_total_exponent(0), DomainError);
}

TEST(Exponents, IdentitiesHoldExactly) {
  for (long s = 1; s <= 100; ++s) {
    const auto [a, b] = grid2flat_exponents(s);
    EXPECT_EQ(a + b, R(4, 3) - R(1, 9 * s - 6));
    EXPECT_EQ(a + b, grid_total_exponent(s));
    EXPECT_EQ(threshold2incidence_exponents(2, R(2) - R(1, s)), grid2flat_exponents(s));
    EXPECT_EQ(energy_exponent(s), R(20 * (7 * s - 4) - 18, 7 * (7 * s - 4)));
    EXPECT_EQ(distinct_distance_exponent(s), R(8 * (7 * s - 4) + 18, 7 * (7 * s - 4)));
  }
}

TEST(ValidRange, Bounds) {
  const auto r = valid_range(16, 2);
  EXPECT_EQ(r.low, 4);
  EXPECT_EQ(r.high, 64);
  EXPECT_EQ(valid_range(17, 2).low, 5);
  EXPECT_TRUE(in_valid_range(16, 4, 2));
  EXPECT_TRUE(in_valid_range(16, 64, 2));
  EXPECT_FALSE(in_valid_range(16, 3, 2));
  EXPECT_FALSE(in_valid_range(16, 65, 2));
  EXPECT_EQ(valid_range(10, 1).high, 10);
}
