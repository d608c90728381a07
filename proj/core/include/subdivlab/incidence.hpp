#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "subdivlab/bigraph.hpp"
#include "subdivlab/geometry.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/rational.hpp"

namespace subdivlab {

struct RealConfig {
  std::vector<RPoint> points;
  std::vector<RLine> lines;
  friend bool operator==(const RealConfig&, const RealConfig&) = default;
};

struct ComplexConfig {
  std::vector<CPoint> points;
  std::vector<CLine> lines;
  friend bool operator==(const ComplexConfig&, const ComplexConfig&) = default;
};

// Lines on the left, points on the right, edge iff the point lies on the
// line. Throws InputError on a repeated point or line and StructuralError
// if two lines share more than one point.
Bigraph incidence_graph(const RealConfig& config);
Bigraph incidence_graph(const ComplexConfig& config);

// s-by-s grid: points[i][j] is the index of L1[i] ∩ L2[j].
struct GridWitness {
  std::vector<std::size_t> L1;
  std::vector<std::size_t> L2;
  std::vector<std::vector<std::size_t>> points;
  friend bool operator==(const GridWitness&, const GridWitness&) = default;
};

// Searches the sided pattern [s, s] in the incidence graph and re-verifies
// any copy geometrically. Throws BudgetError.
std::optional<GridWitness> detect_grid(const RealConfig& config, std::uint32_t s,
                                       const SearchOptions& options = {});
std::optional<GridWitness> detect_grid(const ComplexConfig& config, std::uint32_t s,
                                       const SearchOptions& options = {});

// Exact geometric check of a witness against the configuration.
bool verify_grid(const RealConfig& config, const GridWitness& w);
bool verify_grid(const ComplexConfig& config, const GridWitness& w);

struct TriangleWitness {
  std::array<std::size_t, 3> lines;
  std::array<std::size_t, 3> points;  // points[k] lies on the two lines other than lines[k]
  friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

// Three pairwise non-parallel lines whose three pairwise intersections are
// distinct and all in the point set. First triple in lexicographic order.
std::optional<TriangleWitness> detect_triangle(const RealConfig& config);

// Exponents of m and n in the incidence bound for points in R^d against a
// family with linear threshold sigma: ((d-1)σ/(dσ-1), d(σ-1)/(dσ-1)).
std::pair<Rational, Rational> threshold2incidence_exponents(std::int64_t d, const Rational& sigma);
// ((2s-1)/(3s-2), (2s-2)/(3s-2)) for grid-free 2-flats in R^4.
std::pair<Rational, Rational> grid2flat_exponents(std::int64_t s);
// 4/3 - 1/(9s-6).
Rational grid_total_exponent(std::int64_t s);
// Exponent of n in the energy bound, (20s-14)/(7s-4).
Rational energy_exponent(std::int64_t s);
// Exponent of n in the distinct-distance lower bound, (8s-2)/(7s-4).
Rational distinct_distance_exponent(std::int64_t s);

// Integer n range [ceil(m^{1/2}), floor(m^{2-1/s})].
struct ValidRange {
  BigInt low;
  BigInt high;
};
ValidRange valid_range(std::uint64_t m, std::int64_t s);
bool in_valid_range(std::uint64_t m, std::uint64_t n, std::int64_t s);

}  // namespace subdivlab
