#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "subdivlab/rational.hpp"

namespace subdivlab {

struct RPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RPoint&, const RPoint&) = default;
};
bool operator<(const RPoint& a, const RPoint& b);

// Line a x + b y = c, normalized so the first nonzero of (a, b) is 1.
class RLine {
 public:
  RLine(Rational a, Rational b, Rational c);
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  bool contains(const RPoint& p) const { return a_ * p.x + b_ * p.y == c_; }
  bool parallel_to(const RLine& other) const { return a_ * other.b_ == b_ * other.a_; }
  friend bool operator==(const RLine&, const RLine&) = default;

 private:
  Rational a_, b_, c_;
};
bool operator<(const RLine& a, const RLine& b);

std::optional<RPoint> intersect(const RLine& l1, const RLine& l2);

// Gaussian rational re + i im.
struct Complex {
  Rational re;
  Rational im;
  Complex() = default;
  Complex(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const Complex&, const Complex&) = default;
};
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);  // throws DomainError on zero
bool operator<(const Complex& a, const Complex& b);

struct CPoint {
  Complex z;
  Complex w;
  friend bool operator==(const CPoint&, const CPoint&) = default;
};
bool operator<(const CPoint& a, const CPoint& b);

// Line a z + b w + c = 0 in C^2, normalized so the first nonzero of (a, b) is 1.
class CLine {
 public:
  CLine(Complex a, Complex b, Complex c);
  const Complex& a() const { return a_; }
  const Complex& b() const { return b_; }
  const Complex& c() const { return c_; }
  bool contains(const CPoint& p) const { return (a_ * p.z + b_ * p.w + c_).is_zero(); }
  friend bool operator==(const CLine&, const CLine&) = default;

 private:
  Complex a_, b_, c_;
};
bool operator<(const CLine& a, const CLine& b);

// Real affine subspace of R^4 cut out by rows[k] . (x1, x2, x3, x4) + rows[k][4] = 0.
struct Flat {
  std::vector<std::array<Rational, 5>> rows;
  friend bool operator==(const Flat&, const Flat&) = default;
};

// z = x1 + i x2, w = x3 + i x4; the real and imaginary parts of
// a z + b w + c give the two defining equations.
Flat complex_line_to_flat(const CLine& line);

struct FlatIntersection {
  bool empty = true;
  int dimension = -1;            // -1 when empty
  std::optional<std::array<Rational, 4>> point;  // set when dimension == 0
};

FlatIntersection flat_intersection(const Flat& f, const Flat& g);

// True iff every pair of flats meets in at most one point.
bool pairwise_flat_check(const std::vector<Flat>& flats);

// Rank of a rational matrix (row-major, all rows of equal length).
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace subdivlab
