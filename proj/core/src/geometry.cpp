#include "subdivlab/geometry.hpp"

#include <tuple>

#include "subdivlab/errors.hpp"

namespace subdivlab {

bool operator<(const RPoint& a, const RPoint& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); }

RLine::RLine(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0 && b_ == 0) throw InputError("line needs (a, b) != (0, 0)");
  const Rational lead = a_ != 0 ? a_ : b_;
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

bool operator<(const RLine& l, const RLine& r) {
  return std::make_tuple(l.a(), l.b(), l.c()) < std::make_tuple(r.a(), r.b(), r.c());
}

std::optional<RPoint> intersect(const RLine& l1, const RLine& l2) {
  const Rational det = l1.a() * l2.b() - l1.b() * l2.a();
  if (det == 0) return std::nullopt;
  RPoint p{(l1.c() * l2.b() - l1.b() * l2.c()) / det, (l1.a() * l2.c() - l1.c() * l2.a()) / det};
  return p;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const Rational norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw DomainError("division by zero");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}
bool operator<(const Complex& a, const Complex& b) { return std::tie(a.re, a.im) < std::tie(b.re, b.im); }

bool operator<(const CPoint& a, const CPoint& b) { return std::tie(a.z, a.w) < std::tie(b.z, b.w); }

CLine::CLine(Complex a, Complex b, Complex c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.is_zero() && b_.is_zero()) throw InputError("complex line needs (a, b) != (0, 0)");
  const Complex lead = !a_.is_zero() ? a_ : b_;
  a_ = a_ / lead;
  b_ = b_ / lead;
  c_ = c_ / lead;
}

bool operator<(const CLine& l, const CLine& r) {
  return std::make_tuple(l.a(), l.b(), l.c()) < std::make_tuple(r.a(), r.b(), r.c());
}

Flat complex_line_to_flat(const CLine& line) {
  const Complex& a = line.a();
  const Complex& b = line.b();
  const Complex& c = line.c();
  Flat f;
  f.rows.push_back({a.re, -a.im, b.re, -b.im, c.re});
  f.rows.push_back({a.im, a.re, b.im, b.re, c.im});
  return f;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= factor * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return rref(rows, columns).size();
}

FlatIntersection flat_intersection(const Flat& f, const Flat& g) {
  // Augmented system [A | -c] over both flats.
  std::vector<std::vector<Rational>> m;
  for (const Flat* flat : {&f, &g})
    for (const auto& r : flat->rows) m.push_back({r[0], r[1], r[2], r[3], -r[4]});
  std::vector<std::size_t> pivots = rref(m, 5);
  FlatIntersection out;
  if (!pivots.empty() && pivots.back() == 4) return out;
  out.empty = false;
  out.dimension = 4 - static_cast<int>(pivots.size());
  if (out.dimension == 0) {
    std::array<Rational, 4> p;
    for (std::size_t k = 0; k < 4; ++k) p[k] = m[k][4];
    out.point = p;
  }
  return out;
}

bool pairwise_flat_check(const std::vector<Flat>& flats) {
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = i + 1; j < flats.size(); ++j)
      if (flat_intersection(flats[i], flats[j]).dimension > 0) return false;
  return true;
}

}  // namespace subdivlab
