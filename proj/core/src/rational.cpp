#include "subdivlab/rational.hpp"

#include <cctype>
#include <limits>

#include "subdivlab/errors.hpp"

namespace subdivlab {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("malformed rational: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("malformed rational: '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part))
      throw InputError("malformed decimal: '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view int_digits = int_part;
    if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+'))
      int_digits.remove_prefix(1);
    if (int_digits.empty() && frac_part.empty())
      throw InputError("malformed decimal: '" + std::string(text) + "'");
    if (!int_digits.empty() && !all_digits(int_digits))
      throw InputError("malformed decimal: '" + std::string(text) + "'");
    std::string digits = std::string(int_digits) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den = ipow(BigInt(10), frac_part.size());
    Rational q(negative ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text, text));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(BigInt(std::to_string(num), 10), BigInt(std::to_string(den), 10));
  q.canonicalize();
  return q;
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

BigInt iroot_floor(const BigInt& value, unsigned long root) {
  if (value < 0) throw DomainError("iroot_floor of a negative value");
  if (root == 0) throw DomainError("zeroth root");
  BigInt result;
  mpz_root(result.get_mpz_t(), value.get_mpz_t(), root);
  return result;
}

BigInt floor_power(const BigInt& m, std::uint64_t num, std::uint64_t den) {
  if (m < 1 || den == 0) throw DomainError("floor_power requires m >= 1 and den >= 1");
  return iroot_floor(ipow(m, num), static_cast<unsigned long>(den));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (!r.fits_ulong_p()) throw CapacityError("binomial coefficient overflows 64 bits");
  return r.get_ui();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace subdivlab
