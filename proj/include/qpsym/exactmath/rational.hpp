#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qpsym/errors.hpp"

namespace qpsym {

// Arbitrary precision scalars. mpq_class keeps values canonical (gcd 1,
// positive denominator) as long as every construction from a raw
// numerator/denominator pair goes through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_canonical(const Rational& r) {
  return r.get_den() > 0 && gcd(r.get_num(), r.get_den()) == 1;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_of(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }
inline int sign_of(const Integer& r) { return sgn(r); }

/// "p/q" with q > 0, always including the denominator.
inline std::string to_exact_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "p" when integral, else "p/q".
inline std::string to_short_string(const Rational& r) {
  return is_integer(r) ? r.get_num().get_str() : to_exact_string(r);
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) fail(ErrorKind::ParseError, "empty integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') fail(ErrorKind::ParseError, "invalid integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// Accepts "p", "p/q" (q != 0), with optional sign on p.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    fail(ErrorKind::ParseError, "denominator must be unsigned in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

/// Decimal rendering truncated toward zero to `digits` fractional digits.
inline std::string to_decimal_string(const Rational& r, unsigned digits) {
  Integer scale = ipow(10, digits);
  Integer scaled = r.get_num() * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
  bool negative = r < 0;
  Integer mag = abs(q);
  std::string s = mag.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return (negative ? "-" : "") + s;
}

/// Divisors of |n| (n != 0) in ascending order, by trial division.
inline std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) fail(ErrorKind::InvalidArgument, "divisors of zero");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_squarefree(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return false;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

}  // namespace qpsym
