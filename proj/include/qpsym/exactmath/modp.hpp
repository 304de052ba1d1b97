#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qpsym/exactmath/polynomial.hpp"

namespace qpsym::modp {

// Polynomials over F_p for small primes, ascending coefficients in [0, p).
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2, b = ((a % p) + p) % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Poly reduce(const IntPolynomial& f, std::int64_t p) {
  Poly out;
  for (const auto& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

inline Poly sub(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

inline Poly rem(Poly a, const Poly& b, std::int64_t p) {
  std::int64_t inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::int64_t q = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - q * b[j]) % p + p) % p;
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline Poly quot(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  std::int64_t inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::int64_t c = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

inline Poly derivative(const Poly& a, std::int64_t p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
  trim(d);
  return d;
}

inline Poly powmod(Poly base, std::int64_t e, const Poly& m, std::int64_t p) {
  Poly r{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (e & 1) r = rem(mul(r, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

/// Degrees of the irreducible factors of f mod p, or nullopt when p divides
/// the leading coefficient or f is not squarefree mod p (p | disc f).
inline std::optional<std::vector<int>> factor_degrees(const IntPolynomial& f, std::int64_t p) {
  Poly g = reduce(f, p);
  if (static_cast<long>(g.size()) - 1 != f.degree()) return std::nullopt;
  if (gcd(g, derivative(g, p), p).size() != 1) return std::nullopt;
  std::vector<int> degrees;
  Poly x{0, 1};
  Poly h = x;
  for (int i = 1; 2 * i <= static_cast<int>(g.size()) - 1; ++i) {
    h = powmod(h, p, g, p);
    Poly d = gcd(g, sub(h, x, p), p);
    int dd = static_cast<int>(d.size()) - 1;
    for (int k = 0; k < dd / i; ++k) degrees.push_back(i);
    if (dd > 0) {
      g = quot(g, d, p);
      h = rem(h, g, p);
    }
  }
  if (g.size() > 1) degrees.push_back(static_cast<int>(g.size()) - 1);
  return degrees;
}

/// Degrees in [1, n) reachable as the degree of a product of a subset of factors.
inline std::set<int> proper_subset_degrees(const std::vector<int>& degrees, int n) {
  std::set<int> sums{0};
  for (int d : degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  std::set<int> out;
  for (int s : sums)
    if (s > 0 && s < n) out.insert(s);
  return out;
}

}  // namespace qpsym::modp
