#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qpsym/exactmath/polynomial.hpp"

namespace qpsym {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

namespace detail {

inline std::vector<RatPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<RatPolynomial> chain;
  chain.push_back(to_rational(p));
  chain.push_back(chain.back().derivative());
  while (!chain.back().is_zero()) {
    RatPolynomial r = -(chain[chain.size() - 2] % chain.back());
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

inline int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int variations_at(const std::vector<RatPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q.evaluate(x)));
  return count_sign_changes(signs);
}

// dir = +1 for +infinity, -1 for -infinity
inline int variations_at_infinity(const std::vector<RatPolynomial>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = sgn(q.leading());
    if (dir < 0 && (q.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return count_sign_changes(signs);
}

}  // namespace detail

/// Number of distinct real roots of p, on the open interval when one is
/// given. Interval endpoints must not be roots.
inline unsigned sturm_real_root_count(const IntPolynomial& p,
                                      const std::optional<RationalInterval>& interval = std::nullopt) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "Sturm count of the zero polynomial");
  if (interval) {
    if (interval->lo > interval->hi) fail(ErrorKind::InvalidInterval, "interval lower bound exceeds upper bound");
    for (const auto* end : {&interval->lo, &interval->hi}) {
      if (p.evaluate(Rational(*end)) == 0) {
        fail(ErrorKind::EndpointIsRoot, "interval endpoint " + to_short_string(*end) + " is a root");
      }
    }
  }
  if (p.degree() == 0) return 0;
  auto chain = detail::sturm_chain(p);
  int count = interval ? detail::variations_at(chain, interval->lo) - detail::variations_at(chain, interval->hi)
                       : detail::variations_at_infinity(chain, -1) - detail::variations_at_infinity(chain, +1);
  return static_cast<unsigned>(count);
}

/// All rational roots of p, ascending, without multiplicity.
inline std::vector<Rational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "rational roots of the zero polynomial");
  std::vector<Rational> roots;
  const auto& c = p.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  IntPolynomial q(std::vector<Integer>(c.begin() + static_cast<long>(low), c.end()));
  if (q.degree() >= 1) {
    auto nums = positive_divisors(q.coefficients().front());
    auto dens = positive_divisors(q.leading());
    for (const auto& r : nums) {
      for (const auto& s : dens) {
        if (gcd(r, s) != 1) continue;
        for (int sign : {1, -1}) {
          Rational cand = make_rational(sign * r, s);
          if (q.evaluate(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// Halves an interval containing exactly one simple root of p (sign change
/// at the endpoints) until its width is at most `width`.
inline RationalInterval refine_root(const IntPolynomial& p, RationalInterval iv, const Rational& width) {
  int lo_sign = sgn(p.evaluate(iv.lo));
  while (iv.width() > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = sgn(p.evaluate(mid));
    if (s == 0) return {mid, mid};
    if (s == lo_sign) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

/// Cauchy bound: every complex root has modulus below the returned value.
inline Rational root_modulus_bound(const IntPolynomial& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.coefficients().size(); ++i) {
    Rational r = Rational(abs(p.coefficients()[i])) / Rational(abs(p.leading()));
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace qpsym
