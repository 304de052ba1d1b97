#pragma once

#include <vector>

#include "qpsym/exactmath/matrix.hpp"
#include "qpsym/exactmath/polynomial.hpp"

namespace qpsym {

/// Monic polynomial of least degree with q(M) v = 0, from the first linear
/// dependency in the Krylov sequence v, Mv, M^2 v, ...
inline RatPolynomial krylov_annihilator(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<std::vector<Rational>> krylov;
  std::vector<Rational> cur = v;
  for (;;) {
    auto coeffs = solve_in_row_span(krylov, cur);
    if (coeffs) {
      // cur = sum c_i M^i v  =>  z^k - sum c_i z^i annihilates v
      std::vector<Rational> p(krylov.size() + 1, Rational(0));
      for (std::size_t i = 0; i < krylov.size(); ++i) p[i] = -(*coeffs)[i];
      p[krylov.size()] = 1;
      return RatPolynomial(std::move(p));
    }
    krylov.push_back(cur);
    cur = times_column(m, cur);
  }
}

/// Minimal polynomial of a square rational matrix as a primitive integer
/// polynomial with positive leading coefficient: lcm of the annihilators of
/// the standard basis vectors.
inline IntPolynomial minimal_polynomial_of_matrix(const RationalMatrix& m) {
  if (!m.is_square() || m.rows() == 0) fail(ErrorKind::ShapeMismatch, "minimal polynomial needs a non-empty square matrix");
  std::size_t n = m.rows();
  RatPolynomial acc{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    acc = lcm(acc, krylov_annihilator(m, e));
  }
  return primitive_part(acc);
}

/// Evaluates an integer polynomial at a square rational matrix.
inline RationalMatrix evaluate_at_matrix(const IntPolynomial& p, const RationalMatrix& m) {
  RationalMatrix acc(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m + Rational(*it) * RationalMatrix::identity(m.rows());
  }
  return acc;
}

}  // namespace qpsym
