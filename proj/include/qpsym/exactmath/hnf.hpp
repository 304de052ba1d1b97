#pragma once

#include <utility>

#include "qpsym/exactmath/matrix.hpp"

namespace qpsym {

struct HermiteResult {
  IntMatrix h;  ///< row-style HNF
  IntMatrix u;  ///< unimodular, h = u * m
};

namespace detail {

inline void combine_rows(IntMatrix& m, std::size_t r1, std::size_t r2, const Integer& a, const Integer& b,
                         const Integer& c, const Integer& d) {
  // (row r1, row r2) <- (a*r1 + b*r2, c*r1 + d*r2)
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(r1, j);
    Integer y = m(r2, j);
    m(r1, j) = a * x + b * y;
    m(r2, j) = c * x + d * y;
  }
}

/// Echelon HNF of an arbitrary integer matrix. Returns the transformed matrix
/// (zero rows moved to the bottom), the transform and the rank.
struct EchelonResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

inline EchelonResult hermite_echelon(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (std::size_t i = row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Integer a = h(row, col);
      Integer b = h(i, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g;
      Integer bg = b / g;
      // [[s, t], [-b/g, a/g]] has determinant 1
      combine_rows(h, row, i, s, t, -bg, ag);
      combine_rows(u, row, i, s, t, -bg, ag);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(row, j) = -h(row, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(row, j) = -u(row, j);
    }
    const Integer pivot = h(row, col);
    for (std::size_t k = 0; k < row; ++k) {
      Integer q = floor_div(h(k, col), pivot);
      if (q == 0) continue;
      for (std::size_t j = 0; j < h.cols(); ++j) h(k, j) -= q * h(row, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(k, j) -= q * u(row, j);
    }
    ++row;
  }
  return {std::move(h), std::move(u), row};
}

}  // namespace detail

/// Row-style Hermite normal form of a full-row-rank integer matrix: H = U*M
/// is in echelon form with positive pivots and every entry above a pivot in
/// [0, pivot). H is unique for the row lattice of M.
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  auto r = detail::hermite_echelon(m);
  if (r.rank < m.rows()) {
    fail(ErrorKind::RankDeficient,
         "matrix has rank " + std::to_string(r.rank) + " < " + std::to_string(m.rows()) + " rows");
  }
  return {std::move(r.h), std::move(r.u)};
}

/// HNF basis of the Z-span of the rows of m (any number of rows); the result
/// has one row per unit of rank.
inline IntMatrix row_lattice_basis(const IntMatrix& m) {
  auto r = detail::hermite_echelon(m);
  IntMatrix out(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r.h(i, j);
  return out;
}

inline bool is_hermite_normal_form(const IntMatrix& h) {
  std::size_t prev_pivot = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) return false;
    if (i > 0 && p <= prev_pivot) return false;
    if (h(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    prev_pivot = p;
  }
  return true;
}

}  // namespace qpsym
