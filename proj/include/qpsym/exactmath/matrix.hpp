#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsym/exactmath/rational.hpp"

namespace qpsym {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(ErrorKind::ShapeMismatch, "entry count does not match shape");
  }
  /// Rows must all have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    std::vector<T> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) fail(ErrorKind::ShapeMismatch, "ragged rows");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(i * cols_),
                          data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) fail(ErrorKind::ShapeMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x *= s;
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + T(-1) * b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Row vector times matrix.
template <class T>
std::vector<T> row_times(const std::vector<T>& v, const Matrix<T>& m) {
  if (v.size() != m.rows()) fail(ErrorKind::ShapeMismatch, "vector-matrix shape mismatch");
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

/// Matrix times column vector.
template <class T>
std::vector<T> times_column(const Matrix<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) fail(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> data;
  data.reserve(m.data().size());
  for (const auto& x : m.data()) data.emplace_back(x);
  return RationalMatrix(m.rows(), m.cols(), std::move(data));
}

inline bool is_integral(const RationalMatrix& m) {
  for (const auto& x : m.data())
    if (!is_integer(x)) return false;
  return true;
}

/// Integer matrix of an integral rational matrix; nullopt if any entry is fractional.
inline std::optional<IntMatrix> to_integer(const RationalMatrix& m) {
  std::vector<Integer> data;
  data.reserve(m.data().size());
  for (const auto& x : m.data()) {
    if (!is_integer(x)) return std::nullopt;
    data.push_back(x.get_num());
  }
  return IntMatrix(m.rows(), m.cols(), std::move(data));
}

inline Rational determinant(RationalMatrix a) {
  if (!a.is_square()) fail(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

inline Integer determinant(const IntMatrix& a) { return determinant(to_rational(a)).get_num(); }

/// Rank over Q.
inline std::size_t rank(RationalMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Inverse over Q; nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Coefficients x with x * basis = target, where the rows of `basis` are
/// linearly independent; nullopt when target is outside their span.
inline std::optional<std::vector<Rational>> solve_in_row_span(const std::vector<std::vector<Rational>>& basis,
                                                              const std::vector<Rational>& target) {
  std::size_t k = basis.size();
  std::size_t n = target.size();
  // Eliminate on the transposed system [basis^T | target].
  RationalMatrix a(n, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (basis[i].size() != n) fail(ErrorKind::ShapeMismatch, "span basis length mismatch");
    for (std::size_t j = 0; j < n; ++j) a(j, i) = basis[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) a(j, k) = target[j];
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j <= k; ++j) std::swap(a(p, j), a(r, j));
    Rational pivot = a(r, c);
    for (std::size_t j = 0; j <= k; ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j <= k; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a(i, k) != 0) return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a(i, k);
  return x;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_short_string(Rational(m(i, j)));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace qpsym
