#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qpsym/qpsym.hpp"

namespace qtest {

using namespace qpsym;

// Hand-rolled generators on a fixed seed so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  Integer integer(long bound) { return Integer(range(-bound, bound)); }
  Rational rational(long num_bound, long den_bound) {
    return make_rational(Integer(range(-num_bound, num_bound)), Integer(range(1, den_bound)));
  }
  Rational nonzero_rational(long num_bound, long den_bound) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (r != 0) return r;
    }
  }

  IntMatrix int_matrix(std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(bound);
    return m;
  }

  // Product of random elementary operations, a swap and a sign flip.
  IntMatrix unimodular(std::size_t n, int steps = 6, long bound = 3) {
    IntMatrix u = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      if (i == j) continue;
      Integer k = integer(bound);
      for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
    }
    if (n >= 2 && coin()) {
      auto r0 = u.row(0);
      u.set_row(0, u.row(1));
      u.set_row(1, r0);
    }
    if (coin()) {
      for (std::size_t c = 0; c < n; ++c) u(n - 1, c) = -u(n - 1, c);
    }
    return u;
  }

  FieldElement element(const NumberField& f, long num_bound = 6, long den_bound = 3) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f.degree(); ++i) c.push_back(rational(num_bound, den_bound));
    return {f, c};
  }
  FieldElement nonzero_element(const NumberField& f, long num_bound = 6, long den_bound = 3) {
    for (;;) {
      FieldElement x = element(f, num_bound, den_bound);
      if (!x.is_zero()) return x;
    }
  }
  FieldElement integral_element(const NumberField& f, long bound = 4) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f.degree(); ++i) c.push_back(Rational(integer(bound)));
    return {f, c};
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

inline IntMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Integer>> r;
  for (auto& row : rows) {
    std::vector<Integer> x;
    for (long v : row) x.emplace_back(v);
    r.push_back(std::move(x));
  }
  return IntMatrix::from_rows(r);
}

inline RationalMatrix rmat(std::vector<std::vector<long>> rows) { return to_rational(mat(std::move(rows))); }

inline FieldElement elem(const NumberField& f, std::vector<Rational> c) { return {f, std::move(c)}; }

inline IntPolynomial ipoly(std::vector<long> ascending) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

inline NumberField sqrt3() { return quadratic_field(3); }
inline NumberField cbrt2() { return make_field(ipoly({-2, 0, 0, 1}), {make_rational(5, 4), make_rational(4, 3)}); }

// A few real fields of small degree with an isolating interval for one real root.
inline std::vector<NumberField> sample_fields() {
  return {
      quadratic_field(2),
      quadratic_field(3),
      quadratic_field(5),
      make_field(ipoly({-7, 1, 1}), {Rational(2), Rational(3)}),          // (-1 + sqrt 29)/2
      cbrt2(),
      make_field(ipoly({-1, -1, 0, 1}), {Rational(1), make_rational(3, 2)}),  // plastic number
      make_field(ipoly({1, -3, 0, 1}), {Rational(1), Rational(2)}),           // totally real cubic
      make_field(ipoly({-1, -1, 0, 0, 1}), {Rational(1), Rational(2)}),       // z^4 - z - 1
  };
}

inline ValidatedFlow algebraic_flow(const NumberField& f, const std::vector<std::vector<Rational>>& rows,
                                    std::vector<std::vector<Rational>> units = {}) {
  FlowSpec s;
  s.model = FlowModel::algebraic;
  s.field = f;
  s.frequencies = RationalMatrix::from_rows(rows);
  s.supplied_units = std::move(units);
  return validate_flow(std::move(s));
}

inline ValidatedFlow formal_flow(const std::vector<std::vector<Rational>>& rows) {
  FlowSpec s;
  s.model = FlowModel::formal;
  s.frequencies = RationalMatrix::from_rows(rows);
  return validate_flow(std::move(s));
}

inline ValidatedFlow example_flow(const std::string& name) {
  return validate_flow(io::load_flow_spec(std::string(QPSYM_SOURCE_DIR) + "/" + name));
}

}  // namespace qtest
