#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qpsym/exactmath/hnf.hpp"
#include "qpsym/exactmath/matrix.hpp"
#include "qpsym/exactmath/minpoly.hpp"
#include "qpsym/exactmath/modp.hpp"
#include "qpsym/exactmath/polynomial.hpp"
#include "qpsym/exactmath/sturm.hpp"

namespace qpsym {

/// How irreducibility of the defining polynomial was established.
enum class IrreducibilityProof {
  rational_root_test,           // degree <= 3: no rational root
  modp_degree_patterns,         // factor-degree patterns mod small primes admit no proper factor
  quadratic_factor_exhaustion,  // degree 4 or 5: no rational root and no monic quadratic factor
};

inline std::string to_string(IrreducibilityProof p) {
  switch (p) {
    case IrreducibilityProof::rational_root_test: return "rational-root test";
    case IrreducibilityProof::modp_degree_patterns: return "mod-p factor degree patterns";
    case IrreducibilityProof::quadratic_factor_exhaustion: return "exhaustive quadratic factor search";
  }
  return "unknown";
}

struct Signature {
  unsigned r1 = 0;
  unsigned r2 = 0;
  unsigned unit_rank = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class FieldElement;

/// A real number field Q(delta): a monic irreducible integer polynomial
/// together with a rational interval isolating the real root delta. Cheap to
/// copy; copies share the same immutable data.
class NumberField {
 public:
  const IntPolynomial& min_poly() const { return data_->min_poly; }
  const RationalInterval& root_interval() const { return data_->root_interval; }
  std::size_t degree() const { return static_cast<std::size_t>(data_->min_poly.degree()); }
  IrreducibilityProof irreducibility_proof() const { return data_->proof; }

  /// Reduced power-basis coordinates of delta^k, for 0 <= k <= 2n - 2.
  const std::vector<Rational>& power(std::size_t k) const { return data_->powers.at(k); }

  /// Same defining polynomial and the same embedding into R.
  bool same_as(const NumberField& other) const {
    if (data_ == other.data_) return true;
    if (!(min_poly() == other.min_poly())) return false;
    RationalInterval overlap{std::max(root_interval().lo, other.root_interval().lo),
                             std::min(root_interval().hi, other.root_interval().hi)};
    if (overlap.lo > overlap.hi) return false;
    // Endpoints of both isolating intervals are non-roots by construction.
    return sturm_real_root_count(min_poly(), overlap) == 1;
  }
  friend bool operator==(const NumberField& a, const NumberField& b) { return a.same_as(b); }

  std::string describe() const { return "Q(d), " + to_string(min_poly()) + " = 0"; }

 private:
  struct Data {
    IntPolynomial min_poly;
    RationalInterval root_interval;
    IrreducibilityProof proof;
    std::vector<std::vector<Rational>> powers;
  };
  explicit NumberField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend NumberField make_field(const IntPolynomial&, const RationalInterval&);
};

namespace detail {

inline std::vector<int> small_primes_below(int bound) {
  std::vector<int> primes;
  for (int p = 2; p < bound; ++p) {
    bool prime = true;
    for (int q : primes)
      if (p % q == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  return primes;
}

enum class QuadraticSearch { found, exhausted, too_large };

// Monic quadratic factors z^2 + b z + c: both roots have modulus below the
// Cauchy bound R, so |b| <= 2R, |c| <= R^2, and c divides the constant term.
inline QuadraticSearch search_quadratic_factor(const IntPolynomial& f) {
  Integer bound = floor_of(root_modulus_bound(f)) + 1;
  const Integer& a0 = f.coefficients().front();
  if (a0 == 0) return QuadraticSearch::found;
  auto divisors = positive_divisors(a0);
  Integer work = (4 * bound + 1) * static_cast<unsigned long>(2 * divisors.size());
  if (work > 2000000) return QuadraticSearch::too_large;
  RatPolynomial rf = to_rational(f);
  for (const auto& d : divisors) {
    if (d > bound * bound) break;
    for (int s : {1, -1}) {
      Integer c = s * d;
      for (Integer b = -2 * bound; b <= 2 * bound; ++b) {
        RatPolynomial q{Rational(c), Rational(b), Rational(1)};
        if ((rf % q).is_zero()) return QuadraticSearch::found;
      }
    }
  }
  return QuadraticSearch::exhausted;
}

inline IrreducibilityProof prove_irreducible(const IntPolynomial& f) {
  auto roots = rational_roots(f);
  if (!roots.empty()) {
    fail(ErrorKind::Reducible, to_string(f) + " has rational root " + to_short_string(roots.front()));
  }
  int n = static_cast<int>(f.degree());
  if (n <= 3) return IrreducibilityProof::rational_root_test;
  RatPolynomial rf = to_rational(f);
  if (gcd(rf, rf.derivative()).degree() > 0) {
    fail(ErrorKind::Reducible, to_string(f) + " has a repeated factor");
  }
  std::optional<std::set<int>> possible;
  for (int p : small_primes_below(100)) {
    auto degrees = modp::factor_degrees(f, p);
    if (!degrees) continue;  // p divides the discriminant
    auto s = modp::proper_subset_degrees(*degrees, n);
    if (!possible) {
      possible = s;
    } else {
      std::set<int> keep;
      for (int d : *possible)
        if (s.count(d)) keep.insert(d);
      possible = std::move(keep);
    }
    if (possible->empty()) return IrreducibilityProof::modp_degree_patterns;
  }
  switch (search_quadratic_factor(f)) {
    case QuadraticSearch::found:
      fail(ErrorKind::Reducible, to_string(f) + " has a monic quadratic factor over Z");
    case QuadraticSearch::exhausted:
      if (n <= 5) return IrreducibilityProof::quadratic_factor_exhaustion;
      break;
    case QuadraticSearch::too_large:
      break;
  }
  fail(ErrorKind::IrreducibilityUndecided,
       "no mod-p witness for primes below 100 and no factor found for " + to_string(f));
}

}  // namespace detail

/// Validated field: monic, degree >= 2, irreducible, and the interval
/// isolates exactly one real root.
inline NumberField make_field(const IntPolynomial& min_poly, const RationalInterval& root_interval) {
  if (min_poly.degree() < 2) fail(ErrorKind::DegreeTooSmall, "defining polynomial must have degree >= 2");
  if (!min_poly.is_monic()) fail(ErrorKind::NotMonic, to_string(min_poly) + " is not monic");
  IrreducibilityProof proof = detail::prove_irreducible(min_poly);
  if (sturm_real_root_count(min_poly) == 0) fail(ErrorKind::NoRealRoot, to_string(min_poly) + " has no real root");
  unsigned in_interval = sturm_real_root_count(min_poly, root_interval);
  if (in_interval != 1) {
    fail(ErrorKind::NotIsolating, "interval [" + to_short_string(root_interval.lo) + ", " +
                                      to_short_string(root_interval.hi) + "] contains " +
                                      std::to_string(in_interval) + " roots");
  }

  std::size_t n = static_cast<std::size_t>(min_poly.degree());
  std::vector<std::vector<Rational>> powers;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> e(n, Rational(0));
    e[k] = 1;
    powers.push_back(std::move(e));
  }
  // delta^n = -sum a_i delta^i, then shift-and-reduce.
  for (std::size_t k = n; k + 1 < 2 * n; ++k) {
    const auto& prev = powers.back();
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 1; i < n; ++i) next[i] = prev[i - 1];
    const Rational top = prev[n - 1];
    for (std::size_t i = 0; i < n; ++i) next[i] -= top * Rational(min_poly.coefficients()[i]);
    powers.push_back(std::move(next));
  }
  auto data = std::make_shared<NumberField::Data>(
      NumberField::Data{min_poly, root_interval, proof, std::move(powers)});
  return NumberField(std::move(data));
}

/// Q(sqrt d) for a positive non-square d, defined by z^2 - d.
inline NumberField quadratic_field(const Integer& d) {
  if (d <= 1) fail(ErrorKind::OutOfRange, "quadratic field needs d > 1");
  Integer s = isqrt(d);
  return make_field(IntPolynomial{-d, 0, 1}, {Rational(s), Rational(s + 1)});
}

/// An element of a number field in power-basis coordinates.
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != field_.degree()) {
      fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(field_.degree()) + " coordinates, got " +
                                         std::to_string(coords_.size()));
    }
  }
  static FieldElement from_rational(const NumberField& f, const Rational& r) {
    std::vector<Rational> c(f.degree(), Rational(0));
    c[0] = r;
    return {f, std::move(c)};
  }
  static FieldElement zero(const NumberField& f) { return from_rational(f, 0); }
  static FieldElement one(const NumberField& f) { return from_rational(f, 1); }
  static FieldElement generator(const NumberField& f) {
    std::vector<Rational> c(f.degree(), Rational(0));
    c[1] = 1;
    return {f, std::move(c)};
  }

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  RatPolynomial as_polynomial() const { return RatPolynomial(coords_); }

  FieldElement operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    FieldElement r = a;
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    std::size_t n = a.coords_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coords_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<long>(n));
    for (std::size_t k = n; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const auto& pk = a.field_.power(k);
      for (std::size_t i = 0; i < n; ++i) out[i] += prod[k] * pk[i];
    }
    return {a.field_, std::move(out)};
  }
  friend FieldElement operator*(const Rational& s, const FieldElement& x) {
    FieldElement r = x;
    for (auto& c : r.coords_) c *= s;
    return r;
  }

  FieldElement inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero field element");
    auto eg = extended_gcd(as_polynomial(), to_rational(field_.min_poly()));
    if (eg.g.degree() != 0) fail(ErrorKind::InternalInconsistency, "defining polynomial is not irreducible");
    RatPolynomial s = eg.s % to_rational(field_.min_poly());
    std::vector<Rational> c(field_.degree(), Rational(0));
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) c[i] = s.coefficients()[i];
    return {field_, std::move(c)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a * b.inverse();
  }

  /// Integer power; negative exponents invert.
  FieldElement pow(long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement r = one(field_);
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a.coords_ == b.coords_;
  }

 private:
  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) fail(ErrorKind::FieldMismatch, "elements belong to different number fields");
  }

  NumberField field_;
  std::vector<Rational> coords_;
};

/// Coordinates in `var`, e.g. "1 + 3d - 3d^2".
inline std::string to_string(const FieldElement& x, const std::string& var = "d") {
  std::string out;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const Rational& c = x.coords()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += to_short_string(mag);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

/// Row i holds the coordinates of x * delta^i, so coords(y * x) = coords(y) * M.
inline RationalMatrix multiplication_matrix(const FieldElement& x) {
  const NumberField& f = x.field();
  std::size_t n = f.degree();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement di(f, f.power(i));
    m.set_row(i, (x * di).coords());
  }
  return m;
}

inline Rational norm(const FieldElement& x) { return determinant(multiplication_matrix(x)); }

inline IntPolynomial minimal_polynomial(const FieldElement& x) {
  return minimal_polynomial_of_matrix(multiplication_matrix(x));
}

/// p(x) computed in the field.
inline FieldElement evaluate(const IntPolynomial& p, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(x.field());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + FieldElement::from_rational(x.field(), Rational(*it));
  return acc;
}

inline bool is_algebraic_integer(const FieldElement& x) { return minimal_polynomial(x).is_monic(); }

inline bool is_algebraic_unit(const FieldElement& x) {
  IntPolynomial mp = minimal_polynomial(x);
  return mp.is_monic() && abs(mp.coefficients().front()) == 1;
}

inline Signature signature(const NumberField& f) {
  unsigned n = static_cast<unsigned>(f.degree());
  unsigned r1 = sturm_real_root_count(f.min_poly());
  unsigned r2 = (n - r1) / 2;
  return {r1, r2, r1 + r2 - 1};
}

namespace detail {

inline RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  RationalInterval r{p[0], p[0]};
  for (const auto& x : p) {
    if (x < r.lo) r.lo = x;
    if (x > r.hi) r.hi = x;
  }
  return r;
}

// Enclosure of sum c_i t^i over t in iv, by interval Horner.
inline RationalInterval enclose(const std::vector<Rational>& coeffs, const RationalInterval& iv) {
  RationalInterval acc{coeffs.back(), coeffs.back()};
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = interval_mul(acc, iv);
    acc.lo += coeffs[k];
    acc.hi += coeffs[k];
  }
  return acc;
}

}  // namespace detail

/// Rational interval of width <= width containing the real value of x under
/// the embedding fixed by the field's root interval.
inline RationalInterval approximate(const FieldElement& x, const Rational& width) {
  if (width <= 0) fail(ErrorKind::InvalidArgument, "approximation width must be positive");
  if (x.is_rational()) return {x.coords()[0], x.coords()[0]};
  RationalInterval iv = x.field().root_interval();
  for (;;) {
    RationalInterval enc = detail::enclose(x.coords(), iv);
    if (enc.width() <= width) return enc;
    Rational half = iv.width() / 2;
    iv = refine_root(x.field().min_poly(), iv, half);
    if (iv.width() == 0) return detail::enclose(x.coords(), iv);
  }
}

/// Sign of x under the selected real embedding.
inline int sign(const FieldElement& x) {
  if (x.is_zero()) return 0;
  Rational w = 1;
  for (;;) {
    RationalInterval iv = approximate(x, w);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (iv.lo == 0 && iv.hi == 0) return 0;
    w /= 16;
  }
}

inline int compare(const FieldElement& a, const FieldElement& b) { return sign(a - b); }

/// Decimal value with `digits` fractional digits (truncated midpoint).
inline std::string to_decimal(const FieldElement& x, unsigned digits = 12) {
  Rational w = make_rational(1, ipow(10, digits + 2));
  RationalInterval iv = approximate(x, w);
  return to_decimal_string((iv.lo + iv.hi) / 2, digits);
}

}  // namespace qpsym
