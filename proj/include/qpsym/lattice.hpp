#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsym/exactmath/hnf.hpp"
#include "qpsym/numberfield.hpp"

namespace qpsym {

/// Full-rank Z-module inside a number field. Stored canonically as
/// (integer HNF matrix, minimal positive denominator); basis element i is
/// row i of the matrix divided by the denominator, in power-basis coordinates.
class FLattice {
 public:
  FLattice(NumberField field, IntMatrix hnf, Integer denominator)
      : field_(std::move(field)), hnf_(std::move(hnf)), denominator_(std::move(denominator)) {}

  const NumberField& field() const { return field_; }
  const IntMatrix& hnf() const { return hnf_; }
  const Integer& denominator() const { return denominator_; }
  std::size_t rank() const { return hnf_.rows(); }

  FieldElement basis_element(std::size_t i) const {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < hnf_.cols(); ++j) c.push_back(make_rational(hnf_(i, j), denominator_));
    return {field_, std::move(c)};
  }
  std::vector<FieldElement> basis() const {
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(basis_element(i));
    return out;
  }
  RationalMatrix basis_matrix() const {
    return make_rational(1, denominator_) * to_rational(hnf_);
  }

  friend bool operator==(const FLattice& a, const FLattice& b) {
    return a.field_ == b.field_ && a.hnf_ == b.hnf_ && a.denominator_ == b.denominator_;
  }

 private:
  NumberField field_;
  IntMatrix hnf_;
  Integer denominator_;
};

/// Z-span of the rows of a rational coordinate matrix (any row count, rank n).
inline FLattice lattice_from_rows(const NumberField& field, const RationalMatrix& rows) {
  std::size_t n = field.degree();
  if (rows.cols() != n) fail(ErrorKind::ShapeMismatch, "generator coordinates must have field degree length");
  Integer den = 1;
  for (const auto& x : rows.data()) den = lcm_of(den, x.get_den());
  IntMatrix scaled(rows.rows(), n);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = rows(i, j).get_num() * (den / rows(i, j).get_den());
  IntMatrix h = row_lattice_basis(scaled);
  if (h.rows() < n) {
    fail(ErrorKind::RankDeficient, "generators span rank " + std::to_string(h.rows()) + " < " + std::to_string(n));
  }
  Integer g = den;
  for (const auto& x : h.data()) g = gcd(g, x);
  if (g != 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) /= g;
    den /= g;
  }
  return FLattice(field, std::move(h), std::move(den));
}

/// Canonical lattice spanned by n generators of the field.
inline FLattice lattice_from_generators(const NumberField& field, const std::vector<FieldElement>& gens) {
  if (gens.size() != field.degree()) {
    fail(ErrorKind::ShapeMismatch, "need exactly " + std::to_string(field.degree()) + " generators");
  }
  RationalMatrix rows(gens.size(), field.degree());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i].field() == field)) fail(ErrorKind::FieldMismatch, "generator from a different field");
    rows.set_row(i, gens[i].coords());
  }
  return lattice_from_rows(field, rows);
}

/// Integer coordinates of x over the lattice basis, or nullopt if x is not in the lattice.
inline std::optional<std::vector<Integer>> contains(const FLattice& lat, const FieldElement& x) {
  if (!(x.field() == lat.field())) fail(ErrorKind::FieldMismatch, "element from a different field");
  const IntMatrix& h = lat.hnf();
  std::size_t n = h.rows();
  // Solve z * H = den * x; H is upper triangular with positive diagonal.
  std::vector<Rational> t;
  for (const auto& c : x.coords()) t.push_back(Rational(lat.denominator()) * c);
  std::vector<Integer> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = t[j];
    for (std::size_t i = 0; i < j; ++i) acc -= Rational(z[i] * h(i, j));
    acc /= Rational(h(j, j));
    if (!is_integer(acc)) return std::nullopt;
    z[j] = acc.get_num();
  }
  return z;
}

/// x * Lambda is contained in Lambda.
inline bool mul_preserves(const FLattice& lat, const FieldElement& x) {
  if (!(x.field() == lat.field())) fail(ErrorKind::FieldMismatch, "element from a different field");
  for (std::size_t i = 0; i < lat.rank(); ++i)
    if (!contains(lat, x * lat.basis_element(i))) return false;
  return true;
}

/// A lattice containing 1 and closed under multiplication.
struct Order {
  FLattice lattice;
};

/// {x in F : x * Lambda subset of Lambda}.
///
/// With B the basis matrix of Lambda and M_w the multiplication matrix of a
/// basis element w, the condition reads x * (M_w * B^-1) in Z^n for every w.
/// Stacking those matrices side by side gives an n x n^2 matrix A, and the
/// solution set is the dual of the Z-span of A's columns: if G is an HNF basis
/// of that span, the ring has basis rows (G^T)^-1.
inline Order coefficient_ring(const FLattice& lat) {
  const NumberField& f = lat.field();
  std::size_t n = f.degree();
  auto binv = inverse(lat.basis_matrix());
  if (!binv) fail(ErrorKind::InternalInconsistency, "lattice basis is singular");

  RationalMatrix columns(n * n, n);  // rows = columns of A
  for (std::size_t w = 0; w < n; ++w) {
    RationalMatrix aw = multiplication_matrix(lat.basis_element(w)) * *binv;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) columns(w * n + c, r) = aw(r, c);
  }
  Integer den = 1;
  for (const auto& x : columns.data()) den = lcm_of(den, x.get_den());
  IntMatrix scaled(columns.rows(), n);
  for (std::size_t i = 0; i < columns.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = columns(i, j).get_num() * (den / columns(i, j).get_den());
  IntMatrix g_int = row_lattice_basis(scaled);
  if (g_int.rows() != n) fail(ErrorKind::InternalInconsistency, "coefficient conditions are rank deficient");
  RationalMatrix g = make_rational(1, den) * to_rational(g_int);
  auto dual = inverse(g.transpose());
  if (!dual) fail(ErrorKind::InternalInconsistency, "coefficient condition lattice is singular");
  FLattice ring = lattice_from_rows(f, *dual);

  if (!contains(ring, FieldElement::one(f))) fail(ErrorKind::InternalInconsistency, "coefficient ring misses 1");
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement oi = ring.basis_element(i);
    if (!mul_preserves(lat, oi)) fail(ErrorKind::InternalInconsistency, "coefficient ring does not preserve lattice");
    for (std::size_t j = i; j < n; ++j) {
      if (!contains(ring, oi * ring.basis_element(j))) {
        fail(ErrorKind::InternalInconsistency, "coefficient ring not closed under multiplication");
      }
    }
  }
  return {std::move(ring)};
}

/// x * Lambda for nonzero x.
inline FLattice scale_lattice(const FLattice& lat, const FieldElement& x) {
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "scaling a lattice by zero");
  std::vector<FieldElement> gens;
  for (const auto& b : lat.basis()) gens.push_back(x * b);
  return lattice_from_generators(lat.field(), gens);
}

}  // namespace qpsym
