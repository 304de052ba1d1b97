#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpsym/numberfield.hpp"

namespace qpsym {

enum class UnitProvenance { computed, supplied_assumed_fundamental };

inline std::string to_string(UnitProvenance p) {
  return p == UnitProvenance::computed ? "computed" : "supplied-assumed-fundamental";
}

struct UnitGenerator {
  FieldElement value;
  UnitProvenance provenance;
};

/// Torsion {+1, -1} times the free part generated by `generators`.
struct UnitGroup {
  NumberField field;
  unsigned torsion_order = 2;
  std::vector<UnitGenerator> generators;

  bool all_computed() const {
    for (const auto& g : generators)
      if (g.provenance != UnitProvenance::computed) return false;
    return true;
  }
};

/// Quadratic surd (p + sqrt(d)) / q with q | d - p^2.
struct SurdState {
  Integer p;
  Integer q;
  friend bool operator<(const SurdState& a, const SurdState& b) {
    return a.p < b.p || (a.p == b.p && a.q < b.q);
  }
  friend bool operator==(const SurdState&, const SurdState&) = default;
};

struct ContinuedFraction {
  std::vector<Integer> partial_quotients;  ///< a_0, a_1, ..., a_l (one full period after a_0)
  std::size_t period = 0;
};

/// Expansion of (p0 + sqrt d)/q0 until its complete quotients repeat.
inline ContinuedFraction expand_surd(const Integer& d, SurdState start, std::size_t step_cap = 1000000) {
  Integer root = isqrt(d);
  ContinuedFraction cf;
  std::map<SurdState, std::size_t> seen;
  SurdState s = std::move(start);
  for (std::size_t k = 0; k <= step_cap; ++k) {
    if (k >= 1) {
      auto [it, inserted] = seen.emplace(s, k);
      if (!inserted) {
        if (it->second != 1) fail(ErrorKind::InternalInconsistency, "expansion is not purely periodic after a_0");
        cf.period = k - 1;
        return cf;
      }
    }
    // floor((p + sqrt d)/q) == floor((p + isqrt d)/q) for q > 0 and d non-square
    Integer a = floor_div(s.p + root, s.q);
    cf.partial_quotients.push_back(a);
    Integer p_next = a * s.q - s.p;
    Integer q_next = (d - p_next * p_next) / s.q;
    s = {p_next, q_next};
  }
  fail(ErrorKind::OutOfRange, "continued fraction period exceeds step cap " + std::to_string(step_cap));
}

/// Coordinates (x, y) of the fundamental unit x + y*sqrt(d) > 1 of the ring of
/// integers of Q(sqrt d); x and y are half-integers when d = 1 mod 4.
inline std::pair<Rational, Rational> quadratic_fundamental_unit_coords(const Integer& d, std::size_t step_cap = 1000000) {
  if (d <= 1) fail(ErrorKind::OutOfRange, "d must exceed 1, got " + d.get_str());
  if (!is_squarefree(d)) fail(ErrorKind::NotSquarefree, d.get_str() + " is not squarefree");
  bool one_mod_four = (d % 4 == 1);
  // omega = sqrt d, or (1 + sqrt d)/2; trace(omega) = 0 or 1.
  SurdState start = one_mod_four ? SurdState{1, 2} : SurdState{0, 1};
  ContinuedFraction cf = expand_surd(d, start, step_cap);

  // Convergents p_k/q_k; the unit is p_{l-1} - q_{l-1} * conj(omega), l = period.
  Integer p_prev = 1, p_cur = cf.partial_quotients[0];
  Integer q_prev = 0, q_cur = 1;
  for (std::size_t k = 1; k < cf.period; ++k) {
    const Integer& a = cf.partial_quotients[k];
    Integer p_next = a * p_cur + p_prev;
    Integer q_next = a * q_cur + q_prev;
    p_prev = std::exchange(p_cur, std::move(p_next));
    q_prev = std::exchange(q_cur, std::move(q_next));
  }
  // conj(omega) = trace - omega, so unit = (p - q*trace) + q*omega.
  if (!one_mod_four) return {Rational(p_cur), Rational(q_cur)};
  // (p - q) + q (1 + sqrt d)/2 = (2p - q)/2 + (q/2) sqrt d
  return {make_rational(2 * p_cur - q_cur, 2), make_rational(q_cur, 2)};
}

/// Fundamental unit of Q(sqrt d) as an element of the field z^2 - d.
inline FieldElement quadratic_fundamental_unit(const Integer& d, std::size_t step_cap = 1000000) {
  auto [x, y] = quadratic_fundamental_unit_coords(d, step_cap);
  NumberField f = quadratic_field(d);
  FieldElement e(f, {x, y});
  if (!is_algebraic_unit(e) || sign(e - FieldElement::one(f)) <= 0) {
    fail(ErrorKind::InternalInconsistency, "continued fraction did not produce a unit > 1 for d = " + d.get_str());
  }
  return e;
}

/// Unit group of Q(sqrt d) for squarefree d > 1.
inline UnitGroup quadratic_unit_group(const Integer& d) {
  FieldElement e = quadratic_fundamental_unit(d);
  return {e.field(), 2, {{e, UnitProvenance::computed}}};
}

/// Accepts x as a unit generator if it is a unit other than +-1.
inline UnitGenerator verify_supplied_unit(const NumberField& field, const FieldElement& x) {
  if (!(x.field() == field)) fail(ErrorKind::FieldMismatch, "supplied unit from a different field");
  if (!is_algebraic_unit(x)) {
    fail(ErrorKind::NotAUnit, to_string(x) + " has minimal polynomial " + to_string(minimal_polynomial(x)));
  }
  if (x.is_rational()) fail(ErrorKind::TorsionOnly, to_string(x) + " is a root of unity");
  return {x, UnitProvenance::supplied_assumed_fundamental};
}

namespace detail {

struct QuadraticEmbedding {
  Integer squarefree;  // d
  FieldElement sqrt_d;  // sqrt(d) expressed in the field's power basis
};

// For F = Q(delta) with delta^2 + b delta + c = 0: disc = b^2 - 4c = f^2 d,
// and sqrt(disc) = +-(2 delta + b), the sign fixed by the embedding.
inline QuadraticEmbedding quadratic_embedding(const NumberField& field) {
  const auto& c = field.min_poly().coefficients();
  Integer b = c[1];
  Integer disc = b * b - 4 * c[0];
  Integer f = 1, d = disc;
  for (Integer p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      f *= p;
    }
  }
  FieldElement root_disc(field, {Rational(b), Rational(2)});
  if (sign(root_disc) < 0) root_disc = -root_disc;
  return {d, make_rational(1, f) * root_disc};
}

}  // namespace detail

/// Unit group of the ring of integers: computed for quadratic fields,
/// otherwise built from supplied generators (assumed fundamental). Supplied
/// generators take precedence when present.
inline UnitGroup unit_group(const NumberField& field, const std::vector<FieldElement>& supplied = {}) {
  Signature sig = signature(field);
  UnitGroup g{field, 2, {}};
  if (!supplied.empty()) {
    if (supplied.size() != sig.unit_rank) {
      fail(ErrorKind::WrongGeneratorCount, "unit rank is " + std::to_string(sig.unit_rank) + ", got " +
                                               std::to_string(supplied.size()) + " generators");
    }
    for (const auto& x : supplied) {
      UnitGenerator u = verify_supplied_unit(field, x);
      if (sign(u.value) < 0) u.value = -u.value;
      g.generators.push_back(std::move(u));
    }
    return g;
  }
  if (field.degree() == 2) {
    auto emb = detail::quadratic_embedding(field);
    auto [x, y] = quadratic_fundamental_unit_coords(emb.squarefree);
    FieldElement e = FieldElement::from_rational(field, x) + y * emb.sqrt_d;
    if (!is_algebraic_unit(e)) fail(ErrorKind::InternalInconsistency, "mapped fundamental unit is not a unit");
    g.generators.push_back({e, UnitProvenance::computed});
    return g;
  }
  fail(ErrorKind::GeneratorsRequired, "unit rank " + std::to_string(sig.unit_rank) + " needs " +
                                          std::to_string(sig.unit_rank) + " supplied generator(s)");
}

}  // namespace qpsym
