#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpsym/multiplier.hpp"

namespace qpsym {

enum class WitnessKind { scale, conjugacy, semiconjugacy };

inline std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::scale: return "scale";
    case WitnessKind::conjugacy: return "conjugacy";
    case WitnessKind::semiconjugacy: return "semiconjugacy";
  }
  return "unknown";
}

/// Linear part of an affine (semi)conjugacy, V a = b; or a scale factor
/// t with t a = b. Translation parts are arbitrary and never recorded.
struct ConjugacyWitness {
  WitnessKind kind = WitnessKind::semiconjugacy;
  std::optional<IntMatrix> matrix;
  std::optional<MultiplierValue> scale_factor;
  Integer det = 0;
};

namespace detail {

inline void check_comparable(const ValidatedFlow& a, const ValidatedFlow& b) {
  if (a.model() != b.model()) fail(ErrorKind::FieldMismatch, "cannot compare an algebraic flow with a formal one");
  if (a.dimension() != b.dimension()) fail(ErrorKind::FieldMismatch, "flows live on tori of different dimension");
  if (a.is_algebraic() && !(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "flows use different number fields");
}

}  // namespace detail

/// t with t * a_i = b_i for all i, if one exists. In the formal model any such
/// t must be a rational constant (a nonconstant factor would raise degrees).
inline std::optional<MultiplierValue> scale_equivalence(const ValidatedFlow& a, const ValidatedFlow& b) {
  detail::check_comparable(a, b);
  std::size_t n = a.dimension();
  if (a.is_algebraic()) {
    auto fa = a.original_frequencies();
    auto fb = b.original_frequencies();
    FieldElement t = fb[0] / fa[0];
    for (std::size_t i = 1; i < n; ++i)
      if (!(t * fa[i] == fb[i])) return std::nullopt;
    return t;
  }
  const RationalMatrix& ca = a.spec().frequencies;
  const RationalMatrix& cb = b.spec().frequencies;
  std::optional<Rational> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (ca(i, j) == 0) {
        if (cb(i, j) != 0) return std::nullopt;
        continue;
      }
      Rational r = cb(i, j) / ca(i, j);
      if (t && *t != r) return std::nullopt;
      t = r;
    }
  return *t;
}

/// The unique rational V with V a = b; row i = coordinates of b_i over {a_j}.
inline RationalMatrix linear_transport(const ValidatedFlow& a, const ValidatedFlow& b) {
  detail::check_comparable(a, b);
  auto ainv = inverse(a.spec().frequencies);
  return b.spec().frequencies * *ainv;
}

/// Integer V with nonzero determinant and V a = b, or NotSemiconjugate.
inline ConjugacyWitness semiconjugacy_witness(const ValidatedFlow& a, const ValidatedFlow& b) {
  RationalMatrix v = linear_transport(a, b);
  auto vi = to_integer(v);
  if (!vi) {
    for (const auto& x : v.data()) {
      if (!is_integer(x)) fail(ErrorKind::NotSemiconjugate, "unique rational solution has entry " + to_short_string(x));
    }
  }
  Integer det = determinant(*vi);
  if (det == 0) fail(ErrorKind::NotSemiconjugate, "transport matrix is singular");
  return {WitnessKind::semiconjugacy, *vi, std::nullopt, det};
}

/// Semiconjugacy witness with determinant +-1, or NotConjugate.
inline ConjugacyWitness conjugacy_witness(const ValidatedFlow& a, const ValidatedFlow& b) {
  ConjugacyWitness w;
  try {
    w = semiconjugacy_witness(a, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSemiconjugate) throw;
    fail(ErrorKind::NotConjugate, e.detail());
  }
  if (w.det != 1 && w.det != -1) fail(ErrorKind::NotConjugate, "witness determinant " + w.det.get_str());
  w.kind = WitnessKind::conjugacy;
  return w;
}

struct SemiconjugacyReport {
  ConjugacyWitness witness;             ///< semiconjugacy from a to b
  std::optional<ConjugacyWitness> conjugacy;
  std::optional<MultiplierValue> scale_factor;
  MultiplierGroup group_a;
  MultiplierGroup group_b;
  bool b_in_a = false;
  bool a_in_b = false;
  std::optional<unsigned long> index_b_in_a;
  std::optional<unsigned long> index_a_in_b;
  bool evidence_only = false;  ///< rank >= 2 containment by per-generator membership
  std::string conclusion;
};

namespace detail {

inline bool generators_preserve(const FLattice& lat, const MultiplierGroup& g) {
  for (const auto& m : g.generators) {
    const auto& x = std::get<FieldElement>(m.value);
    if (!mul_preserves(lat, x) || !mul_preserves(lat, x.inverse())) return false;
  }
  return true;
}

}  // namespace detail

/// Multiplier groups of two semiconjugate flows and their containment.
/// Rank 1: both groups are {+-e^(kZ)} for the same unit e, so M_b in M_a iff
/// k_a | k_b; this is cross-checked by testing b's generator on a's lattice.
inline SemiconjugacyReport semiconjugacy_report(const ValidatedFlow& a, const ValidatedFlow& b,
                                                const std::optional<UnitGroup>& units = std::nullopt,
                                                unsigned long max_index = 100000) {
  SemiconjugacyReport rep;
  rep.witness = semiconjugacy_witness(a, b);
  rep.scale_factor = scale_equivalence(a, b);
  if (rep.witness.det == 1 || rep.witness.det == -1) {
    rep.conjugacy = rep.witness;
    rep.conjugacy->kind = WitnessKind::conjugacy;
  }

  if (!a.is_algebraic()) {
    rep.group_a = formal_multiplier_group(a);
    rep.group_b = formal_multiplier_group(b);
    rep.b_in_a = rep.a_in_b = true;
    rep.index_b_in_a = rep.index_a_in_b = 1;
    rep.conclusion = "both multiplier groups are {1, -1}";
    return rep;
  }

  std::vector<FieldElement> supplied = a.supplied_units();
  if (supplied.empty()) supplied = b.supplied_units();
  UnitGroup u = units ? *units : unit_group(a.field(), supplied);
  rep.group_a = multiplier_group(a, u, max_index);
  rep.group_b = multiplier_group(b, u, max_index);
  FLattice lat_a = frequency_lattice(a);
  FLattice lat_b = frequency_lattice(b);
  bool b_in_a_lattice = detail::generators_preserve(lat_a, rep.group_b);
  bool a_in_b_lattice = detail::generators_preserve(lat_b, rep.group_a);

  if (u.generators.size() == 1) {
    unsigned long ka = rep.group_a.exponents[0];
    unsigned long kb = rep.group_b.exponents[0];
    rep.b_in_a = (kb % ka == 0);
    rep.a_in_b = (ka % kb == 0);
    if (rep.b_in_a != b_in_a_lattice || rep.a_in_b != a_in_b_lattice) {
      fail(ErrorKind::InternalInconsistency, "exponent divisibility disagrees with lattice membership");
    }
    if (rep.b_in_a) rep.index_b_in_a = kb / ka;
    if (rep.a_in_b) rep.index_a_in_b = ka / kb;
  } else {
    rep.evidence_only = true;
    rep.b_in_a = b_in_a_lattice;
    rep.a_in_b = a_in_b_lattice;
  }

  if (rep.b_in_a) {
    rep.conclusion = "M_b is contained in M_a";
    if (rep.index_b_in_a) rep.conclusion += " with index " + std::to_string(*rep.index_b_in_a);
    rep.conclusion += "; b is an F-algebraic quasiperiodic flow";
  } else {
    rep.conclusion = "M_b is not contained in M_a although a is semiconjugate to b";
  }
  if (rep.evidence_only) rep.conclusion += " (unit rank >= 2: per-generator evidence)";
  return rep;
}

}  // namespace qpsym
