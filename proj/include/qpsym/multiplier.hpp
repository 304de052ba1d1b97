#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "qpsym/lattice.hpp"
#include "qpsym/numberfield.hpp"
#include "qpsym/units.hpp"

namespace qpsym {

enum class FlowModel { algebraic, formal };

inline std::string to_string(FlowModel m) { return m == FlowModel::algebraic ? "algebraic" : "formal"; }

/// A linear flow on the n-torus given by its frequency vector. Row i of
/// `frequencies` holds the coordinates of a_i, over the power basis of
/// `field` (algebraic model) or over 1, g, ..., g^(n-1) for a formal
/// transcendental g (formal model).
struct FlowSpec {
  FlowModel model = FlowModel::algebraic;
  std::optional<NumberField> field;
  RationalMatrix frequencies;
  std::vector<std::vector<Rational>> supplied_units;
  std::string description;
};

/// A FlowSpec whose frequencies are rationally independent. In the
/// algebraic model the frequencies are also rescaled by 1/a_1, so the first
/// scaled frequency is 1.
class ValidatedFlow {
 public:
  const FlowSpec& spec() const { return spec_; }
  FlowModel model() const { return spec_.model; }
  bool is_algebraic() const { return spec_.model == FlowModel::algebraic; }
  std::size_t dimension() const { return spec_.frequencies.rows(); }

  const NumberField& field() const {
    if (!spec_.field) fail(ErrorKind::InvalidArgument, "formal flow has no number field");
    return *spec_.field;
  }
  /// Scaled frequencies (algebraic model).
  const std::vector<FieldElement>& frequencies() const { return scaled_; }
  /// The factor 1/a_1 applied by validation (algebraic model).
  const FieldElement& scale() const { return *scale_; }
  /// Coordinate matrix of the scaled frequencies (algebraic) or the formal coordinates.
  const RationalMatrix& coords() const { return coords_; }
  const RationalMatrix& coords_inverse() const { return coords_inv_; }

  std::vector<FieldElement> original_frequencies() const {
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < dimension(); ++i) out.emplace_back(field(), spec_.frequencies.row(i));
    return out;
  }
  std::vector<FieldElement> supplied_units() const {
    std::vector<FieldElement> out;
    for (const auto& u : spec_.supplied_units) out.emplace_back(field(), u);
    return out;
  }

 private:
  FlowSpec spec_;
  std::vector<FieldElement> scaled_;
  std::optional<FieldElement> scale_;
  RationalMatrix coords_;
  RationalMatrix coords_inv_;

  friend ValidatedFlow validate_flow(FlowSpec spec);
};

/// Checks quasiperiodicity (invertible coordinate matrix) and, for the
/// algebraic model, rescales by 1/a_1.
inline ValidatedFlow validate_flow(FlowSpec spec) {
  const RationalMatrix& c = spec.frequencies;
  if (!c.is_square() || c.rows() < 2) fail(ErrorKind::ShapeMismatch, "frequency matrix must be n x n with n >= 2");
  if (spec.model == FlowModel::algebraic) {
    if (!spec.field) fail(ErrorKind::InvalidArgument, "algebraic flow needs a number field");
    if (spec.field->degree() != c.rows()) {
      fail(ErrorKind::ShapeMismatch, "torus dimension " + std::to_string(c.rows()) + " differs from field degree " +
                                         std::to_string(spec.field->degree()));
    }
  } else if (!spec.supplied_units.empty()) {
    fail(ErrorKind::InvalidArgument, "formal flows take no unit generators");
  }
  auto inv = inverse(c);
  if (!inv) fail(ErrorKind::NotQuasiperiodic, "frequencies are linearly dependent over Q");

  ValidatedFlow v;
  v.spec_ = std::move(spec);
  if (v.is_algebraic()) {
    const NumberField& f = *v.spec_.field;
    FieldElement a1(f, v.spec_.frequencies.row(0));
    FieldElement theta = a1.inverse();
    std::size_t n = v.spec_.frequencies.rows();
    RationalMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement ai = theta * FieldElement(f, v.spec_.frequencies.row(i));
      scaled.set_row(i, ai.coords());
      v.scaled_.push_back(std::move(ai));
    }
    v.scale_ = std::move(theta);
    v.coords_ = std::move(scaled);
    v.coords_inv_ = *inverse(v.coords_);
  } else {
    v.coords_ = v.spec_.frequencies;
    v.coords_inv_ = *inv;
  }
  return v;
}

/// Z-span of the (scaled) frequencies.
inline FLattice frequency_lattice(const ValidatedFlow& flow) {
  if (!flow.is_algebraic()) fail(ErrorKind::InvalidArgument, "frequency lattice needs an algebraic flow");
  return lattice_from_generators(flow.field(), flow.frequencies());
}

/// Multiplier value: a field element, or a rational (+-1) in the formal model.
using MultiplierValue = std::variant<Rational, FieldElement>;

inline std::string to_string(const MultiplierValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_short_string(*r);
  return to_string(std::get<FieldElement>(v));
}

/// alpha with its unique witness B in GL(n, Z), B a = alpha a.
struct Multiplier {
  MultiplierValue value;
  IntMatrix witness;
};

enum class IndexStatus {
  exact,                 // rank 1, unit computed from scratch
  relative_to_supplied,  // rank 1, supplied unit assumed fundamental
  lower_bound_evidence,  // rank >= 2: per-generator search only
  not_applicable,        // formal model
};

inline std::string to_string(IndexStatus s) {
  switch (s) {
    case IndexStatus::exact: return "exact";
    case IndexStatus::relative_to_supplied: return "relative-to-supplied";
    case IndexStatus::lower_bound_evidence: return "lower-bound-evidence";
    case IndexStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

struct MultiplierGroup {
  std::vector<Multiplier> torsion;      ///< +1 and -1 with +-identity
  std::vector<Multiplier> generators;   ///< infinite-order generators unit_i^exponents[i]
  std::vector<unsigned long> exponents;
  std::optional<unsigned long> index;   ///< [o_F^* : M]; product of exponents when rank >= 2
  IndexStatus status = IndexStatus::not_applicable;
  std::optional<UnitGroup> units;
};

inline std::vector<Multiplier> torsion_multipliers(const ValidatedFlow& flow) {
  std::size_t n = flow.dimension();
  IntMatrix id = IntMatrix::identity(n);
  IntMatrix neg = Integer(-1) * id;
  if (flow.is_algebraic()) {
    return {{FieldElement::one(flow.field()), id}, {-FieldElement::one(flow.field()), neg}};
  }
  return {{Rational(1), id}, {Rational(-1), neg}};
}

/// The unique B with B a = alpha a, where a is the frequency vector.
inline IntMatrix witness_matrix(const ValidatedFlow& flow, const FieldElement& alpha) {
  if (!flow.is_algebraic()) fail(ErrorKind::InvalidArgument, "field-element witness needs an algebraic flow");
  FLattice lat = frequency_lattice(flow);
  if (alpha.is_zero() || !mul_preserves(lat, alpha) || !mul_preserves(lat, alpha.inverse())) {
    fail(ErrorKind::NotAMultiplier, to_string(alpha) + " does not map the frequency lattice onto itself");
  }
  // Row i = coordinates of alpha * a_i over {a_j}: B = A * M_alpha * A^-1.
  RationalMatrix b = flow.coords() * multiplication_matrix(alpha) * flow.coords_inverse();
  auto bi = to_integer(b);
  if (!bi) fail(ErrorKind::InternalInconsistency, "lattice-preserving multiplier has a fractional witness");
  Integer det = determinant(*bi);
  if (det != 1 && det != -1) fail(ErrorKind::InternalInconsistency, "witness determinant is " + det.get_str());
  return *bi;
}

/// alpha with B a = alpha a, or NotASymmetry / NotUnimodular.
inline MultiplierValue multiplier_of_matrix(const ValidatedFlow& flow, const IntMatrix& b) {
  std::size_t n = flow.dimension();
  if (b.rows() != n || b.cols() != n) fail(ErrorKind::ShapeMismatch, "witness must be " + std::to_string(n) + " x " + std::to_string(n));
  Integer det = determinant(b);
  if (det != 1 && det != -1) fail(ErrorKind::NotUnimodular, "determinant " + det.get_str());
  if (!flow.is_algebraic()) {
    // Formal independence of the basis monomials turns B a = alpha a into
    // B C = alpha C with C invertible, so B itself must be scalar.
    for (int s : {1, -1}) {
      if (b == Integer(s) * IntMatrix::identity(n)) return Rational(s);
    }
    fail(ErrorKind::NotASymmetry, "B is not +-identity, so B a is not proportional to a");
  }
  const auto& a = flow.frequencies();
  std::vector<FieldElement> ba;
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement acc = FieldElement::zero(flow.field());
    for (std::size_t j = 0; j < n; ++j) acc = acc + Rational(b(i, j)) * a[j];
    ba.push_back(std::move(acc));
  }
  FieldElement alpha = ba[0] / a[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (!(ba[i] == alpha * a[i])) fail(ErrorKind::NotASymmetry, "B a is not proportional to a");
  }
  return alpha;
}

/// Searches, for each unit generator e, the least k >= 1 with e^k and e^-k
/// both preserving the frequency lattice.
inline MultiplierGroup multiplier_group(const ValidatedFlow& flow, const UnitGroup& units,
                                        unsigned long max_index = 100000) {
  if (!flow.is_algebraic()) fail(ErrorKind::InvalidArgument, "multiplier search needs an algebraic flow");
  if (!(units.field == flow.field())) fail(ErrorKind::FieldMismatch, "unit group belongs to a different field");
  if (units.generators.empty()) fail(ErrorKind::RankUnsupported, "unit group has no generators");
  FLattice lat = frequency_lattice(flow);

  MultiplierGroup g;
  g.torsion = torsion_multipliers(flow);
  g.units = units;
  unsigned long product = 1;
  for (const auto& gen : units.generators) {
    const FieldElement& e = gen.value;
    FieldElement e_inv = e.inverse();
    FieldElement up = e, down = e_inv;
    unsigned long k = 1;
    for (; k <= max_index; ++k) {
      if (mul_preserves(lat, up) && mul_preserves(lat, down)) break;
      up = up * e;
      down = down * e_inv;
    }
    if (k > max_index) {
      fail(ErrorKind::IndexBoundExceeded, "no power of " + to_string(e) + " up to " + std::to_string(max_index) +
                                              " preserves the frequency lattice");
    }
    g.generators.push_back({up, witness_matrix(flow, up)});
    g.exponents.push_back(k);
    product *= k;
  }
  g.index = product;
  if (units.generators.size() >= 2) {
    g.status = IndexStatus::lower_bound_evidence;
  } else {
    g.status = units.all_computed() ? IndexStatus::exact : IndexStatus::relative_to_supplied;
  }
  return g;
}

/// Formal model: only +-1.
inline MultiplierGroup formal_multiplier_group(const ValidatedFlow& flow) {
  MultiplierGroup g;
  g.torsion = torsion_multipliers(flow);
  g.status = IndexStatus::not_applicable;
  return g;
}

namespace detail {

inline bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
}

// Integer rows with entries in [-bound, bound], first coordinate fixed.
inline std::vector<std::vector<Integer>> first_rows_with_lead(long lead, std::size_t n, long bound) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> c(n, -bound);
  c[0] = lead;
  for (;;) {
    std::vector<Integer> row;
    for (long x : c) row.emplace_back(x);
    out.push_back(std::move(row));
    std::size_t i = n - 1;
    while (i >= 1 && c[i] == bound) c[i--] = -bound;
    if (i == 0) break;
    ++c[i];
  }
  return out;
}

inline std::optional<IntMatrix> unimodular_or_none(const RationalMatrix& b) {
  auto bi = to_integer(b);
  if (!bi) return std::nullopt;
  Integer det = determinant(*bi);
  if (det != 1 && det != -1) return std::nullopt;
  return bi;
}

// Algebraic model: B(c) = sum_j c_j N_j with N_j = A M_{a_j} A^-1, since
// alpha = sum_j c_j a_j when a_1 = 1.
inline std::vector<Multiplier> brute_force_algebraic(const ValidatedFlow& flow, long lead, long bound) {
  std::size_t n = flow.dimension();
  const auto& a = flow.frequencies();
  std::vector<RationalMatrix> parts;
  for (std::size_t j = 0; j < n; ++j) {
    parts.push_back(flow.coords() * multiplication_matrix(a[j]) * flow.coords_inverse());
  }
  std::vector<Multiplier> found;
  for (const auto& c : first_rows_with_lead(lead, n, bound)) {
    RationalMatrix b(n, n);
    FieldElement alpha = FieldElement::zero(flow.field());
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      b = b + Rational(c[j]) * parts[j];
      alpha = alpha + Rational(c[j]) * a[j];
    }
    if (alpha.is_zero()) continue;
    if (auto bi = unimodular_or_none(b)) found.push_back({alpha, std::move(*bi)});
  }
  return found;
}

// Formal model: alpha = (c . a) / a_1 as a rational function of the
// indeterminate g; alpha * a_i must be a polynomial of degree < n for every i.
inline std::vector<Multiplier> brute_force_formal(const ValidatedFlow& flow, long lead, long bound) {
  std::size_t n = flow.dimension();
  std::vector<RatPolynomial> a;
  for (std::size_t i = 0; i < n; ++i) a.emplace_back(flow.coords().row(i));
  std::vector<Multiplier> found;
  for (const auto& c : first_rows_with_lead(lead, n, bound)) {
    RatPolynomial num;
    for (std::size_t j = 0; j < n; ++j) num = num + Rational(c[j]) * a[j];
    if (num.is_zero()) continue;
    RationalMatrix images(n, n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto [q, r] = divmod(num * a[i], a[0]);
      if (!r.is_zero() || q.degree() >= static_cast<long>(n)) {
        ok = false;
        break;
      }
      for (std::size_t k = 0; k < n; ++k) images(i, k) = q.coefficient(k);
    }
    if (!ok) continue;
    auto bi = unimodular_or_none(images * flow.coords_inverse());
    if (!bi) continue;
    auto [alpha, rem] = divmod(num, a[0]);
    if (!rem.is_zero() || alpha.degree() > 0) {
      fail(ErrorKind::InternalInconsistency, "unimodular formal witness with a non-rational multiplier");
    }
    found.push_back({alpha.coefficient(0), std::move(*bi)});
  }
  return found;
}

}  // namespace detail

/// Independent oracle: every multiplier whose witness has first row in
/// [-row_bound, row_bound]^n, by direct enumeration. Uses neither the unit
/// group nor the coefficient ring. Output is sorted by witness entries.
inline std::vector<Multiplier> brute_force_multipliers(const ValidatedFlow& flow, long row_bound, unsigned workers = 1) {
  if (row_bound < 1) fail(ErrorKind::InvalidArgument, "row bound must be positive");
  workers = std::max(1u, workers);
  std::vector<std::vector<Multiplier>> parts(static_cast<std::size_t>(2 * row_bound + 1));
  auto work = [&](unsigned w) {
    for (long lead = -row_bound + w; lead <= row_bound; lead += workers) {
      auto& slot = parts[static_cast<std::size_t>(lead + row_bound)];
      slot = flow.is_algebraic() ? detail::brute_force_algebraic(flow, lead, row_bound)
                                 : detail::brute_force_formal(flow, lead, row_bound);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Multiplier> all;
  for (auto& p : parts)
    for (auto& m : p) all.push_back(std::move(m));
  std::sort(all.begin(), all.end(),
            [](const Multiplier& x, const Multiplier& y) { return detail::lex_less(x.witness, y.witness); });
  return all;
}

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SymmetryReport {
  FlowModel model = FlowModel::algebraic;
  std::string classification;  ///< "F-algebraic" or "transcendental-formal"
  std::size_t dimension = 0;
  MultiplierGroup group;
  std::string structure;
  std::optional<IntPolynomial> ratio_min_poly;  ///< n = 2: minimal polynomial of a_2 / a_1
  std::vector<CheckItem> checklist;
  std::vector<std::string> notes;
};

inline std::string structure_string(std::size_t n, std::size_t free_rank) {
  std::string torus = "T^" + std::to_string(n) + " ⋊ ";
  if (free_rank == 0) return torus + "Z_2";
  std::string z = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  return torus + "(Z_2 × " + z + ")";
}

/// Classification, multiplier group and the necessary-condition checklist.
inline SymmetryReport classify(const ValidatedFlow& flow, unsigned long max_index = 100000) {
  SymmetryReport rep;
  rep.model = flow.model();
  rep.dimension = flow.dimension();
  std::size_t n = flow.dimension();

  if (!flow.is_algebraic()) {
    rep.classification = "transcendental-formal";
    rep.group = formal_multiplier_group(flow);
    rep.structure = structure_string(n, 0);
    bool dets = true;
    for (const auto& m : rep.group.torsion) {
      Integer d = determinant(m.witness);
      dets = dets && (d == 1 || d == -1);
      if (!(std::get<Rational>(multiplier_of_matrix(flow, m.witness)) == std::get<Rational>(m.value))) dets = false;
    }
    rep.checklist.push_back({"rational multipliers are exactly +-1", true,
                             "B C = alpha C with C invertible forces B = alpha I, alpha = +-1"});
    rep.checklist.push_back({"witness determinants are +-1", dets, "+-identity"});
    rep.notes.push_back("formal model: basis monomials 1, g, ..., g^(n-1) are treated as independent over Q");
    rep.notes.push_back("symmetries are the witness matrices plus an arbitrary translation of T^n");
    return rep;
  }

  rep.classification = "F-algebraic";
  UnitGroup units = unit_group(flow.field(), flow.supplied_units());
  rep.group = multiplier_group(flow, units, max_index);
  rep.structure = structure_string(n, rep.group.generators.size());

  bool irrational = true, integral = true, dets = true, det_norm = true;
  std::string integral_detail;
  for (const auto& m : rep.group.generators) {
    const FieldElement& alpha = std::get<FieldElement>(m.value);
    IntPolynomial mp = minimal_polynomial(alpha);
    if (mp.degree() <= 1) irrational = false;
    if (!mp.is_monic() || abs(mp.coefficients().front()) != 1 || mp.degree() > static_cast<long>(n)) integral = false;
    if (!integral_detail.empty()) integral_detail += "; ";
    integral_detail += to_string(mp);
    Integer det = determinant(m.witness);
    if (det != 1 && det != -1) dets = false;
    if (Rational(det) != norm(alpha)) det_norm = false;
  }
  rep.checklist.push_back({"rational multipliers are exactly +-1", irrational,
                           "every infinite-order generator is irrational"});
  rep.checklist.push_back({"multipliers are algebraic units of degree <= n", integral,
                           integral_detail.empty() ? "no generators" : integral_detail});
  rep.checklist.push_back({"witness determinants are +-1", dets, ""});
  rep.checklist.push_back({"det(witness) equals norm(multiplier)", det_norm, ""});

  if (n == 2) {
    const auto& a = flow.frequencies();
    rep.ratio_min_poly = minimal_polynomial(a[1] / a[0]);
    bool quadratic = rep.ratio_min_poly->degree() == 2;
    rep.checklist.push_back({"K = Q(a_2/a_1) is quadratic", quadratic || rep.group.generators.empty(),
                             "minimal polynomial " + to_string(*rep.ratio_min_poly)});
  }

  for (const auto& u : units.generators) {
    if (u.provenance == UnitProvenance::supplied_assumed_fundamental) {
      rep.notes.push_back("unit " + to_string(u.value) + " was supplied and is assumed fundamental; the index is relative to it");
    }
  }
  if (rep.group.status == IndexStatus::lower_bound_evidence) {
    rep.notes.push_back("unit rank >= 2: per-generator exponents only; the index is evidence, not a certified value");
  }
  if (flow.field().degree() >= 4) {
    rep.notes.push_back("irreducibility of the defining polynomial established by " +
                        to_string(flow.field().irreducibility_proof()));
  }
  rep.notes.push_back("results are stated for the flow rescaled by 1/a_1 = " + to_string(flow.scale()));
  rep.notes.push_back("symmetries are the witness matrices plus an arbitrary translation of T^n");
  return rep;
}

}  // namespace qpsym
