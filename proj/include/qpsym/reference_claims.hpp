#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpsym/conjugacy.hpp"
#include "qpsym/io/flowfile.hpp"

namespace qpsym {

// Worked examples kept as a regression table. Each claim is recomputed from
// scratch and compared exactly.

struct ClaimResult {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
};

namespace reference {

inline const char* cubic_flow = R"({
  "model": "algebraic",
  "field": { "min_poly": [-2, 0, 0, 1], "root_interval": ["5/4", "4/3"] },
  "frequencies": [["1", "0", "0"], ["0", "3", "0"], ["0", "0", "-3"]],
  "units": [["-1", "1", "0"]]
})";

inline const char* phi_flow = R"({
  "model": "algebraic",
  "field": { "min_poly": [-3, 0, 1], "root_interval": ["1", "2"] },
  "frequencies": [["1", "0"], ["0", "4"]]
})";

inline const char* psi_flow = R"({
  "model": "algebraic",
  "field": { "min_poly": [-3, 0, 1], "root_interval": ["1", "2"] },
  "frequencies": [["4", "0"], ["0", "60"]]
})";

inline const char* basis_flow = R"({
  "model": "algebraic",
  "field": { "min_poly": [-3, 0, 1], "root_interval": ["1", "2"] },
  "frequencies": [["1", "0"], ["0", "1"]]
})";

inline const char* formal3_flow = R"({
  "model": "formal",
  "frequencies": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
})";

inline const char* formal2_flow = R"({
  "model": "formal",
  "frequencies": [["1", "0"], ["0", "1"]]
})";

inline ValidatedFlow flow(const char* text) { return validate_flow(io::parse_flow_spec(text, "<reference>")); }

inline IntMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Integer>> r;
  for (auto& row : rows) {
    std::vector<Integer> x;
    for (long v : row) x.emplace_back(v);
    r.push_back(std::move(x));
  }
  return IntMatrix::from_rows(r);
}

inline FieldElement elem(const NumberField& f, std::vector<long> c) {
  std::vector<Rational> x;
  for (long v : c) x.emplace_back(v);
  return {f, x};
}

inline std::string describe(const MultiplierValue& v) { return to_string(v); }

}  // namespace reference

/// Runs every claim; exceptions are caught and reported as failures.
inline std::vector<ClaimResult> run_reference_claims() {
  using namespace reference;
  std::vector<ClaimResult> out;
  auto claim = [&](std::string id, std::string text, const std::function<std::pair<bool, std::string>()>& body) {
    ClaimResult r{std::move(id), std::move(text), false, ""};
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.detail = std::string("threw ") + e.what();
    }
    out.push_back(std::move(r));
  };

  NumberField q3 = quadratic_field(3);
  NumberField cubic = make_field(IntPolynomial({-2, 0, 0, 1}), {make_rational(5, 4), make_rational(4, 3)});

  claim("field.sturm", "z^3 - 2 has exactly one real root", [&] {
    std::size_t c = sturm_real_root_count(IntPolynomial({-2, 0, 0, 1}));
    return std::pair{c == 1, std::to_string(c) + " real root(s)"};
  });
  claim("field.signature", "signatures: z^2 - 3 is (2,0) rank 1, z^3 - 2 is (1,1) rank 1", [&] {
    Signature a = signature(q3), b = signature(cubic);
    bool ok = a.r1 == 2 && a.r2 == 0 && a.unit_rank == 1 && b.r1 == 1 && b.r2 == 1 && b.unit_rank == 1;
    return std::pair{ok, "(" + std::to_string(a.r1) + "," + std::to_string(a.r2) + ") and (" + std::to_string(b.r1) +
                             "," + std::to_string(b.r2) + ")"};
  });
  claim("field.cube", "(-1 + d)^3 = 1 + 3d - 3d^2 in Q(2^(1/3))", [&] {
    FieldElement e = elem(cubic, {-1, 1, 0}).pow(3);
    return std::pair{e == elem(cubic, {1, 3, -3}), to_string(e)};
  });
  claim("field.units", "2 + sqrt3 and -1 + 2^(1/3) are units", [&] {
    bool ok = is_algebraic_unit(elem(q3, {2, 1})) && is_algebraic_unit(elem(cubic, {-1, 1, 0}));
    return std::pair{ok, ""};
  });
  claim("lattice.contains", "7 + 4 sqrt3 lies in Z + 4 sqrt3 Z with coordinates (7, 1); 2 + sqrt3 does not", [&] {
    FLattice lat = lattice_from_generators(q3, {elem(q3, {1, 0}), elem(q3, {0, 4})});
    auto c = contains(lat, elem(q3, {7, 4}));
    bool ok = c && (*c)[0] == 7 && (*c)[1] == 1 && !contains(lat, elem(q3, {2, 1}));
    return std::pair{ok, ""};
  });
  claim("lattice.preserve", "7 + 4 sqrt3 preserves Z + 4 sqrt3 Z; 2 + sqrt3 does not", [&] {
    FLattice lat = lattice_from_generators(q3, {elem(q3, {1, 0}), elem(q3, {0, 4})});
    return std::pair{mul_preserves(lat, elem(q3, {7, 4})) && !mul_preserves(lat, elem(q3, {2, 1})), ""};
  });
  claim("lattice.cubic", "frequency lattice of (1, 3d, -3d^2) is Z + 3d Z + 3d^2 Z", [&] {
    FLattice lat = frequency_lattice(flow(cubic_flow));
    bool ok = lat.hnf() == mat({{1, 0, 0}, {0, 3, 0}, {0, 0, 3}}) && lat.denominator() == 1;
    return std::pair{ok, to_string(lat.hnf())};
  });
  claim("unit.d3", "fundamental unit of Q(sqrt3) is 2 + sqrt3", [&] {
    FieldElement e = quadratic_fundamental_unit(3);
    return std::pair{e.coords() == std::vector<Rational>{2, 1}, to_string(e)};
  });
  claim("unit.d5", "fundamental unit of Q(sqrt5) is (1 + sqrt5)/2", [&] {
    FieldElement e = quadratic_fundamental_unit(5);
    return std::pair{e.coords() == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)}, to_string(e)};
  });
  claim("unit.cubic", "-1 + 2^(1/3) is accepted as the supplied unit generator", [&] {
    UnitGroup u = unit_group(cubic, {elem(cubic, {-1, 1, 0})});
    bool ok = u.generators.size() == 1 && u.generators[0].provenance == UnitProvenance::supplied_assumed_fundamental;
    return std::pair{ok, ""};
  });
  claim("multiplier.cubic", "cubic flow: index 3, generator 1 + 3d - 3d^2, witness [[1,1,1],[-18,1,-3],[-18,6,1]]", [&] {
    ValidatedFlow f = flow(cubic_flow);
    MultiplierGroup g = classify(f).group;
    bool ok = g.index == 3ul && g.generators.size() == 1 &&
              std::get<FieldElement>(g.generators[0].value) == elem(cubic, {1, 3, -3}) &&
              g.generators[0].witness == mat({{1, 1, 1}, {-18, 1, -3}, {-18, 6, 1}});
    return std::pair{ok, "index " + std::to_string(g.index.value_or(0)) + ", witness " + to_string(g.generators[0].witness)};
  });
  claim("multiplier.phi", "phi = (1, 4 sqrt3): index 2, generator 7 + 4 sqrt3, witness [[7,1],[48,7]]", [&] {
    MultiplierGroup g = classify(flow(phi_flow)).group;
    bool ok = g.index == 2ul && std::get<FieldElement>(g.generators[0].value) == elem(q3, {7, 4}) &&
              g.generators[0].witness == mat({{7, 1}, {48, 7}});
    return std::pair{ok, "index " + std::to_string(g.index.value_or(0)) + ", witness " + to_string(g.generators[0].witness)};
  });
  claim("multiplier.psi", "psi = (4, 60 sqrt3): index 3, generator 26 + 15 sqrt3, witness [[26,1],[675,26]]", [&] {
    MultiplierGroup g = classify(flow(psi_flow)).group;
    bool ok = g.index == 3ul && std::get<FieldElement>(g.generators[0].value) == elem(q3, {26, 15}) &&
              g.generators[0].witness == mat({{26, 1}, {675, 26}});
    return std::pair{ok, "index " + std::to_string(g.index.value_or(0)) + ", witness " + to_string(g.generators[0].witness)};
  });
  claim("multiplier.basis", "power-basis flow over Q(sqrt3): index 1, generator 2 + sqrt3", [&] {
    MultiplierGroup g = classify(flow(basis_flow)).group;
    bool ok = g.index == 1ul && std::get<FieldElement>(g.generators[0].value) == elem(q3, {2, 1});
    return std::pair{ok, "index " + std::to_string(g.index.value_or(0))};
  });
  claim("multiplier.inverse", "[[7,1],[48,7]] is the witness of 7 + 4 sqrt3 for phi", [&] {
    MultiplierValue v = multiplier_of_matrix(flow(phi_flow), mat({{7, 1}, {48, 7}}));
    return std::pair{std::get<FieldElement>(v) == elem(q3, {7, 4}), describe(v)};
  });
  claim("multiplier.ratio", "phi: a_2/a_1 = 4 sqrt3 has minimal polynomial z^2 - 48", [&] {
    SymmetryReport r = classify(flow(phi_flow));
    bool ok = r.ratio_min_poly && *r.ratio_min_poly == IntPolynomial({-48, 0, 1});
    return std::pair{ok, r.ratio_min_poly ? to_string(*r.ratio_min_poly) : "none"};
  });
  claim("multiplier.structure", "phi has symmetry group T^2 ⋊ (Z_2 × Z)", [&] {
    SymmetryReport r = classify(flow(phi_flow));
    return std::pair{r.structure == "T^2 ⋊ (Z_2 × Z)", r.structure};
  });
  claim("formal.3", "formal (1, g, g^2): M = {1, -1}, structure T^3 ⋊ Z_2", [&] {
    SymmetryReport r = classify(flow(formal3_flow));
    bool ok = r.structure == "T^3 ⋊ Z_2" && r.group.generators.empty() && r.group.torsion.size() == 2;
    auto oracle = brute_force_multipliers(flow(formal3_flow), 3);
    ok = ok && oracle.size() == 2;
    return std::pair{ok, r.structure + ", oracle found " + std::to_string(oracle.size())};
  });
  claim("formal.2", "formal (1, g): M = {1, -1}, structure T^2 ⋊ Z_2", [&] {
    SymmetryReport r = classify(flow(formal2_flow));
    return std::pair{r.structure == "T^2 ⋊ Z_2" && r.group.generators.empty(), r.structure};
  });
  claim("oracle.phi", "brute force on phi (row bound 30) finds exactly +-1, +-(7 +- 4 sqrt3)", [&] {
    auto found = brute_force_multipliers(flow(phi_flow), 30);
    std::vector<FieldElement> want = {elem(q3, {1, 0}), elem(q3, {-1, 0}), elem(q3, {7, 4}),
                                      elem(q3, {-7, -4}), elem(q3, {7, -4}), elem(q3, {-7, 4})};
    bool ok = found.size() == want.size();
    for (const auto& w : want) {
      bool hit = false;
      for (const auto& m : found) hit = hit || std::get<FieldElement>(m.value) == w;
      ok = ok && hit;
    }
    return std::pair{ok, std::to_string(found.size()) + " multipliers"};
  });
  claim("conj.scale", "psi = 4 * (1, 15 sqrt3): scale factor 4 against (1, 15 sqrt3)", [&] {
    FlowSpec s = io::parse_flow_spec(phi_flow);
    s.frequencies = RationalMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(15)}});
    auto t = scale_equivalence(validate_flow(s), flow(psi_flow));
    bool ok = t && std::get<FieldElement>(*t) == elem(q3, {4, 0});
    return std::pair{ok, t ? describe(*t) : "none"};
  });
  claim("conj.witness", "phi is semiconjugate to psi via diag(4, 15), not conjugate", [&] {
    ConjugacyWitness w = semiconjugacy_witness(flow(phi_flow), flow(psi_flow));
    bool ok = *w.matrix == mat({{4, 0}, {0, 15}}) && w.det == 60;
    try {
      conjugacy_witness(flow(phi_flow), flow(psi_flow));
      ok = false;
    } catch (const Error& e) {
      ok = ok && e.kind() == ErrorKind::NotConjugate;
    }
    return std::pair{ok, to_string(*w.matrix)};
  });
  claim("conj.containment", "M_psi is not in M_phi and M_phi is not in M_psi", [&] {
    SemiconjugacyReport r = semiconjugacy_report(flow(phi_flow), flow(psi_flow));
    return std::pair{!r.b_in_a && !r.a_in_b, r.conclusion};
  });
  claim("conj.basis", "power basis to phi via diag(1, 4); M_phi has index 2 in M_basis", [&] {
    SemiconjugacyReport r = semiconjugacy_report(flow(basis_flow), flow(phi_flow));
    bool ok = *r.witness.matrix == mat({{1, 0}, {0, 4}}) && r.b_in_a && r.index_b_in_a == 2ul && !r.a_in_b;
    return std::pair{ok, r.conclusion};
  });
  return out;
}

}  // namespace qpsym
