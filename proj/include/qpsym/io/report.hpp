#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpsym/conjugacy.hpp"
#include "qpsym/multiplier.hpp"

namespace qpsym::io {

using nlohmann::json;

// Plain-data reports. Everything exact is a string: rationals "p/q",
// integers in decimal. Decimals appear only under "approx".

struct MultiplierRecord {
  std::vector<Rational> value;  // power-basis (or formal-basis) coordinates
  IntMatrix witness;
  std::optional<unsigned long> exponent;
  IntPolynomial min_poly;
  Rational norm;
  std::string approx;

  friend bool operator==(const MultiplierRecord&, const MultiplierRecord&) = default;
};

struct UnitRecord {
  std::vector<Rational> value;
  std::string provenance;
  IntPolynomial min_poly;
  std::string approx;

  friend bool operator==(const UnitRecord&, const UnitRecord&) = default;
};

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct FieldRecord {
  IntPolynomial min_poly;
  RationalInterval root_interval;
  std::string irreducibility;
  std::size_t r1 = 0, r2 = 0, unit_rank = 0;

  friend bool operator==(const FieldRecord&, const FieldRecord&) = default;
};

struct OracleRecord {
  long row_bound = 0;
  std::vector<MultiplierRecord> multipliers;
  bool agrees = false;
  std::string verdict;

  friend bool operator==(const OracleRecord&, const OracleRecord&) = default;
};

struct AnalysisReport {
  std::string description;
  std::string model;
  std::size_t dimension = 0;
  std::optional<FieldRecord> field;
  RationalMatrix frequencies;
  std::optional<RationalMatrix> scaled_frequencies;
  std::optional<std::vector<Rational>> scale;
  std::string classification;
  std::string structure;
  std::vector<MultiplierRecord> torsion;
  std::vector<MultiplierRecord> generators;
  std::optional<unsigned long> index;
  std::string index_status;
  std::vector<UnitRecord> units;
  std::optional<IntPolynomial> ratio_min_poly;
  std::vector<CheckRecord> checklist;
  std::vector<std::string> notes;
  std::optional<OracleRecord> oracle;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct GroupSummary {
  std::vector<MultiplierRecord> generators;
  std::optional<unsigned long> index;
  std::string index_status;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct SemiconjugacyRecord {
  std::string flow_a;
  std::string flow_b;
  std::optional<std::vector<Rational>> scale_factor;
  IntMatrix semiconjugacy;
  Integer det;
  bool conjugate = false;
  GroupSummary group_a;
  GroupSummary group_b;
  bool b_in_a = false;
  bool a_in_b = false;
  std::optional<unsigned long> index_b_in_a;
  std::optional<unsigned long> index_a_in_b;
  bool evidence_only = false;
  std::string conclusion;

  friend bool operator==(const SemiconjugacyRecord&, const SemiconjugacyRecord&) = default;
};

struct UnitReport {
  std::string source;
  FieldRecord field;
  std::vector<UnitRecord> units;
  std::vector<Rational> norms;

  friend bool operator==(const UnitReport&, const UnitReport&) = default;
};

// ---- building records ----

inline FieldRecord field_record(const NumberField& f) {
  Signature s = signature(f);
  return {f.min_poly(), f.root_interval(), to_string(f.irreducibility_proof()), s.r1, s.r2, s.unit_rank};
}

inline MultiplierRecord multiplier_record(const ValidatedFlow& flow, const Multiplier& m,
                                          std::optional<unsigned long> exponent = std::nullopt) {
  MultiplierRecord r;
  r.witness = m.witness;
  r.exponent = exponent;
  std::size_t n = flow.dimension();
  if (const auto* q = std::get_if<Rational>(&m.value)) {
    r.value.assign(n, Rational(0));
    r.value[0] = *q;
    r.min_poly = IntPolynomial({-q->get_num(), q->get_den()});
    r.norm = Rational(determinant(m.witness));
    r.approx = to_decimal_string(*q, 12);
  } else {
    const auto& x = std::get<FieldElement>(m.value);
    r.value = x.coords();
    r.min_poly = minimal_polynomial(x);
    r.norm = norm(x);
    r.approx = to_decimal(x);
  }
  return r;
}

inline UnitRecord unit_record(const UnitGenerator& u) {
  return {u.value.coords(), to_string(u.provenance), minimal_polynomial(u.value), to_decimal(u.value)};
}

inline GroupSummary group_summary(const ValidatedFlow& flow, const MultiplierGroup& g) {
  GroupSummary s;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    s.generators.push_back(multiplier_record(flow, g.generators[i], g.exponents[i]));
  }
  s.index = g.index;
  s.index_status = to_string(g.status);
  return s;
}

/// Set comparison between the oracle output and {+-1} x {g_i^(+-1)}, restricted
/// to witnesses whose first row lies in the oracle box.
inline OracleRecord oracle_record(const ValidatedFlow& flow, const MultiplierGroup& g, long row_bound, unsigned workers = 1) {
  OracleRecord o;
  o.row_bound = row_bound;
  auto found = brute_force_multipliers(flow, row_bound, workers);
  for (const auto& m : found) o.multipliers.push_back(multiplier_record(flow, m));

  // Expected: every element of M whose witness first row is inside the box.
  // First rows grow geometrically with |exponent| but need not do so
  // monotonically, so walk powers until they are far outside the box.
  auto row_max = [](const IntMatrix& w) {
    Integer m = 0;
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (abs(w(0, j)) > m) m = abs(w(0, j));
    return m;
  };
  Integer far = Integer(row_bound) << 40;
  std::vector<IntMatrix> expected;
  for (const auto& t : g.torsion) expected.push_back(t.witness);
  if (g.generators.size() == 1) {
    IntMatrix gen = g.generators[0].witness;
    auto inv = inverse(to_rational(gen));
    IntMatrix gen_inv = *to_integer(*inv);
    for (const IntMatrix& step : {gen, gen_inv}) {
      IntMatrix p = step;
      for (int k = 0; k < 256 && row_max(p) <= far; ++k) {
        if (row_max(p) <= row_bound) {
          expected.push_back(p);
          expected.push_back(Integer(-1) * p);
        }
        p = p * step;
      }
    }
  }
  std::sort(expected.begin(), expected.end(), qpsym::detail::lex_less);
  std::vector<IntMatrix> got;
  for (const auto& m : found) got.push_back(m.witness);
  if (g.generators.size() >= 2) {
    // Rank >= 2: the box is not a union of cyclic orbits; only check units.
    o.agrees = true;
    for (const auto& m : found) {
      const auto& x = std::get<FieldElement>(m.value);
      if (!is_algebraic_unit(x)) o.agrees = false;
    }
    o.verdict = o.agrees ? "oracle multipliers are all units (rank >= 2: set equality not checked)"
                         : "oracle found a non-unit multiplier";
    return o;
  }
  o.agrees = (got == expected);
  o.verdict = o.agrees ? "oracle agrees: " + std::to_string(got.size()) + " multipliers in the box"
                       : "oracle disagrees: found " + std::to_string(got.size()) + ", expected " +
                             std::to_string(expected.size());
  return o;
}

inline AnalysisReport analysis_report(const ValidatedFlow& flow, const SymmetryReport& rep) {
  AnalysisReport a;
  a.description = flow.spec().description;
  a.model = to_string(flow.model());
  a.dimension = flow.dimension();
  a.frequencies = flow.spec().frequencies;
  if (flow.is_algebraic()) {
    a.field = field_record(flow.field());
    a.scaled_frequencies = flow.coords();
    a.scale = flow.scale().coords();
  }
  a.classification = rep.classification;
  a.structure = rep.structure;
  for (const auto& t : rep.group.torsion) a.torsion.push_back(multiplier_record(flow, t));
  for (std::size_t i = 0; i < rep.group.generators.size(); ++i) {
    a.generators.push_back(multiplier_record(flow, rep.group.generators[i], rep.group.exponents[i]));
  }
  a.index = rep.group.index;
  a.index_status = to_string(rep.group.status);
  if (rep.group.units) {
    for (const auto& u : rep.group.units->generators) a.units.push_back(unit_record(u));
  }
  a.ratio_min_poly = rep.ratio_min_poly;
  for (const auto& c : rep.checklist) a.checklist.push_back({c.name, c.passed, c.detail});
  a.notes = rep.notes;
  return a;
}

inline SemiconjugacyRecord semiconjugacy_record(const ValidatedFlow& a, const ValidatedFlow& b,
                                                const SemiconjugacyReport& r, std::string name_a, std::string name_b) {
  SemiconjugacyRecord s;
  s.flow_a = std::move(name_a);
  s.flow_b = std::move(name_b);
  if (r.scale_factor) {
    if (const auto* q = std::get_if<Rational>(&*r.scale_factor)) {
      std::vector<Rational> v(a.dimension(), Rational(0));
      v[0] = *q;
      s.scale_factor = v;
    } else {
      s.scale_factor = std::get<FieldElement>(*r.scale_factor).coords();
    }
  }
  s.semiconjugacy = *r.witness.matrix;
  s.det = r.witness.det;
  s.conjugate = r.conjugacy.has_value();
  s.group_a = group_summary(a, r.group_a);
  s.group_b = group_summary(b, r.group_b);
  s.b_in_a = r.b_in_a;
  s.a_in_b = r.a_in_b;
  s.index_b_in_a = r.index_b_in_a;
  s.index_a_in_b = r.index_a_in_b;
  s.evidence_only = r.evidence_only;
  s.conclusion = r.conclusion;
  return s;
}

// ---- JSON encoding ----

namespace detail {

inline json rational_list(const std::vector<Rational>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_exact_string(x));
  return j;
}

inline json rational_matrix(const RationalMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(rational_list(m.row(i)));
  return j;
}

inline json integer_matrix(const IntMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    j.push_back(row);
  }
  return j;
}

inline json poly(const IntPolynomial& p) {
  json j = json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.get_str());
  return j;
}

template <class T>
json optional_or_null(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

// decoding; any structural problem is a ParseError with a JSON pointer
[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, "report at " + where + ": " + what);
}

inline const json& at(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, "missing \"" + key + "\"");
  return j.at(key);
}

inline std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

inline bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) bad(where, "expected a boolean");
  return j.get<bool>();
}

inline unsigned long unsigned_number(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where, "expected a non-negative integer");
  return j.get<unsigned long>();
}

inline Rational rational_of(const json& j, const std::string& where) {
  std::string s = str(j, where);
  auto slash = s.find('/');
  if (slash == std::string::npos) bad(where, "rational must be written p/q");
  Rational r = parse_rational(s);
  if (to_exact_string(r) != s) bad(where, "non-canonical rational " + s);
  return r;
}

inline Integer integer_of(const json& j, const std::string& where) { return parse_integer(str(j, where)); }

inline std::vector<Rational> rational_list_of(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_of(j[i], where + "/" + std::to_string(i)));
  return v;
}

inline RationalMatrix rational_matrix_of(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(rational_list_of(j[i], where + "/" + std::to_string(i)));
  return RationalMatrix::from_rows(rows);
}

inline IntMatrix integer_matrix_of(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& r = j[i];
    if (!r.is_array()) bad(where + "/" + std::to_string(i), "expected an array");
    std::vector<Integer> row;
    for (std::size_t k = 0; k < r.size(); ++k) {
      row.push_back(integer_of(r[k], where + "/" + std::to_string(i) + "/" + std::to_string(k)));
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

inline IntPolynomial poly_of(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(integer_of(j[i], where + "/" + std::to_string(i)));
  return IntPolynomial(std::move(c));
}

}  // namespace detail

inline json to_json(const FieldRecord& f) {
  return {{"min_poly", detail::poly(f.min_poly)},
          {"root_interval", json::array({to_exact_string(f.root_interval.lo), to_exact_string(f.root_interval.hi)})},
          {"irreducibility", f.irreducibility},
          {"signature", {{"r1", f.r1}, {"r2", f.r2}, {"unit_rank", f.unit_rank}}}};
}

inline json to_json(const MultiplierRecord& m) {
  return {{"value", detail::rational_list(m.value)},
          {"witness", detail::integer_matrix(m.witness)},
          {"exponent", detail::optional_or_null(m.exponent)},
          {"min_poly", detail::poly(m.min_poly)},
          {"norm", to_exact_string(m.norm)},
          {"approx", m.approx}};
}

inline json to_json(const UnitRecord& u) {
  return {{"value", detail::rational_list(u.value)},
          {"provenance", u.provenance},
          {"min_poly", detail::poly(u.min_poly)},
          {"approx", u.approx}};
}

inline json to_json(const CheckRecord& c) { return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

inline json to_json(const OracleRecord& o) {
  json ms = json::array();
  for (const auto& m : o.multipliers) ms.push_back(to_json(m));
  return {{"row_bound", o.row_bound}, {"multipliers", ms}, {"agrees", o.agrees}, {"verdict", o.verdict}};
}

inline json to_json(const GroupSummary& g) {
  json gens = json::array();
  for (const auto& m : g.generators) gens.push_back(to_json(m));
  return {{"generators", gens}, {"index", detail::optional_or_null(g.index)}, {"index_status", g.index_status}};
}

inline json to_json(const AnalysisReport& a) {
  json torsion = json::array(), gens = json::array(), units = json::array(), checks = json::array();
  for (const auto& m : a.torsion) torsion.push_back(to_json(m));
  for (const auto& m : a.generators) gens.push_back(to_json(m));
  for (const auto& u : a.units) units.push_back(to_json(u));
  for (const auto& c : a.checklist) checks.push_back(to_json(c));
  json j = {
      {"kind", "analysis"},
      {"description", a.description},
      {"model", a.model},
      {"dimension", a.dimension},
      {"field", a.field ? to_json(*a.field) : json(nullptr)},
      {"frequencies", detail::rational_matrix(a.frequencies)},
      {"scaled_frequencies", a.scaled_frequencies ? detail::rational_matrix(*a.scaled_frequencies) : json(nullptr)},
      {"scale", a.scale ? detail::rational_list(*a.scale) : json(nullptr)},
      {"classification", a.classification},
      {"structure", a.structure},
      {"multiplier_group",
       {{"torsion", torsion},
        {"generators", gens},
        {"index", detail::optional_or_null(a.index)},
        {"index_status", a.index_status},
        {"unit_generators", units}}},
      {"ratio_min_poly", a.ratio_min_poly ? detail::poly(*a.ratio_min_poly) : json(nullptr)},
      {"checklist", checks},
      {"notes", a.notes},
      {"translations", "arbitrary"},
  };
  if (a.oracle) j["oracle"] = to_json(*a.oracle);
  return j;
}

inline json to_json(const SemiconjugacyRecord& s) {
  return {{"kind", "semiconjugacy"},
          {"flow_a", s.flow_a},
          {"flow_b", s.flow_b},
          {"scale_factor", s.scale_factor ? detail::rational_list(*s.scale_factor) : json(nullptr)},
          {"semiconjugacy", detail::integer_matrix(s.semiconjugacy)},
          {"det", s.det.get_str()},
          {"conjugate", s.conjugate},
          {"group_a", to_json(s.group_a)},
          {"group_b", to_json(s.group_b)},
          {"b_in_a", s.b_in_a},
          {"a_in_b", s.a_in_b},
          {"index_b_in_a", detail::optional_or_null(s.index_b_in_a)},
          {"index_a_in_b", detail::optional_or_null(s.index_a_in_b)},
          {"evidence_only", s.evidence_only},
          {"conclusion", s.conclusion},
          {"translations", "arbitrary"}};
}

inline json to_json(const UnitReport& u) {
  json units = json::array();
  for (const auto& r : u.units) units.push_back(to_json(r));
  json norms = json::array();
  for (const auto& n : u.norms) norms.push_back(to_exact_string(n));
  return {{"kind", "unit"}, {"source", u.source}, {"field", to_json(u.field)}, {"unit_generators", units}, {"norms", norms}};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- JSON decoding ----

inline FieldRecord field_record_from_json(const json& j, const std::string& w) {
  using namespace detail;
  FieldRecord f;
  f.min_poly = poly_of(at(j, "min_poly", w), w + "/min_poly");
  auto iv = rational_list_of(at(j, "root_interval", w), w + "/root_interval");
  if (iv.size() != 2) bad(w + "/root_interval", "expected two endpoints");
  f.root_interval = {iv[0], iv[1]};
  f.irreducibility = str(at(j, "irreducibility", w), w + "/irreducibility");
  const json& s = at(j, "signature", w);
  f.r1 = unsigned_number(at(s, "r1", w), w + "/signature/r1");
  f.r2 = unsigned_number(at(s, "r2", w), w + "/signature/r2");
  f.unit_rank = unsigned_number(at(s, "unit_rank", w), w + "/signature/unit_rank");
  return f;
}

inline MultiplierRecord multiplier_record_from_json(const json& j, const std::string& w) {
  using namespace detail;
  MultiplierRecord m;
  m.value = rational_list_of(at(j, "value", w), w + "/value");
  m.witness = integer_matrix_of(at(j, "witness", w), w + "/witness");
  const json& e = at(j, "exponent", w);
  if (!e.is_null()) m.exponent = unsigned_number(e, w + "/exponent");
  m.min_poly = poly_of(at(j, "min_poly", w), w + "/min_poly");
  m.norm = rational_of(at(j, "norm", w), w + "/norm");
  m.approx = str(at(j, "approx", w), w + "/approx");
  return m;
}

inline UnitRecord unit_record_from_json(const json& j, const std::string& w) {
  using namespace detail;
  return {rational_list_of(at(j, "value", w), w + "/value"), str(at(j, "provenance", w), w + "/provenance"),
          poly_of(at(j, "min_poly", w), w + "/min_poly"), str(at(j, "approx", w), w + "/approx")};
}

template <class F>
auto list_from_json(const json& j, const std::string& w, F each) {
  if (!j.is_array()) detail::bad(w, "expected an array");
  std::vector<decltype(each(j, w))> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(each(j[i], w + "/" + std::to_string(i)));
  return out;
}

inline std::optional<unsigned long> optional_index(const json& j, const std::string& w) {
  if (j.is_null()) return std::nullopt;
  return detail::unsigned_number(j, w);
}

inline GroupSummary group_summary_from_json(const json& j, const std::string& w) {
  using namespace detail;
  GroupSummary g;
  g.generators = list_from_json(at(j, "generators", w), w + "/generators", multiplier_record_from_json);
  g.index = optional_index(at(j, "index", w), w + "/index");
  g.index_status = str(at(j, "index_status", w), w + "/index_status");
  return g;
}

inline AnalysisReport analysis_report_from_json(const json& j) {
  using namespace detail;
  const std::string w;
  if (str(at(j, "kind", w), "/kind") != "analysis") bad("/kind", "expected \"analysis\"");
  AnalysisReport a;
  a.description = str(at(j, "description", w), "/description");
  a.model = str(at(j, "model", w), "/model");
  a.dimension = unsigned_number(at(j, "dimension", w), "/dimension");
  if (const json& f = at(j, "field", w); !f.is_null()) a.field = field_record_from_json(f, "/field");
  a.frequencies = rational_matrix_of(at(j, "frequencies", w), "/frequencies");
  if (const json& s = at(j, "scaled_frequencies", w); !s.is_null()) a.scaled_frequencies = rational_matrix_of(s, "/scaled_frequencies");
  if (const json& s = at(j, "scale", w); !s.is_null()) a.scale = rational_list_of(s, "/scale");
  a.classification = str(at(j, "classification", w), "/classification");
  a.structure = str(at(j, "structure", w), "/structure");
  const json& g = at(j, "multiplier_group", w);
  a.torsion = list_from_json(at(g, "torsion", "/multiplier_group"), "/multiplier_group/torsion", multiplier_record_from_json);
  a.generators = list_from_json(at(g, "generators", "/multiplier_group"), "/multiplier_group/generators", multiplier_record_from_json);
  a.index = optional_index(at(g, "index", "/multiplier_group"), "/multiplier_group/index");
  a.index_status = str(at(g, "index_status", "/multiplier_group"), "/multiplier_group/index_status");
  a.units = list_from_json(at(g, "unit_generators", "/multiplier_group"), "/multiplier_group/unit_generators", unit_record_from_json);
  if (const json& r = at(j, "ratio_min_poly", w); !r.is_null()) a.ratio_min_poly = poly_of(r, "/ratio_min_poly");
  a.checklist = list_from_json(at(j, "checklist", w), "/checklist", [](const json& c, const std::string& cw) {
    return CheckRecord{str(at(c, "name", cw), cw + "/name"), boolean(at(c, "passed", cw), cw + "/passed"),
                       str(at(c, "detail", cw), cw + "/detail")};
  });
  a.notes = list_from_json(at(j, "notes", w), "/notes", [](const json& s, const std::string& sw) { return str(s, sw); });
  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    OracleRecord r;
    const json& rb = at(o, "row_bound", "/oracle");
    if (!rb.is_number_integer()) bad("/oracle/row_bound", "expected an integer");
    r.row_bound = rb.get<long>();
    r.multipliers = list_from_json(at(o, "multipliers", "/oracle"), "/oracle/multipliers", multiplier_record_from_json);
    r.agrees = boolean(at(o, "agrees", "/oracle"), "/oracle/agrees");
    r.verdict = str(at(o, "verdict", "/oracle"), "/oracle/verdict");
    a.oracle = std::move(r);
  }
  return a;
}

inline SemiconjugacyRecord semiconjugacy_record_from_json(const json& j) {
  using namespace detail;
  const std::string w;
  if (str(at(j, "kind", w), "/kind") != "semiconjugacy") bad("/kind", "expected \"semiconjugacy\"");
  SemiconjugacyRecord s;
  s.flow_a = str(at(j, "flow_a", w), "/flow_a");
  s.flow_b = str(at(j, "flow_b", w), "/flow_b");
  if (const json& t = at(j, "scale_factor", w); !t.is_null()) s.scale_factor = rational_list_of(t, "/scale_factor");
  s.semiconjugacy = integer_matrix_of(at(j, "semiconjugacy", w), "/semiconjugacy");
  s.det = integer_of(at(j, "det", w), "/det");
  s.conjugate = boolean(at(j, "conjugate", w), "/conjugate");
  s.group_a = group_summary_from_json(at(j, "group_a", w), "/group_a");
  s.group_b = group_summary_from_json(at(j, "group_b", w), "/group_b");
  s.b_in_a = boolean(at(j, "b_in_a", w), "/b_in_a");
  s.a_in_b = boolean(at(j, "a_in_b", w), "/a_in_b");
  s.index_b_in_a = optional_index(at(j, "index_b_in_a", w), "/index_b_in_a");
  s.index_a_in_b = optional_index(at(j, "index_a_in_b", w), "/index_a_in_b");
  s.evidence_only = boolean(at(j, "evidence_only", w), "/evidence_only");
  s.conclusion = str(at(j, "conclusion", w), "/conclusion");
  return s;
}

inline UnitReport unit_report_from_json(const json& j) {
  using namespace detail;
  const std::string w;
  if (str(at(j, "kind", w), "/kind") != "unit") bad("/kind", "expected \"unit\"");
  UnitReport u;
  u.source = str(at(j, "source", w), "/source");
  u.field = field_record_from_json(at(j, "field", w), "/field");
  u.units = list_from_json(at(j, "unit_generators", w), "/unit_generators", unit_record_from_json);
  u.norms = list_from_json(at(j, "norms", w), "/norms", [](const json& x, const std::string& xw) { return rational_of(x, xw); });
  return u;
}

// ---- human text ----

namespace detail {

inline std::string coords_text(const std::vector<Rational>& v, const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Rational c = v[k];
    std::string sign = c < 0 ? "-" : "+";
    if (c < 0) c = -c;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coef = (c == 1 && k > 0) ? "" : to_short_string(c);
    if (!coef.empty() && !mono.empty() && !is_integer(c)) coef = "(" + coef + ")";
    std::string term = coef + mono;
    if (out.empty()) {
      out = (sign == "-" ? "-" : "") + term;
    } else {
      out += " " + sign + " " + term;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string line(const std::string& key, const std::string& value) {
  std::ostringstream ss;
  ss << "  " << std::left << std::setw(22) << key << value << "\n";
  return ss.str();
}

inline std::string multiplier_text(const MultiplierRecord& m, const std::string& var) {
  std::string s = line("value", coords_text(m.value, var) + "  (approx " + m.approx + ")");
  if (m.exponent) s += line("exponent", std::to_string(*m.exponent));
  s += line("minimal polynomial", to_string(m.min_poly));
  s += line("norm", to_short_string(m.norm));
  s += line("witness", to_string(m.witness));
  return s;
}

}  // namespace detail

inline std::string to_text(const AnalysisReport& a) {
  std::string var = a.model == "formal" ? "g" : "d";
  std::string s;
  if (!a.description.empty()) s += a.description + "\n";
  s += detail::line("model", a.model);
  s += detail::line("dimension", std::to_string(a.dimension));
  if (a.field) {
    s += detail::line("field", "Q(d), " + to_string(a.field->min_poly, "d") + " = 0, d in (" +
                                   to_short_string(a.field->root_interval.lo) + ", " +
                                   to_short_string(a.field->root_interval.hi) + ")");
    s += detail::line("signature", "(" + std::to_string(a.field->r1) + ", " + std::to_string(a.field->r2) +
                                       "), unit rank " + std::to_string(a.field->unit_rank));
  }
  for (std::size_t i = 0; i < a.frequencies.rows(); ++i) {
    s += detail::line("a_" + std::to_string(i + 1), detail::coords_text(a.frequencies.row(i), var));
  }
  if (a.scale) s += detail::line("rescaled by", detail::coords_text(*a.scale, var));
  s += detail::line("classification", a.classification);
  s += detail::line("structure", a.structure);
  if (a.ratio_min_poly) s += detail::line("a_2/a_1 min poly", to_string(*a.ratio_min_poly));
  std::string tors;
  for (const auto& t : a.torsion) tors += (tors.empty() ? "" : ", ") + detail::coords_text(t.value, var);
  s += detail::line("torsion", "{" + tors + "}");
  for (const auto& u : a.units) {
    s += detail::line("unit generator", detail::coords_text(u.value, var) + "  [" + u.provenance + "]");
  }
  if (a.index) s += detail::line("index", std::to_string(*a.index) + "  [" + a.index_status + "]");
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    s += "generator " + std::to_string(i + 1) + ":\n" + detail::multiplier_text(a.generators[i], var);
  }
  if (a.generators.empty()) s += "M = {1, -1}\n";
  s += "checklist:\n";
  for (const auto& c : a.checklist) {
    s += "  [" + std::string(c.passed ? "pass" : "FAIL") + "] " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  }
  s += "notes:\n";
  for (const auto& n : a.notes) s += "  - " + n + "\n";
  if (a.oracle) {
    s += "oracle (row bound " + std::to_string(a.oracle->row_bound) + "):\n";
    for (const auto& m : a.oracle->multipliers) {
      s += "  " + detail::coords_text(m.value, var) + "  " + to_string(m.witness) + "\n";
    }
    s += "  " + a.oracle->verdict + "\n";
  }
  return s;
}

inline std::string to_text(const SemiconjugacyRecord& r) {
  std::string s;
  s += detail::line("flow a", r.flow_a);
  s += detail::line("flow b", r.flow_b);
  s += detail::line("scale equivalent", r.scale_factor ? "yes, factor " + detail::coords_text(*r.scale_factor, "d") : "no");
  s += detail::line("semiconjugacy V", to_string(r.semiconjugacy) + " (+ arbitrary translation)");
  s += detail::line("det V", r.det.get_str());
  s += detail::line("conjugate", r.conjugate ? "yes" : "no");
  auto group = [&](const std::string& name, const GroupSummary& g) {
    std::string gens;
    for (const auto& m : g.generators) gens += (gens.empty() ? "" : ", ") + detail::coords_text(m.value, "d");
    s += detail::line("M_" + name, gens.empty() ? "{1, -1}" : "+-<" + gens + ">");
    if (g.index) s += detail::line("index of M_" + name, std::to_string(*g.index) + "  [" + g.index_status + "]");
  };
  group("a", r.group_a);
  group("b", r.group_b);
  s += detail::line("M_b in M_a", r.b_in_a ? "yes" + (r.index_b_in_a ? ", index " + std::to_string(*r.index_b_in_a) : std::string()) : "no");
  s += detail::line("M_a in M_b", r.a_in_b ? "yes" + (r.index_a_in_b ? ", index " + std::to_string(*r.index_a_in_b) : std::string()) : "no");
  s += r.conclusion + "\n";
  return s;
}

inline std::string to_text(const UnitReport& u) {
  std::string s;
  s += detail::line("source", u.source);
  s += detail::line("field", "Q(d), " + to_string(u.field.min_poly, "d") + " = 0");
  s += detail::line("signature", "(" + std::to_string(u.field.r1) + ", " + std::to_string(u.field.r2) + "), unit rank " +
                                     std::to_string(u.field.unit_rank));
  for (std::size_t i = 0; i < u.units.size(); ++i) {
    const auto& r = u.units[i];
    s += "unit " + std::to_string(i + 1) + ":\n";
    s += detail::line("value", detail::coords_text(r.value, "d"));
    s += detail::line("provenance", r.provenance);
    s += detail::line("minimal polynomial", to_string(r.min_poly));
    s += detail::line("norm", to_short_string(u.norms[i]));
    s += detail::line("approx", r.approx);
  }
  return s;
}

}  // namespace qpsym::io
