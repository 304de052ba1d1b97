#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpsym/multiplier.hpp"

namespace qpsym::io {

using nlohmann::json;

// Flow files are JSON documents:
//
//   {
//     "description": "optional text",
//     "model": "algebraic" | "formal",
//     "field": { "min_poly": [-2, 0, 0, 1], "root_interval": ["5/4", "4/3"] },
//     "frequencies": [["1", "0", "0"], ["0", "3", "0"], ["0", "0", "-3"]],
//     "units": [["-1", "1", "0"]]
//   }
//
// Coefficient lists ascend by degree. Rationals are "p/q" or "p" strings (JSON
// integers are also accepted). "field" is required for the algebraic model
// and forbidden for the formal one, where row i gives the coefficients of
// a_i over 1, g, ..., g^(n-1).

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void semantic_error(const std::string& source, const std::string& pointer, const std::string& msg) {
  fail(ErrorKind::ParseError, source + ": at " + (pointer.empty() ? "/" : pointer) + ": " + msg);
}

inline Rational rational_at(const json& v, const std::string& source, const std::string& ptr) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const Error& e) {
    semantic_error(source, ptr, e.detail());
  }
  semantic_error(source, ptr, "expected a rational string \"p/q\" or an integer");
}

inline Integer integer_at(const json& v, const std::string& source, const std::string& ptr) {
  Rational r = rational_at(v, source, ptr);
  if (!is_integer(r)) semantic_error(source, ptr, "expected an integer");
  return r.get_num();
}

inline std::vector<Rational> rational_row(const json& v, const std::string& source, const std::string& ptr) {
  if (!v.is_array()) semantic_error(source, ptr, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], source, ptr + "/" + std::to_string(i)));
  return out;
}

inline std::vector<std::vector<Rational>> rational_rows(const json& v, const std::string& source, const std::string& ptr) {
  if (!v.is_array()) semantic_error(source, ptr, "expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) rows.push_back(rational_row(v[i], source, ptr + "/" + std::to_string(i)));
  return rows;
}

inline json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    auto pos = what.find("syntax error");
    fail(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                    (pos == std::string::npos ? what : what.substr(pos)));
  }
}

inline NumberField parse_field(const json& f, const std::string& source) {
  if (!f.is_object()) semantic_error(source, "/field", "expected an object");
  if (!f.contains("min_poly")) semantic_error(source, "/field", "missing \"min_poly\"");
  if (!f.contains("root_interval")) semantic_error(source, "/field", "missing \"root_interval\"");
  const json& mp = f["min_poly"];
  if (!mp.is_array()) semantic_error(source, "/field/min_poly", "expected an array of integers");
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    coeffs.push_back(integer_at(mp[i], source, "/field/min_poly/" + std::to_string(i)));
  }
  if (!coeffs.empty() && coeffs.back() == 0) {
    semantic_error(source, "/field/min_poly", "leading (last) coefficient must be nonzero");
  }
  auto iv = rational_row(f["root_interval"], source, "/field/root_interval");
  if (iv.size() != 2) semantic_error(source, "/field/root_interval", "expected two endpoints");
  if (iv[0] >= iv[1]) semantic_error(source, "/field/root_interval", "lower endpoint must be below upper endpoint");
  return make_field(IntPolynomial(std::move(coeffs)), {iv[0], iv[1]});
}

}  // namespace detail

/// Parses flow-file text into an (unvalidated) FlowSpec. Number-field
/// validation errors propagate with their own kinds.
inline FlowSpec parse_flow_spec(const std::string& text, const std::string& source = "<input>") {
  json doc = detail::parse_json(text, source);
  if (!doc.is_object()) detail::semantic_error(source, "", "top level must be an object");
  FlowSpec spec;
  std::string model = "algebraic";
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) detail::semantic_error(source, "/model", "expected a string");
    model = doc["model"].get<std::string>();
  }
  if (model == "algebraic") {
    spec.model = FlowModel::algebraic;
    if (!doc.contains("field")) detail::semantic_error(source, "", "algebraic model needs \"field\"");
    spec.field = detail::parse_field(doc["field"], source);
  } else if (model == "formal") {
    spec.model = FlowModel::formal;
    if (doc.contains("field")) detail::semantic_error(source, "/field", "formal model takes no field");
  } else {
    detail::semantic_error(source, "/model", "expected \"algebraic\" or \"formal\", got \"" + model + "\"");
  }
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) detail::semantic_error(source, "/description", "expected a string");
    spec.description = doc["description"].get<std::string>();
  }
  if (!doc.contains("frequencies")) detail::semantic_error(source, "", "missing \"frequencies\"");
  auto rows = detail::rational_rows(doc["frequencies"], source, "/frequencies");
  std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      detail::semantic_error(source, "/frequencies/" + std::to_string(i),
                             "expected " + std::to_string(n) + " coordinates");
    }
  }
  if (n < 2) detail::semantic_error(source, "/frequencies", "need at least two frequencies");
  if (spec.field && spec.field->degree() != n) {
    detail::semantic_error(source, "/frequencies", "field degree " + std::to_string(spec.field->degree()) +
                                                       " differs from " + std::to_string(n) + " frequencies");
  }
  spec.frequencies = RationalMatrix::from_rows(rows);
  for (const char* key : {"units", "unit_generators"}) {
    if (!doc.contains(key)) continue;
    auto units = detail::rational_rows(doc[key], source, std::string("/") + key);
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (units[i].size() != n) {
        detail::semantic_error(source, std::string("/") + key + "/" + std::to_string(i),
                               "expected " + std::to_string(n) + " coordinates");
      }
    }
    spec.supplied_units = std::move(units);
  }
  return spec;
}

/// A field with optional supplied unit generators (for the unit command).
struct FieldFile {
  NumberField field;
  std::vector<FieldElement> units;
  std::string description;
};

inline FieldFile parse_field_file(const std::string& text, const std::string& source = "<input>") {
  json doc = detail::parse_json(text, source);
  if (!doc.is_object()) detail::semantic_error(source, "", "top level must be an object");
  if (!doc.contains("field")) detail::semantic_error(source, "", "missing \"field\"");
  NumberField f = detail::parse_field(doc["field"], source);
  FieldFile out{f, {}, ""};
  if (doc.contains("description") && doc["description"].is_string()) out.description = doc["description"].get<std::string>();
  if (doc.contains("units")) {
    auto units = detail::rational_rows(doc["units"], source, "/units");
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (units[i].size() != f.degree()) {
        detail::semantic_error(source, "/units/" + std::to_string(i), "expected " + std::to_string(f.degree()) + " coordinates");
      }
      out.units.emplace_back(f, units[i]);
    }
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FlowSpec load_flow_spec(const std::string& path) { return parse_flow_spec(read_file(path), path); }

}  // namespace qpsym::io
