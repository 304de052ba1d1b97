#include <algorithm>
#include <iomanip>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qpsym/qpsym.hpp"

namespace {

using namespace qpsym;

constexpr int exit_ok = 0;
constexpr int exit_user = 2;
constexpr int exit_internal = 3;

int report_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return e.kind() == ErrorKind::InternalInconsistency ? exit_internal : exit_user;
}

int cmd_analyze(const std::string& path, unsigned long max_index, long oracle_bound, bool as_json) {
  ValidatedFlow flow = validate_flow(io::load_flow_spec(path));
  SymmetryReport rep = classify(flow, max_index);
  io::AnalysisReport out = io::analysis_report(flow, rep);
  if (oracle_bound > 0) {
    unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    out.oracle = io::oracle_record(flow, rep.group, oracle_bound, workers);
  }
  if (as_json) {
    std::cout << io::dump(io::to_json(out));
  } else {
    std::cout << io::to_text(out);
  }
  if (out.oracle && !out.oracle->agrees) {
    std::cerr << "error: InternalInconsistency: " << out.oracle->verdict << "\n";
    return exit_internal;
  }
  return exit_ok;
}

int cmd_unit(const std::string& disc, const std::string& path, bool as_json) {
  io::UnitReport rep;
  UnitGroup g = [&] {
    if (!disc.empty()) {
      rep.source = "disc " + disc;
      return quadratic_unit_group(parse_integer(disc));
    }
    rep.source = path;
    io::FieldFile ff = io::parse_field_file(io::read_file(path), path);
    return unit_group(ff.field, ff.units);
  }();
  rep.field = io::field_record(g.field);
  for (const auto& u : g.generators) {
    rep.units.push_back(io::unit_record(u));
    rep.norms.push_back(norm(u.value));
  }
  std::cout << (as_json ? io::dump(io::to_json(rep)) : io::to_text(rep));
  return exit_ok;
}

int cmd_semiconj(const std::string& path_a, const std::string& path_b, unsigned long max_index, bool as_json) {
  ValidatedFlow a = validate_flow(io::load_flow_spec(path_a));
  ValidatedFlow b = validate_flow(io::load_flow_spec(path_b));
  SemiconjugacyReport rep = semiconjugacy_report(a, b, std::nullopt, max_index);
  io::SemiconjugacyRecord out = io::semiconjugacy_record(a, b, rep, path_a, path_b);
  std::cout << (as_json ? io::dump(io::to_json(out)) : io::to_text(out));
  return exit_ok;
}

int cmd_verify() {
  auto results = run_reference_claims();
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << r.id
              << r.claim;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
  }
  std::cout << passed << "/" << results.size() << " claims hold\n";
  return passed == results.size() ? exit_ok : exit_internal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier groups and symmetries of quasiperiodic torus flows"};
  app.require_subcommand(1);

  std::string analyze_path;
  unsigned long max_index = 100000;
  long oracle_bound = 0;
  bool json_out = false;
  auto* analyze = app.add_subcommand("analyze", "multiplier group, witnesses and checklist for a flow file");
  analyze->add_option("file", analyze_path, "flow file")->required();
  analyze->add_option("--max-index", max_index, "largest exponent searched per unit generator");
  analyze->add_option("--oracle-bound", oracle_bound, "cross-check with brute force over witness first rows in [-B, B]");
  analyze->add_flag("--json", json_out, "machine-readable report");

  std::string disc, field_path;
  bool unit_json = false;
  auto* unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt d) or of a field file");
  auto* disc_opt = unit->add_option("--disc", disc, "squarefree d > 1");
  auto* file_opt = unit->add_option("field-file", field_path, "field file (units are required for degree >= 3)");
  disc_opt->excludes(file_opt);
  unit->add_flag("--json", unit_json, "machine-readable report");

  std::string path_a, path_b;
  unsigned long semi_max_index = 100000;
  bool semi_json = false;
  auto* semi = app.add_subcommand("semiconj", "affine (semi)conjugacy between two flows and multiplier containment");
  semi->add_option("fileA", path_a, "source flow")->required();
  semi->add_option("fileB", path_b, "target flow")->required();
  semi->add_option("--max-index", semi_max_index, "largest exponent searched per unit generator");
  semi->add_flag("--json", semi_json, "machine-readable report");

  auto* verify = app.add_subcommand("verify-paper", "recompute the reference examples and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_user;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, max_index, oracle_bound, json_out);
    if (*unit) {
      if (disc.empty() && field_path.empty()) {
        std::cerr << "error: InvalidArgument: give --disc d or a field file\n";
        return exit_user;
      }
      return cmd_unit(disc, field_path, unit_json);
    }
    if (*semi) return cmd_semiconj(path_a, path_b, semi_max_index, semi_json);
    if (*verify) return cmd_verify();
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: InternalInconsistency: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_user;
}
