#include <gtest/gtest.h>

#include "support.hpp"

using namespace qpsym;
using namespace qtest;

namespace {

std::string parse_error(const std::string& text) {
  try {
    io::parse_flow_spec(text, "t.flow");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError) << e.what();
    return e.detail();
  }
  ADD_FAILURE() << "no error for " << text;
  return "";
}

std::string read(const std::string& rel) { return io::read_file(std::string(QPSYM_SOURCE_DIR) + "/" + rel); }

}  // namespace

TEST(FlowFile, ParsesExamples) {
  FlowSpec s = io::parse_flow_spec(read("examples/ex_cubic.flow"));
  EXPECT_EQ(s.model, FlowModel::algebraic);
  ASSERT_TRUE(s.field);
  EXPECT_EQ(s.field->min_poly(), ipoly({-2, 0, 0, 1}));
  EXPECT_EQ(s.frequencies, rmat({{1, 0, 0}, {0, 3, 0}, {0, 0, -3}}));
  ASSERT_EQ(s.supplied_units.size(), 1u);
  FlowSpec f = io::parse_flow_spec(read("examples/ex_formal.flow"));
  EXPECT_EQ(f.model, FlowModel::formal);
  EXPECT_FALSE(f.field);
}

TEST(FlowFile, AcceptsIntegersAndFractions) {
  FlowSpec s = io::parse_flow_spec(R"({"field": {"min_poly": ["-3", 0, 1], "root_interval": ["3/2", 2]},
    "frequencies": [[1, "1/2"], ["-2/4", 3]]})");
  EXPECT_EQ(s.model, FlowModel::algebraic);
  EXPECT_EQ(s.frequencies(0, 1), make_rational(1, 2));
  EXPECT_EQ(s.frequencies(1, 0), make_rational(-1, 2));
}

TEST(FlowFile, SyntaxErrorsCarryLineAndColumn) {
  std::string d = parse_error("{\n  \"model\": \"algebraic\",\n  \"frequencies\": [[1, 0] [0, 1]]\n}");
  EXPECT_EQ(d.rfind("t.flow:3:", 0), 0u) << d;
  d = parse_error("{ \"model\": ");
  EXPECT_EQ(d.rfind("t.flow:1:", 0), 0u) << d;
}

TEST(FlowFile, SemanticErrorsCarryPointers) {
  EXPECT_NE(parse_error(R"({"model": "formal", "frequencies": [["1", "x"], ["0", "1"]]})").find("/frequencies/0/1"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"model": "formal", "frequencies": [["1", "0"], ["0"]]})").find("/frequencies/1"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"model": "weird", "frequencies": []})").find("/model"), std::string::npos);
  EXPECT_NE(parse_error(R"({"model": "algebraic", "frequencies": [["1", "0"], ["0", "1"]]})").find("field"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"field": {"min_poly": [-3, 0, "1/2"], "root_interval": ["1", "2"]},
      "frequencies": [["1", "0"], ["0", "1"]]})")
                .find("/field/min_poly/2"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"field": {"min_poly": [-3, 0, 1], "root_interval": ["1", "2"]},
      "frequencies": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})")
                .find("/frequencies"),
            std::string::npos);
  EXPECT_NE(parse_error(R"([1, 2])").find("top level"), std::string::npos);
}

TEST(FlowFile, FieldErrorsKeepTheirKinds) {
  try {
    io::parse_flow_spec(R"({"field": {"min_poly": [-4, 0, 1], "root_interval": ["1", "3"]},
        "frequencies": [["1", "0"], ["0", "1"]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
  }
}

TEST(FlowFile, RandomGarbageNeverCrashes) {
  Gen g(61);
  std::string base = read("examples/ex_cubic.flow");
  for (int t = 0; t < 300; ++t) {
    std::string s = base;
    int edits = static_cast<int>(g.range(1, 4));
    for (int e = 0; e < edits; ++e) {
      std::size_t pos = static_cast<std::size_t>(g.range(0, static_cast<long>(s.size()) - 1));
      const char alphabet[] = "{}[],:\"0123456789/-ab ";
      s[pos] = alphabet[g.range(0, sizeof(alphabet) - 2)];
    }
    try {
      FlowSpec spec = io::parse_flow_spec(s);
      (void)validate_flow(spec);
    } catch (const Error&) {
    }
  }
}

TEST(Report, AnalysisRoundTripAndDeterminism) {
  for (const char* name : {"examples/ex_cubic.flow", "examples/ex_sqrt3_phi.flow", "examples/ex_sqrt3_psi.flow",
                           "examples/ex_formal.flow", "tests/data/sqrt3_basis.flow"}) {
    ValidatedFlow f = example_flow(name);
    io::AnalysisReport rep = io::analysis_report(f, classify(f));
    rep.oracle = io::oracle_record(f, classify(f).group, 6);
    std::string text = io::dump(io::to_json(rep));
    io::AnalysisReport back = io::analysis_report_from_json(nlohmann::json::parse(text));
    EXPECT_TRUE(back == rep) << name;
    EXPECT_EQ(io::dump(io::to_json(back)), text);
    // recomputation from scratch gives byte-identical output
    ValidatedFlow f2 = example_flow(name);
    io::AnalysisReport rep2 = io::analysis_report(f2, classify(f2));
    rep2.oracle = io::oracle_record(f2, classify(f2).group, 6, 3);
    EXPECT_EQ(io::dump(io::to_json(rep2)), text) << name;
  }
}

TEST(Report, ExactValuesUseCanonicalStrings) {
  ValidatedFlow f = example_flow("examples/ex_sqrt3_psi.flow");
  nlohmann::json j = io::to_json(io::analysis_report(f, classify(f)));
  EXPECT_EQ(j["scale"], nlohmann::json::array({"1/4", "0/1"}));
  EXPECT_EQ(j["multiplier_group"]["generators"][0]["value"], nlohmann::json::array({"26/1", "15/1"}));
  EXPECT_EQ(j["multiplier_group"]["generators"][0]["witness"],
            nlohmann::json::parse(R"([["26", "1"], ["675", "26"]])"));
  EXPECT_EQ(j["multiplier_group"]["index"], 3);
  EXPECT_EQ(j["ratio_min_poly"], nlohmann::json::array({"-675", "0", "1"}));
  EXPECT_TRUE(j["multiplier_group"]["generators"][0]["approx"].is_string());
}

TEST(Report, RejectsNonCanonicalRationals) {
  ValidatedFlow f = example_flow("examples/ex_sqrt3_phi.flow");
  nlohmann::json j = io::to_json(io::analysis_report(f, classify(f)));
  j["frequencies"][0][0] = "2/2";
  EXPECT_THROW(io::analysis_report_from_json(j), Error);
  j["frequencies"][0][0] = "1";
  EXPECT_THROW(io::analysis_report_from_json(j), Error);
}

TEST(Report, SemiconjugacyAndUnitRoundTrip) {
  ValidatedFlow a = example_flow("examples/ex_sqrt3_phi.flow");
  ValidatedFlow b = example_flow("examples/ex_sqrt3_psi.flow");
  io::SemiconjugacyRecord s = io::semiconjugacy_record(a, b, semiconjugacy_report(a, b), "a", "b");
  EXPECT_EQ(s.semiconjugacy, mat({{4, 0}, {0, 15}}));
  EXPECT_TRUE(io::semiconjugacy_record_from_json(nlohmann::json::parse(io::dump(io::to_json(s)))) == s);

  io::UnitReport u;
  u.source = "disc 46";
  UnitGroup g = quadratic_unit_group(46);
  u.field = io::field_record(g.field);
  for (const auto& x : g.generators) {
    u.units.push_back(io::unit_record(x));
    u.norms.push_back(norm(x.value));
  }
  io::UnitReport back = io::unit_report_from_json(nlohmann::json::parse(io::dump(io::to_json(u))));
  EXPECT_TRUE(back == u);
  EXPECT_EQ(back.units[0].value, (std::vector<Rational>{24335, 3588}));
}

TEST(Report, RandomFlowsRoundTrip) {
  Gen g(62);
  std::vector<NumberField> fields = {quadratic_field(2), quadratic_field(3), quadratic_field(7)};
  for (int t = 0; t < 200; ++t) {
    const NumberField& f = g.pick(fields);
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < 2; ++i) rows.push_back({g.rational(9, 5), g.rational(9, 5)});
    if (determinant(RationalMatrix::from_rows(rows)) == 0) continue;
    ValidatedFlow flow = algebraic_flow(f, rows);
    io::AnalysisReport rep = io::analysis_report(flow, classify(flow));
    EXPECT_TRUE(io::analysis_report_from_json(io::to_json(rep)) == rep);
  }
}

TEST(Report, TextFormMentionsKeyFacts) {
  ValidatedFlow f = example_flow("examples/ex_cubic.flow");
  std::string text = io::to_text(io::analysis_report(f, classify(f)));
  EXPECT_NE(text.find("1 + 3d - 3d^2"), std::string::npos);
  EXPECT_NE(text.find("[[1, 1, 1], [-18, 1, -3], [-18, 6, 1]]"), std::string::npos);
  EXPECT_NE(text.find("relative-to-supplied"), std::string::npos);
}

TEST(ReferenceClaims, AllHold) {
  for (const auto& c : run_reference_claims()) EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
}
