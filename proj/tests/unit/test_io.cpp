#include <gtest/gtest.h>

#include <cmath>

#include "case_reference.hpp"
#include "ivqrof/io.hpp"

using namespace ivqrof;

namespace {

const char* kMinimal = R"({
  "alternatives": ["a", "b"],
  "attributes": ["c"],
  "experts": ["e"],
  "expert_weights": [1],
  "matrices": [[["HI"], [[0.4, 0.5, 0.3, 0.4]]]]
})";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::Io;
}

std::string with(const std::string& from, const std::string& to) {
  std::string s = kMinimal;
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST(Numbers, Formatting) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_number(0.7248305223963704)), 0.7248305223963704);
  EXPECT_EQ(format_fixed4(0.72516), "0.7252");
}

TEST(ProblemFile, Minimal) {
  const DecisionProblem p = parse_problem(kMinimal);
  EXPECT_EQ(p.m(), 2u);
  EXPECT_EQ(p.n(), 1u);
  EXPECT_EQ(std::get<LinguisticTerm>(p.judgments[0](0, 0)), LinguisticTerm::HI);
  EXPECT_EQ(std::get<Ivqrofn>(p.judgments[0](1, 0)), (Ivqrofn{0.4, 0.5, 0.3, 0.4}));
}

TEST(ProblemFile, Errors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("[]"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(with("\"experts\"", "\"extra\": 1, \"experts\"")), ErrorKind::Parse);
  EXPECT_EQ(kind_of(with("\"matrices\": [[[\"HI\"], [[0.4, 0.5, 0.3, 0.4]]]]", "\"matrices\": []")),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of(with("\"HI\"", "\"XX\"")), ErrorKind::UnknownLinguisticTerm);
  EXPECT_EQ(kind_of(with("[0.4, 0.5, 0.3, 0.4]", "[0.4, 0.5, 0.3]")), ErrorKind::MalformedCell);
  EXPECT_EQ(kind_of(with("[0.4, 0.5, 0.3, 0.4]", "[0.6, 0.5, 0.3, 0.4]")), ErrorKind::MalformedCell);
  EXPECT_EQ(kind_of(with("[[\"HI\"], [[0.4, 0.5, 0.3, 0.4]]]", "[[\"HI\"]]")),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of(with("\"expert_weights\": [1]", "\"expert_weights\": [0.5, 0.5]")),
            ErrorKind::LengthMismatch);
  const std::string no_experts = with("\"experts\": [\"e\"],", "");
  EXPECT_EQ(kind_of(no_experts), ErrorKind::Parse);
}

TEST(ProblemFile, RoundTrip) {
  const DecisionProblem p = load_problem(IVQROF_DATA_DIR "/learning_effectiveness.json");
  const std::string once = problem_to_json(p);
  const std::string twice = problem_to_json(parse_problem(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(p.labels.size(), 4u);
}

TEST(ProblemFile, Missing) {
  try {
    load_problem("/nonexistent/problem.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Report, JsonRoundTrip) {
  const auto rep = evaluate(load_problem(IVQROF_DATA_DIR "/learning_effectiveness.json"), {});
  const auto back = report_from_json(report_to_json(rep));
  ASSERT_EQ(back.aggregated.rows(), rep.aggregated.rows());
  for (std::size_t i = 0; i < rep.aggregated.rows(); ++i) {
    for (std::size_t j = 0; j < rep.aggregated.cols(); ++j) {
      const auto a = rep.aggregated(i, j).components(), b = back.aggregated(i, j).components();
      for (int c = 0; c < 4; ++c) EXPECT_NEAR(a[c], b[c], 1e-12);
    }
  }
  for (std::size_t i = 0; i < rep.normalized_scores.size(); ++i)
    EXPECT_NEAR(back.normalized_scores[i], rep.normalized_scores[i], 1e-12);
  EXPECT_EQ(back.ranking_text, rep.ranking_text);
  EXPECT_EQ(back.weight_family, rep.weight_family);
  EXPECT_EQ(report_to_json(back), report_to_json(rep));
}

TEST(Report, TextHeader) {
  const auto rep = evaluate(load_problem(IVQROF_DATA_DIR "/learning_effectiveness.json"), {});
  const std::string text = report_to_text(rep);
  EXPECT_EQ(text.rfind("q = 2, family weber:2, weights swing (derived at q = 2 with weber:2)", 0), 0u);
  EXPECT_NE(text.find(reference::kRanking), std::string::npos);
}

TEST(Sweep, CsvLayout) {
  const DecisionProblem p = load_problem(IVQROF_DATA_DIR "/learning_effectiveness.json");
  SweepSpec spec;
  spec.qs = {2, 3};
  const auto rows = run_sweep(p, spec);
  ASSERT_EQ(rows.size(), 2u);
  const std::string csv = sweep_to_csv(rows, p.alternatives);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,family,weights,x1,x2,x3,x4,x5,ranking,score_spread,hhi");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv, sweep_to_csv(run_sweep(p, spec), p.alternatives));
}

TEST(Sweep, SpecValidation) {
  SweepSpec spec;
  spec.qs = {};
  EXPECT_THROW(spec.validate(), Error);
  spec = {};
  spec.qs = {0};
  EXPECT_THROW(spec.validate(), Error);
  spec = {};
  spec.lambdas = {0.0};
  EXPECT_THROW(spec.validate(), Error);
  spec = {};
  spec.methods = {};
  EXPECT_THROW(spec.validate(), Error);
}
