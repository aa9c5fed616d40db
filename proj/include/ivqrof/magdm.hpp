#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivqrof/core.hpp"
#include "ivqrof/matrix.hpp"
#include "ivqrof/operators.hpp"
#include "ivqrof/weights.hpp"

namespace ivqrof {

using Cell = std::variant<LinguisticTerm, Ivqrofn>;

/// Alternatives x attributes judgments from several weighted experts.
struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<std::string> attributes;
  std::vector<std::string> experts;
  std::vector<double> expert_weights;
  std::vector<Matrix<Cell>> judgments;  // one per expert
  // Optional linguistic labels for numeric judgments, per expert. Used only
  // to report cells where the number and its label disagree.
  std::vector<Matrix<std::optional<LinguisticTerm>>> labels;
  std::string description;

  std::size_t m() const noexcept { return alternatives.size(); }
  std::size_t n() const noexcept { return attributes.size(); }
  std::size_t t() const noexcept { return experts.size(); }

  // Structural checks; throws DimensionMismatch / LengthMismatch /
  // InvalidWeights.
  void validate() const;
};

/// Converts every linguistic cell through the term table. Label/number
/// disagreements are appended to `diag`.
DecisionProblem ingest(const DecisionProblem& problem, Diagnostics* diag = nullptr);

// Numeric matrices of an ingested problem.
std::vector<Matrix<Ivqrofn>> numeric_judgments(const DecisionProblem& problem);

Matrix<Ivqrofn> aggregate_experts(const DecisionProblem& problem, Rung q,
                                  const OperatorFamily& family);

std::vector<Ivqrofn> aggregate_attributes(const Matrix<Ivqrofn>& R, const WeightVector& w,
                                          Rung q, const OperatorFamily& family);

struct RankEntry {
  std::size_t index;  // into the alternatives
  double score;
  double normalized_score;
  double accuracy;
  std::size_t tie_group;  // equal entries share a group; groups count from 0
};

struct Ranking {
  std::vector<RankEntry> order;  // best first

  // "x2 > x3 > x1", with "=" joining tied alternatives.
  std::string to_string(std::span<const std::string> labels) const;
  std::vector<std::size_t> indices() const;
};

Ranking rank(std::span<const Ivqrofn> aggregates, Rung q);

struct SwingMethod {
  SwingConfig config;
};
struct MabacMethod {
  MabacConfig config;
};
struct ProjectionMethod {
  ProjectionConfig config;
};
struct ManualWeights {
  std::vector<double> weights;
};

using WeightMethod = std::variant<SwingMethod, MabacMethod, ProjectionMethod, ManualWeights>;

// "swing", "mabac", "projection" or "manual:<w1,w2,...>".
WeightMethod parse_weight_method(std::string_view text);
std::string method_name(const WeightMethod& method);

WeightVector derive_weights(const Matrix<Ivqrofn>& R, Rung q, const WeightMethod& method,
                            Diagnostics* diag = nullptr);

struct PipelineConfig {
  std::optional<int> q = 2;  // nullopt selects the smallest admissible rung
  int q_max = 20;
  OperatorFamily family = Weber{2.0};
  WeightMethod weights = SwingMethod{};
  // Rung at which attribute weights are derived; nullopt uses q.
  std::optional<int> weight_q;
  // Family whose expert aggregate feeds the weight method; nullopt uses
  // `family`.
  std::optional<OperatorFamily> weight_family;

  void validate() const;
};

struct EvaluationReport {
  std::vector<std::string> alternatives;
  std::vector<std::string> attributes;
  int q = 0;
  int weight_q = 0;
  std::string family;
  std::string weight_family;
  std::string weight_method;
  Matrix<Ivqrofn> aggregated;
  std::vector<double> weights;
  std::vector<Ivqrofn> aggregates;
  std::vector<double> scores;
  std::vector<double> normalized_scores;
  std::vector<double> accuracies;
  Ranking ranking;
  std::string ranking_text;
  double hhi = 0.0;
  double score_spread = 0.0;
  Diagnostics diagnostics;
};

/// ingest -> rung -> expert aggregation -> weights -> attribute
/// aggregation -> ranking. Errors carry the failing stage.
EvaluationReport evaluate(const DecisionProblem& problem, const PipelineConfig& config);

}  // namespace ivqrof
