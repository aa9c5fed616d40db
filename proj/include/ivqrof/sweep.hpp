#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivqrof/magdm.hpp"

namespace ivqrof {

struct SweepSpec {
  std::vector<int> qs{2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<double> lambdas{2.0};  // applied to every Weber entry
  std::vector<OperatorFamily> families{Weber{2.0}};
  std::vector<WeightMethod> methods{SwingMethod{}};
  // Attribute weights are derived once at this rung and reused for every q.
  // nullopt re-derives them at each q.
  std::optional<int> weight_q = 2;
  // Family used to derive the weights; nullopt uses each row's family.
  std::optional<OperatorFamily> weight_family = Weber{2.0};

  void validate() const;
};

struct SweepRow {
  int q = 0;
  std::string family;
  std::string method;
  std::vector<double> weights;
  std::vector<double> normalized_scores;
  std::string ranking;
  double score_spread = 0.0;
  double hhi = 0.0;
};

std::vector<SweepRow> run_sweep(const DecisionProblem& problem, const SweepSpec& spec);

// Figure series derived from sweep rows.
struct FigureData {
  std::string figure4_csv;  // scores per q and family
  std::string figure5_csv;  // score spread per q and family
  std::string figure6_csv;  // hhi per q and weight method, with differences to MABAC
};

// Runs the family comparison (Weber, Hamacher, Frank, Algebraic under
// Swing weights) and the weight-method comparison (Swing, MABAC,
// Projection under Weber) over `qs`.
FigureData figure_data(const DecisionProblem& problem, const std::vector<int>& qs,
                       double lambda = 2.0, int weight_q = 2);

}  // namespace ivqrof
