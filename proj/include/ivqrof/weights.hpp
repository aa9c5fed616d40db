#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ivqrof/core.hpp"
#include "ivqrof/matrix.hpp"
#include "ivqrof/operators.hpp"

namespace ivqrof {

using Diagnostics = std::vector<std::string>;

// D_ij = distance(R_ij, positive ideal).
Matrix<double> distance_matrix(const Matrix<Ivqrofn>& R, Rung q);

/// Alternatives x attributes selection graph with its row/column supports.
class BipartiteSelection {
 public:
  explicit BipartiteSelection(Matrix<int> b);

  const Matrix<int>& matrix() const noexcept { return b_; }
  std::size_t alternatives() const noexcept { return b_.rows(); }
  std::size_t attributes() const noexcept { return b_.cols(); }
  bool selected(std::size_t x, std::size_t c) const { return b_(x, c) != 0; }

  // U_c: alternatives selecting attribute c. I_x: attributes selected by x.
  const std::vector<std::size_t>& users(std::size_t c) const { return u_[c]; }
  const std::vector<std::size_t>& items(std::size_t x) const { return i_[x]; }

  bool operator==(const BipartiteSelection& o) const { return b_ == o.b_; }

 private:
  Matrix<int> b_;
  std::vector<std::vector<std::size_t>> u_;
  std::vector<std::vector<std::size_t>> i_;
};

// b_ij = 1 iff d_ij > d_bound (equality gives 0). With `invert` the test
// becomes d_ij < d_bound.
BipartiteSelection selection_matrix(const Matrix<double>& D, double d_bound,
                                    bool invert = false);

// Attribute similarity Ts (n x n, unit diagonal). Empty common supports
// are noted in `diag` when given.
Matrix<double> swing_similarity(const BipartiteSelection& B, double alpha,
                                Diagnostics* diag = nullptr);

struct SwingConfig {
  double d_bound = 0.24;
  double alpha = 12.0;
  bool invert_selection = false;
  void validate() const;
};

struct SwingResult {
  WeightVector weights;
  Matrix<double> distances;
  BipartiteSelection selection;
  Matrix<double> similarity;
  std::vector<double> importance;
  Diagnostics diagnostics;
};

SwingResult swing_analysis(const Matrix<Ivqrofn>& R, Rung q, const SwingConfig& cfg);
WeightVector swing_weights(const Matrix<Ivqrofn>& R, Rung q, const SwingConfig& cfg);

struct SwingCandidate {
  SwingConfig config;
  WeightVector weights;
  double max_error;
};

// Grid search over d_bound (0, every distinct distance, midpoints, 1),
// both selection directions and the given alphas. Sorted by max abs error
// against `target`, ties broken by (invert, d_bound, alpha).
std::vector<SwingCandidate> swing_calibration(const Matrix<Ivqrofn>& R, Rung q,
                                              std::span<const double> target,
                                              std::span<const double> alphas);

// {0.5, 1, 2, ..., 20}
std::vector<double> default_swing_alpha_grid();

enum class Axis { Alternatives, Attributes };

enum class Scalarization { NormalizedScore, Score };

std::string to_string(Axis a);

struct ProjectionConfig {
  // Which slice of R forms Y_k.
  Axis axis = Axis::Alternatives;
  // NormalizedScore: one entry per cell against an all-ones ideal.
  // Powers: the four q-th power components against the positive ideal.
  enum class Components { NormalizedScore, Powers } components = Components::NormalizedScore;
};

WeightVector projection_weights(const Matrix<Ivqrofn>& R, Rung q,
                                const ProjectionConfig& cfg = {});

struct MabacConfig {
  Scalarization scalarization = Scalarization::NormalizedScore;
  enum class Normalization { MinMax, ColumnShare } normalization = Normalization::ColumnShare;
  // r_hat = w*(r* + 1) unless literal, where r_hat = w* r* floored at 1e-9.
  bool literal = false;
  // BorderDistance sums q_ij = r_hat_ij - g_j; Mass sums r_hat_ij.
  enum class Aggregation { BorderDistance, Mass } aggregation = Aggregation::Mass;
  Axis axis = Axis::Alternatives;
};

std::string to_string(const MabacConfig& cfg);

WeightVector mabac_weights(const Matrix<Ivqrofn>& R, Rung q, const MabacConfig& cfg = {},
                           Diagnostics* diag = nullptr);

// Sum of squared shares of strictly positive scores.
double hhi(std::span<const double> scores);

// Mean gap between consecutive scores in descending order.
double score_spread(std::span<const double> scores);

}  // namespace ivqrof
