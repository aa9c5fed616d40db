#include "ivqrof/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace ivqrof {

Matrix<double> distance_matrix(const Matrix<Ivqrofn>& R, Rung q) {
  const Ivqrofn pis = Ivqrofn::positive_ideal();
  Matrix<double> D(R.rows(), R.cols());
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j) D(i, j) = distance(R(i, j), pis, q);
  return D;
}

BipartiteSelection::BipartiteSelection(Matrix<int> b)
    : b_(std::move(b)), u_(b_.cols()), i_(b_.rows()) {
  for (std::size_t x = 0; x < b_.rows(); ++x) {
    for (std::size_t c = 0; c < b_.cols(); ++c) {
      if (b_(x, c) != 0) {
        b_(x, c) = 1;
        u_[c].push_back(x);
        i_[x].push_back(c);
      }
    }
  }
}

BipartiteSelection selection_matrix(const Matrix<double>& D, double d_bound, bool invert) {
  Matrix<int> b(D.rows(), D.cols(), 0);
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      b(i, j) = invert ? (D(i, j) < d_bound) : (D(i, j) > d_bound);
  return BipartiteSelection(std::move(b));
}

namespace {

std::size_t intersection_size(const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::vector<std::size_t> common(const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Matrix<double> swing_similarity(const BipartiteSelection& B, double alpha, Diagnostics* diag) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw Error(ErrorKind::InvalidConfig, "swing alpha must be >= 0");
  }
  const std::size_t n = B.attributes();
  Matrix<double> ts(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    ts(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto shared = common(B.users(i), B.users(j));
      double sum = 0.0;
      for (std::size_t e : shared) {
        for (std::size_t g : shared) {
          const auto& ie = B.items(e);
          const auto& ig = B.items(g);
          sum += 1.0 / std::sqrt(static_cast<double>(ie.size())) /
                 std::sqrt(static_cast<double>(ig.size())) /
                 (alpha + static_cast<double>(intersection_size(ie, ig)));
        }
      }
      if (shared.empty() && diag) {
        diag->push_back("swing: attributes " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " share no selecting alternative");
      }
      ts(i, j) = ts(j, i) = sum;
    }
  }
  return ts;
}

void SwingConfig::validate() const {
  if (!std::isfinite(d_bound) || d_bound < 0.0 || d_bound > 1.0) {
    throw Error(ErrorKind::InvalidConfig, "swing d_bound must lie in [0,1]");
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw Error(ErrorKind::InvalidConfig, "swing alpha must be >= 0");
  }
}

SwingResult swing_analysis(const Matrix<Ivqrofn>& R, Rung q, const SwingConfig& cfg) {
  cfg.validate();
  if (R.empty()) throw Error(ErrorKind::DimensionMismatch, "empty decision matrix");
  Diagnostics diag;
  Matrix<double> D = distance_matrix(R, q);
  BipartiteSelection B = selection_matrix(D, cfg.d_bound, cfg.invert_selection);
  Matrix<double> ts = swing_similarity(B, cfg.alpha);
  const std::size_t n = ts.rows();
  std::vector<double> importance(n);
  bool off_diagonal = false;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += ts(i, j);
      if (i != j && ts(i, j) > 0.0) off_diagonal = true;
    }
    importance[i] = s / static_cast<double>(n);
  }
  if (!off_diagonal && n > 1) {
    diag.push_back("swing: degenerate selection (no attribute pair is linked); using "
                   "uniform weights");
    return {WeightVector::uniform(n), std::move(D), std::move(B), std::move(ts),
            std::move(importance), std::move(diag)};
  }
  WeightVector w = WeightVector::normalized(importance);
  return {std::move(w), std::move(D), std::move(B), std::move(ts), std::move(importance),
          std::move(diag)};
}

WeightVector swing_weights(const Matrix<Ivqrofn>& R, Rung q, const SwingConfig& cfg) {
  return swing_analysis(R, q, cfg).weights;
}

std::vector<double> default_swing_alpha_grid() {
  std::vector<double> a{0.5};
  for (int i = 1; i <= 20; ++i) a.push_back(i);
  return a;
}

std::vector<SwingCandidate> swing_calibration(const Matrix<Ivqrofn>& R, Rung q,
                                              std::span<const double> target,
                                              std::span<const double> alphas) {
  if (target.size() != R.cols()) {
    throw Error(ErrorKind::LengthMismatch, "calibration target length differs from attributes");
  }
  const Matrix<double> D = distance_matrix(R, q);
  std::vector<double> vals(D.values().begin(), D.values().end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<double> bounds{0.0};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    bounds.push_back(vals[i]);
    if (i + 1 < vals.size()) bounds.push_back(0.5 * (vals[i] + vals[i + 1]));
  }
  bounds.push_back(1.0);

  std::vector<SwingCandidate> out;
  for (bool invert : {false, true}) {
    for (double db : bounds) {
      const BipartiteSelection B = selection_matrix(D, db, invert);
      for (double alpha : alphas) {
        const SwingConfig cfg{db, alpha, invert};
        const Matrix<double> ts = swing_similarity(B, alpha);
        std::vector<double> s(ts.rows(), 0.0);
        for (std::size_t i = 0; i < ts.rows(); ++i)
          for (std::size_t j = 0; j < ts.cols(); ++j) s[i] += ts(i, j);
        WeightVector w = WeightVector::normalized(s);
        double err = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) err = std::max(err, std::abs(w[i] - target[i]));
        out.push_back({cfg, std::move(w), err});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SwingCandidate& a, const SwingCandidate& b) {
    return std::tie(a.max_error, a.config.invert_selection, a.config.d_bound, a.config.alpha) <
           std::tie(b.max_error, b.config.invert_selection, b.config.d_bound, b.config.alpha);
  });
  return out;
}

std::string to_string(Axis a) {
  return a == Axis::Alternatives ? "alternatives" : "attributes";
}

namespace {

void require_square_for_rows(const Matrix<Ivqrofn>& R, const char* method) {
  if (R.rows() != R.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(method) + " weights over the alternatives axis need as many "
                                      "alternatives as attributes (" +
                    std::to_string(R.rows()) + " vs " + std::to_string(R.cols()) +
                    "); use the attributes axis");
  }
}

}  // namespace

WeightVector projection_weights(const Matrix<Ivqrofn>& R, Rung q, const ProjectionConfig& cfg) {
  if (R.empty()) throw Error(ErrorKind::DimensionMismatch, "empty decision matrix");
  if (cfg.axis == Axis::Alternatives) require_square_for_rows(R, "projection");
  const std::size_t slices = cfg.axis == Axis::Alternatives ? R.rows() : R.cols();
  const std::size_t len = cfg.axis == Axis::Alternatives ? R.cols() : R.rows();
  const bool powers = cfg.components == ProjectionConfig::Components::Powers;
  const Ivqrofn pis = Ivqrofn::positive_ideal();

  // The ideal slice is the same for every k.
  double ideal_norm2 = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    if (powers) {
      for (double c : pis.components()) ideal_norm2 += qpow(c, q) * qpow(c, q);
    } else {
      ideal_norm2 += 1.0;
    }
  }
  if (!(ideal_norm2 > 0.0)) throw Error(ErrorKind::ZeroIdealNorm, "ideal vector has zero norm");
  const double norm = std::sqrt(ideal_norm2);

  std::vector<double> proj(slices, 0.0);
  for (std::size_t k = 0; k < slices; ++k) {
    double dot = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
      const Ivqrofn& cell = cfg.axis == Axis::Alternatives ? R(k, t) : R(t, k);
      if (powers) {
        for (std::size_t c = 0; c < 4; ++c)
          dot += qpow(cell.components()[c], q) * qpow(pis.components()[c], q);
      } else {
        dot += normalized_score(cell, q);
      }
    }
    proj[k] = dot / norm;
  }
  if (!(std::accumulate(proj.begin(), proj.end(), 0.0) > 0.0)) {
    throw Error(ErrorKind::ZeroIdealNorm, "all projections vanish");
  }
  return WeightVector::normalized(std::move(proj));
}

std::string to_string(const MabacConfig& cfg) {
  std::ostringstream os;
  os << "scalarization="
     << (cfg.scalarization == Scalarization::NormalizedScore ? "normalized-score" : "score")
     << " normalization="
     << (cfg.normalization == MabacConfig::Normalization::MinMax ? "min-max" : "column-share")
     << " weighting=" << (cfg.literal ? "literal" : "shifted")
     << " aggregation="
     << (cfg.aggregation == MabacConfig::Aggregation::Mass ? "mass" : "border-distance")
     << " axis=" << to_string(cfg.axis);
  return os.str();
}

WeightVector mabac_weights(const Matrix<Ivqrofn>& R, Rung q, const MabacConfig& cfg,
                           Diagnostics* diag) {
  const std::size_t m = R.rows();
  const std::size_t n = R.cols();
  if (m < 2) throw Error(ErrorKind::DimensionMismatch, "MABAC needs at least two alternatives");
  if (cfg.axis == Axis::Alternatives) require_square_for_rows(R, "MABAC");

  Matrix<double> x(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x(i, j) = cfg.scalarization == Scalarization::NormalizedScore ? normalized_score(R(i, j), q)
                                                                    : score(R(i, j), q);

  Matrix<double> norm(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = x.column(j);
    if (cfg.normalization == MabacConfig::Normalization::MinMax) {
      const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
      const double spread = *hi - *lo;
      if (spread <= 0.0) {
        if (diag) diag->push_back("mabac: attribute " + std::to_string(j + 1) +
                                  " has zero spread; normalized values set to 0.5");
        for (std::size_t i = 0; i < m; ++i) norm(i, j) = 0.5;
      } else {
        for (std::size_t i = 0; i < m; ++i) norm(i, j) = (x(i, j) - *lo) / spread;
      }
    } else {
      const double sum = std::accumulate(col.begin(), col.end(), 0.0);
      if (!(sum > 0.0)) {
        throw Error(ErrorKind::NonpositiveScore, "attribute " + std::to_string(j + 1) +
                                                     " has a nonpositive score total");
      }
      for (std::size_t i = 0; i < m; ++i) norm(i, j) = x(i, j) / sum;
    }
  }

  const double w0 = 1.0 / static_cast<double>(n);
  Matrix<double> weighted(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      weighted(i, j) = cfg.literal ? std::max(w0 * norm(i, j), 1e-9) : w0 * (norm(i, j) + 1.0);

  Matrix<double> contrib = weighted;
  if (cfg.aggregation == MabacConfig::Aggregation::BorderDistance) {
    for (std::size_t j = 0; j < n; ++j) {
      double log_sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) log_sum += std::log(weighted(i, j));
      const double g = std::exp(log_sum / static_cast<double>(m));
      for (std::size_t i = 0; i < m; ++i) contrib(i, j) = weighted(i, j) - g;
    }
  }

  const std::size_t k = cfg.axis == Axis::Alternatives ? m : n;
  std::vector<double> s(k, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s[cfg.axis == Axis::Alternatives ? i : j] += contrib(i, j);
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  if (!(std::abs(total) > 0.0)) {
    throw Error(ErrorKind::InvalidWeights, "MABAC contributions sum to zero");
  }
  for (double& v : s) v /= total;
  if (std::any_of(s.begin(), s.end(), [](double v) { return v < 0.0; })) {
    std::ostringstream msg;
    msg.precision(4);
    msg << "MABAC (" << to_string(cfg) << ") produced negative weights:";
    for (double v : s) msg << ' ' << std::fixed << v;
    throw Error(ErrorKind::InvalidWeights, msg.str());
  }
  return WeightVector(std::move(s));
}

double hhi(std::span<const double> scores) {
  if (scores.empty()) throw Error(ErrorKind::TooFewScores, "hhi of an empty score list");
  double total = 0.0;
  for (double s : scores) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw Error(ErrorKind::NonpositiveScore, "hhi needs strictly positive scores");
    }
    total += s;
  }
  double out = 0.0;
  for (double s : scores) out += (s / total) * (s / total);
  return out;
}

double score_spread(std::span<const double> scores) {
  if (scores.size() < 2) throw Error(ErrorKind::TooFewScores, "score spread needs two scores");
  std::vector<double> v(scores.begin(), scores.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += v[i] - v[i + 1];
  return sum / static_cast<double>(v.size() - 1);
}

}  // namespace ivqrof
