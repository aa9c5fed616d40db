#include "ivqrof/magdm.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace ivqrof {

namespace {

std::string cell_name(const DecisionProblem& p, std::size_t k, std::size_t i, std::size_t j) {
  return "expert " + p.experts[k] + " cell (" + p.alternatives[i] + ", " + p.attributes[j] + ")";
}

bool same_value(const Ivqrofn& a, const Ivqrofn& b) {
  for (std::size_t c = 0; c < 4; ++c)
    if (std::abs(a.components()[c] - b.components()[c]) > 1e-12) return false;
  return true;
}

template <typename F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.stage().empty()) throw;
    throw Error(e.kind(), stage, e.what());
  }
}

}  // namespace

void DecisionProblem::validate() const {
  if (alternatives.empty() || attributes.empty() || experts.empty()) {
    throw Error(ErrorKind::DimensionMismatch,
                "problem needs at least one alternative, attribute and expert");
  }
  if (expert_weights.size() != experts.size()) {
    throw Error(ErrorKind::LengthMismatch, "expert_weights has " +
                                               std::to_string(expert_weights.size()) +
                                               " entries for " + std::to_string(experts.size()) +
                                               " experts");
  }
  WeightVector check(expert_weights);
  if (judgments.size() != experts.size()) {
    throw Error(ErrorKind::LengthMismatch, "matrices has " + std::to_string(judgments.size()) +
                                               " entries for " + std::to_string(experts.size()) +
                                               " experts");
  }
  for (std::size_t k = 0; k < judgments.size(); ++k) {
    if (judgments[k].rows() != m() || judgments[k].cols() != n()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "matrix of expert " + experts[k] + " is " +
                      std::to_string(judgments[k].rows()) + "x" +
                      std::to_string(judgments[k].cols()) + ", expected " +
                      std::to_string(m()) + "x" + std::to_string(n()));
    }
  }
  if (!labels.empty()) {
    if (labels.size() != experts.size()) {
      throw Error(ErrorKind::LengthMismatch, "labels must cover every expert");
    }
    for (const auto& l : labels) {
      if (l.rows() != m() || l.cols() != n()) {
        throw Error(ErrorKind::DimensionMismatch, "label matrix shape differs from judgments");
      }
    }
  }
}

DecisionProblem ingest(const DecisionProblem& problem, Diagnostics* diag) {
  problem.validate();
  DecisionProblem out = problem;
  for (std::size_t k = 0; k < out.judgments.size(); ++k) {
    for (std::size_t i = 0; i < out.m(); ++i) {
      for (std::size_t j = 0; j < out.n(); ++j) {
        Cell& cell = out.judgments[k](i, j);
        if (const auto* term = std::get_if<LinguisticTerm>(&cell)) {
          cell = from_linguistic(*term);
        }
        if (!diag || out.labels.empty() || !out.labels[k](i, j)) continue;
        const LinguisticTerm label = *out.labels[k](i, j);
        const Ivqrofn expected = from_linguistic(label);
        const Ivqrofn& actual = std::get<Ivqrofn>(cell);
        if (!same_value(expected, actual)) {
          diag->push_back(cell_name(out, k, i, j) + ": label " + std::string(to_string(label)) +
                          " is " + to_string(expected) + " but the number is " +
                          to_string(actual));
        }
      }
    }
  }
  return out;
}

std::vector<Matrix<Ivqrofn>> numeric_judgments(const DecisionProblem& problem) {
  std::vector<Matrix<Ivqrofn>> out;
  for (const auto& mat : problem.judgments) {
    Matrix<Ivqrofn> num(mat.rows(), mat.cols(), Ivqrofn::negative_ideal());
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        const Cell& c = mat(i, j);
        num(i, j) = std::holds_alternative<Ivqrofn>(c)
                        ? std::get<Ivqrofn>(c)
                        : from_linguistic(std::get<LinguisticTerm>(c));
      }
    }
    out.push_back(std::move(num));
  }
  return out;
}

Matrix<Ivqrofn> aggregate_experts(const DecisionProblem& problem, Rung q,
                                  const OperatorFamily& family) {
  problem.validate();
  const WeightVector phi(problem.expert_weights);
  const auto mats = numeric_judgments(problem);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t i = 0; i < problem.m(); ++i)
      for (std::size_t j = 0; j < problem.n(); ++j)
        require_valid(mats[k](i, j), q, cell_name(problem, k, i, j));

  Matrix<Ivqrofn> R(problem.m(), problem.n(), Ivqrofn::negative_ideal());
  std::vector<Ivqrofn> values;
  for (std::size_t i = 0; i < problem.m(); ++i) {
    for (std::size_t j = 0; j < problem.n(); ++j) {
      values.clear();
      for (const auto& mat : mats) values.push_back(mat(i, j));
      R(i, j) = owa_aggregate(values, phi, family, q);
    }
  }
  return R;
}

std::vector<Ivqrofn> aggregate_attributes(const Matrix<Ivqrofn>& R, const WeightVector& w,
                                          Rung q, const OperatorFamily& family) {
  if (w.size() != R.cols()) {
    throw Error(ErrorKind::LengthMismatch, "attribute weights have " + std::to_string(w.size()) +
                                               " entries for " + std::to_string(R.cols()) +
                                               " attributes");
  }
  std::vector<Ivqrofn> out;
  out.reserve(R.rows());
  for (std::size_t i = 0; i < R.rows(); ++i) out.push_back(owa_aggregate(R.row(i), w, family, q));
  return out;
}

std::string Ranking::to_string(std::span<const std::string> labels) const {
  std::string out;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (p > 0) out += order[p].tie_group == order[p - 1].tie_group ? " = " : " > ";
    const std::size_t idx = order[p].index;
    out += idx < labels.size() ? labels[idx] : "x" + std::to_string(idx + 1);
  }
  return out;
}

std::vector<std::size_t> Ranking::indices() const {
  std::vector<std::size_t> out;
  for (const auto& e : order) out.push_back(e.index);
  return out;
}

Ranking rank(std::span<const Ivqrofn> aggregates, Rung q) {
  Ranking r;
  const auto idx = owa_order(aggregates, q);
  std::size_t group = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const Ivqrofn& a = aggregates[idx[p]];
    if (p > 0 && compare(aggregates[idx[p - 1]], a, q) != std::weak_ordering::equivalent) ++group;
    r.order.push_back({idx[p], score(a, q), normalized_score(a, q), accuracy(a, q), group});
  }
  return r;
}

WeightMethod parse_weight_method(std::string_view text) {
  if (text == "swing") return SwingMethod{};
  if (text == "mabac") return MabacMethod{};
  if (text == "projection") return ProjectionMethod{};
  if (text.substr(0, 7) == "manual:") {
    std::vector<double> w;
    std::string_view rest = text.substr(7);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        throw Error(ErrorKind::Parse, "weights: cannot parse manual weight '" + std::string(item) + "'");
      }
      w.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return ManualWeights{std::move(w)};
  }
  throw Error(ErrorKind::Parse, "weights: unknown method '" + std::string(text) +
                                    "' (expected swing, mabac, projection or manual:<csv>)");
}

std::string method_name(const WeightMethod& method) {
  struct {
    std::string operator()(const SwingMethod&) const { return "swing"; }
    std::string operator()(const MabacMethod&) const { return "mabac"; }
    std::string operator()(const ProjectionMethod&) const { return "projection"; }
    std::string operator()(const ManualWeights&) const { return "manual"; }
  } v;
  return std::visit(v, method);
}

WeightVector derive_weights(const Matrix<Ivqrofn>& R, Rung q, const WeightMethod& method,
                            Diagnostics* diag) {
  if (const auto* s = std::get_if<SwingMethod>(&method)) {
    SwingResult res = swing_analysis(R, q, s->config);
    if (diag) diag->insert(diag->end(), res.diagnostics.begin(), res.diagnostics.end());
    return res.weights;
  }
  if (const auto* m = std::get_if<MabacMethod>(&method)) return mabac_weights(R, q, m->config, diag);
  if (const auto* p = std::get_if<ProjectionMethod>(&method)) return projection_weights(R, q, p->config);
  const auto& manual = std::get<ManualWeights>(method).weights;
  if (manual.size() != R.cols()) {
    throw Error(ErrorKind::LengthMismatch, "weights: manual weights have " +
                                               std::to_string(manual.size()) + " entries for " +
                                               std::to_string(R.cols()) + " attributes");
  }
  return WeightVector(manual);
}

void PipelineConfig::validate() const {
  if (q && *q < 1) throw Error(ErrorKind::InvalidRung, "q must be >= 1");
  if (weight_q && *weight_q < 1) throw Error(ErrorKind::InvalidRung, "weight q must be >= 1");
  if (q_max < 1) throw Error(ErrorKind::InvalidConfig, "q_max must be >= 1");
  validate_family(family);
  if (weight_family) validate_family(*weight_family);
  if (const auto* s = std::get_if<SwingMethod>(&weights)) s->config.validate();
}

EvaluationReport evaluate(const DecisionProblem& problem, const PipelineConfig& config) {
  staged("config", [&] { config.validate(); });
  EvaluationReport rep;
  rep.alternatives = problem.alternatives;
  rep.attributes = problem.attributes;
  rep.family = to_string(config.family);
  const OperatorFamily wfamily = config.weight_family.value_or(config.family);
  rep.weight_family = to_string(wfamily);
  rep.weight_method = method_name(config.weights);

  const DecisionProblem normalized =
      staged("ingest", [&] { return ingest(problem, &rep.diagnostics); });

  const Rung q = staged("select_q", [&] {
    if (config.q) return Rung(*config.q);
    std::vector<Ivqrofn> all;
    for (const auto& mat : numeric_judgments(normalized))
      all.insert(all.end(), mat.values().begin(), mat.values().end());
    return min_valid_q(all, config.q_max);
  });
  rep.q = static_cast<int>(q.value());
  rep.weight_q = config.weight_q.value_or(rep.q);

  rep.aggregated =
      staged("aggregate_experts", [&] { return aggregate_experts(normalized, q, config.family); });

  const WeightVector w = staged("weights", [&] {
    if (rep.weight_q == rep.q && wfamily == config.family) {
      return derive_weights(rep.aggregated, q, config.weights, &rep.diagnostics);
    }
    const Rung wq(rep.weight_q);
    const Matrix<Ivqrofn> Rw = aggregate_experts(normalized, wq, wfamily);
    return derive_weights(Rw, wq, config.weights, &rep.diagnostics);
  });
  rep.weights = w.values();
  if (const auto* s = std::get_if<SwingMethod>(&config.weights)) {
    std::ostringstream os;
    os << "swing: d_bound=" << s->config.d_bound << " alpha=" << s->config.alpha
       << " direction=" << (s->config.invert_selection ? "inverted" : "as-printed");
    rep.diagnostics.push_back(os.str());
  }

  rep.aggregates = staged("aggregate_attributes",
                          [&] { return aggregate_attributes(rep.aggregated, w, q, config.family); });

  staged("rank", [&] {
    rep.ranking = rank(rep.aggregates, q);
    rep.ranking_text = rep.ranking.to_string(rep.alternatives);
    for (const auto& a : rep.aggregates) {
      rep.scores.push_back(score(a, q));
      rep.normalized_scores.push_back(normalized_score(a, q));
      rep.accuracies.push_back(accuracy(a, q));
    }
    rep.hhi = hhi(rep.normalized_scores);
    rep.score_spread = rep.normalized_scores.size() >= 2 ? score_spread(rep.normalized_scores) : 0.0;
  });
  return rep;
}

}  // namespace ivqrof
