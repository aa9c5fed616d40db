#include "ivqrof/sweep.hpp"

#include <map>
#include <sstream>

#include "ivqrof/io.hpp"

namespace ivqrof {

void SweepSpec::validate() const {
  if (qs.empty() || lambdas.empty() || families.empty() || methods.empty()) {
    throw Error(ErrorKind::InvalidConfig, "sweep lists must be non-empty");
  }
  for (int q : qs)
    if (q < 1) throw Error(ErrorKind::InvalidRung, "sweep q values must be >= 1");
  if (weight_q && *weight_q < 1) throw Error(ErrorKind::InvalidRung, "weight q must be >= 1");
  for (const auto& f : families) validate_family(f);
  for (double l : lambdas) validate_family(Weber{l});
  if (weight_family) validate_family(*weight_family);
}

std::vector<SweepRow> run_sweep(const DecisionProblem& problem, const SweepSpec& spec) {
  spec.validate();
  std::vector<OperatorFamily> families;
  for (const auto& f : spec.families) {
    if (std::holds_alternative<Weber>(f)) {
      for (double l : spec.lambdas) families.push_back(Weber{l});
    } else {
      families.push_back(f);
    }
  }
  std::vector<SweepRow> rows;
  for (int q : spec.qs) {
    for (const auto& family : families) {
      for (const auto& method : spec.methods) {
        PipelineConfig cfg;
        cfg.q = q;
        cfg.family = family;
        cfg.weights = method;
        cfg.weight_q = spec.weight_q;
        cfg.weight_family = spec.weight_family;
        const EvaluationReport rep = evaluate(problem, cfg);
        rows.push_back({q, rep.family, rep.weight_method, rep.weights, rep.normalized_scores,
                        rep.ranking_text, rep.score_spread, rep.hhi});
      }
    }
  }
  return rows;
}

FigureData figure_data(const DecisionProblem& problem, const std::vector<int>& qs,
                       double lambda, int weight_q) {
  SweepSpec fam;
  fam.qs = qs;
  fam.lambdas = {lambda};
  fam.families = {Weber{lambda}, Hamacher{2.0}, Frank{2.0}, Algebraic{}};
  fam.methods = {SwingMethod{}};
  fam.weight_q = weight_q;
  fam.weight_family = Weber{lambda};
  const auto fam_rows = run_sweep(problem, fam);

  SweepSpec meth;
  meth.qs = qs;
  meth.lambdas = {lambda};
  meth.families = {Weber{lambda}};
  meth.methods = {SwingMethod{}, MabacMethod{}, ProjectionMethod{}};
  meth.weight_q = weight_q;
  meth.weight_family = Weber{lambda};
  const auto meth_rows = run_sweep(problem, meth);

  FigureData out;
  std::ostringstream f4, f5, f6;
  f4 << "q,family";
  for (const auto& a : problem.alternatives) f4 << ',' << a;
  f4 << '\n';
  f5 << "q,family,score_spread\n";
  for (const auto& r : fam_rows) {
    f4 << r.q << ',' << r.family;
    for (double s : r.normalized_scores) f4 << ',' << format_number(s);
    f4 << '\n';
    f5 << r.q << ',' << r.family << ',' << format_number(r.score_spread) << '\n';
  }
  f6 << "q,hhi_swing,hhi_mabac,hhi_projection,swing_minus_mabac,projection_minus_mabac\n";
  std::map<int, std::map<std::string, double>> by_q;
  for (const auto& r : meth_rows) by_q[r.q][r.method] = r.hhi;
  for (int q : qs) {
    auto& h = by_q[q];
    f6 << q << ',' << format_number(h["swing"]) << ',' << format_number(h["mabac"]) << ','
       << format_number(h["projection"]) << ',' << format_number(h["swing"] - h["mabac"]) << ','
       << format_number(h["projection"] - h["mabac"]) << '\n';
  }
  out.figure4_csv = f4.str();
  out.figure5_csv = f5.str();
  out.figure6_csv = f6.str();
  return out;
}

}  // namespace ivqrof
