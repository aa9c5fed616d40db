// ivqrof: evaluate, sweep and compare weight methods on a problem file.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ivqrof/io.hpp"
#include "ivqrof/magdm.hpp"
#include "ivqrof/sweep.hpp"

using namespace ivqrof;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPipeline = 2;

// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string problem;
  std::string q = "2";
  std::optional<double> lambda;
  std::string family = "weber";
  std::string weights = "swing";
  double d_bound = SwingConfig{}.d_bound;
  double alpha = SwingConfig{}.alpha;
  bool invert_selection = false;
  bool mabac_literal = false;
  std::string weight_q = "same";
  std::string weight_family = "same";
  std::string emit_csv;
  std::string emit_json;
};

void add_model_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--lambda", f.lambda, "Weber lambda (default 2)");
  cmd->add_option("--family", f.family, "weber | algebraic | frank:<alpha> | hamacher:<gamma>");
  cmd->add_option("--d-bound", f.d_bound, "Swing distance threshold")->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "Swing smoothing factor")->capture_default_str();
  cmd->add_flag("--invert-selection", f.invert_selection,
                "Swing: link an attribute when its distance to the ideal is below d-bound");
  cmd->add_flag("--mabac-literal", f.mabac_literal,
                "MABAC: weight normalized values without the +1 shift");
  cmd->add_option("--weight-q", f.weight_q, "Rung for weight derivation, or same")
      ->capture_default_str();
  cmd->add_option("--weight-family", f.weight_family,
                  "Family whose expert aggregate feeds the weight method, or same")
      ->capture_default_str();
}

std::optional<OperatorFamily> weight_family_from(const CommonFlags& f) {
  if (f.weight_family == "same") return std::nullopt;
  try {
    return parse_family(f.weight_family);
  } catch (const Error& e) {
    throw UsageError(std::string("--weight-family: ") + e.what());
  }
}

std::optional<int> parse_rung(const std::string& text, const char* flag, bool allow_auto) {
  if (allow_auto && (text == "auto" || text == "same")) return std::nullopt;
  try {
    std::size_t used = 0;
    const int q = std::stoi(text, &used);
    if (used != text.size() || q < 1) throw std::invalid_argument(text);
    return q;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected a positive integer, got '" + text + "'");
  }
}

OperatorFamily family_from(const CommonFlags& f, const std::string& text) {
  OperatorFamily fam;
  try {
    fam = parse_family(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
  if (f.lambda && std::holds_alternative<Weber>(fam) && text.find(':') == std::string::npos) {
    fam = Weber{*f.lambda};
    try {
      validate_family(fam);
    } catch (const Error& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    }
  }
  return fam;
}

WeightMethod method_from(const CommonFlags& f, const std::string& text) {
  WeightMethod m;
  try {
    m = parse_weight_method(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
  if (auto* s = std::get_if<SwingMethod>(&m)) {
    s->config = {f.d_bound, f.alpha, f.invert_selection};
  } else if (auto* mb = std::get_if<MabacMethod>(&m)) {
    mb->config.literal = f.mabac_literal;
  }
  return m;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "2..9" or "2,3,5".
std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = *parse_rung(text.substr(0, dots), "--q", false);
    const int hi = *parse_rung(text.substr(dots + 2), "--q", false);
    if (hi < lo) throw UsageError("--q: empty range '" + text + "'");
    for (int q = lo; q <= hi; ++q) out.push_back(q);
  } else {
    for (const auto& s : split(text, ',')) out.push_back(*parse_rung(s, "--q", false));
  }
  if (out.empty()) throw UsageError("--q: no rung values given");
  return out;
}

std::string alternatives_csv(const EvaluationReport& r) {
  std::ostringstream os;
  os << "alternative,mu_lo,mu_hi,nu_lo,nu_hi,score,normalized_score,accuracy,rank\n";
  std::vector<std::size_t> position(r.aggregates.size());
  for (std::size_t p = 0; p < r.ranking.order.size(); ++p) position[r.ranking.order[p].index] = p + 1;
  for (std::size_t i = 0; i < r.aggregates.size(); ++i) {
    const auto& a = r.aggregates[i];
    os << r.alternatives[i] << ',' << format_number(a.mu_lo()) << ',' << format_number(a.mu_hi())
       << ',' << format_number(a.nu_lo()) << ',' << format_number(a.nu_hi()) << ','
       << format_number(r.scores[i]) << ',' << format_number(r.normalized_scores[i]) << ','
       << format_number(r.accuracies[i]) << ',' << position[i] << '\n';
  }
  return os.str();
}

PipelineConfig config_from(const CommonFlags& f) {
  PipelineConfig cfg;
  cfg.q = parse_rung(f.q, "--q", true);
  cfg.family = family_from(f, f.family);
  cfg.weights = method_from(f, f.weights);
  cfg.weight_q = parse_rung(f.weight_q, "--weight-q", true);
  cfg.weight_family = weight_family_from(f);
  return cfg;
}

int run_evaluate(const CommonFlags& f) {
  const PipelineConfig cfg = config_from(f);
  const DecisionProblem problem = load_problem(f.problem);
  EvaluationReport rep;
  try {
    rep = evaluate(problem, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.describe() << "\n";
    return kExitPipeline;
  }
  std::cout << report_to_text(rep);
  if (!f.emit_csv.empty()) write_file(f.emit_csv, alternatives_csv(rep));
  if (!f.emit_json.empty()) write_file(f.emit_json, report_to_json(rep));
  return 0;
}

struct SweepFlags {
  std::string qs = "2..9";
  std::string lambdas = "2";
  std::vector<std::string> families{"weber"};
  std::vector<std::string> methods{"swing"};
  std::string emit_figures;
};

int run_sweep_cmd(CommonFlags f, const SweepFlags& s) {
  SweepSpec spec;
  spec.qs = parse_q_list(s.qs);
  spec.lambdas.clear();
  for (const auto& l : split(s.lambdas, ',')) {
    try {
      spec.lambdas.push_back(std::stod(l));
    } catch (const std::exception&) {
      throw UsageError("--lambdas: cannot parse '" + l + "'");
    }
  }
  if (f.lambda) spec.lambdas = {*f.lambda};
  f.lambda.reset();
  spec.families.clear();
  for (const auto& fam : s.families) spec.families.push_back(family_from(f, fam));
  spec.methods.clear();
  for (const auto& m : s.methods) spec.methods.push_back(method_from(f, m));
  spec.weight_q = parse_rung(f.weight_q, "--weight-q", true);
  spec.weight_family = weight_family_from(f);
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const DecisionProblem problem = load_problem(f.problem);
  std::vector<SweepRow> rows;
  FigureData figures;
  try {
    rows = run_sweep(problem, spec);
    if (!s.emit_figures.empty()) {
      figures = figure_data(problem, spec.qs, spec.lambdas.front(), spec.weight_q.value_or(2));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.describe() << "\n";
    return kExitPipeline;
  }
  std::cout << sweep_to_text(rows, problem.alternatives);
  if (!f.emit_csv.empty()) write_file(f.emit_csv, sweep_to_csv(rows, problem.alternatives));
  if (!s.emit_figures.empty()) {
    const std::filesystem::path dir(s.emit_figures);
    std::filesystem::create_directories(dir);
    write_file(dir / "figure4_scores.csv", figures.figure4_csv);
    write_file(dir / "figure5_spread.csv", figures.figure5_csv);
    write_file(dir / "figure6_hhi.csv", figures.figure6_csv);
  }
  return 0;
}

int run_compare(const CommonFlags& f) {
  PipelineConfig base = config_from(f);
  const DecisionProblem problem = load_problem(f.problem);
  const std::vector<std::string> names{"swing", "mabac", "projection"};
  std::vector<EvaluationReport> reps;
  try {
    for (const auto& name : names) {
      PipelineConfig cfg = base;
      cfg.weights = method_from(f, name);
      reps.push_back(evaluate(problem, cfg));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.describe() << "\n";
    return kExitPipeline;
  }
  std::ostringstream txt, csv;
  csv << "method";
  txt << "method      ";
  for (const auto& a : problem.attributes) {
    csv << ",w_" << a;
    char h[16];
    std::snprintf(h, sizeof h, "%-8s", a.c_str());
    txt << h;
  }
  csv << ",ranking,hhi\n";
  txt << "hhi     ranking\n";
  for (const auto& r : reps) {
    char head[32];
    std::snprintf(head, sizeof head, "%-12s", r.weight_method.c_str());
    txt << head;
    csv << r.weight_method;
    for (double w : r.weights) {
      txt << format_fixed4(w) << "  ";
      csv << ',' << format_number(w);
    }
    txt << format_fixed4(r.hhi) << "  " << r.ranking_text << "\n";
    csv << ',' << r.ranking_text << ',' << format_number(r.hhi) << '\n';
  }
  const MabacConfig mc = std::get<MabacMethod>(method_from(f, "mabac")).config;
  txt << "\nswing: d_bound=" << f.d_bound << " alpha=" << f.alpha
      << " direction=" << (f.invert_selection ? "inverted" : "as-printed") << "\n";
  txt << "mabac: " << to_string(mc) << "\n";
  txt << "projection: " << to_string(ProjectionConfig{}.axis) << " axis, normalized scores\n";
  std::cout << "q = " << reps.front().q << ", family " << reps.front().family << "\n\n" << txt.str();
  if (!f.emit_csv.empty()) write_file(f.emit_csv, csv.str());
  if (!f.emit_json.empty()) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out += report_to_json(reps[i]);
      if (i + 1 < reps.size()) out += ",\n";
    }
    write_file(f.emit_json, out + "]\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-valued q-rung orthopair fuzzy group decision making"};
  app.require_subcommand(1);

  CommonFlags ev;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Run the decision pipeline on a problem file");
  evaluate_cmd->add_option("problem", ev.problem, "Problem file (JSON)")->required();
  evaluate_cmd->add_option("--q", ev.q, "Rung: integer or auto")->capture_default_str();
  evaluate_cmd->add_option("--weights", ev.weights, "swing | mabac | projection | manual:<csv>")
      ->capture_default_str();
  evaluate_cmd->add_option("--emit-csv", ev.emit_csv, "Write per-alternative results as CSV");
  evaluate_cmd->add_option("--emit-json", ev.emit_json, "Write the full report as JSON");
  add_model_flags(evaluate_cmd, ev);

  CommonFlags sw;
  sw.weight_q = "2";
  sw.weight_family = "weber:2";
  SweepFlags sf;
  auto* sweep_cmd = app.add_subcommand("sweep", "Scores over rung values, families and weight methods");
  sweep_cmd->add_option("problem", sw.problem, "Problem file (JSON)")->required();
  sweep_cmd->add_option("--q", sf.qs, "Rung range lo..hi or list")->capture_default_str();
  sweep_cmd->add_option("--lambdas", sf.lambdas, "Comma-separated Weber lambdas")->capture_default_str();
  sweep_cmd->add_option("--families", sf.families, "Families (space or comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--methods", sf.methods, "Weight methods (space separated)")
      ->capture_default_str();
  sweep_cmd->add_option("--emit-csv", sw.emit_csv, "Write the sweep table as CSV");
  sweep_cmd->add_option("--emit-figures", sf.emit_figures, "Directory for figure data CSVs");
  add_model_flags(sweep_cmd, sw);

  CommonFlags cw;
  auto* compare_cmd = app.add_subcommand("compare-weights", "Swing, MABAC and Projection side by side");
  compare_cmd->add_option("problem", cw.problem, "Problem file (JSON)")->required();
  compare_cmd->add_option("--q", cw.q, "Rung: integer or auto")->capture_default_str();
  compare_cmd->add_option("--emit-csv", cw.emit_csv, "Write the comparison as CSV");
  compare_cmd->add_option("--emit-json", cw.emit_json, "Write the three reports as JSON");
  add_model_flags(compare_cmd, cw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*evaluate_cmd) return run_evaluate(ev);
    if (*sweep_cmd) return run_sweep_cmd(sw, sf);
    if (*compare_cmd) return run_compare(cw);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.describe() << "\n";
    return e.kind() == ErrorKind::Io || e.kind() == ErrorKind::Parse ||
                   e.kind() == ErrorKind::UnknownLinguisticTerm ||
                   e.kind() == ErrorKind::MalformedCell ||
                   e.kind() == ErrorKind::DimensionMismatch ||
                   e.kind() == ErrorKind::LengthMismatch || e.kind() == ErrorKind::InvalidWeights
               ? kExitUsage
               : kExitPipeline;
  }
  return kExitUsage;
}
