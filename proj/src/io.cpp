#include "ivqrof/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ivqrof {

using nlohmann::json;

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(std::string("missing key '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.is_array()) parse_fail(std::string("'") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) parse_fail(std::string("'") + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const json& j, const char* key) {
  if (!j.is_array()) parse_fail(std::string("'") + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : j) {
    if (!e.is_number()) parse_fail(std::string("'") + key + "' must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

LinguisticTerm term_from(const std::string& code, const std::string& where) {
  const auto t = parse_linguistic_term(code);
  if (!t) throw Error(ErrorKind::UnknownLinguisticTerm, where + ": unknown term '" + code + "'");
  return *t;
}

Ivqrofn quad_from(const json& j, const std::string& where, ErrorKind kind) {
  if (!j.is_array() || j.size() != 4) {
    throw Error(kind, where + ": expected [mu_lo, mu_hi, nu_lo, nu_hi]");
  }
  double v[4];
  for (std::size_t c = 0; c < 4; ++c) {
    if (!j[c].is_number()) throw Error(kind, where + ": bounds must be numbers");
    v[c] = j[c].get<double>();
  }
  try {
    return Ivqrofn(v[0], v[1], v[2], v[3]);
  } catch (const Error& e) {
    throw Error(kind, where + ": " + e.what());
  }
}

json quad_to(const Ivqrofn& a) {
  return json::array({a.mu_lo(), a.mu_hi(), a.nu_lo(), a.nu_hi()});
}

template <typename T, typename F>
Matrix<T> matrix_from(const json& j, std::size_t m, std::size_t n, const std::string& where,
                      const T& fill, F&& cell) {
  if (!j.is_array() || j.size() != m) {
    throw Error(ErrorKind::DimensionMismatch,
                where + ": expected " + std::to_string(m) + " rows");
  }
  Matrix<T> out(m, n, fill);
  for (std::size_t i = 0; i < m; ++i) {
    if (!j[i].is_array() || j[i].size() != n) {
      throw Error(ErrorKind::DimensionMismatch, where + ": row " + std::to_string(i + 1) +
                                                    " must have " + std::to_string(n) + " cells");
    }
    for (std::size_t k = 0; k < n; ++k) {
      out(i, k) = cell(j[i][k], where + " cell (" + std::to_string(i + 1) + "," +
                                    std::to_string(k + 1) + ")");
    }
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

DecisionProblem parse_problem(const std::string& json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) parse_fail("problem file must be a JSON object");
  static const std::set<std::string> known = {"alternatives", "attributes",  "experts",
                                              "expert_weights", "matrices", "labels",
                                              "description"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) parse_fail("unknown key '" + key + "'");
  }
  DecisionProblem p;
  p.alternatives = string_list(require(doc, "alternatives"), "alternatives");
  p.attributes = string_list(require(doc, "attributes"), "attributes");
  p.experts = string_list(require(doc, "experts"), "experts");
  p.expert_weights = number_list(require(doc, "expert_weights"), "expert_weights");
  if (auto it = doc.find("description"); it != doc.end()) {
    if (!it->is_string()) parse_fail("'description' must be a string");
    p.description = it->get<std::string>();
  }
  const json& mats = require(doc, "matrices");
  if (!mats.is_array() || mats.empty()) parse_fail("'matrices' must be a non-empty array");
  if (p.alternatives.empty() || p.attributes.empty() || p.experts.empty()) {
    parse_fail("alternatives, attributes and experts must be non-empty");
  }
  if (mats.size() != p.experts.size()) {
    parse_fail("'matrices' has " + std::to_string(mats.size()) + " entries for " +
               std::to_string(p.experts.size()) + " experts");
  }
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const std::string where = "matrices[" + std::to_string(k) + "]";
    p.judgments.push_back(matrix_from<Cell>(
        mats[k], p.m(), p.n(), where, Cell{LinguisticTerm::AI},
        [](const json& c, const std::string& w) -> Cell {
          if (c.is_string()) return term_from(c.get<std::string>(), w);
          return quad_from(c, w, ErrorKind::MalformedCell);
        }));
  }
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != p.experts.size()) {
      parse_fail("'labels' must hold one matrix per expert");
    }
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "labels[" + std::to_string(k) + "]";
      p.labels.push_back(matrix_from<std::optional<LinguisticTerm>>(
          (*it)[k], p.m(), p.n(), where, std::nullopt,
          [](const json& c, const std::string& w) -> std::optional<LinguisticTerm> {
            if (c.is_null()) return std::nullopt;
            if (!c.is_string()) throw Error(ErrorKind::MalformedCell, w + ": label must be a term code or null");
            return term_from(c.get<std::string>(), w);
          }));
    }
  }
  p.validate();
  return p;
}

DecisionProblem load_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path));
}

std::string problem_to_json(const DecisionProblem& p) {
  json doc;
  if (!p.description.empty()) doc["description"] = p.description;
  doc["alternatives"] = p.alternatives;
  doc["attributes"] = p.attributes;
  doc["experts"] = p.experts;
  doc["expert_weights"] = p.expert_weights;
  json mats = json::array();
  for (const auto& mat : p.judgments) {
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (const Cell& c : mat.row(i)) {
        if (const auto* t = std::get_if<LinguisticTerm>(&c)) {
          row.push_back(std::string(to_string(*t)));
        } else {
          row.push_back(quad_to(std::get<Ivqrofn>(c)));
        }
      }
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  doc["matrices"] = std::move(mats);
  if (!p.labels.empty()) {
    json labels = json::array();
    for (const auto& mat : p.labels) {
      json rows = json::array();
      for (std::size_t i = 0; i < mat.rows(); ++i) {
        json row = json::array();
        for (const auto& l : mat.row(i)) {
          row.push_back(l ? json(std::string(to_string(*l))) : json(nullptr));
        }
        rows.push_back(std::move(row));
      }
      labels.push_back(std::move(rows));
    }
    doc["labels"] = std::move(labels);
  }
  return doc.dump(2) + "\n";
}

std::string report_to_json(const EvaluationReport& r) {
  json doc;
  doc["alternatives"] = r.alternatives;
  doc["attributes"] = r.attributes;
  doc["q"] = r.q;
  doc["weight_q"] = r.weight_q;
  doc["family"] = r.family;
  doc["weight_family"] = r.weight_family;
  doc["weight_method"] = r.weight_method;
  json agg = json::array();
  for (std::size_t i = 0; i < r.aggregated.rows(); ++i) {
    json row = json::array();
    for (const auto& c : r.aggregated.row(i)) row.push_back(quad_to(c));
    agg.push_back(std::move(row));
  }
  doc["aggregated"] = std::move(agg);
  doc["weights"] = r.weights;
  json aggs = json::array();
  for (const auto& a : r.aggregates) aggs.push_back(quad_to(a));
  doc["aggregates"] = std::move(aggs);
  doc["scores"] = r.scores;
  doc["normalized_scores"] = r.normalized_scores;
  doc["accuracies"] = r.accuracies;
  json ranking = json::array();
  for (const auto& e : r.ranking.order) {
    ranking.push_back({{"index", e.index},
                       {"alternative", e.index < r.alternatives.size() ? r.alternatives[e.index] : ""},
                       {"score", e.score},
                       {"normalized_score", e.normalized_score},
                       {"accuracy", e.accuracy},
                       {"tie_group", e.tie_group}});
  }
  doc["ranking"] = std::move(ranking);
  doc["ranking_text"] = r.ranking_text;
  doc["hhi"] = r.hhi;
  doc["score_spread"] = r.score_spread;
  doc["diagnostics"] = r.diagnostics;
  return doc.dump(2) + "\n";
}

EvaluationReport report_from_json(const std::string& json_text) {
  const json doc = parse_json(json_text);
  try {
    EvaluationReport r;
    r.alternatives = doc.at("alternatives").get<std::vector<std::string>>();
    r.attributes = doc.at("attributes").get<std::vector<std::string>>();
    r.q = doc.at("q").get<int>();
    r.weight_q = doc.at("weight_q").get<int>();
    r.family = doc.at("family").get<std::string>();
    r.weight_family = doc.at("weight_family").get<std::string>();
    r.weight_method = doc.at("weight_method").get<std::string>();
    const json& agg = doc.at("aggregated");
    const std::size_t m = agg.size();
    const std::size_t n = m ? agg[0].size() : 0;
    r.aggregated = matrix_from<Ivqrofn>(agg, m, n, "aggregated", Ivqrofn::negative_ideal(),
                                        [](const json& c, const std::string& w) {
                                          return quad_from(c, w, ErrorKind::Parse);
                                        });
    r.weights = doc.at("weights").get<std::vector<double>>();
    for (const auto& a : doc.at("aggregates")) r.aggregates.push_back(quad_from(a, "aggregates", ErrorKind::Parse));
    r.scores = doc.at("scores").get<std::vector<double>>();
    r.normalized_scores = doc.at("normalized_scores").get<std::vector<double>>();
    r.accuracies = doc.at("accuracies").get<std::vector<double>>();
    for (const auto& e : doc.at("ranking")) {
      r.ranking.order.push_back({e.at("index").get<std::size_t>(), e.at("score").get<double>(),
                                 e.at("normalized_score").get<double>(),
                                 e.at("accuracy").get<double>(),
                                 e.at("tie_group").get<std::size_t>()});
    }
    r.ranking_text = doc.at("ranking_text").get<std::string>();
    r.hhi = doc.at("hhi").get<double>();
    r.score_spread = doc.at("score_spread").get<double>();
    r.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const EvaluationReport& r) {
  std::ostringstream os;
  os << "q = " << r.q << ", family " << r.family << ", weights " << r.weight_method
     << " (derived at q = " << r.weight_q << " with " << r.weight_family << ")\n\n";
  os << "Attribute weights\n";
  for (std::size_t j = 0; j < r.weights.size(); ++j) {
    os << "  " << (j < r.attributes.size() ? r.attributes[j] : "?") << "  "
       << format_fixed4(r.weights[j]) << "\n";
  }
  os << "\nAggregated matrix R\n";
  for (std::size_t i = 0; i < r.aggregated.rows(); ++i) {
    os << "  " << r.alternatives[i];
    for (const auto& c : r.aggregated.row(i)) os << "  " << to_string(c, 4);
    os << "\n";
  }
  os << "\nAlternative  mu_lo   mu_hi   nu_lo   nu_hi   score   S_norm  accuracy\n";
  for (std::size_t i = 0; i < r.aggregates.size(); ++i) {
    const auto& a = r.aggregates[i];
    char line[160];
    std::snprintf(line, sizeof line, "  %-9s %.4f  %.4f  %.4f  %.4f  %.4f  %.4f  %.4f\n",
                  r.alternatives[i].c_str(), a.mu_lo(), a.mu_hi(), a.nu_lo(), a.nu_hi(),
                  r.scores[i], r.normalized_scores[i], r.accuracies[i]);
    os << line;
  }
  os << "\nRanking: " << r.ranking_text << "\n";
  os << "HHI " << format_fixed4(r.hhi) << ", score spread " << format_fixed4(r.score_spread)
     << "\n";
  if (!r.diagnostics.empty()) {
    os << "\nDiagnostics\n";
    for (const auto& d : r.diagnostics) os << "  - " << d << "\n";
  }
  return os.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::vector<std::string>& alternatives) {
  std::ostringstream os;
  os << "q,family,weights";
  for (const auto& a : alternatives) os << ',' << a;
  os << ",ranking,score_spread,hhi\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.family << ',' << r.method;
    for (double s : r.normalized_scores) os << ',' << format_number(s);
    os << ',' << r.ranking << ',' << format_number(r.score_spread) << ','
       << format_number(r.hhi) << '\n';
  }
  return os.str();
}

std::string sweep_to_text(const std::vector<SweepRow>& rows,
                          const std::vector<std::string>& alternatives) {
  std::ostringstream os;
  os << " q  family        weights    ";
  for (const auto& a : alternatives) {
    char h[16];
    std::snprintf(h, sizeof h, "%-8s", a.c_str());
    os << h;
  }
  os << "spread  hhi     ranking\n";
  for (const auto& r : rows) {
    char head[64];
    std::snprintf(head, sizeof head, "%2d  %-13s %-10s ", r.q, r.family.c_str(), r.method.c_str());
    os << head;
    for (double s : r.normalized_scores) os << format_fixed4(s) << "  ";
    os << format_fixed4(r.score_spread) << "  " << format_fixed4(r.hhi) << "  " << r.ranking
       << "\n";
  }
  return os.str();
}

}  // namespace ivqrof
