#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ivqrof/magdm.hpp"
#include "ivqrof/sweep.hpp"

namespace ivqrof {

// Shortest text that reads back to the same double ("%.17g").
std::string format_number(double x);
// Fixed four-decimal rendering for human tables.
std::string format_fixed4(double x);

// Problem file (JSON):
//   alternatives, attributes, experts: arrays of strings
//   expert_weights: array of numbers
//   matrices: per expert, rows of cells; a cell is a term code ("HI") or
//             [mu_lo, mu_hi, nu_lo, nu_hi]
//   labels (optional): same shape as matrices, term codes or null
//   description (optional): string
// Unknown keys are rejected.
DecisionProblem parse_problem(const std::string& json_text);
DecisionProblem load_problem(const std::filesystem::path& path);
std::string problem_to_json(const DecisionProblem& problem);

std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const std::string& json_text);
std::string report_to_text(const EvaluationReport& report);

// One row per sweep entry: q,family,weights,<alt scores...>,ranking,score_spread,hhi
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::vector<std::string>& alternatives);
std::string sweep_to_text(const std::vector<SweepRow>& rows,
                          const std::vector<std::string>& alternatives);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ivqrof
