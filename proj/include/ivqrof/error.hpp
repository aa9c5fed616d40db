#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivqrof {

enum class ErrorKind {
  InvalidNumber,
  InvalidRung,
  InvalidLambda,
  InvalidFamilyParameter,
  NonpositiveScalar,
  LengthMismatch,
  InvalidWeights,
  NoValidQ,
  ZeroIdealNorm,
  DimensionMismatch,
  NonpositiveScore,
  TooFewScores,
  UnknownLinguisticTerm,
  MalformedCell,
  InvalidConfig,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `stage()` is set when the error
// escapes a pipeline stage (e.g. "ingest", "aggregate_experts").
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Error(ErrorKind kind, std::string stage, const std::string& message)
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  // "<stage>: <kind>: <message>" (stage omitted when empty).
  std::string describe() const;

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace ivqrof
