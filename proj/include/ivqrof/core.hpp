#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ivqrof/error.hpp"

namespace ivqrof {

// Slack on the q-rung constraint mu_hi^q + nu_hi^q <= 1.
inline constexpr double kValidityTolerance = 1e-12;
// Two scores (or accuracies) closer than this are treated as tied.
inline constexpr double kCompareTolerance = 1e-9;

/// Rung exponent q >= 1 governing the admissible region of an IVq-ROFN.
class Rung {
 public:
  explicit Rung(double q);
  double value() const noexcept { return q_; }
  bool operator==(const Rung&) const = default;

 private:
  double q_;
};

/// Interval-valued q-rung orthopair fuzzy number
/// <[mu_lo, mu_hi], [nu_lo, nu_hi]>.
///
/// Construction enforces the bound ordering and the unit range; whether the
/// value is admissible for a particular rung is a separate question answered
/// by `validate`.
class Ivqrofn {
 public:
  Ivqrofn(double mu_lo, double mu_hi, double nu_lo, double nu_hi);

  // Result of an arithmetic operation: clamps to [0,1] and repairs bound
  // inversions smaller than the validity tolerance before checking.
  static Ivqrofn from_computed(double mu_lo, double mu_hi, double nu_lo,
                               double nu_hi);

  static Ivqrofn positive_ideal() { return {1.0, 1.0, 0.0, 0.0}; }
  static Ivqrofn negative_ideal() { return {0.0, 0.0, 1.0, 1.0}; }

  double mu_lo() const noexcept { return v_[0]; }
  double mu_hi() const noexcept { return v_[1]; }
  double nu_lo() const noexcept { return v_[2]; }
  double nu_hi() const noexcept { return v_[3]; }

  // Components in the fixed order mu_lo, mu_hi, nu_lo, nu_hi.
  const std::array<double, 4>& components() const noexcept { return v_; }

  // Membership and non-membership intervals exchanged.
  Ivqrofn swapped() const { return {v_[2], v_[3], v_[0], v_[1]}; }

  bool operator==(const Ivqrofn&) const = default;

 private:
  std::array<double, 4> v_;
};

std::string to_string(const Ivqrofn& a, int precision = 4);

struct Interval {
  double lo;
  double hi;
  bool operator==(const Interval&) const = default;
};

/// The ten grades of the linguistic evaluation scale.
enum class LinguisticTerm { CLI, VLI, LI, BAI, AI, AAI, HI, VHI, CHI, EE };

inline constexpr std::array<LinguisticTerm, 10> kAllLinguisticTerms = {
    LinguisticTerm::CLI, LinguisticTerm::VLI, LinguisticTerm::LI,
    LinguisticTerm::BAI, LinguisticTerm::AI,  LinguisticTerm::AAI,
    LinguisticTerm::HI,  LinguisticTerm::VHI, LinguisticTerm::CHI,
    LinguisticTerm::EE};

std::string_view to_string(LinguisticTerm t) noexcept;

// Accepts the ten codes (case-sensitive) plus "BA" as an alias of BAI.
std::optional<LinguisticTerm> parse_linguistic_term(std::string_view code);

Ivqrofn from_linguistic(LinguisticTerm t) noexcept;

// x^q and the q-th root in the power domain. The root clamps its argument
// to [0,1] first, so round-off residue never produces NaN.
double qpow(double x, Rung q) noexcept;
double qroot(double x, Rung q) noexcept;

bool validate(const Ivqrofn& a, Rung q) noexcept;

// Throws ErrorKind::InvalidNumber naming `what` when `a` fails validate.
void require_valid(const Ivqrofn& a, Rung q, std::string_view what = "value");

Interval hesitation(const Ivqrofn& a, Rung q);
double score(const Ivqrofn& a, Rung q);
double normalized_score(const Ivqrofn& a, Rung q);
double accuracy(const Ivqrofn& a, Rung q);

/// Score first, accuracy on a score tie; both within kCompareTolerance.
std::weak_ordering compare(const Ivqrofn& a, const Ivqrofn& b, Rung q);

double distance(const Ivqrofn& a, const Ivqrofn& b, Rung q);

/// Smallest integer rung in [1, q_max] admitting every value.
Rung min_valid_q(std::span<const Ivqrofn> values, int q_max = 20);

}  // namespace ivqrof
