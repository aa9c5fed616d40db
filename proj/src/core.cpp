#include "ivqrof/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ivqrof {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidNumber: return "invalid-number";
    case ErrorKind::InvalidRung: return "invalid-rung";
    case ErrorKind::InvalidLambda: return "invalid-lambda";
    case ErrorKind::InvalidFamilyParameter: return "invalid-family-parameter";
    case ErrorKind::NonpositiveScalar: return "nonpositive-k";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::InvalidWeights: return "invalid-weights";
    case ErrorKind::NoValidQ: return "no-valid-q";
    case ErrorKind::ZeroIdealNorm: return "zero-ideal-norm";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NonpositiveScore: return "nonpositive-score";
    case ErrorKind::TooFewScores: return "too-few-scores";
    case ErrorKind::UnknownLinguisticTerm: return "unknown-linguistic-term";
    case ErrorKind::MalformedCell: return "malformed-cell";
    case ErrorKind::InvalidConfig: return "invalid-config";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Io: return "io-error";
  }
  return "error";
}

std::string Error::describe() const {
  std::string out;
  if (!stage_.empty()) out += stage_ + ": ";
  out += to_string(kind_);
  out += ": ";
  out += what();
  return out;
}

Rung::Rung(double q) : q_(q) {
  if (!std::isfinite(q) || q < 1.0) {
    throw Error(ErrorKind::InvalidRung,
                "rung q must be a finite real >= 1, got " + std::to_string(q));
  }
}

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

Ivqrofn::Ivqrofn(double mu_lo, double mu_hi, double nu_lo, double nu_hi)
    : v_{mu_lo, mu_hi, nu_lo, nu_hi} {
  for (double x : v_) {
    if (!in_unit(x)) {
      throw Error(ErrorKind::InvalidNumber,
                  "bound outside [0,1] in " + to_string(*this, 6));
    }
  }
  if (mu_lo > mu_hi || nu_lo > nu_hi) {
    throw Error(ErrorKind::InvalidNumber,
                "interval bounds out of order in " + to_string(*this, 6));
  }
}

Ivqrofn Ivqrofn::from_computed(double mu_lo, double mu_hi, double nu_lo,
                               double nu_hi) {
  auto clamp = [](double x) { return std::isnan(x) ? x : std::clamp(x, 0.0, 1.0); };
  mu_lo = clamp(mu_lo);
  mu_hi = clamp(mu_hi);
  nu_lo = clamp(nu_lo);
  nu_hi = clamp(nu_hi);
  if (mu_lo > mu_hi && mu_lo - mu_hi <= kValidityTolerance) mu_lo = mu_hi;
  if (nu_lo > nu_hi && nu_lo - nu_hi <= kValidityTolerance) nu_lo = nu_hi;
  return {mu_lo, mu_hi, nu_lo, nu_hi};
}

std::string to_string(const Ivqrofn& a, int precision) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "<[%.*f, %.*f], [%.*f, %.*f]>", precision,
                a.mu_lo(), precision, a.mu_hi(), precision, a.nu_lo(),
                precision, a.nu_hi());
  return buf;
}

std::string_view to_string(LinguisticTerm t) noexcept {
  switch (t) {
    case LinguisticTerm::CLI: return "CLI";
    case LinguisticTerm::VLI: return "VLI";
    case LinguisticTerm::LI: return "LI";
    case LinguisticTerm::BAI: return "BAI";
    case LinguisticTerm::AI: return "AI";
    case LinguisticTerm::AAI: return "AAI";
    case LinguisticTerm::HI: return "HI";
    case LinguisticTerm::VHI: return "VHI";
    case LinguisticTerm::CHI: return "CHI";
    case LinguisticTerm::EE: return "EE";
  }
  return "?";
}

std::optional<LinguisticTerm> parse_linguistic_term(std::string_view code) {
  for (LinguisticTerm t : kAllLinguisticTerms) {
    if (code == to_string(t)) return t;
  }
  if (code == "BA") return LinguisticTerm::BAI;
  return std::nullopt;
}

Ivqrofn from_linguistic(LinguisticTerm t) noexcept {
  switch (t) {
    case LinguisticTerm::CLI: return {0.05, 0.05, 0.90, 0.95};
    case LinguisticTerm::VLI: return {0.10, 0.20, 0.80, 0.90};
    case LinguisticTerm::LI: return {0.20, 0.35, 0.65, 0.80};
    case LinguisticTerm::BAI: return {0.35, 0.45, 0.55, 0.65};
    case LinguisticTerm::AI: return {0.45, 0.55, 0.45, 0.55};
    case LinguisticTerm::AAI: return {0.55, 0.65, 0.35, 0.45};
    case LinguisticTerm::HI: return {0.65, 0.80, 0.20, 0.35};
    case LinguisticTerm::VHI: return {0.80, 0.90, 0.10, 0.20};
    case LinguisticTerm::CHI: return {0.90, 0.95, 0.05, 0.05};
    case LinguisticTerm::EE: return {0.1965, 0.1965, 0.1965, 0.1965};
  }
  return {0.0, 0.0, 0.0, 0.0};
}

double qpow(double x, Rung q) noexcept {
  const double e = q.value();
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  return std::pow(x, e);
}

double qroot(double x, Rung q) noexcept {
  x = std::clamp(x, 0.0, 1.0);
  const double e = q.value();
  if (x == 0.0 || x == 1.0 || e == 1.0) return x;
  if (e == 2.0) return std::sqrt(x);
  return std::exp(std::log(x) / e);
}

bool validate(const Ivqrofn& a, Rung q) noexcept {
  return qpow(a.mu_hi(), q) + qpow(a.nu_hi(), q) <= 1.0 + kValidityTolerance;
}

void require_valid(const Ivqrofn& a, Rung q, std::string_view what) {
  if (!validate(a, q)) {
    std::ostringstream msg;
    msg << what << " " << to_string(a, 6) << " violates mu_hi^q + nu_hi^q <= 1"
        << " at q = " << q.value();
    throw Error(ErrorKind::InvalidNumber, msg.str());
  }
}

Interval hesitation(const Ivqrofn& a, Rung q) {
  require_valid(a, q);
  const double lo = 1.0 - qpow(a.mu_hi(), q) - qpow(a.nu_hi(), q);
  const double hi = 1.0 - qpow(a.mu_lo(), q) - qpow(a.nu_lo(), q);
  return {qroot(lo, q), qroot(hi, q)};
}

double score(const Ivqrofn& a, Rung q) {
  require_valid(a, q);
  return 0.5 * (qpow(a.mu_lo(), q) + qpow(a.mu_hi(), q) -
                qpow(a.nu_lo(), q) - qpow(a.nu_hi(), q));
}

double normalized_score(const Ivqrofn& a, Rung q) {
  return 0.5 * (1.0 + score(a, q));
}

double accuracy(const Ivqrofn& a, Rung q) {
  require_valid(a, q);
  return 0.5 * (qpow(a.mu_lo(), q) + qpow(a.mu_hi(), q) +
                qpow(a.nu_lo(), q) + qpow(a.nu_hi(), q));
}

std::weak_ordering compare(const Ivqrofn& a, const Ivqrofn& b, Rung q) {
  const double ds = score(a, q) - score(b, q);
  if (ds > kCompareTolerance) return std::weak_ordering::greater;
  if (ds < -kCompareTolerance) return std::weak_ordering::less;
  const double dh = accuracy(a, q) - accuracy(b, q);
  if (dh > kCompareTolerance) return std::weak_ordering::greater;
  if (dh < -kCompareTolerance) return std::weak_ordering::less;
  return std::weak_ordering::equivalent;
}

double distance(const Ivqrofn& a, const Ivqrofn& b, Rung q) {
  require_valid(a, q, "first operand");
  require_valid(b, q, "second operand");
  double sum = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    sum += std::abs(qpow(a.components()[c], q) - qpow(b.components()[c], q));
  }
  return 0.25 * sum;
}

Rung min_valid_q(std::span<const Ivqrofn> values, int q_max) {
  if (q_max < 1) {
    throw Error(ErrorKind::InvalidConfig, "q_max must be >= 1");
  }
  for (int q = 1; q <= q_max; ++q) {
    const Rung rung(q);
    const bool all = std::all_of(values.begin(), values.end(),
                                 [&](const Ivqrofn& a) { return validate(a, rung); });
    if (all) return rung;
  }
  throw Error(ErrorKind::NoValidQ,
              "no integer q in [1, " + std::to_string(q_max) +
                  "] admits every judgment value");
}

}  // namespace ivqrof
