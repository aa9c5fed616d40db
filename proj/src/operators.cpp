#include "ivqrof/operators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ivqrof {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightSumTolerance = 1e-9;

void check_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda <= -1.0 || lambda == 0.0) {
    throw Error(ErrorKind::InvalidLambda,
                "Weber lambda must lie in (-1, inf) and differ from 0, got " +
                    std::to_string(lambda));
  }
}

void check_k(double k) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw Error(ErrorKind::NonpositiveScalar,
                "scalar k must be a finite positive real, got " + std::to_string(k));
  }
}

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::Parse,
                "cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  }
  return v;
}

// Power-domain pieces of the Weber operations.
// Both forms are symmetric in x and y bit for bit, and exact at the identity.
double w_sum_mu(double x, double y, double l) { return std::min(x + y + l * (x * y), 1.0); }
double w_sum_nu(double x, double y, double l) {
  return std::max(x * y - (1.0 - x) * (1.0 - y) / (1.0 + l), 0.0);
}
double w_scale_mu(double k, double x, double l) {
  return std::min(std::expm1(k * std::log1p(l * x)) / l, 1.0);
}
double w_scale_nu(double k, double y, double l) {
  return std::max(std::expm1(k * std::log1p(l * y) - (k - 1.0) * std::log1p(l)) / l, 0.0);
}

struct Powers {
  double v[4];
};

Powers powers(const Ivqrofn& a, Rung q) {
  return {{qpow(a.mu_lo(), q), qpow(a.mu_hi(), q), qpow(a.nu_lo(), q),
           qpow(a.nu_hi(), q)}};
}

Ivqrofn from_powers(double a, double b, double c, double d, Rung q) {
  return Ivqrofn::from_computed(qroot(a, q), qroot(b, q), qroot(c, q), qroot(d, q));
}

Ivqrofn weber_add_raw(const Ivqrofn& a, const Ivqrofn& b, double l, Rung q) {
  const Powers x = powers(a, q), y = powers(b, q);
  return from_powers(w_sum_mu(x.v[0], y.v[0], l), w_sum_mu(x.v[1], y.v[1], l),
                     w_sum_nu(x.v[2], y.v[2], l), w_sum_nu(x.v[3], y.v[3], l), q);
}

Ivqrofn weber_scalar_raw(double k, const Ivqrofn& a, double l, Rung q) {
  const Powers x = powers(a, q);
  return from_powers(w_scale_mu(k, x.v[0], l), w_scale_mu(k, x.v[1], l),
                     w_scale_nu(k, x.v[2], l), w_scale_nu(k, x.v[3], l), q);
}

Ivqrofn algebraic_add_raw(const Ivqrofn& a, const Ivqrofn& b, Rung q) {
  const Powers x = powers(a, q), y = powers(b, q);
  auto s = [](double u, double v) { return u + v - u * v; };
  return Ivqrofn::from_computed(qroot(s(x.v[0], y.v[0]), q), qroot(s(x.v[1], y.v[1]), q),
                                a.nu_lo() * b.nu_lo(), a.nu_hi() * b.nu_hi());
}

Ivqrofn algebraic_scalar_raw(double k, const Ivqrofn& a, Rung q) {
  const Powers x = powers(a, q);
  auto s = [k](double u) { return -std::expm1(k * std::log1p(-u)); };
  return Ivqrofn::from_computed(qroot(s(x.v[0]), q), qroot(s(x.v[1]), q),
                                std::pow(a.nu_lo(), k), std::pow(a.nu_hi(), k));
}

// Additive generator of a strict t-norm (t, t_inv) and of its dual t-conorm
// (s, s_inv), where s(x) = t(1 - x). The conorm side is written out in x
// rather than through 1 - x, which would wipe out small q-th powers.
struct Generator {
  virtual ~Generator() = default;
  virtual double t(double x) const = 0;
  virtual double t_inv(double y) const = 0;
  virtual double s(double x) const = 0;
  virtual double s_inv(double y) const = 0;
};

struct FrankGenerator final : Generator {
  explicit FrankGenerator(double alpha) : A(alpha), L(std::log(alpha)), E(std::expm1(L)) {}
  double t(double x) const override {
    if (x <= 0.0) return kInf;
    if (x >= 1.0) return 0.0;
    return -std::log(std::expm1(x * L) / E);
  }
  double t_inv(double y) const override {
    if (y == kInf) return 0.0;
    if (y <= 0.0) return 1.0;
    return std::clamp(std::log1p(E * std::exp(-y)) / L, 0.0, 1.0);
  }
  double s(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return kInf;
    return -std::log1p(A * std::expm1(-x * L) / E);
  }
  double s_inv(double y) const override {
    if (y <= 0.0) return 0.0;
    if (y == kInf) return 1.0;
    return std::clamp(-std::log1p(E * std::expm1(-y) / A) / L, 0.0, 1.0);
  }
  double A, L, E;
};

struct HamacherGenerator final : Generator {
  explicit HamacherGenerator(double gamma) : g(gamma) {}
  double t(double x) const override {
    if (x <= 0.0) return kInf;
    if (x >= 1.0) return 0.0;
    return std::log((g + (1.0 - g) * x) / x);
  }
  double t_inv(double y) const override {
    if (y == kInf) return 0.0;
    if (y <= 0.0) return 1.0;
    return std::clamp(g / (std::exp(y) - (1.0 - g)), 0.0, 1.0);
  }
  double s(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return kInf;
    return std::log1p(-(1.0 - g) * x) - std::log1p(-x);
  }
  double s_inv(double y) const override {
    if (y <= 0.0) return 0.0;
    const double e = std::expm1(y);
    if (!std::isfinite(e)) return 1.0;
    return std::clamp(e / (e + g), 0.0, 1.0);
  }
  double g;
};

double scaled(double k, double v) {
  // 0 * inf is taken as 0 so a zero weight contributes nothing.
  if (k == 0.0) return 0.0;
  return k * v;
}

// mu via the t-conorm generator, nu via the t-norm generator.
Ivqrofn gen_add(const Generator& g, const Ivqrofn& a, const Ivqrofn& b, Rung q) {
  const Powers x = powers(a, q), y = powers(b, q);
  return from_powers(g.s_inv(g.s(x.v[0]) + g.s(y.v[0])),
                     g.s_inv(g.s(x.v[1]) + g.s(y.v[1])),
                     g.t_inv(g.t(x.v[2]) + g.t(y.v[2])),
                     g.t_inv(g.t(x.v[3]) + g.t(y.v[3])), q);
}

Ivqrofn gen_scalar(const Generator& g, double k, const Ivqrofn& a, Rung q) {
  const Powers x = powers(a, q);
  return from_powers(g.s_inv(scaled(k, g.s(x.v[0]))), g.s_inv(scaled(k, g.s(x.v[1]))),
                     g.t_inv(scaled(k, g.t(x.v[2]))), g.t_inv(scaled(k, g.t(x.v[3]))),
                     q);
}

template <typename F>
decltype(auto) with_generator(const OperatorFamily& family, F&& f) {
  if (const auto* fr = std::get_if<Frank>(&family)) {
    const FrankGenerator g(fr->alpha);
    return f(static_cast<const Generator&>(g));
  }
  const HamacherGenerator g(std::get<Hamacher>(family).gamma);
  return f(static_cast<const Generator&>(g));
}

}  // namespace

void validate_family(const OperatorFamily& family) {
  if (const auto* w = std::get_if<Weber>(&family)) {
    check_lambda(w->lambda);
  } else if (const auto* f = std::get_if<Frank>(&family)) {
    if (!std::isfinite(f->alpha) || f->alpha <= 0.0 || f->alpha == 1.0) {
      throw Error(ErrorKind::InvalidFamilyParameter,
                  "Frank alpha must be positive and differ from 1");
    }
  } else if (const auto* h = std::get_if<Hamacher>(&family)) {
    if (!std::isfinite(h->gamma) || h->gamma <= 0.0) {
      throw Error(ErrorKind::InvalidFamilyParameter, "Hamacher gamma must be positive");
    }
  }
}

OperatorFamily parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? text.substr(colon + 1) : std::string_view{};
  OperatorFamily out;
  if (name == "weber") {
    out = Weber{has_arg ? parse_double(arg, "lambda") : 2.0};
  } else if (name == "algebraic" && !has_arg) {
    out = Algebraic{};
  } else if (name == "frank") {
    out = Frank{has_arg ? parse_double(arg, "alpha") : 2.0};
  } else if (name == "hamacher") {
    out = Hamacher{has_arg ? parse_double(arg, "gamma") : 2.0};
  } else {
    throw Error(ErrorKind::Parse, "unknown operator family '" + std::string(text) +
                                      "' (expected weber, algebraic, frank:<alpha> or "
                                      "hamacher:<gamma>)");
  }
  validate_family(out);
  return out;
}

std::string to_string(const OperatorFamily& family) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* w = std::get_if<Weber>(&family)) {
    os << "weber:" << w->lambda;
  } else if (std::holds_alternative<Algebraic>(family)) {
    os << "algebraic";
  } else if (const auto* f = std::get_if<Frank>(&family)) {
    os << "frank:" << f->alpha;
  } else {
    os << "hamacher:" << std::get<Hamacher>(family).gamma;
  }
  return os.str();
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw Error(ErrorKind::InvalidWeights, "weight vector is empty");
  double sum = 0.0;
  for (double x : w_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw Error(ErrorKind::InvalidWeights,
                  "weights must be finite and nonnegative, got " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "weights must sum to 1, got " << sum;
    throw Error(ErrorKind::InvalidWeights, msg.str());
  }
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
  const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw Error(ErrorKind::InvalidWeights, "cannot normalize weights with nonpositive sum");
  }
  for (double& x : raw) x /= sum;
  return WeightVector(std::move(raw));
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidWeights, "weight vector is empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double weber_tnorm(double x, double y, double lambda) {
  check_lambda(lambda);
  return w_sum_nu(x, y, lambda);
}

double weber_tconorm(double x, double y, double lambda) {
  check_lambda(lambda);
  return w_sum_mu(x, y, lambda);
}

Ivqrofn weber_add(const Ivqrofn& a, const Ivqrofn& b, double lambda, Rung q) {
  check_lambda(lambda);
  require_valid(a, q, "first operand");
  require_valid(b, q, "second operand");
  return weber_add_raw(a, b, lambda, q);
}

Ivqrofn weber_mul(const Ivqrofn& a, const Ivqrofn& b, double lambda, Rung q) {
  check_lambda(lambda);
  require_valid(a, q, "first operand");
  require_valid(b, q, "second operand");
  return weber_add_raw(a.swapped(), b.swapped(), lambda, q).swapped();
}

Ivqrofn weber_scalar(double k, const Ivqrofn& a, double lambda, Rung q) {
  check_lambda(lambda);
  check_k(k);
  require_valid(a, q);
  return weber_scalar_raw(k, a, lambda, q);
}

Ivqrofn weber_pow(const Ivqrofn& a, double k, double lambda, Rung q) {
  check_lambda(lambda);
  check_k(k);
  require_valid(a, q);
  return weber_scalar_raw(k, a.swapped(), lambda, q).swapped();
}

Ivqrofn algebraic_add(const Ivqrofn& a, const Ivqrofn& b, Rung q) {
  require_valid(a, q, "first operand");
  require_valid(b, q, "second operand");
  return algebraic_add_raw(a, b, q);
}

Ivqrofn algebraic_mul(const Ivqrofn& a, const Ivqrofn& b, Rung q) {
  require_valid(a, q, "first operand");
  require_valid(b, q, "second operand");
  return algebraic_add_raw(a.swapped(), b.swapped(), q).swapped();
}

Ivqrofn algebraic_scalar(double k, const Ivqrofn& a, Rung q) {
  check_k(k);
  require_valid(a, q);
  return algebraic_scalar_raw(k, a, q);
}

Ivqrofn algebraic_pow(const Ivqrofn& a, double k, Rung q) {
  check_k(k);
  require_valid(a, q);
  return algebraic_scalar_raw(k, a.swapped(), q).swapped();
}

FamilyOps::FamilyOps(OperatorFamily family, Rung q) : family_(family), q_(q) {
  validate_family(family_);
}

Ivqrofn FamilyOps::add_unchecked(const Ivqrofn& a, const Ivqrofn& b) const {
  if (const auto* w = std::get_if<Weber>(&family_)) return weber_add_raw(a, b, w->lambda, q_);
  if (std::holds_alternative<Algebraic>(family_)) return algebraic_add_raw(a, b, q_);
  return with_generator(family_, [&](const Generator& g) { return gen_add(g, a, b, q_); });
}

Ivqrofn FamilyOps::scalar_unchecked(double k, const Ivqrofn& a) const {
  if (const auto* w = std::get_if<Weber>(&family_)) {
    return weber_scalar_raw(k, a, w->lambda, q_);
  }
  if (std::holds_alternative<Algebraic>(family_)) return algebraic_scalar_raw(k, a, q_);
  return with_generator(family_,
                        [&](const Generator& g) { return gen_scalar(g, k, a, q_); });
}

Ivqrofn FamilyOps::add(const Ivqrofn& a, const Ivqrofn& b) const {
  require_valid(a, q_, "first operand");
  require_valid(b, q_, "second operand");
  return add_unchecked(a, b);
}

Ivqrofn FamilyOps::mul(const Ivqrofn& a, const Ivqrofn& b) const {
  require_valid(a, q_, "first operand");
  require_valid(b, q_, "second operand");
  return add_unchecked(a.swapped(), b.swapped()).swapped();
}

Ivqrofn FamilyOps::scalar(double k, const Ivqrofn& a) const {
  check_k(k);
  require_valid(a, q_);
  return scalar_unchecked(k, a);
}

Ivqrofn FamilyOps::pow(const Ivqrofn& a, double k) const {
  check_k(k);
  require_valid(a, q_);
  return scalar_unchecked(k, a.swapped()).swapped();
}

std::vector<std::size_t> owa_order(std::span<const Ivqrofn> values, Rung q) {
  struct Key {
    double s, h;
  };
  std::vector<Key> keys;
  keys.reserve(values.size());
  for (const auto& v : values) keys.push_back({score(v, q), accuracy(v, q)});
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const double ds = keys[i].s - keys[j].s;
    if (ds > kCompareTolerance) return true;
    if (ds < -kCompareTolerance) return false;
    return keys[i].h - keys[j].h > kCompareTolerance;
  });
  return idx;
}

namespace {

void check_lengths(std::span<const Ivqrofn> values, const WeightVector& w) {
  if (values.empty()) throw Error(ErrorKind::LengthMismatch, "nothing to aggregate");
  if (values.size() != w.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "aggregating " + std::to_string(values.size()) + " values with " +
                    std::to_string(w.size()) + " weights");
  }
}

}  // namespace

Ivqrofn owa_fold(std::span<const Ivqrofn> values, const WeightVector& w,
                 const OperatorFamily& family, Rung q) {
  check_lengths(values, w);
  const FamilyOps ops(family, q);
  const auto order = owa_order(values, q);  // validates every value
  Ivqrofn acc = ops.scalar_unchecked(w[0], values[order[0]]);
  for (std::size_t i = 1; i < order.size(); ++i) {
    acc = ops.add_unchecked(acc, ops.scalar_unchecked(w[i], values[order[i]]));
  }
  return acc;
}

Ivqrofn weber_owa_closed_form(std::span<const Ivqrofn> values, const WeightVector& w,
                              double lambda, Rung q) {
  check_lambda(lambda);
  check_lengths(values, w);
  const auto order = owa_order(values, q);
  double log_mu[2] = {0.0, 0.0};
  double log_nu[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Powers x = powers(values[order[i]], q);
    log_mu[0] += w[i] * std::log1p(lambda * x.v[0]);
    log_mu[1] += w[i] * std::log1p(lambda * x.v[1]);
    log_nu[0] += w[i] * std::log1p(lambda * x.v[2]);
    log_nu[1] += w[i] * std::log1p(lambda * x.v[3]);
  }
  // With weights summing to W the nu exponent carries -(W - 1) log(1 + lambda).
  // W is 1 by the WeightVector contract; keeping the round-off residue of
  // the sum would swamp q-th powers near zero.
  auto mu = [&](double s) { return std::clamp(std::expm1(s) / lambda, 0.0, 1.0); };
  auto nu = [&](double s) { return std::clamp(std::expm1(s) / lambda, 0.0, 1.0); };
  return from_powers(mu(log_mu[0]), mu(log_mu[1]), nu(log_nu[0]), nu(log_nu[1]), q);
}

Ivqrofn owa_aggregate(std::span<const Ivqrofn> values, const WeightVector& w,
                      const OperatorFamily& family, Rung q) {
  // The Weber fold subtracts O(1) terms to reach small q-th powers; the
  // product form does not, so it is the one used.
  if (const auto* wb = std::get_if<Weber>(&family)) {
    validate_family(family);
    return weber_owa_closed_form(values, w, wb->lambda, q);
  }
  return owa_fold(values, w, family, q);
}

}  // namespace ivqrof
