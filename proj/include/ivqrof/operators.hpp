#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivqrof/core.hpp"

namespace ivqrof {

struct Weber {
  double lambda = 2.0;
  bool operator==(const Weber&) const = default;
};
struct Algebraic {
  bool operator==(const Algebraic&) const = default;
};
struct Frank {
  double alpha = 2.0;
  bool operator==(const Frank&) const = default;
};
struct Hamacher {
  double gamma = 2.0;
  bool operator==(const Hamacher&) const = default;
};

using OperatorFamily = std::variant<Weber, Algebraic, Frank, Hamacher>;

// Throws InvalidLambda / InvalidFamilyParameter for inadmissible parameters.
void validate_family(const OperatorFamily& family);

// "weber", "weber:<lambda>", "algebraic", "frank", "frank:<alpha>",
// "hamacher", "hamacher:<gamma>".
OperatorFamily parse_family(std::string_view text);
std::string to_string(const OperatorFamily& family);

/// Nonnegative weights summing to one (within 1e-9).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);

  // Divides by the sum; throws InvalidWeights if the sum is not positive.
  static WeightVector normalized(std::vector<double> raw);
  static WeightVector uniform(std::size_t n);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& values() const noexcept { return w_; }
  auto begin() const noexcept { return w_.begin(); }
  auto end() const noexcept { return w_.end(); }

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<double> w_;
};

// Scalar Weber t-norm and t-conorm on [0,1].
double weber_tnorm(double x, double y, double lambda);
double weber_tconorm(double x, double y, double lambda);

// Weber operations. Inputs must be valid at q. Results are clamped in the
// power domain; note the sum and k > 1 scaling can leave the admissible
// region when lambda > 0 (the ordered aggregate with unit-sum weights
// cannot).
Ivqrofn weber_add(const Ivqrofn& a, const Ivqrofn& b, double lambda, Rung q);
Ivqrofn weber_mul(const Ivqrofn& a, const Ivqrofn& b, double lambda, Rung q);
Ivqrofn weber_scalar(double k, const Ivqrofn& a, double lambda, Rung q);
Ivqrofn weber_pow(const Ivqrofn& a, double k, double lambda, Rung q);

Ivqrofn algebraic_add(const Ivqrofn& a, const Ivqrofn& b, Rung q);
Ivqrofn algebraic_mul(const Ivqrofn& a, const Ivqrofn& b, Rung q);
Ivqrofn algebraic_scalar(double k, const Ivqrofn& a, Rung q);
Ivqrofn algebraic_pow(const Ivqrofn& a, double k, Rung q);

/// The four operations of one family bound to a rung.
///
/// Frank and Hamacher act on q-th powers through additive generators:
/// membership through the t-conorm generator, non-membership through the
/// dual t-norm generator (roles exchanged for mul/pow).
class FamilyOps {
 public:
  FamilyOps(OperatorFamily family, Rung q);

  const OperatorFamily& family() const noexcept { return family_; }
  Rung rung() const noexcept { return q_; }

  Ivqrofn add(const Ivqrofn& a, const Ivqrofn& b) const;
  Ivqrofn mul(const Ivqrofn& a, const Ivqrofn& b) const;
  Ivqrofn scalar(double k, const Ivqrofn& a) const;
  Ivqrofn pow(const Ivqrofn& a, double k) const;

  // Unchecked variants used by the aggregation fold: no input validation,
  // and k = 0 is allowed (yields the additive identity).
  Ivqrofn add_unchecked(const Ivqrofn& a, const Ivqrofn& b) const;
  Ivqrofn scalar_unchecked(double k, const Ivqrofn& a) const;

 private:
  OperatorFamily family_;
  Rung q_;
};

inline FamilyOps family_ops(const OperatorFamily& family, Rung q) {
  return FamilyOps(family, q);
}

// Indices of `values` sorted descending by compare; ties keep input order.
std::vector<std::size_t> owa_order(std::span<const Ivqrofn> values, Rung q);

/// Ordered weighted aggregate: the i-th largest value receives w[i], the
/// weighted values are combined with the family sum. Weber uses the
/// product form below, the other families the fold.
Ivqrofn owa_aggregate(std::span<const Ivqrofn> values, const WeightVector& w,
                      const OperatorFamily& family, Rung q);

// The same aggregate as a left fold of family scalar and sum.
Ivqrofn owa_fold(std::span<const Ivqrofn> values, const WeightVector& w,
                 const OperatorFamily& family, Rung q);

// Product form of the Weber ordered aggregate (no intermediate clamping).
Ivqrofn weber_owa_closed_form(std::span<const Ivqrofn> values,
                              const WeightVector& w, double lambda, Rung q);

}  // namespace ivqrof
