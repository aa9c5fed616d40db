#pragma once

// Randomized law checks shared by the unit suite and the acceptance binary.
// Each returns counts rather than asserting, so callers decide what a
// failure means.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "ivqrof/operators.hpp"

namespace ivqrof::testing {

struct LawResult {
  explicit LawResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long cases = 0;
  long skipped = 0;  // outside the law's scope
  long failures = 0;
  long clamped_failures = 0;  // failures whose case hits an operation clamp
  double max_error = 0.0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }

  void record(double err, double tol, const std::string& what, bool clamped = false) {
    ++cases;
    max_error = std::max(max_error, err);
    if (!(err <= tol)) {
      if (failures == 0) first_failure = what;
      ++failures;
      if (clamped) ++clamped_failures;
    }
  }
  void record_bool(bool pass, const std::string& what) { record(pass ? 0.0 : 1.0, 0.5, what); }
};

inline constexpr double kLawTolerance = 1e-10;

inline std::string describe(const std::string& prefix, const Ivqrofn& a) {
  return prefix + to_string(a, 6);
}

inline bool all_valid(std::initializer_list<Ivqrofn> xs, Rung q) {
  for (const auto& x : xs)
    if (!validate(x, q)) return false;
  return true;
}

// True when the Weber sum of a and b reaches no clamp in the power domain.
inline bool weber_sum_unclamped(const Ivqrofn& a, const Ivqrofn& b, double l, Rung q) {
  const auto x = a.components(), y = b.components();
  for (int i = 0; i < 4; ++i) {
    const double u = qpow(x[i], q), v = qpow(y[i], q);
    const double s = u + v + l * u * v;
    if (i < 2 ? s > 1.0 : s < 1.0) return false;
  }
  return true;
}

inline bool weber_scalar_unclamped(double k, const Ivqrofn& a, double l, Rung q) {
  const auto x = a.components();
  for (int i = 0; i < 4; ++i) {
    const double u = qpow(x[i], q);
    if (i < 2) {
      if (std::expm1(k * std::log1p(l * u)) / l > 1.0) return false;
    } else if (std::expm1(k * std::log1p(l * u) - (k - 1.0) * std::log1p(l)) / l < 0.0) {
      return false;
    }
  }
  return true;
}

// Weber laws of the operation algebra on random valid inputs. With `scoped`
// the distributive and additive laws only count cases where no operation
// clamps (the identities are exact there and cannot hold elsewhere), and
// sampling continues until every law has `cases` in-scope cases.
struct WeberLawOptions {
  int cases = 10000;
  std::uint64_t seed = 1;
  bool scoped = true;
};

inline std::vector<LawResult> weber_laws(const WeberLawOptions& opt) {
  LawResult comm_add{"commutative sum"}, comm_mul{"commutative product"},
      dist_k{"scalar distributes over sum"}, dist_pow{"power distributes over product"},
      add_k{"scalar additivity"}, add_pow{"exponent additivity"};
  Gen g(opt.seed);
  auto done = [&] {
    for (const auto* r : {&comm_add, &comm_mul, &dist_k, &dist_pow, &add_k, &add_pow})
      if (r->cases < opt.cases) return false;
    return true;
  };
  auto tag = [](const Ivqrofn& a, const Ivqrofn& b, double k1, double k2, double l, Rung q) {
    return describe("a=", a) + describe(" b=", b) + " k=" + std::to_string(k1) + "," +
           std::to_string(k2) + " lambda=" + std::to_string(l) + " q=" + std::to_string(q.value());
  };
  for (long draw = 0; !done() && draw < 200L * opt.cases; ++draw) {
    const Rung q = g.rung();
    const double l = g.lambda();
    const Ivqrofn a = g.value(q), b = g.value(q);
    const double k = g.uniform(0.01, 3.0), k1 = g.uniform(0.01, 1.5), k2 = g.uniform(0.01, 1.5);
    const FamilyOps w(Weber{l}, q);
    const std::string t = tag(a, b, k1, k2, l, q);
    auto room = [](const LawResult& r, int n) { return r.cases < n; };

    if (room(comm_add, opt.cases)) comm_add.record(max_abs_diff(w.add(a, b), w.add(b, a)), kLawTolerance, t);
    if (room(comm_mul, opt.cases)) comm_mul.record(max_abs_diff(w.mul(a, b), w.mul(b, a)), kLawTolerance, t);

    // In scope, the distributive laws draw from the region where sums stay
    // unclamped; uniform draws almost never land there.
    if (room(dist_k, opt.cases)) {
      const Ivqrofn da = opt.scoped ? g.nu_heavy(q) : a, db = opt.scoped ? g.nu_heavy(q) : b;
      const Ivqrofn s = w.add(da, db), ka = w.scalar(k, da), kb = w.scalar(k, db);
      const bool in_scope = weber_sum_unclamped(da, db, l, q) && weber_scalar_unclamped(k, da, l, q) &&
                            weber_scalar_unclamped(k, db, l, q) &&
                            weber_scalar_unclamped(k, s, l, q) && weber_sum_unclamped(ka, kb, l, q);
      if (opt.scoped && !in_scope) {
        ++dist_k.skipped;
      } else {
        dist_k.record(max_abs_diff(w.scalar_unchecked(k, s), w.add_unchecked(ka, kb)), kLawTolerance,
                      tag(da, db, k, k, l, q), !in_scope);
      }
    }
    if (room(dist_pow, opt.cases)) {
      const Ivqrofn pa = opt.scoped ? g.nu_heavy(q).swapped() : a;
      const Ivqrofn pb = opt.scoped ? g.nu_heavy(q).swapped() : b;
      const Ivqrofn as = pa.swapped(), bs = pb.swapped();
      const Ivqrofn p = w.mul(pa, pb), ak = w.pow(pa, k), bk = w.pow(pb, k);
      const bool in_scope =
          weber_sum_unclamped(as, bs, l, q) && weber_scalar_unclamped(k, as, l, q) &&
          weber_scalar_unclamped(k, bs, l, q) && weber_scalar_unclamped(k, p.swapped(), l, q) &&
          weber_sum_unclamped(ak.swapped(), bk.swapped(), l, q);
      if (opt.scoped && !in_scope) {
        ++dist_pow.skipped;
      } else {
        const Ivqrofn lhs = w.scalar_unchecked(k, p.swapped()).swapped();
        const Ivqrofn rhs = w.add_unchecked(ak.swapped(), bk.swapped()).swapped();
        dist_pow.record(max_abs_diff(lhs, rhs), kLawTolerance, tag(pa, pb, k, k, l, q), !in_scope);
      }
    }
    if (room(add_k, opt.cases)) {
      const Ivqrofn x = w.scalar(k1, a), y = w.scalar(k2, a), z = w.scalar(k1 + k2, a);
      const bool in_scope = weber_scalar_unclamped(k1, a, l, q) && weber_scalar_unclamped(k2, a, l, q) &&
                            weber_scalar_unclamped(k1 + k2, a, l, q) && weber_sum_unclamped(x, y, l, q);
      if (opt.scoped && !in_scope) {
        ++add_k.skipped;
      } else {
        add_k.record(max_abs_diff(w.add_unchecked(x, y), z), kLawTolerance, t, !in_scope);
      }
    }
    if (room(add_pow, opt.cases)) {
      const Ivqrofn as = a.swapped();
      const Ivqrofn x = w.pow(a, k1), y = w.pow(a, k2), z = w.pow(a, k1 + k2);
      const bool in_scope = weber_scalar_unclamped(k1, as, l, q) && weber_scalar_unclamped(k2, as, l, q) &&
                            weber_scalar_unclamped(k1 + k2, as, l, q) &&
                            weber_sum_unclamped(x.swapped(), y.swapped(), l, q);
      if (opt.scoped && !in_scope) {
        ++add_pow.skipped;
      } else {
        add_pow.record(max_abs_diff(w.add_unchecked(x.swapped(), y.swapped()).swapped(), z),
                       kLawTolerance, t, !in_scope);
      }
    }
  }
  return {comm_add, comm_mul, dist_k, dist_pow, add_k, add_pow};
}

// Ordered-aggregate theorems over all families (Weber with lambda > 0).
inline std::vector<LawResult> aggregate_laws(int cases, std::uint64_t seed) {
  LawResult idem{"idempotency"}, comm{"commutativity"}, bound{"boundedness"},
      mono{"monotonicity under dominance"};
  Gen g(seed);
  for (int i = 0; i < cases; ++i) {
    const Rung q = g.rung();
    const OperatorFamily f = g.family(false);
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    const WeightVector w = g.weights(n);
    auto v = g.values(n, q);
    const std::string tag = to_string(f) + " q=" + std::to_string(q.value());

    idem.record(max_abs_diff(owa_aggregate(std::vector<Ivqrofn>(n, v[0]), w, f, q), v[0]),
                kLawTolerance, tag);

    const Ivqrofn agg = owa_aggregate(v, w, f, q);
    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
    comm.record(max_abs_diff(owa_aggregate(shuffled, w, f, q), agg), kLawTolerance, tag);

    // Component-wise envelope: lower bounds of mu, upper bounds of nu.
    double lo[4] = {1, 1, 0, 0}, hi[4] = {0, 0, 1, 1};
    for (const auto& x : v) {
      const auto c = x.components();
      lo[0] = std::min(lo[0], c[0]);
      lo[1] = std::min(lo[1], c[1]);
      lo[2] = std::max(lo[2], c[2]);
      lo[3] = std::max(lo[3], c[3]);
      hi[0] = std::max(hi[0], c[0]);
      hi[1] = std::max(hi[1], c[1]);
      hi[2] = std::min(hi[2], c[2]);
      hi[3] = std::min(hi[3], c[3]);
    }
    const auto c = agg.components();
    double excess = 0.0;
    for (int j = 0; j < 2; ++j) {
      excess = std::max({excess, lo[j] - c[j], c[j] - hi[j]});
      excess = std::max({excess, c[j + 2] - lo[j + 2], hi[j + 2] - c[j + 2]});
    }
    bound.record(std::max(excess, 0.0), kLawTolerance, tag + describe(" agg=", agg));

    // Monotonicity: b dominated by a cell-by-cell, same ordering of the cells.
    std::vector<Ivqrofn> up;
    for (const auto& x : v) up.push_back(g.dominating(x, q));
    if (owa_order(v, q) != owa_order(up, q)) {
      ++mono.skipped;
    } else {
      const Ivqrofn big = owa_aggregate(up, w, f, q);
      const bool ok = compare(big, agg, q) != std::weak_ordering::less;
      mono.record_bool(ok, tag + describe(" small=", agg) + describe(" big=", big));
    }
  }
  return {idem, comm, bound, mono};
}

// Admissibility of every operation result. For Weber with lambda > 0 the
// sum and k > 1 scaling leave the region on part of the input space; the
// ordered aggregate with unit-sum weights stays inside it.
struct ClosureOptions {
  int cases = 10000;
  std::uint64_t seed = 3;
};

inline std::vector<LawResult> closure_laws(const ClosureOptions& opt) {
  std::vector<LawResult> out;
  const std::vector<std::pair<std::string, OperatorFamily>> families{
      {"weber", Weber{2.0}}, {"algebraic", Algebraic{}}, {"frank", Frank{2.0}},
      {"hamacher", Hamacher{2.0}}};
  for (const auto& [name, base] : families) {
    LawResult add{name + " sum"}, mul{name + " product"}, sc{name + " scalar"},
        pw{name + " power"}, agg{name + " ordered aggregate"};
    Gen g(opt.seed);
    for (int i = 0; i < opt.cases; ++i) {
      const Rung q = g.rung();
      OperatorFamily f = base;
      if (std::holds_alternative<Weber>(f)) f = Weber{g.lambda()};
      if (std::holds_alternative<Frank>(f)) f = Frank{g.coin() ? g.uniform(0.1, 0.9) : g.uniform(1.1, 20.0)};
      if (std::holds_alternative<Hamacher>(f)) f = Hamacher{g.uniform(0.1, 10.0)};
      const FamilyOps ops(f, q);
      const Ivqrofn a = g.value(q), b = g.value(q);
      const double k = g.uniform(0.01, 3.0);
      const std::string tag = to_string(f) + " q=" + std::to_string(q.value()) +
                              describe(" a=", a) + describe(" b=", b);
      add.record_bool(validate(ops.add(a, b), q), tag);
      mul.record_bool(validate(ops.mul(a, b), q), tag);
      sc.record_bool(validate(ops.scalar(k, a), q), tag + " k=" + std::to_string(k));
      pw.record_bool(validate(ops.pow(a, k), q), tag + " k=" + std::to_string(k));
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
      agg.record_bool(validate(owa_aggregate(g.values(n, q), g.weights(n), f, q), q), tag);
    }
    for (auto* r : {&add, &mul, &sc, &pw, &agg}) out.push_back(*r);
  }
  return out;
}

}  // namespace ivqrof::testing
