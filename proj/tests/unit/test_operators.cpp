#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "case_reference.hpp"
#include "generators.hpp"
#include "ivqrof/operators.hpp"

using namespace ivqrof;
using ivqrof::testing::Gen;
using ivqrof::testing::max_abs_diff;

namespace {

const Rung q2(2.0);
const Ivqrofn kVHI{0.80, 0.90, 0.10, 0.20};
const Ivqrofn kAI{0.45, 0.55, 0.45, 0.55};
const Ivqrofn kZero = Ivqrofn::negative_ideal();  // additive identity
const Ivqrofn kOne = Ivqrofn::positive_ideal();   // multiplicative identity

}  // namespace

TEST(Family, ParseAndPrint) {
  EXPECT_EQ(parse_family("weber"), OperatorFamily(Weber{2.0}));
  EXPECT_EQ(parse_family("weber:0.5"), OperatorFamily(Weber{0.5}));
  EXPECT_EQ(parse_family("algebraic"), OperatorFamily(Algebraic{}));
  EXPECT_EQ(parse_family("frank:3"), OperatorFamily(Frank{3.0}));
  EXPECT_EQ(parse_family("hamacher"), OperatorFamily(Hamacher{2.0}));
  EXPECT_EQ(to_string(OperatorFamily(Weber{2.0})), "weber:2");
  EXPECT_THROW(parse_family("yager"), Error);
  EXPECT_THROW(parse_family("weber:x"), Error);
}

TEST(Family, ParameterDomains) {
  auto kind_of = [](const OperatorFamily& f) {
    try {
      validate_family(f);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;  // sentinel: no throw
  };
  EXPECT_EQ(kind_of(Weber{0.0}), ErrorKind::InvalidLambda);
  EXPECT_EQ(kind_of(Weber{-1.0}), ErrorKind::InvalidLambda);
  EXPECT_EQ(kind_of(Weber{-0.5}), ErrorKind::Io);
  EXPECT_EQ(kind_of(Frank{1.0}), ErrorKind::InvalidFamilyParameter);
  EXPECT_EQ(kind_of(Frank{0.0}), ErrorKind::InvalidFamilyParameter);
  EXPECT_EQ(kind_of(Hamacher{0.0}), ErrorKind::InvalidFamilyParameter);
  EXPECT_THROW(FamilyOps(Frank{1.0}, q2), Error);
}

TEST(Weights, Validation) {
  EXPECT_NO_THROW(WeightVector({0.25, 0.75}));
  EXPECT_THROW(WeightVector({0.5, 0.6}), Error);
  EXPECT_THROW(WeightVector({-0.1, 1.1}), Error);
  EXPECT_THROW(WeightVector({}), Error);
  const auto w = WeightVector::normalized({1, 3});
  EXPECT_DOUBLE_EQ(w[1], 0.75);
  EXPECT_THROW(WeightVector::normalized({0, 0}), Error);
  EXPECT_DOUBLE_EQ(WeightVector::uniform(4)[2], 0.25);
}

TEST(WeberAdd, IdentityAndCommutativity) {
  Gen g(21);
  for (int i = 0; i < 1000; ++i) {
    const Rung q = g.rung();
    const double l = g.lambda();
    const Ivqrofn a = g.value(q), b = g.value(q);
    EXPECT_LT(max_abs_diff(weber_add(a, kZero, l, q), a), 1e-12);
    EXPECT_EQ(weber_add(a, b, l, q), weber_add(b, a, l, q));
  }
}

TEST(WeberAdd, Errors) {
  EXPECT_THROW(weber_add(kVHI, kAI, 0.0, q2), Error);
  EXPECT_THROW(weber_add(kVHI, kAI, -1.5, q2), Error);
  EXPECT_THROW(weber_add({0.90, 0.99, 0.01, 0.05}, kAI, 2.0, Rung(1.0)), Error);
}

TEST(WeberMul, IdentityCommutativityDuality) {
  Gen g(22);
  for (int i = 0; i < 1000; ++i) {
    const Rung q = g.rung();
    const double l = g.lambda();
    const Ivqrofn a = g.value(q), b = g.value(q);
    EXPECT_LT(max_abs_diff(weber_mul(a, kOne, l, q), a), 1e-12);
    EXPECT_EQ(weber_mul(a, b, l, q), weber_mul(b, a, l, q));
    EXPECT_EQ(weber_mul(a, b, l, q), weber_add(a.swapped(), b.swapped(), l, q).swapped());
    EXPECT_EQ(weber_pow(a, 0.7, l, q), weber_scalar(0.7, a.swapped(), l, q).swapped());
  }
}

TEST(WeberScalar, UnitScalarAndErrors) {
  Gen g(23);
  for (int i = 0; i < 1000; ++i) {
    const Rung q = g.rung();
    const double l = g.lambda();
    const Ivqrofn a = g.value(q);
    EXPECT_LT(max_abs_diff(weber_scalar(1.0, a, l, q), a), 1e-12);
    EXPECT_LT(max_abs_diff(weber_pow(a, 1.0, l, q), a), 1e-12);
  }
  try {
    weber_scalar(0.0, kAI, 2.0, q2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonpositiveScalar);
  }
  EXPECT_THROW(weber_pow(kAI, -1.0, 2.0, q2), Error);
}

TEST(Algebraic, IdentitiesAndDispatch) {
  Gen g(24);
  const FamilyOps ops(Algebraic{}, q2);
  for (int i = 0; i < 1000; ++i) {
    const Ivqrofn a = g.value(q2), b = g.value(q2);
    EXPECT_LT(max_abs_diff(algebraic_add(a, kZero, q2), a), 1e-12);
    EXPECT_LT(max_abs_diff(algebraic_scalar(1.0, a, q2), a), 1e-12);
    EXPECT_LT(max_abs_diff(algebraic_mul(a, kOne, q2), a), 1e-12);
    EXPECT_EQ(ops.add(a, b), algebraic_add(a, b, q2));
    EXPECT_EQ(ops.mul(a, b), algebraic_mul(a, b, q2));
    EXPECT_EQ(ops.scalar(0.3, a), algebraic_scalar(0.3, a, q2));
    EXPECT_EQ(ops.pow(a, 0.3), algebraic_pow(a, 0.3, q2));
  }
}

TEST(FamilyOpsDispatch, WeberMatchesFreeFunctions) {
  Gen g(25);
  for (int i = 0; i < 500; ++i) {
    const double l = g.uniform(0.1, 5.0);
    const FamilyOps ops(Weber{l}, q2);
    const Ivqrofn a = g.value(q2), b = g.value(q2);
    EXPECT_EQ(ops.add(a, b), weber_add(a, b, l, q2));
    EXPECT_EQ(ops.mul(a, b), weber_mul(a, b, l, q2));
    EXPECT_EQ(ops.scalar(0.4, a), weber_scalar(0.4, a, l, q2));
    EXPECT_EQ(ops.pow(a, 0.4), weber_pow(a, 0.4, l, q2));
  }
}

TEST(FamilyLimits, FrankNearOneApproachesAlgebraic) {
  Gen g(26);
  const FamilyOps frank(Frank{1.0 + 1e-6}, q2);
  const FamilyOps alg(Algebraic{}, q2);
  for (int i = 0; i < 2000; ++i) {
    const Ivqrofn a = g.value(q2), b = g.value(q2);
    const double k = g.uniform(0.05, 1.0);
    ASSERT_LT(max_abs_diff(frank.add(a, b), alg.add(a, b)), 1e-4);
    ASSERT_LT(max_abs_diff(frank.mul(a, b), alg.mul(a, b)), 1e-4);
    ASSERT_LT(max_abs_diff(frank.scalar(k, a), alg.scalar(k, a)), 1e-4);
  }
}

TEST(FamilyLimits, HamacherOneIsAlgebraic) {
  Gen g(27);
  const FamilyOps ham(Hamacher{1.0}, q2);
  const FamilyOps alg(Algebraic{}, q2);
  for (int i = 0; i < 2000; ++i) {
    const Ivqrofn a = g.value(q2), b = g.value(q2);
    const double k = g.uniform(0.05, 3.0);
    ASSERT_LT(max_abs_diff(ham.add(a, b), alg.add(a, b)), 1e-12);
    ASSERT_LT(max_abs_diff(ham.mul(a, b), alg.mul(a, b)), 1e-12);
    ASSERT_LT(max_abs_diff(ham.scalar(k, a), alg.scalar(k, a)), 1e-12);
    ASSERT_LT(max_abs_diff(ham.pow(a, k), alg.pow(a, k)), 1e-12);
  }
}

TEST(Owa, IdempotentForEveryFamily) {
  Gen g(28);
  for (int i = 0; i < 2000; ++i) {
    const Rung q = g.rung();
    const OperatorFamily f = g.family();
    const Ivqrofn a = g.value(q);
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    const std::vector<Ivqrofn> same(n, a);
    ASSERT_LT(max_abs_diff(owa_aggregate(same, g.weights(n), f, q), a), 1e-10) << to_string(f);
  }
}

TEST(Owa, PermutationInvariant) {
  Gen g(29);
  for (int i = 0; i < 2000; ++i) {
    const Rung q = g.rung();
    const OperatorFamily f = g.family();
    auto v = g.values(static_cast<std::size_t>(g.integer(1, 6)), q);
    const WeightVector w = g.weights(v.size());
    const Ivqrofn base = owa_aggregate(v, w, f, q);
    std::shuffle(v.begin(), v.end(), g.engine());
    ASSERT_EQ(owa_aggregate(v, w, f, q), base);
  }
}

TEST(Owa, OrderIsStableOnTies) {
  const std::vector<Ivqrofn> v{kAI, kVHI, kAI, kVHI};
  EXPECT_EQ(owa_order(v, q2), (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(Owa, ExpertCellOfTheCase) {
  // x1, c1 across the four experts.
  const std::vector<Ivqrofn> cell{kAI, {0.90, 0.95, 0.05, 0.10}, {0.90, 0.95, 0.05, 0.10},
                                  {0.90, 0.95, 0.05, 0.10}};
  const auto& phi = reference::kExpertWeights;
  const Ivqrofn r = owa_aggregate(cell, WeightVector({phi.begin(), phi.end()}), Weber{2.0}, q2);
  // The published cell is truncated, not rounded, to two places.
  const std::array<double, 4> printed{0.78, 0.84, 0.21, 0.27};
  const auto c = r.components();
  for (int k = 0; k < 4; ++k) {
    EXPECT_GE(c[k], printed[k] - 1e-12) << to_string(r);
    EXPECT_LT(c[k], printed[k] + 0.01) << to_string(r);
  }
}

TEST(Owa, Errors) {
  const std::vector<Ivqrofn> v{kAI, kVHI};
  try {
    owa_aggregate(v, WeightVector({1.0}), Weber{2.0}, q2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
  const std::vector<Ivqrofn> bad{{0.90, 0.99, 0.01, 0.05}};
  EXPECT_THROW(owa_aggregate(bad, WeightVector({1.0}), Weber{2.0}, Rung(1.0)), Error);
}

TEST(TConorm, ScalarForms) {
  EXPECT_DOUBLE_EQ(weber_tconorm(0.3, 0.0, 2.0), 0.3);
  EXPECT_DOUBLE_EQ(weber_tconorm(0.5, 0.5, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(weber_tnorm(0.3, 1.0, 2.0), 0.3);
  EXPECT_DOUBLE_EQ(weber_tnorm(0.2, 0.2, 2.0), 0.0);
}
