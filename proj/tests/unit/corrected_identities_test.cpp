#include <gtest/gtest.h>

#include "builders.hpp"
#include "feqlab/corrected_identities.hpp"
#include "feqlab/error.hpp"
#include "feqlab/frobenius_euler.hpp"

namespace feqlab {
namespace {

using testing::R;
using testing::rat;

XPolynomial q_power_plus_one(unsigned k) { return XPolynomial::constant(RationalFunction(IntPolynomial::monomial(1, k) + IntPolynomial{1})); }

TEST(CorrectedSymmetry, ZeroOrderSidesAreOnePlusQPower) {
  for (unsigned w1 : {1u, 3u, 5u}) {
    for (unsigned w2 : {1u, 3u, 7u}) {
      const IdentitySides s = corrected_symmetry_sides(0, w1, w2);
      EXPECT_EQ(s.lhs, q_power_plus_one(w1 * w2)) << w1 << " " << w2;
      EXPECT_EQ(s.rhs, q_power_plus_one(w1 * w2));
      EXPECT_TRUE(corrected_symmetry(0, w1, w2).holds());
    }
  }
}

TEST(CorrectedSymmetry, FirstOrderSliceAtXZero) {
  const IdentitySides s = corrected_symmetry_sides(1, 3, 1);
  const RationalFunction expected = R({0, -1, 1, -1});  // -q(q^2 - q + 1)
  EXPECT_EQ(s.lhs.evaluate(rat(0)), expected);
  EXPECT_EQ(s.rhs.evaluate(rat(0)), expected);
  EXPECT_TRUE(corrected_symmetry(1, 3, 1).holds());
}

TEST(CorrectedSymmetry, EqualWeightsAndParams) {
  const auto r = corrected_symmetry(2, 5, 5);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.id, IdentityId::kCorrectedSymmetry);
  EXPECT_EQ(r.param("w1"), 5);
  EXPECT_EQ(r.param("w2"), 5);
}

TEST(CorrectedShift, Examples) {
  const IdentitySides s = corrected_shift_sides(0, 3, 1);
  EXPECT_EQ(s.lhs, q_power_plus_one(3));
  EXPECT_EQ(s.rhs, q_power_plus_one(3));
  EXPECT_TRUE(corrected_shift_symmetry(1, 3, 3).holds());
  EXPECT_TRUE(corrected_shift_symmetry(2, 3, 5).holds());
}

TEST(CorrectedMultiplication, Examples) {
  const IdentitySides s1 = corrected_multiplication_sides(1, 3);
  EXPECT_EQ(s1.lhs.evaluate(rat(0)), R({0, -1, 1, -1}));
  EXPECT_EQ(s1.rhs.evaluate(rat(0)), R({0, -1, 1, -1}));
  const IdentitySides s0 = corrected_multiplication_sides(0, 5);
  EXPECT_EQ(s0.lhs, q_power_plus_one(5));
  EXPECT_EQ(s0.rhs, q_power_plus_one(5));
  for (unsigned n = 0; n <= 5; ++n) {
    const IdentitySides s = corrected_multiplication_sides(n, 1);
    const XPolynomial expected = fe_dual_poly(n, 1) * R({1, 1});
    EXPECT_EQ(s.lhs, expected);
    EXPECT_EQ(s.rhs, expected);
  }
}

// x = 0 slices of [2]_{q^3} H_n(-q^{-1}, 3x), frozen from sympy.
TEST(CorrectedMultiplication, FrozenSlices) {
  EXPECT_EQ(corrected_multiplication_sides(2, 3).rhs.evaluate(rat(0)), R({0, -1, 2, -2, 1}, {1, 1}));
  EXPECT_EQ(corrected_multiplication_sides(3, 3).rhs.evaluate(rat(0)),
            R({0, -1, 5, -6, 5, -1}, {1, 2, 1}));
  for (unsigned n = 0; n <= 3; ++n) EXPECT_TRUE(corrected_multiplication(n, 3).holds());
}

TEST(CorrectedMultiplication, MatchesShiftWithUnitSecondWeight) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned w : {1u, 3u, 5u, 7u}) {
      const IdentitySides a = corrected_multiplication_sides(n, w);
      const IdentitySides b = corrected_shift_sides(n, w, 1);
      EXPECT_EQ(a.lhs - a.rhs, b.lhs - b.rhs);
    }
  }
}

TEST(CorrectedIdentities, RejectEvenWeights) {
  EXPECT_THROW(corrected_symmetry(1, 2, 3), PreconditionError);
  EXPECT_THROW(corrected_shift_symmetry(1, 3, 4), PreconditionError);
  EXPECT_THROW(corrected_multiplication(1, 6), PreconditionError);
}

TEST(CorrectedIdentities, AtQ1MatchesPrintedAtQ1) {
  for (unsigned n = 0; n <= 4; ++n) {
    EXPECT_TRUE(corrected_symmetry(n, 3, 5, EvalMode::at_q1()).holds());
    EXPECT_TRUE(corrected_shift_symmetry(n, 5, 3, EvalMode::at_q1()).holds());
  }
}

}  // namespace
}  // namespace feqlab
