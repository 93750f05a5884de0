#include <gtest/gtest.h>

#include "builders.hpp"
#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"
#include "feqlab/frobenius_euler.hpp"
#include "feqlab/truncated_series.hpp"

namespace feqlab {
namespace {

using testing::P;
using testing::R;
using testing::rat;

TEST(FeNumber, SpecExamples) {
  EXPECT_EQ(fe_number(0), RationalFunction(1));
  EXPECT_EQ(fe_number(1), R({1}, {-1, 1}));
  EXPECT_EQ(fe_number(3), R({1, 4, 1}, {-1, 3, -3, 1}));
}

// Factored forms derived with sympy from the t^n/n! coefficients of
// (1 - q)/(e^t - q).
TEST(FeNumber, MatchesFrozenSeriesExpansion) {
  EXPECT_EQ(fe_number(2), R({1, 1}, {1, -2, 1}));
  EXPECT_EQ(fe_number(4), R({1, 11, 11, 1}) / pow(R({-1, 1}), 4));
}

TEST(FeNumberTable, DenominatorIsExactPowerOfQMinusOne) {
  const FeNumberTable t(10);
  EXPECT_EQ(t.at(0), RationalFunction(1));
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(t.at(n).denominator(), pow(P({-1, 1}), n)) << n;
    EXPECT_EQ(t.at(n).numerator(), t.numerator(n)) << n;
  }
  EXPECT_THROW(t.at(11), PreconditionError);
}

TEST(FePoly, SpecExamples) {
  EXPECT_EQ(fe_poly(0), XPolynomial::constant(1));
  EXPECT_EQ(fe_poly(1), (XPolynomial{R({1}, {-1, 1}), rat(1)}));
  EXPECT_EQ(fe_poly(2), (XPolynomial{R({1, 1}, {1, -2, 1}), R({2}, {-1, 1}), rat(1)}));
}

TEST(FePolyTable, MonicWithNumberAsConstantTerm) {
  const FeNumberTable numbers(8);
  const FePolyTable polys(numbers);
  for (unsigned n = 0; n <= 8; ++n) {
    EXPECT_EQ(polys.at(n).degree(), static_cast<int>(n));
    EXPECT_EQ(polys.at(n).coefficient(n), RationalFunction(1));
    EXPECT_EQ(polys.at(n).coefficient(0), numbers.at(n));
  }
}

TEST(FeDual, SpecExamples) {
  EXPECT_EQ(fe_dual_number(0, 1), RationalFunction(1));
  EXPECT_EQ(fe_dual_number(1, 1), R({0, -1}, {1, 1}));
  EXPECT_EQ(fe_dual_number(2, 1), R({0, -1, 1}, {1, 2, 1}));
  EXPECT_EQ(fe_dual_poly(1, 1), (XPolynomial{R({0, -1}, {1, 1}), rat(1)}));
  EXPECT_EQ(fe_dual_poly(0, 7), XPolynomial::constant(1));
  EXPECT_EQ(fe_dual_poly(2, 1), (XPolynomial{R({0, -1, 1}, {1, 2, 1}), R({0, -2}, {1, 1}), rat(1)}));
}

// Frozen from sympy: coefficients of (1 + q)/(q e^t + 1).
TEST(FeDual, MatchesFrozenMoments) {
  EXPECT_EQ(fe_dual_number(3, 1), R({0, -1, 4, -1}, {1, 3, 3, 1}));
  EXPECT_EQ(fe_dual_number(4, 1), R({0, -1, 11, -11, 1}, {1, 4, 6, 4, 1}));
}

TEST(FeDual, HigherWeightIsSubstitutionOfFirstWeight) {
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(fe_dual_number(n, 3), ratfun_subst_qpow(fe_dual_number(n, 1), 3)) << n;
  }
  const FeDualTable t(5, 5);
  EXPECT_EQ(t.w(), 5u);
  EXPECT_EQ(t.number(4), fe_dual_number(4, 5));
  EXPECT_EQ(t.poly(4), fe_dual_poly(4, 5));
  EXPECT_THROW(FeDualTable(3, 0), PreconditionError);
}

TEST(FeSeriesOracle, SpecExamples) {
  EXPECT_EQ(fe_series_oracle(2, BigRational(2)).to_string(), "3/1");
  EXPECT_EQ(fe_series_oracle(0, BigRational(-1)).to_string(), "1/1");
  EXPECT_EQ(fe_series_oracle(3, BigRational(-1)).to_string(), "1/4");
}

TEST(FeSeriesOracle, RejectsUEqualOne) {
  EXPECT_THROW(fe_series_oracle(2, BigRational(1)), PreconditionError);
  try {
    fe_series_oracle(2, BigRational(1));
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "parameter u = 1 is excluded");
  }
}

TEST(EulerianPoly, SpecExamples) {
  EXPECT_EQ(eulerian_poly(1), P({1}));
  EXPECT_EQ(eulerian_poly(2), P({1, 1}));
  EXPECT_EQ(eulerian_poly(3), P({1, 4, 1}));
  EXPECT_EQ(eulerian_poly(4), P({1, 11, 11, 1}));
}

TEST(EulerianPoly, CapAndDomain) {
  EXPECT_THROW(eulerian_poly(9), PreconditionError);
  EXPECT_THROW(eulerian_poly(0), PreconditionError);
  EXPECT_EQ(eulerian_poly(5, 5), P({1, 26, 66, 26, 1}));
  EXPECT_THROW(eulerian_poly(5, 4), PreconditionError);
  try {
    eulerian_poly(9);
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "brute-force cap exceeded");
  }
}

TEST(AppellPolynomial, BuildsBinomialAssembly) {
  const std::vector<RationalFunction> numbers{rat(1), rat(2), rat(3)};
  // x^2 + 2*2x + 3
  EXPECT_EQ(appell_polynomial(numbers, 2), (XPolynomial{rat(3), rat(4), rat(1)}));
}

}  // namespace
}  // namespace feqlab
