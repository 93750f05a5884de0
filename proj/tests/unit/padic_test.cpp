#include <gtest/gtest.h>

#include <vector>

#include "builders.hpp"
#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"
#include "feqlab/frobenius_euler.hpp"
#include "feqlab/padic.hpp"

namespace feqlab {
namespace {

PAdicNumber pa(long v, const PAdicContext& ctx) { return PAdicNumber(BigInt(v), ctx); }

TEST(PAdicContext, Validation) {
  EXPECT_THROW(PAdicContext(2, 3), PreconditionError);
  EXPECT_THROW(PAdicContext(9, 3), PreconditionError);
  EXPECT_THROW(PAdicContext(3, 0), PreconditionError);
  const PAdicContext ctx(5, 3);
  EXPECT_EQ(ctx.modulus(), BigInt(125));
}

TEST(PAdicNumber, ReducesAndMeasuresValuation) {
  const PAdicContext ctx(3, 4);
  EXPECT_EQ(pa(-1, ctx).residue(), BigInt(80));
  EXPECT_EQ(pa(18, ctx).valuation(), 2u);
  EXPECT_EQ(pa(0, ctx).valuation(), 4u);
  EXPECT_EQ(pa(81, ctx).valuation(), 4u);
  EXPECT_FALSE(pa(6, ctx).is_unit());
  EXPECT_EQ((pa(40, ctx) * pa(4, ctx)).residue(), BigInt(79));
  EXPECT_THROW(pa(1, ctx) + pa(1, PAdicContext(3, 2)), Error);
}

TEST(RatToPadic, SpecExamples) {
  const PAdicContext ctx(3, 2);
  EXPECT_EQ(rat_to_padic(BigRational::parse("1/2"), ctx).residue(), BigInt(5));
  EXPECT_EQ(rat_to_padic(BigRational::parse("-4/5"), ctx).residue(), BigInt(1));
  EXPECT_THROW(rat_to_padic(BigRational::parse("1/3"), ctx), PreconditionError);
  try {
    rat_to_padic(BigRational::parse("1/3"), ctx);
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "not a p-adic integer at this prime");
  }
}

TEST(PadicInv, SpecExamples) {
  const PAdicContext ctx(3, 2);
  EXPECT_EQ(padic_inv(pa(2, ctx)).residue(), BigInt(5));
  EXPECT_EQ(padic_inv(pa(1, ctx)).residue(), BigInt(1));
  EXPECT_THROW(padic_inv(pa(3, ctx)), PreconditionError);
}

TEST(FermionicRiemannSum, ConstantIsOneAtEveryLevel) {
  for (unsigned long p : {3ul, 5ul}) {
    const PAdicContext ctx(p, 4);
    for (unsigned N = 1; N <= 5; ++N) {
      EXPECT_EQ(fermionic_riemann_sum(0, BigRational(static_cast<long>(1 + p)), N, ctx).residue(), BigInt(1));
    }
  }
}

TEST(FermionicRiemannSum, RejectsQNotCongruentToOne) {
  const PAdicContext ctx(3, 3);
  EXPECT_THROW(fermionic_riemann_sum(1, BigRational(2), 1, ctx), PreconditionError);
  EXPECT_THROW(fermionic_riemann_sum(1, BigRational(4), 0, ctx), PreconditionError);
}

// Integral of x^n against the fermionic q-measure is H_n(-q^{-1}) read at q.
PAdicNumber closed_form(unsigned n, long q, const PAdicContext& ctx) {
  return rat_to_padic(ratfun_eval(fe_dual_number(n, 1), BigRational(q)), ctx);
}

struct LimitCase {
  unsigned long p;
  unsigned n;
  unsigned stabilized_at;
  long value;
};

TEST(FermionicMomentLimit, FrozenValuesAtPrecisionFour) {
  const std::vector<LimitCase> cases = {
      {3, 0, 1, 1},   {3, 1, 4, 64},  {3, 2, 4, 75},  {3, 3, 1, 22},  {3, 4, 4, 12},  {3, 5, 3, 37},
      {3, 6, 3, 30},  {5, 0, 1, 1},   {5, 1, 4, 267}, {5, 2, 4, 345}, {5, 3, 3, 479}, {5, 4, 4, 310},
      {5, 5, 1, 17},  {5, 6, 4, 120},
  };
  for (const auto& c : cases) {
    const PAdicContext ctx(c.p, 4);
    const long q = static_cast<long>(1 + c.p);
    const MomentLimit lim = fermionic_moment_limit(c.n, BigRational(q), ctx);
    EXPECT_EQ(lim.stabilized_at, c.stabilized_at) << c.p << " " << c.n;
    EXPECT_EQ(lim.value.residue(), BigInt(c.value)) << c.p << " " << c.n;
    EXPECT_EQ(lim.value, closed_form(c.n, q, ctx)) << c.p << " " << c.n;
  }
}

TEST(FermionicMomentLimit, SmallExamples) {
  const PAdicContext ctx3(3, 2);
  const MomentLimit a = fermionic_moment_limit(1, BigRational(4), ctx3);
  EXPECT_EQ(a.value.residue(), BigInt(1));
  EXPECT_EQ(a.stabilized_at, 2u);
  const PAdicContext ctx5(5, 3);
  const MomentLimit b = fermionic_moment_limit(2, BigRational(6), ctx5);
  EXPECT_EQ(b.value.residue(), BigInt(95));
  EXPECT_EQ(b.value, rat_to_padic(BigRational::parse("30/49"), ctx5));
}

TEST(FermionicMomentLimit, LevelCapIsReported) {
  const PAdicContext ctx(3, 4);
  const MomentSweep sweep = fermionic_moment_sweep(2, BigRational(4), ctx, 3);
  EXPECT_EQ(sweep.sums.size(), 3u);
  EXPECT_FALSE(sweep.stabilized_at.has_value());
  try {
    fermionic_moment_limit(2, BigRational(4), ctx, 3);
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "did not stabilize");
  }
}

TEST(FermionicRiemannSum, ErrorBoundAgainstClosedForm) {
  // The level-N sum agrees with the integral to p-adic order N.
  for (unsigned long p : {3ul, 5ul}) {
    const PAdicContext ctx(p, 4);
    const long q = static_cast<long>(1 + p);
    for (unsigned n = 0; n <= 6; ++n) {
      const PAdicNumber exact = closed_form(n, q, ctx);
      for (unsigned N = 1; N <= 5; ++N) {
        const PAdicNumber s = fermionic_riemann_sum(n, BigRational(q), N, ctx);
        EXPECT_GE((s - exact).valuation(), std::min(N, 4u)) << p << " " << n << " " << N;
      }
    }
  }
}

// Consecutive differences need not have growing valuation: here the first
// two levels already agree while the third moves by 3^3.
TEST(FermionicRiemannSum, ConsecutiveDifferencesAreNotMonotone) {
  const PAdicContext ctx(3, 4);
  const MomentSweep sweep = fermionic_moment_sweep(5, BigRational(4), ctx);
  ASSERT_GE(sweep.sums.size(), 3u);
  EXPECT_EQ(sweep.sums[1], sweep.sums[0]);
  EXPECT_EQ((sweep.sums[2] - sweep.sums[1]).valuation(), 3u);
  EXPECT_EQ(sweep.stabilized_at, 3u);
}

TEST(FermionicRiemannSum, FunctionalEquationOfTheMeasure) {
  // q I(f(x+1)) + I(f) = [2]_q f(0), with f(x) = x^n.
  for (unsigned long p : {3ul, 5ul}) {
    const PAdicContext ctx(p, 4);
    const long q = static_cast<long>(1 + p);
    const PAdicNumber qp = pa(q, ctx);
    for (unsigned n = 0; n <= 6; ++n) {
      PAdicNumber shifted = pa(0, ctx);
      for (unsigned k = 0; k <= n; ++k) {
        shifted += PAdicNumber(binomial(n, k), ctx) * closed_form(k, q, ctx);
      }
      const PAdicNumber lhs = qp * shifted + closed_form(n, q, ctx);
      EXPECT_EQ(lhs, pa(n == 0 ? 1 + q : 0, ctx)) << p << " " << n;
    }
  }
}

TEST(FermionicRiemannSum, GeometricWeightShiftsTheParameter) {
  // With weight a^x the measure parameter becomes qa, rescaled by
  // [2]_q / [2]_{qa}.
  const PAdicContext ctx(3, 3);
  const BigRational q(4);
  const BigRational a(7);
  const BigRational qa = q * a;
  for (unsigned n = 0; n <= 4; ++n) {
    std::vector<BigRational> f(n + 1, BigRational(0));
    f[n] = BigRational(1);
    const PAdicNumber sum = fermionic_riemann_sum(f, a, q, 5, ctx);
    const BigRational expected =
        (BigRational(1) + q) / (BigRational(1) + qa) * ratfun_eval(fe_dual_number(n, 1), qa);
    EXPECT_EQ(sum, rat_to_padic(expected, ctx)) << n;
  }
}

}  // namespace
}  // namespace feqlab
