#include <gtest/gtest.h>

#include "builders.hpp"
#include "feqlab/combinatorics.hpp"
#include "feqlab/qsums.hpp"
#include "feqlab/truncated_series.hpp"

namespace feqlab {
namespace {

using testing::P;
using testing::R;

TEST(QBracket, Examples) {
  EXPECT_EQ(q_bracket(3), P({1, 1, 1}));
  EXPECT_EQ(q_bracket(0), P({}));
  EXPECT_EQ(q_bracket(2), P({1, 1}));
}

TEST(QBracketNeg, Examples) {
  EXPECT_EQ(q_bracket_neg(2), R({1, -1}));
  EXPECT_EQ(q_bracket_neg(3), R({1, -1, 1}));
  EXPECT_TRUE(q_bracket_neg(0).is_zero());
  EXPECT_EQ(q_bracket_neg(5), R({1, 0, 0, 0, 0, 1}, {1, 1}));
}

TEST(AltPowerSum, Examples) {
  EXPECT_EQ(alt_power_sum(1, 2, 1), P({0, -1, 2}));
  EXPECT_EQ(alt_power_sum(0, 2, 1), P({1, -1, 1}));
  EXPECT_EQ(alt_power_sum(3, 0, 5), P({}));
  EXPECT_EQ(alt_power_sum(0, 0, 5), P({1}));
  EXPECT_EQ(alt_power_sum(2, 3, 1), P({0, -1, 4, -9}));
}

TEST(AltPowerSum, Telescoping) {
  for (unsigned w : {1u, 3u}) {
    for (unsigned k = 0; k <= 5; ++k) {
      for (unsigned m = 0; m <= 6; ++m) {
        IntPolynomial step = IntPolynomial::monomial(ipow(m + 1, k), w * (m + 1));
        if ((m + 1) % 2 == 1) step = -step;
        EXPECT_EQ(alt_power_sum(k, m, w) + step, alt_power_sum(k, m + 1, w)) << k << " " << m << " " << w;
      }
    }
  }
}

TEST(AltPowerSum, SubstitutionCoherence) {
  for (unsigned w : {1u, 3u, 5u, 7u}) {
    for (unsigned k = 0; k <= 4; ++k) {
      for (unsigned m = 0; m <= 5; ++m) {
        EXPECT_EQ(alt_power_sum(k, m, w), alt_power_sum(k, m, 1).substitute_power(w));
      }
    }
  }
}

TEST(AltPowerSum, GeneratingFunctionConsistency) {
  // sum_k S_{k,q}(n-1) t^k/k! = sum_{l<n} (-1)^l q^l e^{lt}, odd n.
  for (unsigned n : {1u, 3u, 5u}) {
    for (unsigned order : {0u, 4u, 10u}) {
      TruncatedSeries rhs(order);
      for (unsigned l = 0; l < n; ++l) {
        RationalFunction c(IntPolynomial::monomial(l % 2 == 0 ? 1 : -1, l));
        rhs += TruncatedSeries::exp_linear(order, XPolynomial::constant(static_cast<long>(l))) * c;
      }
      std::vector<XPolynomial> coeffs;
      for (unsigned k = 0; k <= order; ++k) coeffs.push_back(XPolynomial::constant(alt_power_sum(k, n - 1, 1)));
      EXPECT_EQ(TruncatedSeries(order, coeffs), rhs) << n << " " << order;
    }
  }
}

}  // namespace
}  // namespace feqlab
