#include "feqlab/qsums.hpp"

#include <vector>

#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"

namespace feqlab {

IntPolynomial q_bracket(unsigned x) { return IntPolynomial(std::vector<BigInt>(x, BigInt(1))); }

RationalFunction q_bracket_neg(unsigned x) {
  // 1 - (-q)^x
  IntPolynomial num = IntPolynomial{1} - IntPolynomial::monomial(x % 2 == 0 ? 1 : -1, x);
  return ratfun_reduce(num, IntPolynomial{1, 1});
}

IntPolynomial alt_power_sum(unsigned k, unsigned m, unsigned w) {
  if (w == 0) throw PreconditionError("w must be positive");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(m) * w + 1);
  for (unsigned l = 0; l <= m; ++l) {
    BigInt term = ipow(BigInt(l), k);
    coeffs[static_cast<std::size_t>(l) * w] = (l % 2 == 0) ? term : BigInt(-term);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace feqlab
