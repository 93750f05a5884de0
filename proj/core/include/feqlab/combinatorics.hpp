#pragma once

#include "feqlab/big_rational.hpp"

namespace feqlab {

/// C(n, k); 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

/// Integer power with the convention 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned long exponent);

}  // namespace feqlab
