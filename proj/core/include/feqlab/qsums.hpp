#pragma once

#include "feqlab/int_polynomial.hpp"
#include "feqlab/rational_function.hpp"

namespace feqlab {

/// [x]_q = (1 - q^x)/(1 - q) = 1 + q + ... + q^{x-1}; [0]_q = 0.
IntPolynomial q_bracket(unsigned x);

/// [x]_{-q} = (1 - (-q)^x)/(1 + q), reduced.
RationalFunction q_bracket_neg(unsigned x);

/// S_{k,q^w}(m) = sum_{l=0}^{m} (-1)^l q^{w l} l^k, with 0^0 = 1.
IntPolynomial alt_power_sum(unsigned k, unsigned m, unsigned w);

}  // namespace feqlab
