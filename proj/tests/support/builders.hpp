#pragma once

#include <initializer_list>
#include <ostream>

#include "feqlab/int_polynomial.hpp"
#include "feqlab/rational_function.hpp"
#include "feqlab/truncated_series.hpp"
#include "feqlab/x_polynomial.hpp"

namespace feqlab {

// Readable gtest failure output.
inline void PrintTo(const IntPolynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalFunction& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const XPolynomial& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace feqlab

namespace feqlab::testing {

inline IntPolynomial P(std::initializer_list<long> c) { return IntPolynomial(c); }

/// num/den from ascending coefficient lists, reduced.
inline RationalFunction R(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return ratfun_reduce(IntPolynomial(num), IntPolynomial(den));
}

inline RationalFunction Q() { return RationalFunction::q(); }

inline RationalFunction rat(long num, long den = 1) { return RationalFunction(BigRational(BigInt(num), BigInt(den))); }

}  // namespace feqlab::testing
