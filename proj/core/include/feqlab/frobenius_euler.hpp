#pragma once

#include <vector>

#include "feqlab/big_rational.hpp"
#include "feqlab/int_polynomial.hpp"
#include "feqlab/rational_function.hpp"
#include "feqlab/x_polynomial.hpp"

namespace feqlab {

/// Frobenius-Euler numbers H_0(q) .. H_max(q), defined by
///   sum_n H_n(q) t^n/n! = (1 - q) / (e^t - q).
/// Built once from the coefficient recurrence, then immutable.
class FeNumberTable {
 public:
  explicit FeNumberTable(unsigned max_n);

  unsigned max_n() const { return static_cast<unsigned>(entries_.size() - 1); }
  const std::vector<RationalFunction>& entries() const { return entries_; }
  const RationalFunction& at(unsigned n) const;
  /// (q - 1)^n H_n(q), an integer polynomial (the Eulerian polynomial).
  const IntPolynomial& numerator(unsigned n) const;

 private:
  std::vector<IntPolynomial> numerators_;
  std::vector<RationalFunction> entries_;
};

/// Frobenius-Euler polynomials H_n(q, x) = sum_l C(n,l) x^{n-l} H_l(q).
class FePolyTable {
 public:
  explicit FePolyTable(const FeNumberTable& numbers);

  const std::vector<XPolynomial>& entries() const { return entries_; }
  const XPolynomial& at(unsigned n) const;

 private:
  std::vector<XPolynomial> entries_;
};

/// Numbers and polynomials at the parameter -q^{-w}: H_n(-q^{-w}) and
/// H_n(-q^{-w}, x). The w = 1 table gives the fermionic moments.
class FeDualTable {
 public:
  FeDualTable(unsigned max_n, unsigned w);

  unsigned w() const { return w_; }
  unsigned max_n() const { return static_cast<unsigned>(numbers_.size() - 1); }
  const RationalFunction& number(unsigned n) const;
  const XPolynomial& poly(unsigned n) const;

 private:
  unsigned w_;
  std::vector<RationalFunction> numbers_;
  std::vector<XPolynomial> polys_;
};

/// Binomial assembly sum_l C(n,l) x^{n-l} numbers[l]; numbers must hold
/// indices 0..n.
XPolynomial appell_polynomial(const std::vector<RationalFunction>& numbers, unsigned n);

RationalFunction fe_number(unsigned n);
XPolynomial fe_poly(unsigned n);
RationalFunction fe_dual_number(unsigned n, unsigned w);
XPolynomial fe_dual_poly(unsigned n, unsigned w);

/// Coefficient of t^n/n! in (1 - u) / (e^t - u), computed only with
/// truncated-series algebra. Independent of the recurrence above.
BigRational fe_series_oracle(unsigned n, const BigRational& u);

/// Default brute-force cap for eulerian_poly.
inline constexpr unsigned kEulerianCap = 8;

/// sum over permutations of {1..n} of q^{des(sigma)}, by enumeration.
/// Throws PreconditionError("brute-force cap exceeded") when n > cap.
IntPolynomial eulerian_poly(unsigned n, unsigned cap = kEulerianCap);

}  // namespace feqlab
