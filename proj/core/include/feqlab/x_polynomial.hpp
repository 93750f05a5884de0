#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "feqlab/rational_function.hpp"

namespace feqlab {

/// Polynomial in x over Q(q), ascending degree, no trailing zeros.
class XPolynomial {
 public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<RationalFunction> coefficients);
  XPolynomial(std::initializer_list<RationalFunction> coefficients);

  static XPolynomial constant(const RationalFunction& c);
  /// The monomial x.
  static XPolynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }
  RationalFunction coefficient(std::size_t i) const;

  /// Value at x = x0.
  RationalFunction evaluate(const RationalFunction& x0) const;
  /// Applies q -> q0 to every coefficient; the result has constant
  /// coefficients. Throws PoleError when a coefficient has a pole at q0.
  XPolynomial evaluate_q(const BigRational& q0) const;

  XPolynomial derivative() const;

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  XPolynomial& operator*=(const RationalFunction& c);

  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend XPolynomial operator*(XPolynomial a, const RationalFunction& c) { return a *= c; }
  friend XPolynomial operator*(const RationalFunction& c, XPolynomial a) { return a *= c; }
  friend XPolynomial operator-(XPolynomial a);
  friend bool operator==(const XPolynomial& a, const XPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

/// p(a*x + b), expanded.
XPolynomial xpoly_affine_subst(const XPolynomial& p, const RationalFunction& a, const RationalFunction& b);

}  // namespace feqlab
