#pragma once

#include <string>

#include "feqlab/big_rational.hpp"
#include "feqlab/int_polynomial.hpp"

namespace feqlab {

/// Element of Q(q) kept as num/den over Z[q] in canonical form:
/// gcd(num, den) = 1 in Z[q] (contents included) and lc(den) > 0.
/// Zero is 0/1. Canonical form makes == a test of mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_{1} {}
  RationalFunction(long c) : num_{c}, den_{1} {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const IntPolynomial& p) : num_(p), den_{1} {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const BigRational& c);  // NOLINT(google-explicit-constructor)

  /// The indeterminate q.
  static RationalFunction q() { return RationalFunction(IntPolynomial{0, 1}); }

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_ == IntPolynomial{1}; }
  /// Value of a constant function; throws if not constant.
  BigRational constant_value() const;

  /// Exact value at q0; throws PoleError("pole at evaluation point") when the
  /// reduced denominator vanishes there.
  BigRational evaluate(const BigRational& q0) const;

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// "(num)/(den)" in human-readable form, or just the numerator when den = 1.
  std::string to_string() const;

 private:
  friend RationalFunction ratfun_reduce(const IntPolynomial& num, const IntPolynomial& den);
  RationalFunction(IntPolynomial num, IntPolynomial den, bool /*canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_sign();

  IntPolynomial num_;
  IntPolynomial den_;
};

/// Canonical form of num/den. Throws Error("zero denominator") when den = 0.
RationalFunction ratfun_reduce(const IntPolynomial& num, const IntPolynomial& den);

/// f(q0); see RationalFunction::evaluate.
BigRational ratfun_eval(const RationalFunction& f, const BigRational& q0);

/// f(q^w), w >= 1.
RationalFunction ratfun_subst_qpow(const RationalFunction& f, unsigned w);

/// f(-q^{-w}), w >= 1, with negative powers of q cleared.
RationalFunction ratfun_subst_neg_inv_pow(const RationalFunction& f, unsigned w);

RationalFunction pow(const RationalFunction& base, unsigned exponent);

}  // namespace feqlab
