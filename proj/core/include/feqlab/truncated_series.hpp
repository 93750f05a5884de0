#pragma once

#include <cstddef>
#include <vector>

#include "feqlab/x_polynomial.hpp"

namespace feqlab {

/// Formal power series in t truncated after t^order. Coefficient n is the
/// coefficient of t^n / n! (exponential convention), so products use
/// binomial convolution. Every value has exactly order + 1 coefficients.
class TruncatedSeries {
 public:
  static constexpr const char* kConvention = "coefficient of t^n/n!";

  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<XPolynomial> coefficients);

  static TruncatedSeries constant(std::size_t order, const XPolynomial& c);
  /// exp(c*t) = sum c^n t^n/n!.
  static TruncatedSeries exp_linear(std::size_t order, const XPolynomial& c);
  /// c0 + c1*t.
  static TruncatedSeries linear(std::size_t order, const XPolynomial& c0, const XPolynomial& c1);

  std::size_t order() const { return order_; }
  const std::vector<XPolynomial>& coefficients() const { return coeffs_; }
  /// Coefficient of t^n/n!; n must not exceed the order.
  const XPolynomial& coefficient(std::size_t n) const;

  bool is_zero() const;

  /// Multiplicative inverse through the order; the constant coefficient must
  /// be a non-zero constant in x. Throws Error("non-unit series") otherwise.
  TruncatedSeries inverse() const;

  /// Replaces t by c*t: coefficient n is multiplied by c^n.
  TruncatedSeries scale_t(const RationalFunction& c) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const RationalFunction& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const RationalFunction& c) { return a *= c; }
  friend TruncatedSeries operator*(const RationalFunction& c, TruncatedSeries a) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::size_t order_;
  std::vector<XPolynomial> coeffs_;
};

}  // namespace feqlab
