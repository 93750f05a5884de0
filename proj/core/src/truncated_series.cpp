#include "feqlab/truncated_series.hpp"

#include <utility>

#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"

namespace feqlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw PreconditionError("series orders differ");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<XPolynomial> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const XPolynomial& c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::exp_linear(std::size_t order, const XPolynomial& c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = XPolynomial::constant(1);
  for (std::size_t n = 1; n <= order; ++n) s.coeffs_[n] = s.coeffs_[n - 1] * c;
  return s;
}

TruncatedSeries TruncatedSeries::linear(std::size_t order, const XPolynomial& c0, const XPolynomial& c1) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c0;
  if (order >= 1) s.coeffs_[1] = c1;
  return s;
}

const XPolynomial& TruncatedSeries::coefficient(std::size_t n) const {
  if (n > order_) throw PreconditionError("coefficient index beyond truncation order");
  return coeffs_[n];
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const XPolynomial& c0 = coeffs_[0];
  if (c0.degree() != 0) throw Error("non-unit series");
  const RationalFunction inv0 = c0.coefficient(0).inverse();
  TruncatedSeries r(order_);
  r.coeffs_[0] = XPolynomial::constant(inv0);
  // Coefficient n of s * r vanishes for n >= 1:
  //   sum_{k=0}^{n} C(n,k) s_k r_{n-k} = 0.
  for (std::size_t n = 1; n <= order_; ++n) {
    XPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (coeffs_[k].is_zero()) continue;
      acc += coeffs_[k] * r.coeffs_[n - k] * RationalFunction(IntPolynomial::constant(binomial(n, k)));
    }
    r.coeffs_[n] = acc * (-inv0);
  }
  return r;
}

TruncatedSeries TruncatedSeries::scale_t(const RationalFunction& c) const {
  TruncatedSeries r = *this;
  RationalFunction factor(1);
  for (std::size_t n = 1; n <= order_; ++n) {
    factor *= c;
    r.coeffs_[n] *= factor;
  }
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n <= order_; ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n <= order_; ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RationalFunction& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order_);
  for (std::size_t n = 0; n <= a.order_; ++n) {
    XPolynomial acc;
    for (std::size_t k = 0; k <= n; ++k) {
      if (a.coeffs_[k].is_zero() || b.coeffs_[n - k].is_zero()) continue;
      XPolynomial term = a.coeffs_[k] * b.coeffs_[n - k];
      if (k != 0 && k != n) term *= RationalFunction(IntPolynomial::constant(binomial(n, k)));
      acc += term;
    }
    r.coeffs_[n] = std::move(acc);
  }
  return r;
}

}  // namespace feqlab
