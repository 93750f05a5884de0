#include "feqlab/x_polynomial.hpp"

#include <sstream>
#include <utility>

namespace feqlab {

XPolynomial::XPolynomial(std::vector<RationalFunction> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XPolynomial::XPolynomial(std::initializer_list<RationalFunction> coefficients) : coeffs_(coefficients) { trim(); }

XPolynomial XPolynomial::constant(const RationalFunction& c) { return XPolynomial(std::vector<RationalFunction>{c}); }

XPolynomial XPolynomial::x() { return XPolynomial{RationalFunction(0), RationalFunction(1)}; }

void XPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalFunction XPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RationalFunction();
}

RationalFunction XPolynomial::evaluate(const RationalFunction& x0) const {
  RationalFunction acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x0 + coeffs_[i];
  return acc;
}

XPolynomial XPolynomial::evaluate_q(const BigRational& q0) const {
  std::vector<RationalFunction> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c.evaluate(q0));
  return XPolynomial(std::move(v));
}

XPolynomial XPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<RationalFunction> v;
  v.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * RationalFunction(static_cast<long>(i)));
  return XPolynomial(std::move(v));
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

XPolynomial& XPolynomial::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RationalFunction> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return XPolynomial(std::move(v));
}

XPolynomial operator-(XPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string XPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << coeffs_[i].to_string() << "]";
    if (i >= 1) os << "*x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

XPolynomial xpoly_affine_subst(const XPolynomial& p, const RationalFunction& a, const RationalFunction& b) {
  const XPolynomial linear{b, a};
  XPolynomial acc;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * linear + XPolynomial::constant(c[i]);
  return acc;
}

}  // namespace feqlab
