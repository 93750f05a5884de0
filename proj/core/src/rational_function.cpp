#include "feqlab/rational_function.hpp"

#include "feqlab/error.hpp"

namespace feqlab {

RationalFunction::RationalFunction(const BigRational& c)
    : num_(IntPolynomial::constant(c.numerator())), den_(IntPolynomial::constant(c.denominator())) {}

void RationalFunction::normalize_sign() {
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) den_ = IntPolynomial{1};
}

RationalFunction ratfun_reduce(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error("zero denominator");
  if (num.is_zero()) return RationalFunction();
  GcdResult g = gcd_with_cofactors(num, den);
  RationalFunction r(std::move(g.cofactor_a), std::move(g.cofactor_b), true);
  r.normalize_sign();
  return r;
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant: " + to_string());
  return BigRational(num_.coefficient(0), den_.coefficient(0));
}

BigRational RationalFunction::evaluate(const BigRational& q0) const {
  BigRational d = den_.evaluate(q0);
  if (d.is_zero()) throw PoleError("pole at evaluation point");
  return num_.evaluate(q0) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("division by zero rational function");
  RationalFunction r(den_, num_, true);
  r.normalize_sign();
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    return *this = ratfun_reduce(num_ + o.num_, den_);
  }
  // Henrici: only the gcd of the denominators can cancel against the sum.
  GcdResult g = gcd_with_cofactors(den_, o.den_);
  IntPolynomial t = num_ * g.cofactor_b + o.num_ * g.cofactor_a;
  if (t.is_zero()) return *this = RationalFunction();
  // A constant gcd other than 1 is integer content, which can still cancel.
  if (g.gcd == IntPolynomial{1}) {
    *this = RationalFunction(std::move(t), den_ * g.cofactor_b, true);
  } else {
    GcdResult h = gcd_with_cofactors(t, g.gcd);
    *this = RationalFunction(std::move(h.cofactor_a), g.cofactor_a * g.cofactor_b * h.cofactor_b, true);
  }
  normalize_sign();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  GcdResult g1 = gcd_with_cofactors(num_, o.den_);
  GcdResult g2 = gcd_with_cofactors(o.num_, den_);
  *this = RationalFunction(g1.cofactor_a * g2.cofactor_a, g2.cofactor_b * g1.cofactor_b, true);
  normalize_sign();
  return *this;
}

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BigRational ratfun_eval(const RationalFunction& f, const BigRational& q0) { return f.evaluate(q0); }

RationalFunction ratfun_subst_qpow(const RationalFunction& f, unsigned w) {
  // q -> q^w is an injective ring map on Z[q], so coprimality survives, but
  // reducing keeps the canonical-form guarantee independent of that argument.
  return ratfun_reduce(f.numerator().substitute_power(w), f.denominator().substitute_power(w));
}

RationalFunction ratfun_subst_neg_inv_pow(const RationalFunction& f, unsigned w) {
  if (w == 0) throw PreconditionError("substitution exponent must be positive");
  // p(-q^{-w}) * q^{w*deg p} is the sign-alternated reversal of p taken at q^w.
  auto cleared = [w](const IntPolynomial& p) { return p.negated_variable().reversed().substitute_power(w); };
  const IntPolynomial& num = f.numerator();
  const IntPolynomial& den = f.denominator();
  IntPolynomial n = cleared(num);
  IntPolynomial d = cleared(den);
  if (d.is_zero()) throw PoleError("formal pole under substitution q -> -q^{-w}");
  const int excess = den.degree() - std::max(num.degree(), 0);
  if (excess > 0) {
    n = n.shifted(static_cast<std::size_t>(excess) * w);
  } else if (excess < 0) {
    d = d.shifted(static_cast<std::size_t>(-excess) * w);
  }
  return ratfun_reduce(n, d);
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
  RationalFunction result(1);
  RationalFunction b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace feqlab
