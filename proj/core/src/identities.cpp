#include "feqlab/identities.hpp"

#include <string>

#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"
#include "feqlab/frobenius_euler.hpp"
#include "feqlab/qsums.hpp"

namespace feqlab {

namespace {

void require_odd(unsigned w, const char* name) {
  if (w == 0 || w % 2 == 0) throw PreconditionError(std::string(name) + " must be an odd positive integer");
}

RationalFunction integer(const BigInt& c) { return RationalFunction(IntPolynomial::constant(c)); }

RationalFunction q_power(unsigned k) { return RationalFunction(IntPolynomial::monomial(1, k)); }

/// [2]_{q^w} = 1 + q^w.
RationalFunction two_bracket(unsigned w) { return RationalFunction(IntPolynomial{1} + IntPolynomial::monomial(1, w)); }

XPolynomial scaled_x(unsigned c) { return XPolynomial{RationalFunction(0), RationalFunction(static_cast<long>(c))}; }

/// q^a e^{a t} + 1
TruncatedSeries shifted_exponential(unsigned q_exp, unsigned t_scale, unsigned order) {
  TruncatedSeries s = TruncatedSeries::exp_linear(order, XPolynomial::constant(static_cast<long>(t_scale))) * q_power(q_exp);
  return s + TruncatedSeries::constant(order, XPolynomial::constant(1));
}

VerificationReport finish(IdentityId id, Params params, const EvalMode& mode, const XPolynomial& symbolic_witness,
                          bool hypothesis_met = true) {
  VerificationReport r{id, std::move(params), mode, mode.apply(symbolic_witness), std::nullopt, hypothesis_met};
  return r;
}

/// Reports the first t-order at which any of the difference series is
/// non-zero in the requested mode; HOLDS when none is.
VerificationReport finish_series(IdentityId id, Params params, const EvalMode& mode,
                                 std::initializer_list<TruncatedSeries> differences) {
  for (const auto& d : differences) {
    for (std::size_t k = 0; k <= d.order(); ++k) {
      XPolynomial w = mode.apply(d.coefficient(k));
      if (!w.is_zero()) {
        VerificationReport r{id, std::move(params), mode, std::move(w), static_cast<unsigned>(k), true};
        return r;
      }
    }
  }
  return VerificationReport{id, std::move(params), mode, XPolynomial{}, std::nullopt, true};
}

}  // namespace

namespace sides {

XPolynomial binomial_symmetry(unsigned n, unsigned wa, unsigned wb, unsigned dual_w) {
  const FeDualTable h(n, dual_w);
  XPolynomial acc;
  for (unsigned i = 0; i <= n; ++i) {
    const IntPolynomial s = alt_power_sum(n - i, wa - 1, wb);
    if (s.is_zero()) continue;
    const BigInt scalar = binomial(n, i) * ipow(wa, i) * ipow(wb, n - i);
    acc += xpoly_affine_subst(h.poly(i), RationalFunction(static_cast<long>(wb)), RationalFunction(0)) *
           RationalFunction(s * scalar);
  }
  return acc;
}

XPolynomial shifted_symmetry(unsigned n, unsigned wa, unsigned wb, unsigned dual_w) {
  const FeDualTable h(n, dual_w);
  XPolynomial acc;
  for (unsigned l = 0; l < wa; ++l) {
    const RationalFunction shift(BigRational(BigInt(wb) * l, BigInt(wa)));
    XPolynomial term = xpoly_affine_subst(h.poly(n), RationalFunction(static_cast<long>(wb)), shift);
    term *= q_power(wb * l);
    if (l % 2 == 1) term = -term;
    acc += term;
  }
  return acc * integer(ipow(wa, n));
}

}  // namespace sides

TruncatedSeries weighted_moment_series(unsigned w, unsigned order) {
  const FeDualTable h(order, w);
  const RationalFunction normalizer = two_bracket(1) / two_bracket(w);
  std::vector<XPolynomial> coeffs;
  for (unsigned n = 0; n <= order; ++n) {
    coeffs.push_back(XPolynomial::constant(h.number(n) * integer(ipow(w, n)) * normalizer));
  }
  return TruncatedSeries(order, std::move(coeffs));
}

VerificationReport verify_eq3_moment(unsigned n, const EvalMode& mode) {
  const FeDualTable h(n, 1);
  const XPolynomial lhs = XPolynomial::constant(h.poly(n).evaluate(RationalFunction(1)) * q_power(1) + h.number(n));
  const XPolynomial rhs = n == 0 ? XPolynomial::constant(two_bracket(1)) : XPolynomial{};
  return finish(IdentityId::kEq3Moment, {{"n", n}}, mode, lhs - rhs);
}

VerificationReport verify_shift_moments(unsigned m, unsigned n, const EvalMode& mode) {
  if (n == 0) throw PreconditionError("n must be positive");
  const FeDualTable h(m, 1);
  const RationalFunction shifted = h.poly(m).evaluate(RationalFunction(static_cast<long>(n))) * q_power(n);
  const RationalFunction sum = RationalFunction(alt_power_sum(m, n - 1, 1)) * two_bracket(1);
  const bool odd = n % 2 == 1;
  RationalFunction lhs;
  RationalFunction rhs;
  if (odd) {
    lhs = sum;
    rhs = shifted + h.number(m);
  } else {
    lhs = shifted - h.number(m);
    rhs = -sum;
  }
  return finish(odd ? IdentityId::kEq4OddMoment : IdentityId::kEq5EvenMoment, {{"m", m}, {"n", n}}, mode,
                XPolynomial::constant(lhs - rhs));
}

VerificationReport verify_eq9_ratio(unsigned w1, unsigned w2, unsigned order, const EvalMode& mode) {
  require_odd(w1, "w1");
  require_odd(w2, "w2");
  const unsigned w12 = w1 * w2;
  const TruncatedSeries plain = weighted_moment_series(1, order);
  const TruncatedSeries e_x = TruncatedSeries::exp_linear(order, scaled_x(w12));

  const TruncatedSeries numerator = e_x * plain.scale_t(RationalFunction(static_cast<long>(w1))) *
                                    plain.scale_t(RationalFunction(static_cast<long>(w2)));
  const TruncatedSeries denominator = weighted_moment_series(w12, order);
  const TruncatedSeries via_moments = numerator * denominator.inverse();

  const TruncatedSeries closed = e_x * shifted_exponential(w12, w12, order) *
                                 shifted_exponential(1, w1, order).inverse() *
                                 shifted_exponential(1, w2, order).inverse() * two_bracket(1);

  return finish_series(IdentityId::kEq9Ratio,
                       {{"w1", w1}, {"w2", w2}, {"T", order}}, mode, {via_moments - closed});
}

VerificationReport verify_eq10_ratio(unsigned w, unsigned order, const EvalMode& mode) {
  require_odd(w, "w");
  const RationalFunction two = two_bracket(1);
  const TruncatedSeries closed =
      shifted_exponential(w, w, order) * shifted_exponential(1, 1, order).inverse() * two;

  TruncatedSeries exponentials(order);
  for (unsigned l = 0; l < w; ++l) {
    TruncatedSeries term = TruncatedSeries::exp_linear(order, XPolynomial::constant(static_cast<long>(l))) * q_power(l);
    exponentials += l % 2 == 0 ? term : term * RationalFunction(-1);
  }
  exponentials *= two;

  std::vector<XPolynomial> sums;
  for (unsigned k = 0; k <= order; ++k) {
    sums.push_back(XPolynomial::constant(RationalFunction(alt_power_sum(k, w - 1, 1)) * two));
  }
  const TruncatedSeries power_sums(order, std::move(sums));

  return finish_series(IdentityId::kEq10Ratio, {{"w", w}, {"T", order}}, mode,
                       {closed - exponentials, exponentials - power_sums});
}

IdentitySides printed_sides(IdentityId id, unsigned n, unsigned w1, unsigned w2) {
  require_odd(w1, "w1");
  switch (id) {
    case IdentityId::kTheorem1:
      require_odd(w2, "w2");
      return {sides::binomial_symmetry(n, w1, w2, 1), sides::binomial_symmetry(n, w2, w1, 1)};
    case IdentityId::kCorollary2: {
      require_odd(w2, "w2");
      const RationalFunction zero(0);
      return {XPolynomial::constant(sides::binomial_symmetry(n, w1, w2, 1).evaluate(zero)),
              XPolynomial::constant(sides::binomial_symmetry(n, w2, w1, 1).evaluate(zero))};
    }
    case IdentityId::kEq14:
      return {xpoly_affine_subst(fe_dual_poly(n, 1), RationalFunction(static_cast<long>(w1)), RationalFunction(0)),
              sides::binomial_symmetry(n, w1, 1, 1)};
    case IdentityId::kCorollary3: {
      if (w1 <= 1) throw PreconditionError("w1 must exceed 1");
      if (n == 0) throw PreconditionError("n must be positive");
      const FeDualTable h(n, 1);
      RationalFunction sum;
      for (unsigned i = 0; i < n; ++i) {
        sum += h.number(i) * RationalFunction(alt_power_sum(n - i, w1 - 1, 1) * (binomial(n, i) * ipow(w1, i)));
      }
      const RationalFunction factor(BigRational(BigInt(1), BigInt(1) - ipow(w1, n)));
      return {XPolynomial::constant(h.number(n)), XPolynomial::constant(sum * factor)};
    }
    case IdentityId::kTheorem4:
      require_odd(w2, "w2");
      return {sides::shifted_symmetry(n, w1, w2, 1), sides::shifted_symmetry(n, w2, w1, 1)};
    case IdentityId::kMultiplication:
      return {xpoly_affine_subst(fe_dual_poly(n, 1), RationalFunction(static_cast<long>(w1)), RationalFunction(0)),
              sides::shifted_symmetry(n, w1, 1, 1)};
    default:
      throw PreconditionError("not a printed statement: " + std::string(to_string(id)));
  }
}

VerificationReport verify_printed(IdentityId id, unsigned n, unsigned w1, unsigned w2, const EvalMode& mode) {
  const bool fixed_w2 = id == IdentityId::kEq14 || id == IdentityId::kMultiplication;
  if (fixed_w2) w2 = 1;
  if (id == IdentityId::kCorollary3) w2 = 1;
  const IdentitySides s = printed_sides(id, n, w1, w2);
  Params params{{"n", n}, {"w1", w1}};
  if (id != IdentityId::kCorollary3) params.emplace_back("w2", w2);
  // Every printed statement is stated for odd n only.
  return finish(id, std::move(params), mode, s.lhs - s.rhs, n % 2 == 1);
}

}  // namespace feqlab
