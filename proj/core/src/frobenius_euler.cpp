#include "feqlab/frobenius_euler.hpp"

#include <algorithm>
#include <numeric>

#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"
#include "feqlab/truncated_series.hpp"

namespace feqlab {

FeNumberTable::FeNumberTable(unsigned max_n) {
  // Coefficient of t^n/n! in (e^t - q) * sum H_k t^k/k! = 1 - q gives, for
  // n >= 1, H_n = (1/(q-1)) sum_{k<n} C(n,k) H_k. With H_k = A_k/(q-1)^k the
  // numerators obey A_n = sum_{k<n} C(n,k) A_k (q-1)^{n-1-k}, all in Z[q].
  const IntPolynomial q_minus_1{-1, 1};
  std::vector<IntPolynomial> q_minus_1_pow{IntPolynomial{1}};
  for (unsigned n = 1; n <= max_n; ++n) q_minus_1_pow.push_back(q_minus_1_pow.back() * q_minus_1);

  numerators_.push_back(IntPolynomial{1});
  for (unsigned n = 1; n <= max_n; ++n) {
    IntPolynomial acc;
    for (unsigned k = 0; k < n; ++k) acc += numerators_[k] * q_minus_1_pow[n - 1 - k] * binomial(n, k);
    numerators_.push_back(std::move(acc));
  }
  entries_.reserve(numerators_.size());
  for (unsigned n = 0; n <= max_n; ++n) entries_.push_back(ratfun_reduce(numerators_[n], q_minus_1_pow[n]));
}

const RationalFunction& FeNumberTable::at(unsigned n) const {
  if (n >= entries_.size()) throw PreconditionError("index beyond table size");
  return entries_[n];
}

const IntPolynomial& FeNumberTable::numerator(unsigned n) const {
  if (n >= numerators_.size()) throw PreconditionError("index beyond table size");
  return numerators_[n];
}

XPolynomial appell_polynomial(const std::vector<RationalFunction>& numbers, unsigned n) {
  std::vector<RationalFunction> coeffs(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    coeffs[n - l] = numbers.at(l) * RationalFunction(IntPolynomial::constant(binomial(n, l)));
  }
  return XPolynomial(std::move(coeffs));
}

FePolyTable::FePolyTable(const FeNumberTable& numbers) {
  for (unsigned n = 0; n <= numbers.max_n(); ++n) entries_.push_back(appell_polynomial(numbers.entries(), n));
}

const XPolynomial& FePolyTable::at(unsigned n) const {
  if (n >= entries_.size()) throw PreconditionError("index beyond table size");
  return entries_[n];
}

FeDualTable::FeDualTable(unsigned max_n, unsigned w) : w_(w) {
  if (w == 0) throw PreconditionError("w must be positive");
  FeNumberTable base(max_n);
  for (const auto& h : base.entries()) numbers_.push_back(ratfun_subst_neg_inv_pow(h, w));
  for (unsigned n = 0; n <= max_n; ++n) polys_.push_back(appell_polynomial(numbers_, n));
}

const RationalFunction& FeDualTable::number(unsigned n) const {
  if (n >= numbers_.size()) throw PreconditionError("index beyond table size");
  return numbers_[n];
}

const XPolynomial& FeDualTable::poly(unsigned n) const {
  if (n >= polys_.size()) throw PreconditionError("index beyond table size");
  return polys_[n];
}

RationalFunction fe_number(unsigned n) { return FeNumberTable(n).at(n); }

XPolynomial fe_poly(unsigned n) { return appell_polynomial(FeNumberTable(n).entries(), n); }

RationalFunction fe_dual_number(unsigned n, unsigned w) { return ratfun_subst_neg_inv_pow(fe_number(n), w); }

XPolynomial fe_dual_poly(unsigned n, unsigned w) {
  if (w == 0) throw PreconditionError("w must be positive");
  const XPolynomial p = fe_poly(n);
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.push_back(ratfun_subst_neg_inv_pow(c, w));
  return XPolynomial(std::move(coeffs));
}

BigRational fe_series_oracle(unsigned n, const BigRational& u) {
  if (u == BigRational(1)) throw PreconditionError("parameter u = 1 is excluded");
  const RationalFunction uf(u);
  const TruncatedSeries denominator =
      TruncatedSeries::exp_linear(n, XPolynomial::constant(1)) - TruncatedSeries::constant(n, XPolynomial::constant(uf));
  const TruncatedSeries generating = denominator.inverse() * (RationalFunction(1) - uf);
  const XPolynomial& c = generating.coefficient(n);
  return c.is_zero() ? BigRational(0) : c.coefficient(0).constant_value();
}

IntPolynomial eulerian_poly(unsigned n, unsigned cap) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (n > cap) throw PreconditionError("brute-force cap exceeded");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1U);
  std::vector<long> counts(n, 0);
  do {
    unsigned descents = 0;
    for (unsigned i = 0; i + 1 < n; ++i) descents += perm[i] > perm[i + 1] ? 1U : 0U;
    ++counts[descents];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntPolynomial(std::move(coeffs));
}

}  // namespace feqlab
