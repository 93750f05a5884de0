#include "feqlab/padic.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "feqlab/combinatorics.hpp"
#include "feqlab/error.hpp"

namespace feqlab {

namespace {

BigInt reduce(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Accumulates sum_{x<count} f(x) step^x mod m. Word is std::uint64_t when
// m < 2^32 (so products fit), BigInt otherwise.
template <typename Word>
Word weighted_sum(const std::vector<Word>& f, Word step, std::uint64_t count, Word m) {
  Word acc = 0;
  Word g = 1;
  Word x = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    Word fx = 0;
    for (std::size_t k = f.size(); k-- > 0;) fx = (fx * x + f[k]) % m;
    acc = (acc + fx * g) % m;
    g = (g * step) % m;
    x = x + 1;
    if (x == m) x = 0;
  }
  return acc;
}

std::uint64_t level_size(unsigned long p, unsigned N) {
  if (N == 0) throw PreconditionError("N must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < N; ++i) {
    if (size > (std::uint64_t{1} << 40) / p) throw PreconditionError("Riemann sum level too large");
    size *= p;
  }
  return size;
}

void require_one_mod_p(const PAdicNumber& v, const char* what) {
  const BigInt p(static_cast<unsigned long>(v.context().p()));
  if (reduce(v.residue(), p) != 1) {
    throw PreconditionError(std::string(what) + " must be congruent to 1 modulo p");
  }
}

}  // namespace

PAdicContext::PAdicContext(unsigned long p, unsigned precision) : p_(p), precision_(precision) {
  const BigInt pz(p);
  if (p < 3 || mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0) {
    throw PreconditionError("p must be an odd prime");
  }
  if (precision == 0) throw PreconditionError("precision must be at least 1");
  modulus_ = ipow(pz, precision);
}

PAdicNumber::PAdicNumber(const BigInt& value, const PAdicContext& ctx)
    : residue_(reduce(value, ctx.modulus())), ctx_(ctx) {}

bool PAdicNumber::is_unit() const {
  return mpz_divisible_ui_p(residue_.get_mpz_t(), ctx_.p()) == 0;
}

unsigned PAdicNumber::valuation() const {
  if (residue_ == 0) return ctx_.precision();
  BigInt r = residue_;
  unsigned v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), ctx_.p()) != 0) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), ctx_.p());
    ++v;
  }
  return v;
}

void PAdicNumber::check_context(const PAdicNumber& o) const {
  if (!(ctx_ == o.ctx_)) throw PreconditionError("p-adic values from different contexts");
}

PAdicNumber& PAdicNumber::operator+=(const PAdicNumber& o) {
  check_context(o);
  residue_ = reduce(residue_ + o.residue_, ctx_.modulus());
  return *this;
}

PAdicNumber& PAdicNumber::operator-=(const PAdicNumber& o) {
  check_context(o);
  residue_ = reduce(residue_ - o.residue_, ctx_.modulus());
  return *this;
}

PAdicNumber& PAdicNumber::operator*=(const PAdicNumber& o) {
  check_context(o);
  residue_ = reduce(residue_ * o.residue_, ctx_.modulus());
  return *this;
}

PAdicNumber rat_to_padic(const BigRational& r, const PAdicContext& ctx) {
  const BigInt den = r.denominator();
  if (mpz_divisible_ui_p(den.get_mpz_t(), ctx.p()) != 0) {
    throw PreconditionError("not a p-adic integer at this prime");
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx.modulus().get_mpz_t());
  return PAdicNumber(r.numerator() * inv, ctx);
}

PAdicNumber padic_inv(const PAdicNumber& a) {
  if (!a.is_unit()) throw PreconditionError("non-invertible modulo p^M");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), a.residue().get_mpz_t(), a.context().modulus().get_mpz_t());
  return PAdicNumber(inv, a.context());
}

PAdicNumber fermionic_riemann_sum(std::span<const BigRational> f, const BigRational& weight_base, const BigRational& q,
                                  unsigned N, const PAdicContext& ctx) {
  const PAdicNumber qp = rat_to_padic(q, ctx);
  require_one_mod_p(qp, "q");
  const PAdicNumber ap = rat_to_padic(weight_base, ctx);
  require_one_mod_p(ap, "weight base");
  const std::uint64_t count = level_size(ctx.p(), N);

  const BigInt& m = ctx.modulus();
  const PAdicNumber step = ap * PAdicNumber(-qp.residue(), ctx);
  std::vector<BigInt> fr;
  for (const auto& c : f) fr.push_back(rat_to_padic(c, ctx).residue());

  BigInt total;
  if (m < (BigInt(1) << 32)) {
    std::vector<std::uint64_t> fw;
    for (const auto& c : fr) fw.push_back(c.get_ui());
    total = static_cast<unsigned long>(weighted_sum<std::uint64_t>(fw, step.residue().get_ui(), count, m.get_ui()));
  } else {
    total = weighted_sum<BigInt>(fr, step.residue(), count, m);
  }

  // [p^N]_{-q} = (1 + q^{p^N}) / (1 + q); both factors are 2 mod p.
  BigInt q_pow;
  const BigInt exponent(static_cast<unsigned long>(count));
  mpz_powm(q_pow.get_mpz_t(), qp.residue().get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  const PAdicNumber one(1, ctx);
  const PAdicNumber bracket = (one + PAdicNumber(q_pow, ctx)) * padic_inv(one + qp);
  return PAdicNumber(total, ctx) * padic_inv(bracket);
}

PAdicNumber fermionic_riemann_sum(unsigned n, const BigRational& q, unsigned N, const PAdicContext& ctx) {
  std::vector<BigRational> f(n + 1, BigRational(0));
  f[n] = BigRational(1);
  return fermionic_riemann_sum(f, BigRational(1), q, N, ctx);
}

MomentSweep fermionic_moment_sweep(unsigned n, const BigRational& q, const PAdicContext& ctx, unsigned max_level) {
  // The level-N sum agrees with the integral modulo p^N, so agreement of two
  // consecutive levels is only trusted once the run stays constant up to
  // level M + 1; earlier coincidences (e.g. p = 3, n = 5, M = 4 at N = 1, 2)
  // are not limits.
  const unsigned last = ctx.precision() + 1;
  MomentSweep sweep;
  for (unsigned N = 1; N <= std::min(last, max_level); ++N) sweep.sums.push_back(fermionic_riemann_sum(n, q, N, ctx));
  if (last > max_level) return sweep;
  unsigned first = last;
  while (first > 1 && sweep.sums[first - 2] == sweep.sums[last - 1]) --first;
  if (first < last) sweep.stabilized_at = first;
  return sweep;
}

MomentLimit fermionic_moment_limit(unsigned n, const BigRational& q, const PAdicContext& ctx, unsigned max_level) {
  MomentSweep sweep = fermionic_moment_sweep(n, q, ctx, max_level);
  if (!sweep.stabilized_at) throw Error("did not stabilize");
  return {sweep.sums.back(), *sweep.stabilized_at};
}

}  // namespace feqlab
