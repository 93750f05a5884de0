#pragma once

#include <optional>
#include <span>
#include <vector>

#include "feqlab/big_rational.hpp"

namespace feqlab {

/// Arithmetic in Z/p^M as a finite-precision image of Z_p, p an odd prime.
class PAdicContext {
 public:
  /// Throws PreconditionError unless p is an odd prime and M >= 1.
  PAdicContext(unsigned long p, unsigned precision);

  unsigned long p() const { return p_; }
  unsigned precision() const { return precision_; }
  /// p^M.
  const BigInt& modulus() const { return modulus_; }

  friend bool operator==(const PAdicContext& a, const PAdicContext& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_;
  }

 private:
  unsigned long p_;
  unsigned precision_;
  BigInt modulus_;
};

class PAdicNumber {
 public:
  PAdicNumber(const BigInt& value, const PAdicContext& ctx);

  const BigInt& residue() const { return residue_; }
  const PAdicContext& context() const { return ctx_; }
  bool is_unit() const;
  /// p-adic valuation, capped at the precision (zero has valuation M).
  unsigned valuation() const;

  PAdicNumber& operator+=(const PAdicNumber& o);
  PAdicNumber& operator-=(const PAdicNumber& o);
  PAdicNumber& operator*=(const PAdicNumber& o);
  friend PAdicNumber operator+(PAdicNumber a, const PAdicNumber& b) { return a += b; }
  friend PAdicNumber operator-(PAdicNumber a, const PAdicNumber& b) { return a -= b; }
  friend PAdicNumber operator*(PAdicNumber a, const PAdicNumber& b) { return a *= b; }
  friend bool operator==(const PAdicNumber& a, const PAdicNumber& b) {
    return a.ctx_ == b.ctx_ && a.residue_ == b.residue_;
  }

 private:
  void check_context(const PAdicNumber& o) const;
  BigInt residue_;
  PAdicContext ctx_;
};

/// num * den^{-1} mod p^M. Throws PreconditionError("not a p-adic integer
/// at this prime") when p divides the denominator.
PAdicNumber rat_to_padic(const BigRational& r, const PAdicContext& ctx);

/// Throws PreconditionError("non-invertible modulo p^M") for non-units.
PAdicNumber padic_inv(const PAdicNumber& a);

/// N-th fermionic Riemann sum
///   (1/[p^N]_{-q}) sum_{x=0}^{p^N-1} f(x) a^x (-q)^x   mod p^M
/// for a polynomial f (ascending coefficients) and geometric weight a^x,
/// with [p^N]_{-q} = (1 + q^{p^N})/(1 + q). Requires q = 1 mod p and a = 1
/// mod p, both with denominators prime to p.
PAdicNumber fermionic_riemann_sum(std::span<const BigRational> f, const BigRational& weight_base, const BigRational& q,
                                  unsigned N, const PAdicContext& ctx);

/// Moment case f(x) = x^n, a = 1.
PAdicNumber fermionic_riemann_sum(unsigned n, const BigRational& q, unsigned N, const PAdicContext& ctx);

inline constexpr unsigned kDefaultMaxLevel = 8;

struct MomentSweep {
  /// sums[k] is the Riemann sum at N = k + 1, for N up to min(M + 1, max_level).
  std::vector<PAdicNumber> sums;
  /// Smallest N from which every sum through level M + 1 is the same. Unset
  /// when M + 1 exceeds max_level or the last two levels differ.
  std::optional<unsigned> stabilized_at;
};

/// Riemann sums of x^n for N = 1 .. min(M + 1, max_level). The level-N sum
/// equals the integral modulo p^N, so the sum at M + 1 is exact mod p^M.
MomentSweep fermionic_moment_sweep(unsigned n, const BigRational& q, const PAdicContext& ctx,
                                   unsigned max_level = kDefaultMaxLevel);

struct MomentLimit {
  PAdicNumber value;
  unsigned stabilized_at;
};

/// The stabilized moment (the sum at level M + 1); throws Error("did not
/// stabilize") when the sweep leaves stabilized_at unset.
MomentLimit fermionic_moment_limit(unsigned n, const BigRational& q, const PAdicContext& ctx,
                                   unsigned max_level = kDefaultMaxLevel);

}  // namespace feqlab
