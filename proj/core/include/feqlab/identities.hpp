#pragma once

#include "feqlab/report.hpp"
#include "feqlab/truncated_series.hpp"
#include "feqlab/x_polynomial.hpp"

namespace feqlab {

struct IdentitySides {
  XPolynomial lhs;
  XPolynomial rhs;
};

/// Building blocks shared by the printed and the corrected statements. In
/// each, H is the Frobenius-Euler polynomial at parameter -q^{-dual_w}.
namespace sides {

/// sum_{i=0}^{n} C(n,i) H_i(wb*x) S_{n-i,q^{wb}}(wa-1) wa^i wb^{n-i}.
/// Swapping (wa, wb) gives the other side of the symmetry statement.
XPolynomial binomial_symmetry(unsigned n, unsigned wa, unsigned wb, unsigned dual_w);

/// wa^n sum_{l=0}^{wa-1} (-1)^l q^{wb*l} H_n(wb*x + (wb/wa)*l).
XPolynomial shifted_symmetry(unsigned n, unsigned wa, unsigned wb, unsigned dual_w);

}  // namespace sides

/// q*H_n(-q^{-1}, 1) + H_n(-q^{-1}) against [2]_q * [n == 0].
VerificationReport verify_eq3_moment(unsigned n, const EvalMode& mode = {});

/// Odd n:  [2]_q S_{m,q}(n-1) = q^n H_m(-q^{-1}, n) + H_m(-q^{-1})   (EQ4_ODD_MOMENT)
/// Even n: q^n H_m(-q^{-1}, n) - H_m(-q^{-1}) = -[2]_q S_{m,q}(n-1)  (EQ5_EVEN_MOMENT)
VerificationReport verify_shift_moments(unsigned m, unsigned n, const EvalMode& mode = {});

/// Ratio of the double integral of e^{(w1 x1 + w2 x2 + w1 w2 x) t} to the
/// weighted single integral, expanded through moments, against the closed
/// form [2]_q e^{w1 w2 x t}(q^{w1 w2} e^{w1 w2 t} + 1)/((q e^{w1 t}+1)(q e^{w2 t}+1)).
VerificationReport verify_eq9_ratio(unsigned w1, unsigned w2, unsigned order, const EvalMode& mode = {});

/// Three expansions of [2]_q (q^w e^{wt} + 1)/(q e^t + 1): closed form,
/// sum of exponentials, and alternating power sums.
VerificationReport verify_eq10_ratio(unsigned w, unsigned order, const EvalMode& mode = {});

/// Both sides of a printed statement exactly as displayed, in Q(q)[x].
/// EQ14 and MULTIPLICATION ignore w2 (fixed to 1).
IdentitySides printed_sides(IdentityId id, unsigned n, unsigned w1, unsigned w2);

/// THEOREM1, COROLLARY2, EQ14, COROLLARY3, THEOREM4 or MULTIPLICATION.
VerificationReport verify_printed(IdentityId id, unsigned n, unsigned w1, unsigned w2, const EvalMode& mode = {});

/// Moment expansion of the fermionic integral of exp(y*t) with the weight
/// q^{(w-1)y} and t scaled by w: ([2]_q/[2]_{q^w}) sum H_n(-q^{-w}) (wt)^n/n!.
/// w = 1 gives the plain moment series (1+q)/(q e^t + 1).
TruncatedSeries weighted_moment_series(unsigned w, unsigned order);

}  // namespace feqlab
