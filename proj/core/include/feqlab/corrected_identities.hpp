#pragma once

#include "feqlab/identities.hpp"
#include "feqlab/report.hpp"

namespace feqlab {

// Symmetric variants obtained from the kernel
//   e^{w1 w2 x t}(q^{w1 w2} e^{w1 w2 t} + 1) / ((q^{w1} e^{w1 t} + 1)(q^{w2} e^{w2 t} + 1))
// by expanding each factor with matching q-powers. They keep the printed
// objects (H at -q^{-w}, sums S_{k,q^w}) and add the normalizers [2]_{q^w}.

/// [2]_{q^{w2}} sum_i C(n,i) H_i(-q^{-w1}, w2 x) S_{n-i,q^{w2}}(w1-1) w1^i w2^{n-i}
///   = the same with w1 and w2 exchanged.
IdentitySides corrected_symmetry_sides(unsigned n, unsigned w1, unsigned w2);
VerificationReport corrected_symmetry(unsigned n, unsigned w1, unsigned w2, const EvalMode& mode = {});

/// [2]_{q^{w2}} w1^n sum_{l<w1} (-1)^l q^{w2 l} H_n(-q^{-w1}, w2 x + (w2/w1) l)
///   = the same with w1 and w2 exchanged.
IdentitySides corrected_shift_sides(unsigned n, unsigned w1, unsigned w2);
VerificationReport corrected_shift_symmetry(unsigned n, unsigned w1, unsigned w2, const EvalMode& mode = {});

/// [2]_q w^n sum_{l<w} (-1)^l q^l H_n(-q^{-w}, x + l/w) = [2]_{q^w} H_n(-q^{-1}, w x).
/// This is corrected_shift_symmetry with (w1, w2) = (w, 1).
IdentitySides corrected_multiplication_sides(unsigned n, unsigned w);
VerificationReport corrected_multiplication(unsigned n, unsigned w, const EvalMode& mode = {});

}  // namespace feqlab
