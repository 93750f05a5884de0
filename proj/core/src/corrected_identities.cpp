#include "feqlab/corrected_identities.hpp"

#include <string>

#include "feqlab/error.hpp"

namespace feqlab {

namespace {

void require_odd(unsigned w, const char* name) {
  if (w == 0 || w % 2 == 0) throw PreconditionError(std::string(name) + " must be an odd positive integer");
}

RationalFunction two_bracket(unsigned w) { return RationalFunction(IntPolynomial{1} + IntPolynomial::monomial(1, w)); }

VerificationReport report(IdentityId id, Params params, const EvalMode& mode, const IdentitySides& s) {
  return VerificationReport{id, std::move(params), mode, mode.apply(s.lhs - s.rhs), std::nullopt, true};
}

}  // namespace

IdentitySides corrected_symmetry_sides(unsigned n, unsigned w1, unsigned w2) {
  require_odd(w1, "w1");
  require_odd(w2, "w2");
  return {sides::binomial_symmetry(n, w1, w2, w1) * two_bracket(w2),
          sides::binomial_symmetry(n, w2, w1, w2) * two_bracket(w1)};
}

VerificationReport corrected_symmetry(unsigned n, unsigned w1, unsigned w2, const EvalMode& mode) {
  return report(IdentityId::kCorrectedSymmetry, {{"n", n}, {"w1", w1}, {"w2", w2}}, mode,
                corrected_symmetry_sides(n, w1, w2));
}

IdentitySides corrected_shift_sides(unsigned n, unsigned w1, unsigned w2) {
  require_odd(w1, "w1");
  require_odd(w2, "w2");
  return {sides::shifted_symmetry(n, w1, w2, w1) * two_bracket(w2),
          sides::shifted_symmetry(n, w2, w1, w2) * two_bracket(w1)};
}

VerificationReport corrected_shift_symmetry(unsigned n, unsigned w1, unsigned w2, const EvalMode& mode) {
  return report(IdentityId::kCorrectedShift, {{"n", n}, {"w1", w1}, {"w2", w2}}, mode,
                corrected_shift_sides(n, w1, w2));
}

IdentitySides corrected_multiplication_sides(unsigned n, unsigned w) { return corrected_shift_sides(n, w, 1); }

VerificationReport corrected_multiplication(unsigned n, unsigned w, const EvalMode& mode) {
  return report(IdentityId::kCorrectedMult, {{"n", n}, {"w1", w}, {"w2", 1}}, mode,
                corrected_multiplication_sides(n, w));
}

}  // namespace feqlab
