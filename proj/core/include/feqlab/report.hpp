#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "feqlab/big_rational.hpp"
#include "feqlab/x_polynomial.hpp"

namespace feqlab {

enum class IdentityId {
  kEq3Moment,
  kEq4OddMoment,
  kEq5EvenMoment,
  kEq9Ratio,
  kEq10Ratio,
  kTheorem1,
  kCorollary2,
  kEq14,
  kCorollary3,
  kTheorem4,
  kMultiplication,
  kCorrectedSymmetry,
  kCorrectedShift,
  kCorrectedMult,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::kEq3Moment,     IdentityId::kEq4OddMoment,      IdentityId::kEq5EvenMoment,
    IdentityId::kEq9Ratio,      IdentityId::kEq10Ratio,         IdentityId::kTheorem1,
    IdentityId::kCorollary2,    IdentityId::kEq14,              IdentityId::kCorollary3,
    IdentityId::kTheorem4,      IdentityId::kMultiplication,    IdentityId::kCorrectedSymmetry,
    IdentityId::kCorrectedShift, IdentityId::kCorrectedMult,
};

/// Wire name, e.g. "THEOREM1".
std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

/// The six printed statements that are checked verbatim and may fail.
bool is_printed_theorem(IdentityId id);
bool is_corrected(IdentityId id);

/// How a witness is reported: as an element of Q(q)[x], or with q fixed.
class EvalMode {
 public:
  enum class Kind { kSymbolicQ, kAtQ1, kAtRationalQ };

  EvalMode() = default;
  static EvalMode symbolic() { return EvalMode(); }
  static EvalMode at_q1() { return EvalMode(Kind::kAtQ1, BigRational(1)); }
  static EvalMode at(const BigRational& q0) { return EvalMode(Kind::kAtRationalQ, q0); }

  Kind kind() const { return kind_; }
  /// The fixed value of q; 1 for kAtQ1, unused for kSymbolicQ.
  const BigRational& q0() const { return q0_; }
  /// "SYMBOLIC_Q", "AT_Q1" or "AT_RATIONAL_Q".
  std::string_view name() const;

  /// Maps a symbolic witness into this mode.
  XPolynomial apply(const XPolynomial& symbolic_witness) const;

  friend bool operator==(const EvalMode& a, const EvalMode& b) = default;

 private:
  EvalMode(Kind kind, BigRational q0) : kind_(kind), q0_(std::move(q0)) {}
  Kind kind_ = Kind::kSymbolicQ;
  BigRational q0_{0};
};

enum class Status { kHolds, kFails };
std::string_view to_string(Status s);

/// Named integer parameters in a fixed, meaningful order (n, m, w1, w2, T).
using Params = std::vector<std::pair<std::string, long>>;

/// Outcome of one identity check. The witness is LHS - RHS in the report's
/// mode, so the status is derived from it rather than stored.
struct VerificationReport {
  IdentityId id;
  Params params;
  EvalMode mode;
  XPolynomial witness;
  /// For series identities: the t-order of the reported witness coefficient.
  std::optional<unsigned> witness_order;
  /// False when the parameters lie outside the hypothesis printed with the
  /// statement (e.g. even n for a statement restricted to odd n).
  bool hypothesis_met = true;

  Status status() const { return witness.is_zero() ? Status::kHolds : Status::kFails; }
  bool holds() const { return witness.is_zero(); }
  std::optional<long> param(std::string_view name) const;
};

}  // namespace feqlab
