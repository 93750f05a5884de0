#include "feqlab/report.hpp"

namespace feqlab {

namespace {

struct IdName {
  IdentityId id;
  std::string_view name;
};

constexpr IdName kNames[] = {
    {IdentityId::kEq3Moment, "EQ3_MOMENT"},
    {IdentityId::kEq4OddMoment, "EQ4_ODD_MOMENT"},
    {IdentityId::kEq5EvenMoment, "EQ5_EVEN_MOMENT"},
    {IdentityId::kEq9Ratio, "EQ9_RATIO"},
    {IdentityId::kEq10Ratio, "EQ10_RATIO"},
    {IdentityId::kTheorem1, "THEOREM1"},
    {IdentityId::kCorollary2, "COROLLARY2"},
    {IdentityId::kEq14, "EQ14"},
    {IdentityId::kCorollary3, "COROLLARY3"},
    {IdentityId::kTheorem4, "THEOREM4"},
    {IdentityId::kMultiplication, "MULTIPLICATION"},
    {IdentityId::kCorrectedSymmetry, "CORRECTED_SYMMETRY"},
    {IdentityId::kCorrectedShift, "CORRECTED_SHIFT"},
    {IdentityId::kCorrectedMult, "CORRECTED_MULT"},
};

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "UNKNOWN";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

bool is_printed_theorem(IdentityId id) {
  switch (id) {
    case IdentityId::kTheorem1:
    case IdentityId::kCorollary2:
    case IdentityId::kEq14:
    case IdentityId::kCorollary3:
    case IdentityId::kTheorem4:
    case IdentityId::kMultiplication:
      return true;
    default:
      return false;
  }
}

bool is_corrected(IdentityId id) {
  return id == IdentityId::kCorrectedSymmetry || id == IdentityId::kCorrectedShift ||
         id == IdentityId::kCorrectedMult;
}

std::string_view EvalMode::name() const {
  switch (kind_) {
    case Kind::kSymbolicQ:
      return "SYMBOLIC_Q";
    case Kind::kAtQ1:
      return "AT_Q1";
    case Kind::kAtRationalQ:
      return "AT_RATIONAL_Q";
  }
  return "SYMBOLIC_Q";
}

XPolynomial EvalMode::apply(const XPolynomial& symbolic_witness) const {
  if (kind_ == Kind::kSymbolicQ) return symbolic_witness;
  return symbolic_witness.evaluate_q(q0_);
}

std::string_view to_string(Status s) { return s == Status::kHolds ? "HOLDS" : "FAILS"; }

std::optional<long> VerificationReport::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  return std::nullopt;
}

}  // namespace feqlab
