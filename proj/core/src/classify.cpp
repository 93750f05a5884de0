#include "feqlab/classify.hpp"

#include "feqlab/corrected_identities.hpp"
#include "feqlab/error.hpp"
#include "feqlab/identities.hpp"

namespace feqlab {

namespace {

bool odd(unsigned w) { return w % 2 == 1; }

bool uses_fixed_w2(IdentityId id) {
  return id == IdentityId::kEq14 || id == IdentityId::kMultiplication || id == IdentityId::kCorrectedMult;
}

bool is_two_weight_symmetry(IdentityId id) {
  return id == IdentityId::kTheorem1 || id == IdentityId::kCorollary2 || id == IdentityId::kTheorem4 ||
         id == IdentityId::kCorrectedSymmetry || id == IdentityId::kCorrectedShift;
}

}  // namespace

std::vector<Case> enumerate_cases(IdentityId id, const Grid& grid) {
  std::vector<Case> out;
  switch (id) {
    case IdentityId::kEq3Moment:
      for (unsigned n : grid.n_values) out.push_back({id, n});
      break;
    case IdentityId::kEq4OddMoment:
    case IdentityId::kEq5EvenMoment: {
      const bool want_odd = id == IdentityId::kEq4OddMoment;
      for (unsigned m : grid.m_values) {
        for (unsigned n : grid.n_values) {
          if (n == 0 || odd(n) != want_odd) continue;
          out.push_back({id, n, m});
        }
      }
      break;
    }
    case IdentityId::kEq9Ratio:
      for (unsigned w1 : grid.w1_values) {
        for (unsigned w2 : grid.w2_values) {
          if (odd(w1) && odd(w2)) out.push_back({id, 0, 0, w1, w2, grid.order});
        }
      }
      break;
    case IdentityId::kEq10Ratio:
      for (unsigned w : grid.w1_values) {
        if (odd(w)) out.push_back({id, 0, 0, w, 1, grid.order});
      }
      break;
    case IdentityId::kCorollary3:
      for (unsigned n : grid.n_values) {
        for (unsigned w1 : grid.w1_values) {
          if (n >= 1 && odd(w1) && w1 > 1) out.push_back({id, n, 0, w1, 1});
        }
      }
      break;
    default:
      if (uses_fixed_w2(id)) {
        for (unsigned n : grid.n_values) {
          for (unsigned w1 : grid.w1_values) {
            if (!odd(w1) || (grid.skip_equal_weights && w1 == 1)) continue;
            out.push_back({id, n, 0, w1, 1});
          }
        }
      } else if (is_two_weight_symmetry(id)) {
        for (unsigned n : grid.n_values) {
          for (unsigned w1 : grid.w1_values) {
            for (unsigned w2 : grid.w2_values) {
              if (!odd(w1) || !odd(w2) || (grid.skip_equal_weights && w1 == w2)) continue;
              out.push_back({id, n, 0, w1, w2});
            }
          }
        }
      }
      break;
  }
  return out;
}

VerificationReport run_case(const Case& c, const EvalMode& mode) {
  switch (c.id) {
    case IdentityId::kEq3Moment:
      return verify_eq3_moment(c.n, mode);
    case IdentityId::kEq4OddMoment:
    case IdentityId::kEq5EvenMoment:
      return verify_shift_moments(c.m, c.n, mode);
    case IdentityId::kEq9Ratio:
      return verify_eq9_ratio(c.w1, c.w2, c.order, mode);
    case IdentityId::kEq10Ratio:
      return verify_eq10_ratio(c.w1, c.order, mode);
    case IdentityId::kCorrectedSymmetry:
      return corrected_symmetry(c.n, c.w1, c.w2, mode);
    case IdentityId::kCorrectedShift:
      return corrected_shift_symmetry(c.n, c.w1, c.w2, mode);
    case IdentityId::kCorrectedMult:
      return corrected_multiplication(c.n, c.w1, mode);
    default:
      return verify_printed(c.id, c.n, c.w1, c.w2, mode);
  }
}

std::string_view to_string(Aggregate a) {
  switch (a) {
    case Aggregate::kHoldsAllQ:
      return "HOLDS_ALL_Q";
    case Aggregate::kHoldsAtQ1Only:
      return "HOLDS_AT_Q1_ONLY";
    case Aggregate::kMixed:
      return "MIXED";
  }
  return "MIXED";
}

Classification classify(IdentityId id, const Grid& grid, unsigned threads) {
  const std::vector<Case> cases = enumerate_cases(id, grid);
  std::function<ClassifiedCase(std::size_t)> fn = [&cases](std::size_t i) {
    VerificationReport symbolic = run_case(cases[i], EvalMode::symbolic());
    // A symbolic zero stays zero under q -> 1; only failures need a rerun
    // (series witnesses report a single order, so re-evaluation is not enough).
    Status at_q1 = symbolic.holds() ? Status::kHolds : run_case(cases[i], EvalMode::at_q1()).status();
    return ClassifiedCase{symbolic.params, symbolic.status(), at_q1};
  };
  Classification out{id, parallel_map(cases.size(), threads, fn), Aggregate::kMixed};
  out.aggregate = aggregate_of(out.cases);
  return out;
}

Aggregate aggregate_of(const std::vector<ClassifiedCase>& cases) {
  bool all_symbolic = true;
  bool none_symbolic = true;
  bool all_q1 = true;
  for (const auto& c : cases) {
    all_symbolic = all_symbolic && c.status_symbolic == Status::kHolds;
    none_symbolic = none_symbolic && c.status_symbolic == Status::kFails;
    all_q1 = all_q1 && c.status_at_q1 == Status::kHolds;
  }
  if (all_symbolic) return Aggregate::kHoldsAllQ;
  if (all_q1 && none_symbolic) return Aggregate::kHoldsAtQ1Only;
  return Aggregate::kMixed;
}

}  // namespace feqlab
