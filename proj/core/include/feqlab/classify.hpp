#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "feqlab/report.hpp"

namespace feqlab {

/// Parameter ranges for a sweep. Each identity reads the axes it uses:
///   moment identities: n_values (and m_values for the shift moments);
///   series identities: w1_values, w2_values, order;
///   symmetry statements: n_values, w1_values, w2_values.
/// Values violating an identity's preconditions (even w, n = 0 where n >= 1
/// is required, w1 = 1 for COROLLARY3) are skipped, not reported.
struct Grid {
  std::vector<unsigned> n_values;
  std::vector<unsigned> m_values;
  std::vector<unsigned> w1_values;
  std::vector<unsigned> w2_values;
  unsigned order = 0;
  /// Drop symmetry-statement cases with w1 == w2 (with w2 = 1 for EQ14,
  /// MULTIPLICATION and CORRECTED_MULT), where both sides coincide by
  /// construction.
  bool skip_equal_weights = false;
};

/// One concrete parameter point for one identity.
struct Case {
  IdentityId id;
  unsigned n = 0;
  unsigned m = 0;
  unsigned w1 = 1;
  unsigned w2 = 1;
  unsigned order = 0;
};

/// Cases of `id` on the grid, in a fixed lexicographic order.
std::vector<Case> enumerate_cases(IdentityId id, const Grid& grid);

/// Dispatches a case to its verifier.
VerificationReport run_case(const Case& c, const EvalMode& mode);

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and
/// returns results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn);

enum class Aggregate { kHoldsAllQ, kHoldsAtQ1Only, kMixed };
std::string_view to_string(Aggregate a);

struct ClassifiedCase {
  Params params;
  Status status_symbolic;
  Status status_at_q1;
};

struct Classification {
  IdentityId id;
  std::vector<ClassifiedCase> cases;
  /// HOLDS_ALL_Q: every case holds symbolically.
  /// HOLDS_AT_Q1_ONLY: every case holds at q = 1 and fails symbolically.
  /// MIXED: anything else.
  Aggregate aggregate;
};

/// Aggregate status of a set of classified cases (rules as above).
Aggregate aggregate_of(const std::vector<ClassifiedCase>& cases);

Classification classify(IdentityId id, const Grid& grid, unsigned threads = 1);

}  // namespace feqlab

#include "feqlab/parallel_map.ipp"
