#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "feqlab/report.hpp"

namespace feqlab::cli {

/// Expected verification statuses, loaded from data/expected_status.json.
///
/// Each identity maps every mode name to "HOLDS", "FAILS" or
/// "UNCONSTRAINED". An identity may add "equal_weights": a status that
/// overrides the others whenever its w1 and w2 parameters coincide.
class ExpectedStatus {
 public:
  /// Throws feqlab::Error with a diagnostic when the file is unreadable,
  /// malformed, or lacks an identity.
  static ExpectedStatus load(const std::filesystem::path& path);

  /// nullopt means the manifest places no constraint on this record.
  std::optional<Status> expected(IdentityId id, const EvalMode& mode, const Params& params) const;

  /// True when the equal-weights override applies to these parameters.
  bool is_degenerate(IdentityId id, const Params& params) const;

 private:
  struct Entry {
    std::map<std::string, std::optional<Status>, std::less<>> by_mode;
    std::optional<std::optional<Status>> equal_weights;
  };
  std::map<IdentityId, Entry> entries_;
};

/// The manifest next to an installed binary, or the one in the source tree.
std::filesystem::path default_manifest_path();

}  // namespace feqlab::cli
