#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "feqlab/big_rational.hpp"
#include "feqlab/error.hpp"

namespace feqlab::cli {

/// Exit codes of the feqlab command.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitConfig = 2,
};

enum class Format { kJson, kCsv };
enum class Suite { kPaper, kCorrected, kAll };

struct TableConfig {
  std::string kind = "all";  // numbers, polynomials, sums or all
  long n_max = 6;
};

struct VerifyConfig {
  Suite suite = Suite::kAll;
  long n_max = 6;
  long w_max = 5;
  long order = 8;
  std::vector<BigRational> q_samples{BigRational(2)};
  std::filesystem::path manifest;
};

struct PadicConfig {
  long p = 3;
  std::optional<BigRational> q;  // defaults to 1 + p
  long precision = 4;
  long n_max = 6;
  long n_levels = 8;
};

/// Rendered report plus the exit code it implies.
struct CommandResult {
  int exit_code = kExitOk;
  std::string report;
};

/// Invalid configuration, detected before any computation starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Each command validates its config up front and throws ConfigError.
CommandResult cmd_table(const TableConfig& config, Format format, unsigned threads);
CommandResult cmd_verify(const VerifyConfig& config, Format format, unsigned threads);
CommandResult cmd_padic(const PadicConfig& config, Format format, unsigned threads);

/// Worker count: hardware concurrency, capped by FEQ_LAB_THREADS when set.
/// Throws feqlab::Error when the variable is not a positive integer.
unsigned thread_budget();

/// Entry point behind main(); args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feqlab::cli
