#include "feqlab/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "feqlab/cli/manifest.hpp"

namespace feqlab::cli {

unsigned thread_budget() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FEQ_LAB_THREADS"); env != nullptr && *env != '\0') {
    unsigned cap = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec != std::errc() || ptr != end || cap == 0) {
      throw ConfigError(std::string("FEQ_LAB_THREADS must be a positive integer, got '") + env + "'");
    }
    n = std::min(n, cap);
  }
  return n;
}

namespace {

BigRational parse_q(const std::string& text, const char* flag) {
  try {
    return BigRational::parse(text);
  } catch (const Error& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

struct Common {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("-o,--output", c.output, "Write the report to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-Euler q-identity laboratory", "feqlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FEQLAB_VERSION);

  Common common;

  TableConfig table;
  auto* table_cmd = app.add_subcommand("table", "Frobenius-Euler numbers, polynomials and alternating power sums");
  table_cmd->add_option("kind,--kind", table.kind, "numbers, polynomials, sums or all")
      ->check(CLI::IsMember({"numbers", "polynomials", "sums", "all"}))
      ->capture_default_str();
  table_cmd->add_option("--n-max", table.n_max, "Largest index")->capture_default_str();
  add_common(table_cmd, common);

  VerifyConfig verify;
  std::string suite = "all";
  std::vector<std::string> q_samples{"2"};
  std::string manifest;
  auto* verify_cmd = app.add_subcommand("verify", "Check the identity suites over a parameter grid");
  verify_cmd->add_option("--suite", suite, "paper, corrected or all")
      ->check(CLI::IsMember({"paper", "corrected", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n (and m)")->capture_default_str();
  verify_cmd->add_option("--w-max", verify.w_max, "Largest odd weight")->capture_default_str();
  verify_cmd->add_option("-T,--order", verify.order, "Series truncation order")->capture_default_str();
  verify_cmd->add_option("--q-samples", q_samples, "Rational q values for AT_RATIONAL_Q")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--manifest", manifest, "Expected-status manifest (JSON)");
  add_common(verify_cmd, common);

  PadicConfig padic;
  std::string padic_q;
  auto* padic_cmd = app.add_subcommand("padic", "Fermionic p-adic Riemann sums against closed-form moments");
  padic_cmd->add_option("--p", padic.p, "Odd prime")->capture_default_str();
  padic_cmd->add_option("--q", padic_q, "Rational q congruent to 1 mod p (default 1 + p)");
  padic_cmd->add_option("--precision", padic.precision, "Work modulo p^precision")->capture_default_str();
  padic_cmd->add_option("--n-max", padic.n_max, "Largest moment index")->capture_default_str();
  padic_cmd->add_option("--N-max", padic.n_levels, "Deepest Riemann-sum level")->capture_default_str();
  add_common(padic_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  CommandResult result;
  try {
    const Format format = common.format == "csv" ? Format::kCsv : Format::kJson;
    const unsigned threads = thread_budget();
    if (*table_cmd) {
      result = cmd_table(table, format, threads);
    } else if (*verify_cmd) {
      verify.suite = suite == "paper" ? Suite::kPaper : (suite == "corrected" ? Suite::kCorrected : Suite::kAll);
      verify.q_samples.clear();
      for (const auto& s : q_samples) verify.q_samples.push_back(parse_q(s, "--q-samples"));
      verify.manifest = manifest.empty() ? default_manifest_path() : std::filesystem::path(manifest);
      result = cmd_verify(verify, format, threads);
    } else {
      if (!padic_q.empty()) padic.q = parse_q(padic_q, "--q");
      result = cmd_padic(padic, format, threads);
    }
  } catch (const ConfigError& e) {
    err << "feqlab: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "feqlab: " << e.what() << "\n";
    return kExitMismatch;
  }

  if (common.output.empty()) {
    out << result.report;
  } else {
    std::ofstream file(common.output, std::ios::binary);
    file << result.report;
    if (!file) {
      err << "feqlab: cannot write " << common.output << "\n";
      return kExitConfig;
    }
  }
  return result.exit_code;
}

}  // namespace feqlab::cli
