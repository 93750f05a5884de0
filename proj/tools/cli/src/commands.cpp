#include <functional>
#include <map>
#include <sstream>

#include "feqlab/classify.hpp"
#include "feqlab/cli/cli.hpp"
#include "feqlab/cli/json_io.hpp"
#include "feqlab/cli/manifest.hpp"
#include "feqlab/frobenius_euler.hpp"
#include "feqlab/padic.hpp"
#include "feqlab/qsums.hpp"
#include "feqlab/truncated_series.hpp"

namespace feqlab::cli {

namespace {

Json header(std::string_view command) {
  Json j = Json::object();
  j["command"] = command;
  j["version"] = FEQLAB_VERSION;
  j["series_convention"] = TruncatedSeries::kConvention;
  return j;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kPaper:
      return "paper";
    case Suite::kCorrected:
      return "corrected";
    case Suite::kAll:
      return "all";
  }
  return "all";
}

// ---- table -----------------------------------------------------------------

bool wants(const TableConfig& c, std::string_view kind) { return c.kind == "all" || c.kind == kind; }

}  // namespace

CommandResult cmd_table(const TableConfig& config, Format format, unsigned /*threads*/) {
  require(config.n_max >= 0, "--n-max must be non-negative");
  require(config.kind == "all" || config.kind == "numbers" || config.kind == "polynomials" || config.kind == "sums",
          "unknown table kind '" + config.kind + "'");
  const auto n_max = static_cast<unsigned>(config.n_max);
  const FeNumberTable numbers(n_max);

  CommandResult result;
  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "kind,n,k,m,value\n";
    if (wants(config, "numbers")) {
      for (unsigned n = 0; n <= n_max; ++n) os << "number," << n << ",,," << csv_field(numbers.at(n).to_string()) << "\n";
    }
    if (wants(config, "polynomials")) {
      const FePolyTable polys(numbers);
      for (unsigned n = 0; n <= n_max; ++n) {
        os << "polynomial," << n << ",,," << csv_field(polys.at(n).to_string()) << "\n";
      }
    }
    if (wants(config, "sums")) {
      for (unsigned k = 0; k <= n_max; ++k) {
        for (unsigned m = 0; m <= n_max; ++m) {
          os << "alt_power_sum,," << k << "," << m << "," << csv_field(alt_power_sum(k, m, 1).to_string()) << "\n";
        }
      }
    }
    result.report = os.str();
    return result;
  }

  Json j = header("table");
  j["config"] = {{"kind", config.kind}, {"n_max", config.n_max}};
  if (wants(config, "numbers")) {
    Json arr = Json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
      arr.push_back({{"n", n}, {"numerator", to_json(numbers.numerator(n))}, {"den_power", n}});
    }
    j["numbers"] = std::move(arr);
  }
  if (wants(config, "polynomials")) {
    const FePolyTable polys(numbers);
    Json arr = Json::array();
    for (unsigned n = 0; n <= n_max; ++n) arr.push_back({{"n", n}, {"coefficients", to_json(polys.at(n))}});
    j["polynomials"] = std::move(arr);
  }
  if (wants(config, "sums")) {
    Json arr = Json::array();
    for (unsigned k = 0; k <= n_max; ++k) {
      for (unsigned m = 0; m <= n_max; ++m) {
        arr.push_back({{"k", k}, {"m", m}, {"coefficients", to_json(alt_power_sum(k, m, 1))}});
      }
    }
    j["alt_power_sums"] = std::move(arr);
  }
  result.report = dump(j);
  return result;
}

// ---- verify ----------------------------------------------------------------

namespace {

struct Record {
  VerificationReport report;
  std::optional<Status> expected;
  bool degenerate = false;
  bool matches() const { return !expected || *expected == report.status(); }
};

std::vector<IdentityId> suite_ids(Suite s) {
  std::vector<IdentityId> out;
  for (IdentityId id : kAllIdentities) {
    const bool corrected = is_corrected(id);
    if (s == Suite::kAll || (s == Suite::kCorrected) == corrected) out.push_back(id);
  }
  return out;
}

Grid verify_grid(const VerifyConfig& c) {
  Grid g;
  for (long n = 0; n <= c.n_max; ++n) {
    g.n_values.push_back(static_cast<unsigned>(n));
    g.m_values.push_back(static_cast<unsigned>(n));
  }
  for (long w = 1; w <= c.w_max; w += 2) {
    g.w1_values.push_back(static_cast<unsigned>(w));
    g.w2_values.push_back(static_cast<unsigned>(w));
  }
  g.order = static_cast<unsigned>(c.order);
  return g;
}

std::string_view expected_name(const std::optional<Status>& s) { return s ? to_string(*s) : "UNCONSTRAINED"; }

Json record_json(const Record& r) {
  const VerificationReport& v = r.report;
  Json j = Json::object();
  j["id"] = to_string(v.id);
  j["params"] = to_json(v.params);
  j["mode"] = v.mode.name();
  j["q"] = v.mode.kind() == EvalMode::Kind::kSymbolicQ ? Json(nullptr) : to_json(v.mode.q0());
  j["status"] = to_string(v.status());
  j["expected"] = expected_name(r.expected);
  j["match"] = r.matches();
  j["hypothesis_met"] = v.hypothesis_met;
  j["witness_order"] = v.witness_order ? Json(*v.witness_order) : Json(nullptr);
  j["witness"] = to_json(v.witness);
  return j;
}

std::string params_csv(const Params& params, std::string_view name) {
  for (const auto& [key, value] : params) {
    if (key == name) return std::to_string(value);
  }
  return "";
}

}  // namespace

CommandResult cmd_verify(const VerifyConfig& config, Format format, unsigned threads) {
  require(config.n_max >= 0, "--n-max must be non-negative");
  require(config.w_max >= 1, "--w-max must be at least 1");
  require(config.order >= 0, "--order must be non-negative");
  for (const auto& q : config.q_samples) {
    // q = -1 is a pole of the bracket [2]_q and of every dual number.
    require(q != BigRational(-1), "q sample -1 is a pole of [2]_q");
  }
  const ExpectedStatus manifest = [&] {
    try {
      return ExpectedStatus::load(config.manifest);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }();

  std::vector<EvalMode> modes{EvalMode::symbolic(), EvalMode::at_q1()};
  for (const auto& q : config.q_samples) modes.push_back(EvalMode::at(q));

  const Grid grid = verify_grid(config);
  std::vector<Case> cases;
  for (IdentityId id : suite_ids(config.suite)) {
    auto more = enumerate_cases(id, grid);
    cases.insert(cases.end(), more.begin(), more.end());
  }

  std::function<std::vector<Record>(std::size_t)> fn = [&](std::size_t i) {
    std::vector<Record> out;
    for (const auto& mode : modes) {
      VerificationReport r = run_case(cases[i], mode);
      const bool degenerate = manifest.is_degenerate(r.id, r.params);
      auto expected = manifest.expected(r.id, mode, r.params);
      out.push_back({std::move(r), expected, degenerate});
    }
    return out;
  };
  std::vector<std::vector<Record>> per_case;
  try {
    per_case = parallel_map(cases.size(), threads, fn);
  } catch (const PoleError& e) {
    throw ConfigError(std::string("q sample hits a pole: ") + e.what());
  }

  std::size_t records = 0;
  std::size_t mismatches = 0;
  std::map<IdentityId, std::vector<ClassifiedCase>> by_identity;
  for (const auto& group : per_case) {
    for (const auto& r : group) {
      ++records;
      if (!r.matches()) ++mismatches;
    }
    // group[0] is SYMBOLIC_Q and group[1] is AT_Q1 (see `modes`).
    if (!group[0].degenerate) {
      by_identity[group[0].report.id].push_back(
          {group[0].report.params, group[0].report.status(), group[1].report.status()});
    }
  }

  CommandResult result;
  result.exit_code = mismatches == 0 ? kExitOk : kExitMismatch;

  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "id,n,m,w,w1,w2,T,mode,q,status,expected,match,hypothesis_met,witness_order,witness\n";
    for (const auto& group : per_case) {
      for (const auto& r : group) {
        const auto& v = r.report;
        os << to_string(v.id);
        for (const char* name : {"n", "m", "w", "w1", "w2", "T"}) os << "," << params_csv(v.params, name);
        os << "," << v.mode.name() << ","
           << (v.mode.kind() == EvalMode::Kind::kSymbolicQ ? std::string() : v.mode.q0().to_string()) << ","
           << to_string(v.status()) << "," << expected_name(r.expected) << "," << (r.matches() ? "true" : "false")
           << "," << (v.hypothesis_met ? "true" : "false") << ","
           << (v.witness_order ? std::to_string(*v.witness_order) : std::string()) << ","
           << csv_field(v.witness.to_string()) << "\n";
      }
    }
    result.report = os.str();
    return result;
  }

  Json j = header("verify");
  Json samples = Json::array();
  for (const auto& q : config.q_samples) samples.push_back(to_json(q));
  j["config"] = {{"suite", suite_name(config.suite)},
                 {"n_max", config.n_max},
                 {"w_max", config.w_max},
                 {"T", config.order},
                 {"q_samples", std::move(samples)}};
  Json arr = Json::array();
  for (const auto& group : per_case) {
    for (const auto& r : group) arr.push_back(record_json(r));
  }
  j["records"] = std::move(arr);
  Json aggregates = Json::object();
  for (IdentityId id : suite_ids(config.suite)) {
    auto it = by_identity.find(id);
    if (it != by_identity.end()) aggregates[std::string(to_string(id))] = to_string(aggregate_of(it->second));
  }
  j["summary"] = {{"records", records}, {"mismatches", mismatches}, {"aggregates", std::move(aggregates)}};
  result.report = dump(j);
  return result;
}

// ---- padic -----------------------------------------------------------------

namespace {

struct PadicRecord {
  unsigned n;
  MomentSweep sweep;
  PAdicNumber closed_form;
  BigRational closed_rational;
  bool match() const { return sweep.stabilized_at && sweep.sums.back() == closed_form; }
};

}  // namespace

CommandResult cmd_padic(const PadicConfig& config, Format format, unsigned threads) {
  require(config.p >= 3, "--p must be an odd prime");
  require(config.precision >= 1, "--precision must be at least 1");
  require(config.n_max >= 0, "--n-max must be non-negative");
  require(config.n_levels >= 1, "--N-max must be at least 1");
  std::optional<PAdicContext> ctx;
  try {
    ctx.emplace(static_cast<unsigned long>(config.p), static_cast<unsigned>(config.precision));
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("--p: ") + e.what());
  }
  const BigRational q = config.q.value_or(BigRational(1 + config.p));
  try {
    const PAdicNumber qp = rat_to_padic(q, *ctx);
    require(mpz_divisible_ui_p(BigInt(qp.residue() - 1).get_mpz_t(), ctx->p()) != 0,
            "--q must be congruent to 1 modulo p");
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("--q: ") + e.what());
  }
  // The sweep never goes past level M + 1; make sure that level is feasible.
  const unsigned top = std::min<unsigned>(static_cast<unsigned>(config.precision) + 1,
                                          static_cast<unsigned>(config.n_levels));
  BigInt terms = 1;
  for (unsigned i = 0; i < top; ++i) terms *= static_cast<unsigned long>(config.p);
  require(terms <= BigInt(1) << 40, "p^N exceeds the 2^40 term limit for the requested levels");

  const auto n_max = static_cast<unsigned>(config.n_max);
  const FeDualTable moments(n_max, 1);
  std::function<PadicRecord(std::size_t)> fn = [&](std::size_t i) {
    const auto n = static_cast<unsigned>(i);
    const BigRational closed = moments.number(n).evaluate(q);
    return PadicRecord{n, fermionic_moment_sweep(n, q, *ctx, static_cast<unsigned>(config.n_levels)),
                       rat_to_padic(closed, *ctx), closed};
  };
  const std::vector<PadicRecord> rows = parallel_map(n_max + 1, threads, fn);

  std::size_t mismatches = 0;
  for (const auto& r : rows) mismatches += r.match() ? 0 : 1;
  CommandResult result;
  result.exit_code = mismatches == 0 ? kExitOk : kExitMismatch;

  if (format == Format::kCsv) {
    std::ostringstream os;
    os << "n,p,q,precision,N_stabilized,value,closed_form,closed_form_rational,match,residues\n";
    for (const auto& r : rows) {
      std::string residues;
      for (const auto& s : r.sweep.sums) residues += (residues.empty() ? "" : ";") + s.residue().get_str();
      os << r.n << "," << config.p << "," << q.to_string() << "," << config.precision << ","
         << (r.sweep.stabilized_at ? std::to_string(*r.sweep.stabilized_at) : std::string()) << ","
         << (r.sweep.stabilized_at ? r.sweep.sums.back().residue().get_str() : std::string()) << ","
         << r.closed_form.residue().get_str() << "," << r.closed_rational.to_string() << ","
         << (r.match() ? "true" : "false") << "," << residues << "\n";
    }
    result.report = os.str();
    return result;
  }

  Json j = header("padic");
  j["config"] = {{"p", config.p},
                 {"q", to_json(q)},
                 {"precision", config.precision},
                 {"n_max", config.n_max},
                 {"N_max", config.n_levels}};
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json sums = Json::array();
    for (std::size_t k = 0; k < r.sweep.sums.size(); ++k) {
      sums.push_back({{"N", k + 1}, {"residue", to_json(r.sweep.sums[k].residue())}});
    }
    Json rec = Json::object();
    rec["n"] = r.n;
    rec["sums"] = std::move(sums);
    rec["N_stabilized"] = r.sweep.stabilized_at ? Json(*r.sweep.stabilized_at) : Json(nullptr);
    rec["value"] = r.sweep.stabilized_at ? to_json(r.sweep.sums.back().residue()) : Json(nullptr);
    rec["closed_form"] = to_json(r.closed_form.residue());
    rec["closed_form_rational"] = to_json(r.closed_rational);
    rec["match"] = r.match();
    arr.push_back(std::move(rec));
  }
  j["records"] = std::move(arr);
  j["summary"] = {{"records", rows.size()}, {"mismatches", mismatches}};
  result.report = dump(j);
  return result;
}

}  // namespace feqlab::cli
