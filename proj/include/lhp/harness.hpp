#pragma once

// Theorem registry, verification driver and reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lhp/algebra.hpp"

namespace lhp::harness {

using Params = nlohmann::json;  // always an object; keys sort, so dumps are stable

enum class Status { PASS, FAIL, SKIPPED };
std::string to_string(Status s);

struct Mismatch {
  nlohmann::json monomial;  // exponent map, or {"index": i} for non-polynomial checks
  std::string lhs;
  std::string rhs;
};

struct Outcome {
  Status status = Status::PASS;
  std::string lhs;
  std::string rhs;
  std::optional<Mismatch> mismatch;
  std::string notes;
};

struct TheoremCase {
  std::string id;
  Params params = Params::object();
  Caps caps;  // per-variable overrides of the entry's defaults
};

struct VerificationReport {
  std::string id;
  Params params;
  Status status = Status::PASS;
  std::string lhs;
  std::string rhs;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0;
  std::string notes;
};

using Runner = std::function<Outcome(const Params&, const Caps&)>;

struct Entry {
  std::string id;
  std::string lhs_route;
  std::string rhs_route;
  bool finite_evidence = false;  // the theorem is infinite; only the checked scale is claimed
  Caps default_caps;
  std::function<std::vector<Params>(std::uint64_t seed)> default_cases;
  Runner run;
};

/// All entries, sorted by id.
const std::vector<Entry>& registry();
const Entry* find_entry(const std::string& id);

VerificationReport verify(const TheoremCase& c);

struct SuiteOptions {
  std::string filter = "*";  // shell-style glob on ids
  unsigned parallelism = 1;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;  // sorted by id, then params
  int exit_code = 0;                        // 0 iff no FAIL
};

std::vector<TheoremCase> suite_cases(const SuiteOptions& opt);
SuiteResult run_suite(const SuiteOptions& opt);

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = false);
std::string report_to_text(const VerificationReport& r);
/// One JSON document for a whole run: {"reports": [...], "summary": {...}}.
std::string reports_to_json(const std::vector<VerificationReport>& rs, bool with_timing = false);

// Comparison helpers shared by the registry.

/// Coefficient-wise comparison below caps; the first mismatch follows the
/// monomial order.
Outcome compare_polys(const SparsePoly& lhs, const SparsePoly& rhs, const Caps& caps, std::string lhs_desc,
                      std::string rhs_desc);
Outcome compare_values(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs,
                       std::string lhs_desc, std::string rhs_desc);

int cli_main(int argc, char** argv);

}  // namespace lhp::harness
