#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "lhp/harness.hpp"

namespace lhp::harness {

std::vector<TheoremCase> suite_cases(const SuiteOptions& opt) {
  std::vector<TheoremCase> cases;
  for (const auto& e : registry()) {
    if (fnmatch(opt.filter.c_str(), e.id.c_str(), 0) != 0) continue;
    for (auto& p : e.default_cases(opt.seed)) cases.push_back({e.id, std::move(p), {}});
  }
  return cases;
}

SuiteResult run_suite(const SuiteOptions& opt) {
  const auto cases = suite_cases(opt);
  std::vector<VerificationReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        reports[i] = verify(cases[i]);
      } catch (const std::exception& ex) {
        // a throwing case is a failed check, not a crashed suite
        auto& r = reports[i];
        r.id = cases[i].id;
        r.params = cases[i].params;
        r.status = Status::FAIL;
        r.lhs = r.rhs = "not computed";
        r.first_mismatch = Mismatch{{{"index", 0}}, "error", "error"};
        r.notes = std::string("exception: ") + ex.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.parallelism, static_cast<unsigned>(cases.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < reports.size(); ++i) keys.emplace_back(reports[i].id + '\n' + reports[i].params.dump(), i);
  std::stable_sort(keys.begin(), keys.end());

  SuiteResult result;
  for (const auto& [key, i] : keys) {
    if (reports[i].status == Status::FAIL) result.exit_code = 1;
    result.reports.push_back(std::move(reports[i]));
  }
  return result;
}

}  // namespace lhp::harness
