#include <sstream>

#include "lhp/harness.hpp"
#include "lhp/json_io.hpp"

namespace lhp::harness {

std::string to_string(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SKIPPED: return "SKIPPED";
  }
  return "?";
}

Outcome compare_polys(const SparsePoly& lhs, const SparsePoly& rhs, const Caps& caps, std::string lhs_desc,
                      std::string rhs_desc) {
  Outcome out;
  const SparsePoly l = TruncSeries(lhs, caps).poly();
  const SparsePoly r = TruncSeries(rhs, caps).poly();
  // short polynomials are spelled out in full
  auto describe = [](std::string desc, const SparsePoly& p) {
    desc += " [" + std::to_string(p.size()) + " terms";
    if (p.size() <= 6) desc += ": " + p.to_string();
    return desc + "]";
  };
  out.lhs = describe(std::move(lhs_desc), l);
  out.rhs = describe(std::move(rhs_desc), r);
  const SparsePoly diff = l - r;
  if (diff.is_zero()) return out;
  const Monomial& m = diff.terms().begin()->first;
  out.status = Status::FAIL;
  out.mismatch = Mismatch{monomial_to_json(m), l.coeff(m).get_str(), r.coeff(m).get_str()};
  return out;
}

Outcome compare_values(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs,
                       std::string lhs_desc, std::string rhs_desc) {
  Outcome out;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  out.lhs = std::move(lhs_desc) + ": " + join(lhs);
  out.rhs = std::move(rhs_desc) + ": " + join(rhs);
  const std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = i < lhs.size() ? lhs[i] : "<none>";
    const std::string b = i < rhs.size() ? rhs[i] : "<none>";
    if (a != b) {
      out.status = Status::FAIL;
      out.mismatch = Mismatch{{{"index", i}}, a, b};
      break;
    }
  }
  return out;
}

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.first_mismatch)
    j["first_mismatch"] = {{"monomial", r.first_mismatch->monomial}, {"lhs", r.first_mismatch->lhs}, {"rhs", r.first_mismatch->rhs}};
  else
    j["first_mismatch"] = nullptr;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.status) << "  " << r.id << " " << r.params.dump() << "\n";
  os << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
  if (r.first_mismatch)
    os << "  first mismatch at " << r.first_mismatch->monomial.dump() << ": " << r.first_mismatch->lhs << " vs "
       << r.first_mismatch->rhs << "\n";
  if (!r.notes.empty()) os << "  notes: " << r.notes << "\n";
  return os.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& rs, bool with_timing) {
  nlohmann::json j;
  j["reports"] = nlohmann::json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : rs) {
    j["reports"].push_back(report_to_json(r, with_timing));
    (r.status == Status::PASS ? pass : r.status == Status::FAIL ? fail : skipped)++;
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"total", rs.size()}};
  return j.dump(2) + "\n";
}

}  // namespace lhp::harness
