#include <doctest.h>

#include <iostream>
#include <sstream>

#include "lhp/harness.hpp"

using namespace lhp;
using namespace lhp::harness;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lhp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  const int code = cli_main(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str()};
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("single verifications") {
    auto r = verify({"LHT", {{"n", 4}}, {{var::q, 25}}});
    CHECK(r.status == Status::PASS);
    CHECK(r.params["caps"] == "q=25");
    r = verify({"BOX", {{"n", 3}, {"t", 1}, {"i", 1}}, {}});
    CHECK(r.status == Status::PASS);
    CHECK(r.lhs == "count: 12");
    r = verify({"QCOR", {{"n", 2}}, {}});
    CHECK(r.status == Status::PASS);
    CHECK(r.lhs.find("1 + q") != std::string::npos);
    CHECK(r.rhs.find("1 + q") != std::string::npos);
    CHECK_THROWS_AS(verify({"NO_SUCH_ID", {}, {}}), std::invalid_argument);
    r = verify({"WREATH_K3", {{"k", 3}}, {}});
    CHECK(r.status == Status::SKIPPED);
    CHECK_FALSE(r.notes.empty());
    r = verify({"ONLY_ELL_FINITE", {{"l", 2}, {"m", 1}}, {}});
    CHECK(r.notes.rfind("finite-evidence check at the stated scale", 0) == 0);
  }

  TEST_CASE("registry integrity") {
    const auto& reg = registry();
    CHECK(reg.size() > 40);
    for (std::size_t i = 0; i < reg.size(); ++i) {
      CHECK_FALSE(reg[i].lhs_route.empty());
      CHECK_FALSE(reg[i].rhs_route.empty());
      CHECK(reg[i].lhs_route != reg[i].rhs_route);
      if (i) CHECK(reg[i - 1].id < reg[i].id);
    }
    for (const char* id : {"LHT", "ANTI", "CHEN", "TRUNC", "TRUNC_GF", "KL", "ELL_LH", "ELL_EULER", "GF_14", "GF_41", "CSS",
                           "NEW14", "NEW41", "GOLLNITZ14", "GOLLNITZ41", "REFINED_L", "REFINED_A", "REFINED_TRUNC", "LA_RECIP",
                           "BOX", "REVERSE", "QBOX", "MACMAHON", "PERMSTATS", "BSANTI", "MAJBINV", "LHPDIST", "MAJSQIN",
                           "JOHNSON", "LPTGF", "INVSEQ", "FULLSS", "PERMSGF", "UQCOR", "QCOR", "REV_E", "BN", "ONE_K",
                           "MULTI1", "TYPED_FACTOR", "REALROOT", "HT_GF", "LHP_HT", "CHUNG_GRAHAM", "QDIVIDED",
                           "AS_COINCIDE", "PI_IDENTITIES", "GOR_EQUIV", "ONLY_ELL_FINITE"})
      CHECK_MESSAGE(find_entry(id) != nullptr, id);
  }

  TEST_CASE("report format") {
    const auto fail = compare_polys(SparsePoly(1) + SparsePoly::variable(var::q, 2), SparsePoly(1), {}, "a", "b");
    CHECK(fail.status == Status::FAIL);
    REQUIRE(fail.mismatch.has_value());
    CHECK(fail.mismatch->monomial == nlohmann::json{{"q", 2}});
    CHECK(fail.mismatch->lhs == "1");
    CHECK(fail.mismatch->rhs == "0");
    VerificationReport r;
    r.id = "X";
    r.params = {{"n", 1}};
    r.status = Status::FAIL;
    r.first_mismatch = fail.mismatch;
    const auto j = report_to_json(r);
    CHECK(j["status"] == "FAIL");
    CHECK(j["first_mismatch"]["lhs"] == "1");
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(report_to_json(r, true).contains("elapsed_ms"));
    r.status = Status::PASS;
    r.first_mismatch.reset();
    CHECK(report_to_json(r)["first_mismatch"].is_null());
  }

  TEST_CASE("suite filtering and ordering") {
    SuiteOptions opt;
    opt.filter = "GOR*";
    const auto cases = suite_cases(opt);
    CHECK_FALSE(cases.empty());
    for (const auto& c : cases) CHECK(c.id == "GOR_EQUIV");
    opt.filter = "B*";
    const auto one = run_suite(opt);
    opt.parallelism = 4;
    const auto four = run_suite(opt);
    CHECK(one.exit_code == 0);
    CHECK(reports_to_json(one.reports) == reports_to_json(four.reports));
    for (std::size_t i = 1; i < one.reports.size(); ++i)
      CHECK(std::pair(one.reports[i - 1].id, one.reports[i - 1].params.dump()) <=
            std::pair(one.reports[i].id, one.reports[i].params.dump()));
  }

  TEST_CASE("command line") {
    auto r = run_cli({"eulerian", "--s", "1,2,3,4,5,6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + 57*x + 302*x^2 + 302*x^3 + 57*x^4 + x^5\n");
    r = run_cli({"verify", "--id", "LHT", "--n", "4", "--caps", "q=25"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
    CHECK(run_cli({"verify", "--id", "NOPE"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"eulerian", "--s", "1,x"}).code == 2);
    r = run_cli({"bijection", "--name", "bme", "--params", "k=1,l=4", "--input", "9,12,4,5,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "5^4 7^1 2^1 1^1\n");
    r = run_cli({"--format", "json", "geometry", "--s", "2,3", "--op", "pi"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("[[0,0],[0,1],[0,2],[1,2],[1,3],[1,4]]"));
    r = run_cli({"enumerate", "--s", "1,2", "--max-weight", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).size() == 5);
    r = run_cli({"stats", "--object", "perm", "--value", "2,1", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["lhp"] == 1);
    r = run_cli({"suite", "--filter", "QCOR", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["summary"]["fail"] == 0);
  }
}
