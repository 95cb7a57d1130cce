#include <doctest.h>

#include <symorb/verify.hpp>

using namespace symorb;

namespace {

VerifyOptions small() {
  VerifyOptions opt;
  opt.max_n = 2;
  return opt;
}

void check_suite(const SuiteReport& report) {
  for (const CheckResult& c : report.checks) {
    INFO(report.suite, ": ", c.name, " ", c.detail);
    CHECK(c.pass);
  }
  CHECK(report.pass());
}

}  // namespace

TEST_CASE("macdonald suite") { check_suite(verify_macdonald_suite(small())); }

TEST_CASE("series suite") { check_suite(verify_series_suite(small())); }

TEST_CASE("degrees suite") {
  VerifyOptions opt;
  opt.max_n = 3;
  const SuiteReport report = verify_degrees_suite(opt);
  CHECK(report.suite == "degrees");
  check_suite(report);
}

TEST_CASE("cocycle suite") { check_suite(verify_cocycle_suite(small())); }

TEST_CASE("ring suite") {
  const SuiteReport report = verify_ring_suite(small());
  CHECK(report.suite == "ring");
  check_suite(report);
}

TEST_CASE("suite dispatch") {
  const auto all = run_suites("all", small());
  CHECK(all.size() == 5);
  CHECK(all_pass(all));

  const auto one = run_suites("degrees", small());
  REQUIRE(one.size() == 1);
  CHECK(one[0].suite == "degrees");

  CHECK_THROWS_WITH_AS(run_suites("nope", small()),
                       doctest::Contains("unknown suite"), std::invalid_argument);
}

TEST_CASE("report formats") {
  const auto reports = run_suites("series", small());
  const std::string text = report_text(reports);
  CHECK(text.find("verification: PASSED") != std::string::npos);
  CHECK(text.find("series") != std::string::npos);

  const nlohmann::json doc = report_json(reports);
  CHECK(doc.at("pass") == true);
  REQUIRE(doc.at("suites").size() == 1);
  CHECK(doc.at("suites")[0].at("suite") == "series");
  for (const auto& check : doc.at("suites")[0].at("checks"))
    CHECK(check.at("pass") == true);
}
