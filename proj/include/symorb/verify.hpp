#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "symorb/koszul.hpp"
#include "symorb/sector.hpp"

namespace symorb {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string str() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  int max_n = 4;
  std::size_t oracle_cells = kDefaultMaxCells;
  std::size_t ring_cells = kDefaultRingCells;
};

// Formula coefficients against the brute-force projector, plus the action and
// projector laws the oracle itself must satisfy.
SuiteReport verify_macdonald_suite(const VerifyOptions& opt);
// Series-path equivalences and specialization identities over a small input
// battery; bounds fixed by the property statements, independent of max_n.
SuiteReport verify_series_suite(const VerifyOptions& opt);
// Degree formulas: slack inequality with its equality condition, multiplicity
// sums, scaling in the base dimension.
SuiteReport verify_degrees_suite(const VerifyOptions& opt);
// Rank regrouping identity over triples: exhaustive for n <= 4, sampled at
// n = 5,6 with a fixed seed.
SuiteReport verify_cocycle_suite(const VerifyOptions& opt);
// Ring laws on the builtin models: adjointness, unit, associativity, the two
// product routes, degree bookkeeping, equivariance, projection, tables.
SuiteReport verify_ring_suite(const VerifyOptions& opt);

// "macdonald", "series", "degrees", "cocycle", "ring", or "all"; throws
// std::invalid_argument for anything else.
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const VerifyOptions& opt);

bool all_pass(const std::vector<SuiteReport>& reports);
std::string report_text(const std::vector<SuiteReport>& reports);
nlohmann::json report_json(const std::vector<SuiteReport>& reports);

}  // namespace symorb
