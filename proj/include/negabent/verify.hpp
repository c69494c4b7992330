#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "negabent/parallel.hpp"

namespace negabent {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
  std::string reproducer;  // first failing input, in truth-table file format where applicable
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

struct VerifyOptions {
  int n_max = 10;
  int n = 4;
  bool exhaustive_quadratics = false;
  int samples = 200;
  std::uint64_t seed = 1;
  Exec exec = Exec::parallel;
};

/// field-core, monomial-grid, mm, transport, construction
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace negabent
