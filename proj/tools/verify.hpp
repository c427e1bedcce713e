#pragma once

#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl::cli {

struct VerifyFailure {
  std::string case_id;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  long cases_run = 0;
  std::vector<VerifyFailure> failures;
  double wall_time = 0;  // seconds
};

/// Runs one of the named suites ("lemmas", "basis", "intertwine",
/// "oscillator", "quadrature", "all"). mu_samples empty means the default
/// certification set sized to max_degree. Throws std::invalid_argument on
/// unknown suite names, inadmissible samples, or (for the quadrature
/// suite) nonpositive samples. Deterministic: cases run in a fixed order.
VerifyReport run_verify(const std::string& suite, int max_degree,
                        std::vector<Rational> mu_samples);

}  // namespace dunkl::cli
