#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvd/scenario_io.hpp"
#include "tvd/tolerances.hpp"

namespace tvd::selftest {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return passed == total; }
};

// Fixed-seed property suites covering every module's invariants.
SuiteResult linalg_suite(const Tolerances& tol);
SuiteResult symmetry_suite(const Tolerances& tol);
SuiteResult curie_suite(const Tolerances& tol);
SuiteResult kabir_suite(const Tolerances& tol);
SuiteResult wigner_suite(const Tolerances& tol);
SuiteResult models_suite(const Tolerances& tol);
SuiteResult scenario_io_suite(const Tolerances& tol);
SuiteResult oracle_suite(const Tolerances& tol);

std::vector<SuiteResult> run_all(const Tolerances& tol);

// A valid random scenario exercising several detectors; deterministic per seed.
io::Scenario random_scenario(std::uint64_t seed);

}  // namespace tvd::selftest
