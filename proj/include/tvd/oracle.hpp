#pragma once

#include <vector>

#include "tvd/scenario_io.hpp"

namespace tvd::oracle {

// Brute-force cross-check of a report against its scenario.
//
// Every quantity is recomputed with plain nested loops over std::complex
// (Taylor-series exponential, Jacobi eigenvalues of the real embedding),
// sharing no numerical code with the detectors. A check disagrees when the
// independently predicted outcome differs from the reported one, or when a
// reported Violation is not backed by a nonzero law-level margin.
std::vector<io::OracleCheck> cross_check(const io::Scenario& s, const io::Report& report);

}  // namespace tvd::oracle
