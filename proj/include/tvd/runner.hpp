#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvd/scenario_io.hpp"

namespace tvd {

inline constexpr const char* kToolVersion = "tvd 1.0.0";

// Overrides applied on top of a scenario's own tolerances (environment and
// command-line layers).
struct RunOptions {
  io::ToleranceOverrides overrides;
  std::optional<std::int64_t> seed;
  unsigned jobs = 1;
};

Tolerances effective_tolerances(const io::Scenario& s, const RunOptions& opt);

// Executes one request. Detector errors are rethrown as ScenarioError whose
// path names the request.
io::Record run_request(const io::Scenario& s, std::size_t index, const Tolerances& tol);

io::Report run_scenario(const io::Scenario& s, const RunOptions& opt);

// Evaluates every (scenario, request) pair on `opt.jobs` worker threads.
// Output order matches input order regardless of scheduling.
std::vector<io::Report> run_batch(const std::vector<io::Scenario>& scenarios, const RunOptions& opt);

}  // namespace tvd
