#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvd/errors.hpp"
#include "tvd/linalg.hpp"
#include "tvd/verdict.hpp"

namespace tvd::io {

inline constexpr int kSchemaVersion = 1;

// Parse/validation failure. `path()` is a JSONPath-like locator such as
// "$.requests[2].state_in".
class ScenarioError : public Error {
 public:
  ScenarioError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Detector { UnitaryCurie, ScatteringCurie, SMatrixInference, CptLink, Kabir, Wigner, Kramers };

std::string_view to_string(Detector d);
std::optional<Detector> detector_from_string(std::string_view s);

struct SymmetryDecl {
  std::string label;
  ComplexMatrix unitary_part;
  bool antilinear = false;
};

struct Request {
  std::string id;
  Detector detector = Detector::Wigner;
  std::map<std::string, std::string> refs;  // role (symmetry, state_in, ...) → declared name
  std::map<std::string, double> params;     // t, ti, tf, gap_tol
};

struct ToleranceOverrides {
  std::optional<double> tau_zero;
  std::optional<double> tau_violation;
  std::optional<double> gap_tol;

  Tolerances apply_to(Tolerances base) const;
};

struct Scenario {
  int schema_version = kSchemaVersion;
  std::size_t dim = 0;
  std::string description;
  std::map<std::string, ComplexMatrix> matrices;  // hamiltonian, h0, v, smatrix
  std::vector<SymmetryDecl> symmetries;
  std::map<std::string, StateVector> states;
  std::vector<Request> requests;
  ToleranceOverrides tolerances;
  std::optional<std::int64_t> seed;

  const SymmetryDecl* find_symmetry(std::string_view label) const;
};

bool equal(const Scenario& a, const Scenario& b);

Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& s);

// One line of a report. Kramers verification uses the outcomes
// Pass / Fail / NotApplicable; every other detector Violation / NoConclusion.
struct Record {
  std::string id;
  std::string detector;
  std::string outcome;
  std::string violated_symmetry;
  double margin = 0.0;
  std::string reason;
  std::string detail;
  Witness witness;

  friend bool operator==(const Record&, const Record&) = default;
};

Record record_from_verdict(std::string id, Detector d, const Verdict& v);

struct OracleCheck {
  std::string id;
  bool agree = true;
  std::string expected_outcome;
  double truth_margin = 0.0;
  std::string note;

  friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct Provenance {
  Tolerances tolerances;
  std::optional<std::int64_t> seed;
  std::string tool_version;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::vector<Record> records;
  Provenance provenance;
  std::optional<std::vector<OracleCheck>> oracle;

  friend bool operator==(const Report&, const Report&) = default;
};

// Canonical form: sorted keys, complex numbers as [re, im], reals printed
// with 17 significant digits, two-space indentation, trailing newline.
std::string serialize_report(const Report& r);
Report parse_report(std::string_view text);

// Human-readable rendering, one line per record.
std::string render_text(const Report& r);

}  // namespace tvd::io
