#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "tvd/linalg.hpp"

namespace tvd {

enum class Outcome { Violation, NoConclusion };

enum class Reason {
  None,            // only for Violation
  PremiseUnmet,    // the detector's antecedent does not hold
  BelowThreshold,  // antecedent holds but the evidence is zero within tau_zero
  Indeterminate,   // evidence sits inside the (tau_zero, tau_violation] band
};

std::string_view to_string(Outcome o);
std::string_view to_string(Reason r);
Outcome outcome_from_string(std::string_view s);
Reason reason_from_string(std::string_view s);

// Evidence attached to a verdict: named scalars, amplitudes and notes.
// Keys are kept sorted so reports serialize canonically.
using WitnessValue = std::variant<double, Complex, std::string>;
using Witness = std::map<std::string, WitnessValue>;

struct Verdict {
  Outcome outcome = Outcome::NoConclusion;
  std::string violated_symmetry;  // empty unless outcome == Violation
  double margin = 0.0;
  Witness witness;
  Reason reason = Reason::PremiseUnmet;
  std::string detail;  // finer reason code, e.g. "cpt-premise-unmet"

  bool is_violation() const { return outcome == Outcome::Violation; }

  static Verdict violation(std::string symmetry, double margin, Witness witness);
  static Verdict no_conclusion(Reason reason, std::string detail, double margin = 0.0, Witness witness = {});

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Three-way split of a nonnegative evidence value against the tolerance band.
enum class Evidence { Zero, Band, Positive };
Evidence classify_evidence(double value, const Tolerances& tol);

}  // namespace tvd
