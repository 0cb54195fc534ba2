#include "tvd/verdict.hpp"

#include <utility>

#include "tvd/errors.hpp"

namespace tvd {

std::string_view to_string(Outcome o) {
  return o == Outcome::Violation ? "Violation" : "NoConclusion";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::None: return "none";
    case Reason::PremiseUnmet: return "premise-unmet";
    case Reason::BelowThreshold: return "below-threshold";
    case Reason::Indeterminate: return "indeterminate";
  }
  return "none";
}

Outcome outcome_from_string(std::string_view s) {
  if (s == "Violation") return Outcome::Violation;
  if (s == "NoConclusion") return Outcome::NoConclusion;
  throw Error("unknown outcome '" + std::string(s) + "'");
}

Reason reason_from_string(std::string_view s) {
  for (Reason r : {Reason::None, Reason::PremiseUnmet, Reason::BelowThreshold, Reason::Indeterminate}) {
    if (to_string(r) == s) return r;
  }
  throw Error("unknown reason '" + std::string(s) + "'");
}

Verdict Verdict::violation(std::string symmetry, double margin, Witness witness) {
  Verdict v;
  v.outcome = Outcome::Violation;
  v.violated_symmetry = std::move(symmetry);
  v.margin = margin;
  v.witness = std::move(witness);
  v.reason = Reason::None;
  return v;
}

Verdict Verdict::no_conclusion(Reason reason, std::string detail, double margin, Witness witness) {
  Verdict v;
  v.outcome = Outcome::NoConclusion;
  v.margin = margin;
  v.witness = std::move(witness);
  v.reason = reason;
  v.detail = std::move(detail);
  return v;
}

Evidence classify_evidence(double value, const Tolerances& tol) {
  if (value <= tol.tau_zero) return Evidence::Zero;
  if (value <= tol.tau_violation) return Evidence::Band;
  return Evidence::Positive;
}

}  // namespace tvd
