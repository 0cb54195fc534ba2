#include "tvd/curie.hpp"

#include <cmath>
#include <utility>

#include "tvd/errors.hpp"

namespace tvd::curie {

namespace {

void require_linear(const SymmetryTransform& r, const char* what) {
  if (r.antilinear()) {
    throw MisuseError(std::string(what) + ": symmetry '" + r.label() +
                      "' is antilinear; the Curie argument only holds for linear symmetries");
  }
}

void require_normalized(const StateVector& psi, const char* what, const char* name, const Tolerances& tol) {
  if (!linalg::is_normalized(psi, tol.tau_zero)) {
    throw PremiseError(std::string(what) + ": state '" + name + "' is not normalized (norm " +
                       std::to_string(psi.norm()) + ")");
  }
}

}  // namespace

Verdict unitary_curie_check(const ComplexMatrix& h, const SymmetryTransform& r, const StateVector& psi_i, double t,
                            const Tolerances& tol) {
  require_linear(r, "unitary_curie_check");
  linalg::require_same_dim(h, r.unitary_part(), "unitary_curie_check");
  linalg::require_same_dim(h, psi_i, "unitary_curie_check");
  if (!linalg::is_hermitian(h, tol.tau_zero)) throw ClassificationError("unitary_curie_check: H is not Hermitian");
  require_normalized(psi_i, "unitary_curie_check", "psi_i", tol);

  const StateVector psi_f = linalg::evolution(h, t) * psi_i;
  const double initial_dev = (apply(r, psi_i) - psi_i).norm();
  const double final_dev = (apply(r, psi_f) - psi_f).norm();

  Witness w{{"t", t},
            {"initial_deviation", initial_dev},
            {"final_deviation", final_dev},
            {"survival_amplitude", linalg::inner(psi_i, psi_f)}};

  // Both branches are examined; at most one can fire since they need
  // opposite deviations to be zero.
  const Evidence ev_i = classify_evidence(initial_dev, tol);
  const Evidence ev_f = classify_evidence(final_dev, tol);
  if (ev_i == Evidence::Zero && ev_f == Evidence::Positive) {
    w["branch"] = std::string("initial-but-not-final");
    return Verdict::violation(r.label(), final_dev, std::move(w));
  }
  if (ev_f == Evidence::Zero && ev_i == Evidence::Positive) {
    w["branch"] = std::string("final-but-not-initial");
    return Verdict::violation(r.label(), initial_dev, std::move(w));
  }
  if ((ev_i == Evidence::Zero && ev_f == Evidence::Band) || (ev_f == Evidence::Zero && ev_i == Evidence::Band)) {
    return Verdict::no_conclusion(Reason::Indeterminate, "deviation-in-band", std::max(initial_dev, final_dev),
                                  std::move(w));
  }
  const char* detail = (ev_i == Evidence::Zero && ev_f == Evidence::Zero) ? "both-states-symmetric"
                                                                           : "neither-state-symmetric";
  return Verdict::no_conclusion(Reason::PremiseUnmet, detail, 0.0, std::move(w));
}

Verdict scattering_curie_check(const ComplexMatrix& s, const SymmetryTransform& r, const StateVector& psi_in,
                               const StateVector& psi_out, const Tolerances& tol) {
  require_linear(r, "scattering_curie_check");
  linalg::require_same_dim(s, r.unitary_part(), "scattering_curie_check");
  linalg::require_same_dim(s, psi_in, "scattering_curie_check");
  linalg::require_same_dim(s, psi_out, "scattering_curie_check");
  if (!linalg::is_unitary(s, tol.tau_zero)) throw PremiseError("scattering_curie_check: S is not unitary");

  const StateVector r_in = apply(r, psi_in);
  const StateVector r_out = apply(r, psi_out);
  const bool in_even = (r_in - psi_in).norm() <= tol.tau_zero;
  const bool in_odd = (r_in + psi_in).norm() <= tol.tau_zero;
  const bool out_even = (r_out - psi_out).norm() <= tol.tau_zero;
  const bool out_odd = (r_out + psi_out).norm() <= tol.tau_zero;

  const Complex amp = linalg::inner(psi_out, s * psi_in);
  const double mag = std::abs(amp);
  Witness w{{"amplitude", amp}};

  if (in_even && out_odd) {
    w["branch"] = std::string("in-but-not-out");
  } else if (out_even && in_odd) {
    w["branch"] = std::string("out-but-not-in");
  } else {
    return Verdict::no_conclusion(Reason::PremiseUnmet, "parity-conditions-unmet", mag, std::move(w));
  }

  switch (classify_evidence(mag, tol)) {
    case Evidence::Positive: return Verdict::violation(r.label(), mag, std::move(w));
    case Evidence::Band: return Verdict::no_conclusion(Reason::Indeterminate, "amplitude-in-band", mag, std::move(w));
    case Evidence::Zero: break;
  }
  return Verdict::no_conclusion(Reason::BelowThreshold, "channel-closed", mag, std::move(w));
}

Verdict s_matrix_inference(const InvarianceMargin& r_h0_margin, const InvarianceMargin& r_s_margin,
                           const std::string& label, const Tolerances& tol) {
  Witness w{{"h0_margin", r_h0_margin.value}, {"s_margin", r_s_margin.value}};
  if (r_h0_margin.value > tol.tau_zero) {
    return Verdict::no_conclusion(Reason::PremiseUnmet, "free-hamiltonian-not-invariant", r_s_margin.value,
                                  std::move(w));
  }
  switch (classify_evidence(r_s_margin.value, tol)) {
    case Evidence::Positive:
      w["note"] = std::string("symmetry commutes with H0 but not with S, so it fails on H");
      return Verdict::violation(label + " on H", r_s_margin.value, std::move(w));
    case Evidence::Band:
      return Verdict::no_conclusion(Reason::Indeterminate, "s-margin-in-band", r_s_margin.value, std::move(w));
    case Evidence::Zero: break;
  }
  return Verdict::no_conclusion(Reason::BelowThreshold, "s-matrix-invariant", r_s_margin.value, std::move(w));
}

}  // namespace tvd::curie
