#pragma once

namespace tvd {

// Numerical thresholds shared by every detector.
//
// tau_zero decides "equal to zero"; tau_violation decides "definitely
// nonzero". Margins that land in (tau_zero, tau_violation] are reported as
// indeterminate rather than flipped either way.
struct Tolerances {
  double tau_zero = 1e-9;
  double tau_eig = 1e-8;
  double tau_violation = 1e-6;
  double gap_tol = 1e-8;

  // Throws PremiseError unless all values are positive and
  // tau_zero < tau_violation.
  void validate() const;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

}  // namespace tvd
