#include "tvd/tolerances.hpp"

#include <cmath>
#include <string>

#include "tvd/errors.hpp"

namespace tvd {

void Tolerances::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(tau_zero) || !positive(tau_eig) || !positive(tau_violation) || !positive(gap_tol)) {
    throw PremiseError("tolerances must be positive and finite");
  }
  if (!(tau_zero < tau_violation)) {
    throw PremiseError("tau_zero (" + std::to_string(tau_zero) + ") must be below tau_violation (" +
                       std::to_string(tau_violation) + ")");
  }
}

}  // namespace tvd
