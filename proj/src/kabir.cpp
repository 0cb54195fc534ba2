#include "tvd/kabir.hpp"

#include <cmath>
#include <utility>

#include "tvd/errors.hpp"

namespace tvd::kabir {

AmplitudePair amplitudes(const ComplexMatrix& s, const SymmetryTransform& t_op, const StateVector& psi_in,
                         const StateVector& psi_out) {
  linalg::require_same_dim(s, t_op.unitary_part(), "kabir amplitudes");
  linalg::require_same_dim(s, psi_in, "kabir amplitudes");
  linalg::require_same_dim(s, psi_out, "kabir amplitudes");
  AmplitudePair p;
  p.forward = linalg::inner(psi_out, s * psi_in);
  p.reversed = linalg::inner(apply(t_op, psi_in), s * apply(t_op, psi_out));
  p.asymmetry = std::abs(p.forward - p.reversed);
  return p;
}

Verdict kabir_check(const ComplexMatrix& s, const SymmetryTransform& t_op, const StateVector& psi_in,
                    const StateVector& psi_out, const Tolerances& tol) {
  if (!t_op.antilinear()) {
    throw MisuseError("kabir_check: '" + t_op.label() + "' is linear; time reversal must be antilinear");
  }
  linalg::require_same_dim(s, t_op.unitary_part(), "kabir_check");
  if (!linalg::is_unitary(s, tol.tau_zero)) {
    throw PremiseError("kabir_check: S is not unitary; the amplitude argument requires unitary dynamics");
  }
  const AmplitudePair p = amplitudes(s, t_op, psi_in, psi_out);
  Witness w{{"forward_amplitude", p.forward},
            {"reversed_amplitude", p.reversed},
            {"forward_probability", std::norm(p.forward)},
            {"reversed_probability", std::norm(p.reversed)},
            {"probability_asymmetry", std::abs(std::norm(p.forward) - std::norm(p.reversed))}};
  switch (classify_evidence(p.asymmetry, tol)) {
    case Evidence::Positive: return Verdict::violation(t_op.label() + " on S", p.asymmetry, std::move(w));
    case Evidence::Band:
      return Verdict::no_conclusion(Reason::Indeterminate, "asymmetry-in-band", p.asymmetry, std::move(w));
    case Evidence::Zero: break;
  }
  return Verdict::no_conclusion(Reason::BelowThreshold, "amplitudes-equal", p.asymmetry, std::move(w));
}

double transition_probability(const ComplexMatrix& m, const StateVector& psi_in, const StateVector& psi_out) {
  linalg::require_same_dim(m, psi_in, "transition_probability");
  linalg::require_same_dim(m, psi_out, "transition_probability");
  return std::norm(linalg::inner(psi_out, m * psi_in));
}

double probability_asymmetry(const ComplexMatrix& m, const StateVector& psi_a, const StateVector& psi_b) {
  return std::abs(transition_probability(m, psi_a, psi_b) - transition_probability(m, psi_b, psi_a));
}

}  // namespace tvd::kabir
