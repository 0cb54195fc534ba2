#pragma once

#include "tvd/linalg.hpp"
#include "tvd/symmetry.hpp"
#include "tvd/verdict.hpp"

namespace tvd::kabir {

// forward = ⟨ψout, S ψin⟩, reversed = ⟨Tψin, S Tψout⟩.
struct AmplitudePair {
  Complex forward;
  Complex reversed;
  double asymmetry = 0.0;  // |forward − reversed|
};

AmplitudePair amplitudes(const ComplexMatrix& s, const SymmetryTransform& t_op, const StateVector& psi_in,
                         const StateVector& psi_out);

// Unequal forward and time-reversed amplitudes imply T S T⁻¹ ≠ S⁻¹.
// S must be unitary (PremiseError otherwise) and T antilinear (MisuseError).
Verdict kabir_check(const ComplexMatrix& s, const SymmetryTransform& t_op, const StateVector& psi_in,
                    const StateVector& psi_out, const Tolerances& tol = {});

// |⟨ψout, M ψin⟩|²
double transition_probability(const ComplexMatrix& m, const StateVector& psi_in, const StateVector& psi_out);

// |P(a → b) − P(b → a)|. For a 2×2 unitary this is always zero.
double probability_asymmetry(const ComplexMatrix& m, const StateVector& psi_a, const StateVector& psi_b);

}  // namespace tvd::kabir
