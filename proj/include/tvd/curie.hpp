#pragma once

#include <string>

#include "tvd/linalg.hpp"
#include "tvd/symmetry.hpp"
#include "tvd/verdict.hpp"

namespace tvd::curie {

// Evolves ψi under e^{−itH} and looks for an R-symmetric state whose image is
// not R-symmetric (or the mirror case). Either one proves [R, H] ≠ 0.
// R must be linear; antilinear symmetries throw MisuseError because the
// argument breaks for them.
Verdict unitary_curie_check(const ComplexMatrix& h, const SymmetryTransform& r, const StateVector& psi_i, double t,
                            const Tolerances& tol = {});

// Scattering form: an R-even in-state feeding an R-odd out-state (or the
// mirror) with nonzero amplitude ⟨ψout, S ψin⟩ proves [R, S] ≠ 0.
Verdict scattering_curie_check(const ComplexMatrix& s, const SymmetryTransform& r, const StateVector& psi_in,
                               const StateVector& psi_out, const Tolerances& tol = {});

// [R, H0] = 0 and [R, S] ≠ 0 together imply [R, H] ≠ 0.
Verdict s_matrix_inference(const InvarianceMargin& r_h0_margin, const InvarianceMargin& r_s_margin,
                           const std::string& label = "R", const Tolerances& tol = {});

}  // namespace tvd::curie
