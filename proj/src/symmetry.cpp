#include "tvd/symmetry.hpp"

#include <algorithm>
#include <utility>

#include "tvd/errors.hpp"

namespace tvd {

SymmetryTransform::SymmetryTransform(ComplexMatrix unitary_part, bool antilinear, std::string label,
                                     double tau_zero)
    : unitary_(std::move(unitary_part)), antilinear_(antilinear), label_(std::move(label)) {
  linalg::require_square(unitary_, "SymmetryTransform");
  if (!linalg::is_unitary(unitary_, tau_zero)) {
    throw ClassificationError("SymmetryTransform '" + label_ + "': unitary part is not unitary");
  }
}

SymmetryTransform SymmetryTransform::linear(ComplexMatrix u, std::string label) {
  return {std::move(u), false, std::move(label)};
}

SymmetryTransform SymmetryTransform::antiunitary(ComplexMatrix u, std::string label) {
  return {std::move(u), true, std::move(label)};
}

SymmetryTransform SymmetryTransform::conjugation(std::size_t dim, std::string label) {
  return {linalg::identity(dim), true, std::move(label)};
}

SymmetryTransform SymmetryTransform::inverse() const {
  // (U K)⁻¹ = K U† = conj(U†) K.
  ComplexMatrix inv = antilinear_ ? ComplexMatrix(unitary_.adjoint().conjugate()) : ComplexMatrix(unitary_.adjoint());
  return {std::move(inv), antilinear_, label_ + "^-1"};
}

std::string_view to_string(ComparisonKind k) {
  switch (k) {
    case ComparisonKind::Commutant: return "commutant";
    case ComparisonKind::TimeReversalUnitary: return "time_reversal_unitary";
    case ComparisonKind::TimeReversalSMatrix: return "time_reversal_smatrix";
  }
  return "commutant";
}

StateVector apply(const SymmetryTransform& g, const StateVector& psi) {
  linalg::require_same_dim(g.unitary_part(), psi, "apply");
  if (g.antilinear()) return g.unitary_part() * psi.conjugate();
  return g.unitary_part() * psi;
}

SymmetryTransform compose(const SymmetryTransform& g, const SymmetryTransform& h, std::string label) {
  linalg::require_same_dim(g.unitary_part(), h.unitary_part(), "compose");
  // U_g K^a U_h K^b = U_g (U_h or conj(U_h)) K^(a xor b)
  ComplexMatrix u = g.antilinear() ? ComplexMatrix(g.unitary_part() * h.unitary_part().conjugate())
                                   : ComplexMatrix(g.unitary_part() * h.unitary_part());
  if (label.empty()) label = g.label() + h.label();
  return {std::move(u), g.antilinear() != h.antilinear(), std::move(label)};
}

ComplexMatrix conjugate_operator(const SymmetryTransform& g, const ComplexMatrix& a) {
  linalg::require_same_dim(g.unitary_part(), a, "conjugate_operator");
  const ComplexMatrix& u = g.unitary_part();
  if (g.antilinear()) return u * a.conjugate() * u.adjoint();
  return u * a * u.adjoint();
}

ComplexMatrix square(const SymmetryTransform& g) {
  const ComplexMatrix& u = g.unitary_part();
  if (g.antilinear()) return u * u.conjugate();
  return u * u;
}

InvarianceMargin invariance_margin(const SymmetryTransform& g, const ComplexMatrix& a) {
  const ComplexMatrix moved = conjugate_operator(g, a);
  return {(moved - a).norm() / std::max(1.0, a.norm()), ComparisonKind::Commutant};
}

InvarianceMargin time_reversal_consistency(const SymmetryTransform& t_op, const ComplexMatrix& h, double t,
                                           const Tolerances& tol) {
  if (!t_op.antilinear()) {
    throw MisuseError("time_reversal_consistency: '" + t_op.label() + "' is linear; time reversal is antilinear");
  }
  linalg::require_same_dim(t_op.unitary_part(), h, "time_reversal_consistency");
  if (!linalg::is_hermitian(h, tol.tau_zero)) {
    throw ClassificationError("time_reversal_consistency: Hamiltonian is not Hermitian");
  }
  const ComplexMatrix forward = conjugate_operator(t_op, linalg::evolution(h, t));
  const ComplexMatrix backward = linalg::evolution(h, -t);
  const double dim = static_cast<double>(h.rows());
  return {(forward - backward).norm() / std::max(1.0, dim), ComparisonKind::TimeReversalUnitary};
}

Verdict cpt_link_inference(const InvarianceMargin& cpt_margin, const InvarianceMargin& cp_margin,
                           const Tolerances& tol) {
  Witness w{{"cpt_margin", cpt_margin.value}, {"cp_margin", cp_margin.value}};
  if (cpt_margin.value > tol.tau_zero) {
    return Verdict::no_conclusion(Reason::PremiseUnmet, "cpt-premise-unmet", cp_margin.value, std::move(w));
  }
  switch (classify_evidence(cp_margin.value, tol)) {
    case Evidence::Positive:
      w["note"] = std::string("law is CPT invariant and CP violating, so T invariance fails");
      return Verdict::violation("T", cp_margin.value, std::move(w));
    case Evidence::Band:
      return Verdict::no_conclusion(Reason::Indeterminate, "cp-margin-in-band", cp_margin.value, std::move(w));
    case Evidence::Zero:
      break;
  }
  return Verdict::no_conclusion(Reason::BelowThreshold, "cp-not-violated", cp_margin.value, std::move(w));
}

}  // namespace tvd
