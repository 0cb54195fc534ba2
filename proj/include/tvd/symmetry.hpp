#pragma once

#include <string>
#include <string_view>

#include "tvd/linalg.hpp"
#include "tvd/verdict.hpp"

namespace tvd {

// A unitary or antiunitary map on C^n.
//
// Stored as a unitary matrix U plus an antilinearity flag. The antilinear
// case means U∘K where K conjugates components in the computational basis,
// so ψ ↦ U·conj(ψ). Every antiunitary on a finite-dimensional space has this
// form.
class SymmetryTransform {
 public:
  // Throws ClassificationError if `unitary_part` is not unitary within tau_zero.
  SymmetryTransform(ComplexMatrix unitary_part, bool antilinear, std::string label,
                    double tau_zero = Tolerances{}.tau_zero);

  static SymmetryTransform linear(ComplexMatrix u, std::string label);
  static SymmetryTransform antiunitary(ComplexMatrix u, std::string label);
  // Plain componentwise conjugation K.
  static SymmetryTransform conjugation(std::size_t dim, std::string label = "K");

  const ComplexMatrix& unitary_part() const { return unitary_; }
  bool antilinear() const { return antilinear_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return static_cast<std::size_t>(unitary_.rows()); }

  // g⁻¹ as a transform of the same kind.
  SymmetryTransform inverse() const;

 private:
  ComplexMatrix unitary_;
  bool antilinear_;
  std::string label_;
};

enum class ComparisonKind { Commutant, TimeReversalUnitary, TimeReversalSMatrix };
std::string_view to_string(ComparisonKind k);

struct InvarianceMargin {
  double value = 0.0;
  ComparisonKind kind = ComparisonKind::Commutant;
};

StateVector apply(const SymmetryTransform& g, const StateVector& psi);

// g∘h. Label is "<g><h>" unless given.
SymmetryTransform compose(const SymmetryTransform& g, const SymmetryTransform& h, std::string label = {});

// g A g⁻¹ as a linear operator: U A U† or U conj(A) U†.
ComplexMatrix conjugate_operator(const SymmetryTransform& g, const ComplexMatrix& a);

// g² as a linear matrix: U·U for linear g, U·conj(U) for antilinear g.
ComplexMatrix square(const SymmetryTransform& g);

// ‖g A g⁻¹ − A‖_F / max(1, ‖A‖_F).
InvarianceMargin invariance_margin(const SymmetryTransform& g, const ComplexMatrix& a);

// ‖T e^{−itH} T⁻¹ − e^{+itH}‖_F / max(1, dim). Requires antilinear T.
InvarianceMargin time_reversal_consistency(const SymmetryTransform& t_op, const ComplexMatrix& h, double t,
                                           const Tolerances& tol = {});

// If the law is CPT invariant and CP is violated, T must be violated.
Verdict cpt_link_inference(const InvarianceMargin& cpt_margin, const InvarianceMargin& cp_margin,
                           const Tolerances& tol = {});

}  // namespace tvd
