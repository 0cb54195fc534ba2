#include "tvd/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tvd/errors.hpp"
#include "tvd/wigner.hpp"

namespace tvd::models {

namespace {

using Index = Eigen::Index;

SymmetryTransform reversal_for(const ComplexMatrix& jy) {
  // −iπJy is a real matrix, so the rotation comes out real.
  return SymmetryTransform::antiunitary(linalg::mat_exp(jy, Complex(0.0, -std::numbers::pi)), "T");
}

}  // namespace

ComplexMatrix SpinAlgebra::along(const std::array<double, 3>& axis) const {
  return axis[0] * jx + axis[1] * jy + axis[2] * jz;
}

SpinAlgebra spin_operators(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || j < 0.0 || std::abs(twice - rounded) > 1e-12) {
    throw PremiseError("spin_operators: j = " + std::to_string(j) + " is not a nonnegative half-integer");
  }
  const int twice_j = static_cast<int>(rounded);
  const Index n = twice_j + 1;

  ComplexMatrix jz = ComplexMatrix::Zero(n, n);
  ComplexMatrix raise = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    // ⟨m+1| J+ |m⟩ sits one row above the diagonal in this ordering.
    if (k > 0) raise(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();
  ComplexMatrix jx = (raise + lower) / 2.0;
  ComplexMatrix jy = (raise - lower) / Complex(0.0, 2.0);
  SymmetryTransform t = reversal_for(jy);
  return SpinAlgebra{twice_j, std::move(jx), std::move(jy), std::move(jz), std::move(t)};
}

EdmModel edm_model(double j, double h0, double g, const std::array<double, 3>& e_field, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw PremiseError("edm_model: dipole strength d must be positive");
  for (double e : e_field) {
    if (!std::isfinite(e)) throw PremiseError("edm_model: electric field must be finite");
  }
  SpinAlgebra spin = spin_operators(j);
  const double e_norm = std::sqrt(e_field[0] * e_field[0] + e_field[1] * e_field[1] + e_field[2] * e_field[2]);
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  if (e_norm > 0.0) axis = {e_field[0] / e_norm, e_field[1] / e_norm, e_field[2] / e_norm};

  ComplexMatrix h = h0 * linalg::identity(spin.dim()) + g * spin.along(e_field);
  ComplexMatrix j_axis = spin.along(axis);
  ComplexMatrix dipole = d * j_axis;
  return EdmModel{std::move(spin), h0, g, e_field, axis, d, std::move(h), std::move(dipole), std::move(j_axis)};
}

PermanenceAnalysis permanence_analysis(const EdmModel& model, const Tolerances& tol) {
  const EigenDecomposition eig = linalg::herm_eig(model.hamiltonian, tol);
  const auto& t = model.spin.t_conv;
  auto expect = [](const StateVector& v, const ComplexMatrix& op) { return linalg::inner(v, op * v).real(); };

  PermanenceAnalysis out;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < eig.dim(); ++k) {
    const StateVector psi = eig.vector(k);
    const StateVector reversed = apply(t, psi);
    PermanenceRecord rec;
    rec.energy = eig.eigenvalues(static_cast<Index>(k));
    rec.ray_displacement = wigner::ray_displacement(t, psi, tol);
    rec.dipole = expect(psi, model.dipole);
    rec.angular = expect(psi, model.j_axis);
    rec.dipole_reversed = linalg::inner(reversed, tvd::apply(t, StateVector(model.dipole * psi))).real();
    rec.angular_reversed = expect(reversed, model.j_axis);
    num += rec.dipole * rec.angular;
    den += rec.angular * rec.angular;
    out.records.push_back(rec);
  }
  out.c = den > 0.0 ? num / den : 0.0;
  for (auto& rec : out.records) {
    rec.forward_residual = std::abs(rec.dipole - out.c * rec.angular);
    rec.reversed_residual = std::abs(rec.dipole_reversed + out.c * rec.angular_reversed);
  }
  return out;
}

StateVector KaonModel::k1() const { return (k0() + k0bar()) / std::numbers::sqrt2; }
StateVector KaonModel::k2() const { return (k0() - k0bar()) / std::numbers::sqrt2; }

KaonModel kaon_oscillation_model(double m1, double m2, Complex w) {
  ComplexMatrix h(2, 2);
  h << m1, w, std::conj(w), m2;
  return KaonModel{{"K0", "K0bar"}, {+1, -1}, std::move(h), SymmetryTransform::conjugation(2, "T")};
}

KaonDecayModel kaon_decay_scattering_model(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw PremiseError("kaon_decay_scattering_model: epsilon must lie in [0, 1), got " + std::to_string(epsilon));
  }
  const double c = std::sqrt(1.0 - epsilon * epsilon);
  ComplexMatrix s(2, 2);
  s << c, epsilon, -epsilon, c;
  ComplexMatrix cp(2, 2);
  cp << -1.0, 0.0, 0.0, 1.0;
  return KaonDecayModel{std::move(s), SymmetryTransform::linear(std::move(cp), "CP"), linalg::basis_vector(2, 0),
                        linalg::basis_vector(2, 1)};
}

ComplexMatrix symmetrize_invariant(const ComplexMatrix& h, const SymmetryTransform& g, const Tolerances& tol) {
  linalg::require_same_dim(h, g.unitary_part(), "symmetrize_invariant");
  if (!linalg::is_hermitian(h, tol.tau_zero)) throw ClassificationError("symmetrize_invariant: H is not Hermitian");
  const ComplexMatrix sq = square(g);
  const ComplexMatrix id = linalg::identity(g.dim());
  if ((sq - id).norm() > tol.tau_zero && (sq + id).norm() > tol.tau_zero) {
    throw PremiseError("symmetrize_invariant: '" + g.label() + "' does not square to ±I");
  }
  const ComplexMatrix avg = (h + conjugate_operator(g, h)) / 2.0;
  return (avg + avg.adjoint()) / 2.0;
}

ComplexMatrix t_symmetric_smatrix(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix generator = linalg::random_hermitian(dim, seed).real().cast<Complex>();
  return linalg::mat_exp(generator, Complex(0.0, -1.0));
}

ComplexMatrix build_s_matrix(const ComplexMatrix& h0, const ComplexMatrix& v, double ti, double tf,
                             const Tolerances& tol) {
  linalg::require_same_dim(h0, v, "build_s_matrix");
  if (!linalg::is_hermitian(h0, tol.tau_zero)) throw ClassificationError("build_s_matrix: H0 is not Hermitian");
  if (!linalg::is_hermitian(v, tol.tau_zero)) throw ClassificationError("build_s_matrix: V is not Hermitian");
  if (!(ti <= tf)) throw PremiseError("build_s_matrix: requires ti <= tf");
  return linalg::evolution(h0, -tf) * linalg::evolution(h0 + v, tf - ti) * linalg::evolution(h0, ti);
}

}  // namespace tvd::models
