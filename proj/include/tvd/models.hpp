#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tvd/linalg.hpp"
#include "tvd/symmetry.hpp"

namespace tvd::models {

// Spin-j representation in the basis m = j, j−1, …, −j.
struct SpinAlgebra {
  int twice_j = 0;
  ComplexMatrix jx, jy, jz;
  SymmetryTransform t_conv;  // e^{−iπJy}·K, which reverses J

  double j() const { return twice_j / 2.0; }
  std::size_t dim() const { return static_cast<std::size_t>(twice_j + 1); }
  bool half_integer() const { return twice_j % 2 != 0; }
  // n̂·J for a unit vector n̂.
  ComplexMatrix along(const std::array<double, 3>& axis) const;
};

// Throws PremiseError unless 2j is a nonnegative integer.
SpinAlgebra spin_operators(double j);

// Elementary electric dipole: H = h0·I + g·(J·E), D = d·(Ê·J).
struct EdmModel {
  SpinAlgebra spin;
  double h0 = 0.0;
  double g = 0.0;
  std::array<double, 3> e_field{};
  std::array<double, 3> axis{};  // Ê, or ẑ when E = 0
  double d = 1.0;
  ComplexMatrix hamiltonian;
  ComplexMatrix dipole;
  ComplexMatrix j_axis;  // Ê·J
};

EdmModel edm_model(double j, double h0, double g, const std::array<double, 3>& e_field, double d);

// Per-eigenvector check of the dipole/angular-momentum proportionality and
// its time-reversed image.
struct PermanenceRecord {
  double energy = 0.0;
  double ray_displacement = 0.0;
  double dipole = 0.0;             // ⟨ψ, Dψ⟩
  double angular = 0.0;            // ⟨ψ, Ê·J ψ⟩
  double dipole_reversed = 0.0;    // ⟨Tψ, T(Dψ)⟩, the image of ⟨D⟩ when TDT⁻¹ = D
  double angular_reversed = 0.0;   // ⟨Tψ, Ê·J Tψ⟩
  double forward_residual = 0.0;   // |⟨D⟩ − c⟨J⟩|
  double reversed_residual = 0.0;  // |⟨D⟩_T + c⟨J⟩_T|
};

struct PermanenceAnalysis {
  double c = 0.0;  // least-squares constant across eigenvectors
  std::vector<PermanenceRecord> records;
};

PermanenceAnalysis permanence_analysis(const EdmModel& model, const Tolerances& tol = {});

// Neutral kaon oscillation toy in the (K⁰, K̄⁰) basis with T = K.
struct KaonModel {
  std::array<std::string, 2> labels{"K0", "K0bar"};
  std::array<int, 2> strangeness{+1, -1};
  ComplexMatrix hamiltonian;
  SymmetryTransform t_conv;

  StateVector k0() const { return linalg::basis_vector(2, 0); }
  StateVector k0bar() const { return linalg::basis_vector(2, 1); }
  StateVector k1() const;  // (K⁰ + K̄⁰)/√2
  StateVector k2() const;  // (K⁰ − K̄⁰)/√2
};

KaonModel kaon_oscillation_model(double m1, double m2, Complex w);

// K_L → ππ toy in the (K_L, ππ) basis. CP = diag(−1, +1); S is a real
// rotation mixing the two with strength ε.
struct KaonDecayModel {
  ComplexMatrix s;
  SymmetryTransform cp;
  StateVector psi_in;   // K_L, CP-odd
  StateVector psi_out;  // ππ, CP-even
};

// Throws PremiseError unless 0 ≤ ε < 1.
KaonDecayModel kaon_decay_scattering_model(double epsilon);

// (H + gHg⁻¹)/2, which commutes with g whenever g² = ±I.
ComplexMatrix symmetrize_invariant(const ComplexMatrix& h, const SymmetryTransform& g, const Tolerances& tol = {});

// S = e^{−iG} for a seeded real symmetric G; invariant under T = K.
ComplexMatrix t_symmetric_smatrix(std::size_t dim, std::uint64_t seed);

// Finite-time interaction-picture S: e^{iH0 tf} e^{−i(H0+V)(tf−ti)} e^{−iH0 ti}.
ComplexMatrix build_s_matrix(const ComplexMatrix& h0, const ComplexMatrix& v, double ti, double tf,
                             const Tolerances& tol = {});

}  // namespace tvd::models
