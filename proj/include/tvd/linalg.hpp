#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tvd/tolerances.hpp"

namespace tvd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Ascending eigenvalues, eigenvectors as orthonormal columns in the same order.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
  StateVector vector(std::size_t k) const { return eigenvectors.col(static_cast<Eigen::Index>(k)); }
};

namespace linalg {

// ⟨a, b⟩, antilinear in the first slot.
Complex inner(const StateVector& a, const StateVector& b);

double frobenius(const ComplexMatrix& a);

ComplexMatrix identity(std::size_t dim);
StateVector basis_vector(std::size_t dim, std::size_t index);

// Throws DimensionError for a zero vector.
StateVector normalize(const StateVector& v);

bool is_square(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tau_zero = Tolerances{}.tau_zero);
bool is_unitary(const ComplexMatrix& a, double tau_zero = Tolerances{}.tau_zero);
bool is_normalized(const StateVector& v, double tau_zero = Tolerances{}.tau_zero);

// Shape guards used at operation boundaries; all throw DimensionError.
void require_square(const ComplexMatrix& a, const char* what);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);
void require_same_dim(const ComplexMatrix& a, const StateVector& v, const char* what);

// e^{scale·A} by scaling and squaring around a degree-13 Padé approximant.
ComplexMatrix mat_exp(const ComplexMatrix& a, Complex scale);

// Convenience for the unitary group e^{-itH}.
ComplexMatrix evolution(const ComplexMatrix& h, double t);

// Eigendecomposition of a Hermitian matrix.
//
// Eigenvalues ascend. Inside a cluster of eigenvalues closer than
// tau_eig·max(1, ‖A‖_F), the returned vectors are the Gram–Schmidt
// orthonormalization (in index order) of the standard basis projected onto
// the cluster's eigenspace, so the result depends only on the subspace and
// not on the solver's internal choice. Each vector is then rotated so its
// largest-magnitude component (first one on ties) is real and positive.
EigenDecomposition herm_eig(const ComplexMatrix& a, const Tolerances& tol = {});

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Haar-distributed unitary from the QR factorization of a seeded complex
// Ginibre matrix (with the R-diagonal phase fix).
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

// (G + G†)/2 for a seeded complex Gaussian G. Exactly Hermitian.
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed);

// Seeded complex Gaussian vector, normalized.
StateVector random_state(std::size_t dim, std::uint64_t seed);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace linalg
}  // namespace tvd
