#pragma once

#include <complex>
#include <vector>

#include "tvd/linalg.hpp"

// Plain-loop reference routines, independent of Eigen and of the library's
// own algorithms. Used to cross-check results in tests.
namespace ref {

using C = std::complex<double>;
using Dense = std::vector<std::vector<C>>;

Dense from_eigen(const tvd::ComplexMatrix& m);
tvd::ComplexMatrix to_eigen(const Dense& m);

Dense multiply(const Dense& a, const Dense& b);

// e^{scale·A} by a truncated Taylor series with scaling and squaring.
Dense expm(const Dense& a, C scale);

// Ascending eigenvalues of a Hermitian matrix, via cyclic Jacobi on the
// real symmetric embedding [[Re, −Im], [Im, Re]].
std::vector<double> hermitian_eigenvalues(const Dense& a);

}  // namespace ref
