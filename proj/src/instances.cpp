#include "tvd/instances.hpp"

#include <random>

#include "tvd/errors.hpp"

namespace tvd::instances {

SymmetryTransform random_reflection(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix q = linalg::random_unitary(dim, seed);
  std::mt19937_64 rng(seed * 2654435761ULL + 17);
  Eigen::VectorXcd signs(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < signs.size(); ++i) signs(i) = (rng() & 1U) ? 1.0 : -1.0;
  if (dim >= 2) {
    signs(0) = 1.0;
    signs(1) = -1.0;
  }
  return SymmetryTransform::linear(q * signs.asDiagonal() * q.adjoint(), "R");
}

SymmetryTransform random_antiunitary_plus(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix v = linalg::random_unitary(dim, seed);
  return SymmetryTransform::antiunitary(v * v.transpose(), "T");
}

SymmetryTransform random_antiunitary_minus(std::size_t dim, std::uint64_t seed) {
  if (dim % 2 != 0) throw DimensionError("random_antiunitary_minus: dimension must be even");
  const ComplexMatrix v = linalg::random_unitary(dim, seed);
  ComplexMatrix j(2, 2);
  j << 0.0, 1.0, -1.0, 0.0;  // iσy
  const ComplexMatrix block = linalg::kron(j, linalg::identity(dim / 2));
  return SymmetryTransform::antiunitary(v * block * v.transpose(), "T");
}

StateVector random_eigenstate(const SymmetryTransform& r, double sign, std::uint64_t seed) {
  // (I ± R)/2 projects onto the ±1 eigenspace of a reflection.
  const ComplexMatrix& u = r.unitary_part();
  const ComplexMatrix projector = (linalg::identity(r.dim()) + sign * u) / 2.0;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    const StateVector v = projector * linalg::random_state(r.dim(), seed + attempt * 7919);
    if (v.norm() > 1e-3) return linalg::normalize(v);
  }
  throw PremiseError("random_eigenstate: eigenspace appears empty");
}

double uniform(std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace tvd::instances
