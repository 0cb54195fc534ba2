#pragma once

#include <cstdint>

#include "tvd/linalg.hpp"
#include "tvd/symmetry.hpp"

// Seeded random instance generators for property suites and oracle runs.
namespace tvd::instances {

// Q·diag(±1)·Q† with both signs present when dim ≥ 2.
SymmetryTransform random_reflection(std::size_t dim, std::uint64_t seed);

// V·Vᵀ·K, so T² = +I.
SymmetryTransform random_antiunitary_plus(std::size_t dim, std::uint64_t seed);

// V·(iσy ⊗ I)·Vᵀ·K, so T² = −I. `dim` must be even.
SymmetryTransform random_antiunitary_minus(std::size_t dim, std::uint64_t seed);

// A normalized random vector in the ±1 eigenspace of a reflection R.
StateVector random_eigenstate(const SymmetryTransform& r, double sign, std::uint64_t seed);

// Uniform double in [lo, hi) from a seed.
double uniform(std::uint64_t seed, double lo, double hi);

}  // namespace tvd::instances
