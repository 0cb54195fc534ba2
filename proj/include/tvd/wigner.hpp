#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tvd/linalg.hpp"
#include "tvd/symmetry.hpp"
#include "tvd/verdict.hpp"

namespace tvd::wigner {

struct Cluster {
  double representative = 0.0;  // mean of the member eigenvalues
  std::vector<std::size_t> members;

  std::size_t multiplicity() const { return members.size(); }
};

struct SpectrumClusters {
  std::vector<Cluster> clusters;
  double spectral_range = 0.0;
  double gap_scale = 0.0;  // gap_tol · max(1, spectral_range)
};

// Greedy ascending clustering: neighbours join when their gap is at most
// gap_tol·max(1, spectral range).
SpectrumClusters spectrum_clusters(const EigenDecomposition& eig, double gap_tol);

enum class TSquare { PlusIdentity, MinusIdentity, Other };
std::string_view to_string(TSquare c);

struct TSquareClass {
  TSquare classification = TSquare::Other;
  double deviation = 0.0;  // ‖T² ∓ I‖_F for the matching sign, else the smaller of the two
};

TSquareClass kramers_square(const SymmetryTransform& t_op, const Tolerances& tol = {});

// 1 − |⟨Tψ, ψ⟩|; zero exactly when Tψ lies on the ray of ψ.
double ray_displacement(const SymmetryTransform& t_op, const StateVector& psi, const Tolerances& tol = {});

// A non-degenerate eigenvector that T moves to a different ray proves
// [T, H] ≠ 0. Levels whose isolation from their neighbours is inside the
// degeneracy hysteresis band (gap_scale, near_degenerate_factor·gap_scale]
// never produce a Violation.
Verdict wigner_principle_check(const ComplexMatrix& h, const SymmetryTransform& t_op, double gap_tol,
                               const Tolerances& tol = {});

// Ratio between the upper and lower edges of the near-degeneracy band.
inline constexpr double near_degenerate_factor = 1e3;

enum class KramersStatus { Pass, Fail, NotApplicable };
std::string_view to_string(KramersStatus s);

struct KramersReport {
  KramersStatus status = KramersStatus::NotApplicable;
  TSquareClass t_square;
  double invariance = 0.0;  // invariance_margin(T, H)
  std::vector<std::size_t> multiplicities;
  std::optional<std::size_t> offending_cluster;
  std::string detail;
};

// When T² = −I and [T, H] = 0, every level must have even multiplicity.
KramersReport kramers_degeneracy_verify(const ComplexMatrix& h, const SymmetryTransform& t_op, double gap_tol,
                                        const Tolerances& tol = {});

}  // namespace tvd::wigner
