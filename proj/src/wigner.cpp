#include "tvd/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "tvd/errors.hpp"

namespace tvd::wigner {

namespace {

void require_antilinear(const SymmetryTransform& t_op, const char* what) {
  if (!t_op.antilinear()) {
    throw MisuseError(std::string(what) + ": '" + t_op.label() + "' is linear; expected an antiunitary");
  }
}

void require_nonzero_hermitian(const ComplexMatrix& h, const char* what, const Tolerances& tol) {
  linalg::require_square(h, what);
  if (!linalg::is_hermitian(h, tol.tau_zero)) throw ClassificationError(std::string(what) + ": H is not Hermitian");
  if (h.norm() <= tol.tau_zero) throw PremiseError(std::string(what) + ": H is the zero operator");
}

}  // namespace

SpectrumClusters spectrum_clusters(const EigenDecomposition& eig, double gap_tol) {
  SpectrumClusters out;
  const auto& ev = eig.eigenvalues;
  if (ev.size() == 0) return out;
  out.spectral_range = ev(ev.size() - 1) - ev(0);
  out.gap_scale = gap_tol * std::max(1.0, out.spectral_range);

  Cluster current{0.0, {0}};
  for (Eigen::Index k = 1; k < ev.size(); ++k) {
    if (ev(k) - ev(k - 1) <= out.gap_scale) {
      current.members.push_back(static_cast<std::size_t>(k));
    } else {
      out.clusters.push_back(std::move(current));
      current = Cluster{0.0, {static_cast<std::size_t>(k)}};
    }
  }
  out.clusters.push_back(std::move(current));
  for (auto& c : out.clusters) {
    double sum = 0.0;
    for (auto i : c.members) sum += ev(static_cast<Eigen::Index>(i));
    c.representative = sum / static_cast<double>(c.members.size());
  }
  return out;
}

std::string_view to_string(TSquare c) {
  switch (c) {
    case TSquare::PlusIdentity: return "PlusIdentity";
    case TSquare::MinusIdentity: return "MinusIdentity";
    case TSquare::Other: return "Other";
  }
  return "Other";
}

TSquareClass kramers_square(const SymmetryTransform& t_op, const Tolerances& tol) {
  require_antilinear(t_op, "kramers_square");
  const ComplexMatrix sq = square(t_op);
  const ComplexMatrix id = linalg::identity(t_op.dim());
  const double plus = (sq - id).norm();
  const double minus = (sq + id).norm();
  if (plus <= tol.tau_zero) return {TSquare::PlusIdentity, plus};
  if (minus <= tol.tau_zero) return {TSquare::MinusIdentity, minus};
  return {TSquare::Other, std::min(plus, minus)};
}

double ray_displacement(const SymmetryTransform& t_op, const StateVector& psi, const Tolerances& tol) {
  require_antilinear(t_op, "ray_displacement");
  linalg::require_same_dim(t_op.unitary_part(), psi, "ray_displacement");
  if (!linalg::is_normalized(psi, tol.tau_zero)) {
    throw PremiseError("ray_displacement: state is not normalized (norm " + std::to_string(psi.norm()) + ")");
  }
  const double overlap = std::abs(linalg::inner(apply(t_op, psi), psi));
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

Verdict wigner_principle_check(const ComplexMatrix& h, const SymmetryTransform& t_op, double gap_tol,
                               const Tolerances& tol) {
  require_antilinear(t_op, "wigner_principle_check");
  require_nonzero_hermitian(h, "wigner_principle_check", tol);
  linalg::require_same_dim(h, t_op.unitary_part(), "wigner_principle_check");

  const EigenDecomposition eig = linalg::herm_eig(h, tol);
  const SpectrumClusters spectrum = spectrum_clusters(eig, gap_tol);
  const auto& clusters = spectrum.clusters;
  const double isolation_needed = near_degenerate_factor * spectrum.gap_scale;

  std::size_t singletons = 0;
  bool band = false;
  double best_delta = -1.0;
  double best_energy = 0.0;
  std::size_t best_index = 0;

  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (clusters[c].multiplicity() != 1) continue;
    ++singletons;
    const std::size_t k = clusters[c].members.front();
    double isolation = std::numeric_limits<double>::infinity();
    const auto ki = static_cast<Eigen::Index>(k);
    if (ki > 0) isolation = std::min(isolation, eig.eigenvalues(ki) - eig.eigenvalues(ki - 1));
    if (ki + 1 < eig.eigenvalues.size()) isolation = std::min(isolation, eig.eigenvalues(ki + 1) - eig.eigenvalues(ki));

    const double delta = ray_displacement(t_op, eig.vector(k), tol);
    if (isolation <= isolation_needed) {
      if (delta > tol.tau_zero) band = true;
      continue;
    }
    const Evidence ev = classify_evidence(delta, tol);
    if (ev == Evidence::Band) band = true;
    if (ev == Evidence::Positive && delta > best_delta) {
      best_delta = delta;
      best_energy = eig.eigenvalues(ki);
      best_index = k;
    }
  }

  Witness w{{"levels", static_cast<double>(clusters.size())},
            {"nondegenerate_levels", static_cast<double>(singletons)}};
  if (best_delta >= 0.0) {
    w["eigenvalue"] = best_energy;
    w["eigenvector_index"] = static_cast<double>(best_index);
    w["ray_displacement"] = best_delta;
    return Verdict::violation(t_op.label(), best_delta, std::move(w));
  }
  if (singletons == 0) return Verdict::no_conclusion(Reason::PremiseUnmet, "no-nondegenerate-level", 0.0, std::move(w));
  if (band) return Verdict::no_conclusion(Reason::Indeterminate, "near-degenerate-or-band", 0.0, std::move(w));
  return Verdict::no_conclusion(Reason::BelowThreshold, "nondegenerate-levels-t-fixed", 0.0, std::move(w));
}

std::string_view to_string(KramersStatus s) {
  switch (s) {
    case KramersStatus::Pass: return "Pass";
    case KramersStatus::Fail: return "Fail";
    case KramersStatus::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

KramersReport kramers_degeneracy_verify(const ComplexMatrix& h, const SymmetryTransform& t_op, double gap_tol,
                                        const Tolerances& tol) {
  require_antilinear(t_op, "kramers_degeneracy_verify");
  require_nonzero_hermitian(h, "kramers_degeneracy_verify", tol);
  linalg::require_same_dim(h, t_op.unitary_part(), "kramers_degeneracy_verify");

  KramersReport report;
  report.t_square = kramers_square(t_op, tol);
  report.invariance = invariance_margin(t_op, h).value;

  const SpectrumClusters spectrum = spectrum_clusters(linalg::herm_eig(h, tol), gap_tol);
  for (const auto& c : spectrum.clusters) report.multiplicities.push_back(c.multiplicity());

  if (report.t_square.classification != TSquare::MinusIdentity) {
    report.detail = "t-square-not-minus-identity";
    return report;
  }
  if (report.invariance > tol.tau_zero) {
    report.detail = "hamiltonian-not-t-invariant";
    return report;
  }
  for (std::size_t c = 0; c < report.multiplicities.size(); ++c) {
    if (report.multiplicities[c] % 2 != 0) {
      report.status = KramersStatus::Fail;
      report.offending_cluster = c;
      report.detail = "odd-multiplicity";
      return report;
    }
  }
  report.status = KramersStatus::Pass;
  report.detail = "all-multiplicities-even";
  return report;
}

}  // namespace tvd::wigner
