#include "tvd/selftest.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tvd/curie.hpp"
#include "tvd/instances.hpp"
#include "tvd/kabir.hpp"
#include "tvd/model_scenarios.hpp"
#include "tvd/models.hpp"
#include "tvd/oracle.hpp"
#include "tvd/runner.hpp"
#include "tvd/wigner.hpp"

namespace tvd::selftest {

namespace {

using instances::uniform;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.total;
    if (ok) {
      ++result_.passed;
    } else if (result_.failures.size() < 5) {
      result_.failures.push_back(what);
    }
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string tag(const char* what, std::uint64_t seed) {
  std::ostringstream out;
  out << what << " (seed " << seed << ")";
  return out.str();
}

std::size_t dim_for(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(seed % (hi - lo + 1));
}

SymmetryTransform random_symmetry(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix u = linalg::random_unitary(dim, seed);
  return {u, seed % 2 == 0, seed % 2 == 0 ? "T" : "U"};
}

}  // namespace

SuiteResult linalg_suite(const Tolerances& tol) {
  Suite suite("linalg");
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = dim_for(seed, 1, 8);
    const ComplexMatrix h = linalg::random_hermitian(n, seed);
    const double s = uniform(seed, -5.0, 5.0);
    const double t = uniform(seed + 1000, -5.0, 5.0);
    const ComplexMatrix ut = linalg::evolution(h, t);
    suite.check(linalg::is_unitary(ut, 1e-10), tag("exp(-itH) unitary", seed));
    const ComplexMatrix lhs = linalg::evolution(h, s + t);
    const ComplexMatrix rhs = linalg::evolution(h, s) * ut;
    suite.check((lhs - rhs).norm() <= 1e-10, tag("group law", seed));

    const EigenDecomposition e = linalg::herm_eig(h, tol);
    ComplexMatrix rebuilt = ComplexMatrix::Zero(h.rows(), h.cols());
    double worst_residual = 0.0;
    for (std::size_t k = 0; k < e.dim(); ++k) {
      const StateVector v = e.vector(k);
      const double lambda = e.eigenvalues(static_cast<Eigen::Index>(k));
      rebuilt += lambda * v * v.adjoint();
      worst_residual = std::max(worst_residual, (h * v - lambda * v).norm());
    }
    const double scale = tol.tau_eig * h.norm();
    suite.check((rebuilt - h).norm() <= scale, tag("eig reconstruction", seed));
    suite.check(worst_residual <= scale, tag("eig residual", seed));
    suite.check((e.eigenvectors.adjoint() * e.eigenvectors - linalg::identity(n)).norm() <= tol.tau_zero,
                tag("eig orthonormal", seed));

    const ComplexMatrix b = linalg::random_hermitian(n, seed + 77) + linalg::random_unitary(n, seed);
    suite.check((linalg::commutator(h, b) + linalg::commutator(b, h)).norm() <= 1e-15,
                tag("commutator antisymmetry", seed));
  }
  return suite.done();
}

SuiteResult symmetry_suite(const Tolerances& tol) {
  Suite suite("symmetry");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = dim_for(seed, 1, 6);
    const SymmetryTransform g = random_symmetry(n, seed);
    const SymmetryTransform h = random_symmetry(n, seed + 5001);
    const StateVector psi = linalg::random_state(n, seed);
    const StateVector phi = linalg::random_state(n, seed + 9);
    suite.check(std::abs(tvd::apply(g, psi).norm() - 1.0) <= 1e-12, tag("norm preserved", seed));
    const Complex before = linalg::inner(psi, phi);
    const Complex after = linalg::inner(tvd::apply(g, psi), tvd::apply(g, phi));
    suite.check(std::abs(after - (g.antilinear() ? std::conj(before) : before)) <= 1e-12,
                tag("inner product rule", seed));
    const ComplexMatrix a = linalg::random_hermitian(n, seed + 3);
    const ComplexMatrix b = linalg::random_unitary(n, seed + 4);
    const ComplexMatrix lhs = conjugate_operator(g, a * b);
    const ComplexMatrix rhs = conjugate_operator(g, a) * conjugate_operator(g, b);
    suite.check((lhs - rhs).norm() <= 1e-10, tag("algebra morphism", seed));
    suite.check((tvd::apply(compose(g, h), psi) - tvd::apply(g, tvd::apply(h, psi))).norm() <= 1e-12, tag("compose", seed));
    suite.check((tvd::apply(g.inverse(), tvd::apply(g, psi)) - psi).norm() <= 1e-12, tag("inverse", seed));
  }
  // Margin zero ⟺ unitary-group consistency zero, for antilinear g and Hermitian A.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 2 * dim_for(seed, 1, 3);
    const SymmetryTransform t = seed % 2 ? instances::random_antiunitary_plus(n, seed)
                                         : instances::random_antiunitary_minus(n, seed);
    ComplexMatrix h = linalg::random_hermitian(n, seed);
    if (seed % 4 < 2) h = models::symmetrize_invariant(h, t, tol);
    const bool margin_zero = invariance_margin(t, h).value <= tol.tau_zero;
    bool consistency_zero = true;
    for (std::uint64_t k = 0; k < 10; ++k) {
      const double time = uniform(seed * 31 + k, -5.0, 5.0);
      consistency_zero = consistency_zero && time_reversal_consistency(t, h, time, tol).value <= tol.tau_zero;
    }
    suite.check(margin_zero == consistency_zero, tag("margin <=> consistency", seed));
  }
  return suite.done();
}

SuiteResult curie_suite(const Tolerances& tol) {
  Suite suite("curie");
  std::size_t violations = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const std::size_t n = dim_for(seed, 2, 6);
    const SymmetryTransform r = instances::random_reflection(n, seed);
    ComplexMatrix h = linalg::random_hermitian(n, seed + 11);
    // Mix generic, invariant and nearly invariant laws.
    const int mode = static_cast<int>(seed % 4);
    if (mode != 0) {
      h = models::symmetrize_invariant(h, r, tol);
      const double eps = mode == 1 ? 0.0 : (mode == 2 ? 1e-12 : 1e-3);
      h += eps * linalg::random_hermitian(n, seed + 12);
    }
    const double t = uniform(seed, -5.0, 5.0);
    StateVector psi_i = instances::random_eigenstate(r, 1.0, seed);
    if (seed % 3 == 0) {
      // Mirror branch: choose a symmetric final state and evolve it backwards.
      psi_i = linalg::evolution(h, -t) * psi_i;
    }
    const Verdict v = curie::unitary_curie_check(h, r, psi_i, t, tol);
    if (v.is_violation()) {
      ++violations;
      suite.check(invariance_margin(r, h).value > tol.tau_violation, tag("unitary curie soundness", seed));
      suite.check(v.margin > tol.tau_violation && !v.witness.empty(), tag("verdict invariant", seed));
    }
    suite.check(v == curie::unitary_curie_check(h, r, psi_i, t, tol), tag("deterministic", seed));
  }
  suite.check(violations >= 100, "soundness suite produced too few violations to be meaningful");

  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const std::size_t n = dim_for(seed, 2, 6);
    const SymmetryTransform r = instances::random_reflection(n, seed + 20000);
    const ComplexMatrix h = models::symmetrize_invariant(linalg::random_hermitian(n, seed), r, tol);
    const StateVector psi = seed % 2 ? instances::random_eigenstate(r, seed % 4 == 1 ? 1.0 : -1.0, seed)
                                     : linalg::random_state(n, seed);
    const double t = uniform(seed + 3, -5.0, 5.0);
    suite.check(!curie::unitary_curie_check(h, r, psi, t, tol).is_violation(), tag("unitary curie completeness", seed));
  }

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = dim_for(seed, 2, 6);
    const SymmetryTransform r = instances::random_reflection(n, seed + 40000);
    const ComplexMatrix g = models::symmetrize_invariant(linalg::random_hermitian(n, seed), r, tol);
    const ComplexMatrix s = linalg::mat_exp(g, Complex(0.0, -1.0));
    if ((linalg::commutator(r.unitary_part(), s)).norm() > tol.tau_zero) {
      suite.check(false, tag("constructed S does not commute with R", seed));
      continue;
    }
    const EigenDecomposition basis = linalg::herm_eig(r.unitary_part(), tol);
    double worst = 0.0;
    for (std::size_t a = 0; a < basis.dim(); ++a) {
      for (std::size_t b = 0; b < basis.dim(); ++b) {
        const double pa = basis.eigenvalues(static_cast<Eigen::Index>(a));
        const double pb = basis.eigenvalues(static_cast<Eigen::Index>(b));
        if (pa > 0.0 && pb < 0.0) {
          worst = std::max(worst, std::abs(linalg::inner(basis.vector(b), s * basis.vector(a))));
        }
      }
    }
    suite.check(worst <= 1e-10, tag("scattering contrapositive", seed));
  }
  return suite.done();
}

SuiteResult kabir_suite(const Tolerances& tol) {
  Suite suite("kabir");
  std::size_t violations = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const std::size_t n = dim_for(seed, 2, 6);
    const bool even = n % 2 == 0;
    const SymmetryTransform t = (even && seed % 2) ? instances::random_antiunitary_minus(n, seed)
                                                   : instances::random_antiunitary_plus(n, seed);
    ComplexMatrix s;
    if (seed % 3 == 0) {
      s = linalg::random_unitary(n, seed + 1);
    } else {
      // T-invariant law plus an optional small T-odd admixture.
      ComplexMatrix g = models::symmetrize_invariant(linalg::random_hermitian(n, seed + 2), t, tol);
      if (seed % 3 == 2) g += 1e-4 * linalg::random_hermitian(n, seed + 3);
      s = linalg::mat_exp(g, Complex(0.0, -1.0));
    }
    const StateVector in = seed % 2 ? linalg::basis_vector(n, seed % n) : linalg::random_state(n, seed);
    const StateVector out = seed % 2 ? linalg::basis_vector(n, (seed + 1) % n) : linalg::random_state(n, seed + 5);
    const Verdict v = kabir::kabir_check(s, t, in, out, tol);
    if (v.is_violation()) {
      ++violations;
      const double law = (conjugate_operator(t, s) - s.adjoint()).norm();
      suite.check(law > tol.tau_zero, tag("kabir soundness", seed));
    }
  }
  suite.check(violations >= 100, "kabir soundness produced too few violations to be meaningful");

  const SymmetryTransform k_of[] = {SymmetryTransform::conjugation(1), SymmetryTransform::conjugation(2),
                                    SymmetryTransform::conjugation(3), SymmetryTransform::conjugation(4),
                                    SymmetryTransform::conjugation(5), SymmetryTransform::conjugation(6)};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = dim_for(seed, 2, 6);
    const ComplexMatrix s = models::t_symmetric_smatrix(n, seed);
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto p = kabir::amplitudes(s, k_of[n - 1], linalg::basis_vector(n, a), linalg::basis_vector(n, b));
        worst = std::max(worst, p.asymmetry);
      }
    }
    suite.check(worst <= 1e-10, tag("kabir contrapositive", seed));
  }

  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const ComplexMatrix m = linalg::random_unitary(2, seed);
    suite.check(std::abs(std::abs(m(0, 1)) - std::abs(m(1, 0))) <= 1e-12, tag("2x2 unitarity identity", seed));
  }

  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = dim_for(seed, 1, 6);
    const double p = kabir::transition_probability(linalg::random_unitary(n, seed), linalg::random_state(n, seed),
                                                   linalg::random_state(n, seed + 1));
    suite.check(p >= 0.0 && p <= 1.0 + 1e-9, tag("probability bound", seed));
  }
  return suite.done();
}

SuiteResult wigner_suite(const Tolerances& tol) {
  Suite suite("wigner");
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 * dim_for(seed, 1, 3);
    const SymmetryTransform t = instances::random_antiunitary_minus(n, seed);
    const ComplexMatrix h = linalg::random_hermitian(n, seed + 1);
    const auto clusters = wigner::spectrum_clusters(linalg::herm_eig(h, tol), tol.gap_tol);
    bool singleton = false;
    std::size_t total = 0;
    for (const auto& c : clusters.clusters) {
      singleton = singleton || c.multiplicity() == 1;
      total += c.multiplicity();
    }
    suite.check(total == n, tag("multiplicities sum to dim", seed));
    if (wigner::kramers_square(t, tol).classification == wigner::TSquare::MinusIdentity && singleton) {
      suite.check(invariance_margin(t, h).value > tol.tau_zero, tag("T^2 = -I with a singleton level forces violation", seed));
    }
    const StateVector psi = linalg::random_state(n, seed);
    const double alpha = uniform(seed, 0.0, 2.0 * std::numbers::pi);
    const double d1 = wigner::ray_displacement(t, psi, tol);
    const double d2 = wigner::ray_displacement(t, std::polar(1.0, alpha) * psi, tol);
    suite.check(std::abs(d1 - d2) <= 1e-12, tag("ray displacement phase invariance", seed));

    const ComplexMatrix hk = models::symmetrize_invariant(linalg::random_hermitian(n, seed + 2), t, tol);
    const wigner::KramersReport kr = wigner::kramers_degeneracy_verify(hk, t, tol.gap_tol, tol);
    suite.check(kr.status == wigner::KramersStatus::Pass, tag("kramers even multiplicities", seed));
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = dim_for(seed, 1, 6);
    const SymmetryTransform t = instances::random_antiunitary_plus(n, seed + 300);
    const ComplexMatrix h = models::symmetrize_invariant(linalg::random_hermitian(n, seed), t, tol);
    if (invariance_margin(t, h).value > tol.tau_zero) {
      suite.check(false, tag("symmetrized H not invariant", seed));
      continue;
    }
    const EigenDecomposition e = linalg::herm_eig(h, tol);
    const auto clusters = wigner::spectrum_clusters(e, tol.gap_tol);
    double worst = 0.0;
    for (const auto& c : clusters.clusters) {
      if (c.multiplicity() == 1) worst = std::max(worst, wigner::ray_displacement(t, e.vector(c.members[0]), tol));
    }
    suite.check(worst <= 1e-8, tag("invariant law keeps nondegenerate rays", seed));
    if (h.norm() > tol.tau_zero) {
      suite.check(!wigner::wigner_principle_check(h, t, tol.gap_tol, tol).is_violation(),
                  tag("no violation on invariant law", seed));
    }
  }
  return suite.done();
}

SuiteResult models_suite(const Tolerances& tol) {
  Suite suite("models");
  for (double j : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const models::SpinAlgebra s = models::spin_operators(j);
    const Complex i(0.0, 1.0);
    const std::string label = "j=" + std::to_string(j);
    suite.check((linalg::commutator(s.jx, s.jy) - i * s.jz).norm() <= 1e-10, label + " [Jx,Jy]=iJz");
    suite.check((linalg::commutator(s.jy, s.jz) - i * s.jx).norm() <= 1e-10, label + " [Jy,Jz]=iJx");
    suite.check((linalg::commutator(s.jz, s.jx) - i * s.jy).norm() <= 1e-10, label + " [Jz,Jx]=iJy");
    for (const ComplexMatrix* jk : {&s.jx, &s.jy, &s.jz}) {
      suite.check((conjugate_operator(s.t_conv, *jk) + *jk).norm() <= 1e-10, label + " T reverses J");
    }
    const bool minus = wigner::kramers_square(s.t_conv, tol).classification == wigner::TSquare::MinusIdentity;
    suite.check(minus == s.half_integer(), label + " T^2 sign");
  }

  const std::array<std::array<double, 3>, 3> axes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (double j : {0.5, 1.0, 1.5}) {
    for (double g : {0.1, 1.0}) {
      for (const auto& e : axes) {
        const models::EdmModel m = models::edm_model(j, 0.0, g, e, 1.0);
        const std::string label = "edm j=" + std::to_string(j) + " g=" + std::to_string(g);
        const Verdict v = wigner::wigner_principle_check(m.hamiltonian, m.spin.t_conv, tol.gap_tol, tol);
        suite.check(v.is_violation(), label + " wigner violation");
        suite.check(invariance_margin(m.spin.t_conv, m.hamiltonian).value > tol.tau_violation,
                    label + " direct margin");
        suite.check((conjugate_operator(m.spin.t_conv, m.dipole) + m.dipole).norm() <= 1e-10,
                    label + " dipole reverses with J");
        const auto perm = models::permanence_analysis(m, tol);
        for (const auto& rec : perm.records) {
          suite.check(rec.forward_residual <= 1e-10 && rec.reversed_residual <= 1e-10, label + " Wigner-Eckart chain");
          if (rec.ray_displacement <= tol.tau_zero) {
            suite.check(std::abs(rec.dipole) <= 1e-9, label + " T-fixed eigenvector has zero dipole");
          }
        }
      }
    }
  }
  for (double j : {0.5, 1.0, 1.5}) {
    const models::EdmModel m = models::edm_model(j, 0.7, 0.0, {0.0, 0.0, 1.0}, 1.0);
    suite.check(invariance_margin(m.spin.t_conv, m.hamiltonian).value <= 1e-9,
                "edm j=" + std::to_string(j) + " g=0 invariant");
  }
  // T-fixed rays ψ + Tψ in integer-spin irreps carry no dipole.
  for (double j : {1.0, 2.0}) {
    const models::EdmModel m = models::edm_model(j, 0.0, 1.0, {0.3, -0.4, 0.5}, 1.0);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const StateVector psi = linalg::random_state(m.spin.dim(), seed);
      const StateVector fixed = linalg::normalize(psi + tvd::apply(m.spin.t_conv, psi));
      if (wigner::ray_displacement(m.spin.t_conv, fixed, tol) > tol.tau_zero) {
        suite.check(false, tag("constructed ray not T-fixed", seed));
        continue;
      }
      suite.check(std::abs(linalg::inner(fixed, m.dipole * fixed)) <= 1e-9, tag("forced permanence failure", seed));
    }
  }

  for (int k = 0; k < 100; ++k) {
    const double eps = k / 100.0 * 0.999;
    suite.check(linalg::is_unitary(models::kaon_decay_scattering_model(eps).s, 1e-12),
                "kaon decay S unitary at eps=" + std::to_string(eps));
  }
  return suite.done();
}

io::Scenario random_scenario(std::uint64_t seed) {
  const std::size_t n = dim_for(seed, 2, 5);
  io::Scenario s;
  s.dim = n;
  s.description = "random scenario " + std::to_string(seed);
  s.seed = static_cast<std::int64_t>(seed);
  if (seed % 5 == 0) s.tolerances.gap_tol = 1e-7;
  const SymmetryTransform r = instances::random_reflection(n, seed);
  const SymmetryTransform t = instances::random_antiunitary_plus(n, seed + 1);
  ComplexMatrix h = linalg::random_hermitian(n, seed + 2);
  if (seed % 2 == 0) h = models::symmetrize_invariant(h, t);
  s.matrices["hamiltonian"] = h;
  s.matrices["smatrix"] = linalg::random_unitary(n, seed + 3);
  s.symmetries.push_back({"R", r.unitary_part(), false});
  s.symmetries.push_back({"T", t.unitary_part(), true});
  s.states["psi1"] = instances::random_eigenstate(r, 1.0, seed);
  s.states["psi2"] = linalg::random_state(n, seed + 4);
  s.requests.push_back({"curie", io::Detector::UnitaryCurie, {{"symmetry", "R"}, {"state", "psi1"}},
                        {{"t", uniform(seed, -3.0, 3.0)}}});
  s.requests.push_back({"kabir", io::Detector::Kabir,
                        {{"symmetry", "T"}, {"state_in", "psi1"}, {"state_out", "psi2"}}, {}});
  s.requests.push_back({"wigner", io::Detector::Wigner, {{"symmetry", "T"}}, {}});
  return s;
}

SuiteResult scenario_io_suite(const Tolerances& tol) {
  Suite suite("scenario_io");
  RunOptions serial;
  serial.overrides.tau_zero = tol.tau_zero;
  serial.overrides.tau_violation = tol.tau_violation;
  RunOptions parallel = serial;
  parallel.jobs = 4;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const io::Scenario s = random_scenario(seed);
    const std::string text = io::serialize_scenario(s);
    const io::Scenario back = io::parse_scenario(text);
    suite.check(io::equal(s, back), tag("parse(serialize(x)) == x", seed));
    suite.check(io::serialize_scenario(back) == text, tag("serialize is canonical", seed));
    const std::string r1 = io::serialize_report(run_scenario(s, serial));
    const std::string r2 = io::serialize_report(run_scenario(back, parallel));
    suite.check(r1 == r2, tag("report determinism", seed));
  }
  return suite.done();
}

SuiteResult oracle_suite(const Tolerances& tol) {
  Suite suite("oracle");
  RunOptions opt;
  opt.overrides.tau_zero = tol.tau_zero;
  opt.overrides.tau_violation = tol.tau_violation;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    io::Scenario s;
    if (seed % 2) {
      s = models::make_scenario("t-symmetric-s", {{"dim", std::to_string(dim_for(seed, 2, 5))},
                                                  {"seed", std::to_string(seed)}});
    } else {
      s = models::make_scenario("kaon-oscillation", {{"seed", std::to_string(seed)}});
    }
    const io::Report report = run_scenario(s, opt);
    bool all = true;
    for (const auto& c : oracle::cross_check(s, report)) all = all && c.agree;
    suite.check(all, tag("model scenario oracle agreement", seed));

    const io::Scenario r = random_scenario(seed + 1000);
    bool all_random = true;
    for (const auto& c : oracle::cross_check(r, run_scenario(r, opt))) all_random = all_random && c.agree;
    suite.check(all_random, tag("random scenario oracle agreement", seed + 1000));
  }
  return suite.done();
}

std::vector<SuiteResult> run_all(const Tolerances& tol) {
  tol.validate();
  return {linalg_suite(tol), symmetry_suite(tol), curie_suite(tol),       kabir_suite(tol),
          wigner_suite(tol), models_suite(tol),   scenario_io_suite(tol), oracle_suite(tol)};
}

}  // namespace tvd::selftest
