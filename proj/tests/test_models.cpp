#include "doctest.h"
#include "helpers.hpp"
#include "reference.hpp"
#include "tvd/errors.hpp"
#include "tvd/kabir.hpp"
#include "tvd/curie.hpp"
#include "tvd/model_scenarios.hpp"
#include "tvd/models.hpp"
#include "tvd/wigner.hpp"

using namespace th;
using tvd::SymmetryTransform;
namespace la = tvd::linalg;
namespace models = tvd::models;

TEST_SUITE("models") {
  TEST_CASE("spin matrices") {
    const auto half = models::spin_operators(0.5);
    CHECK(dist(half.jx, la::pauli::x() / 2.0) <= 1e-15);
    CHECK(dist(half.jy, la::pauli::y() / 2.0) <= 1e-15);
    CHECK(dist(half.jz, la::pauli::z() / 2.0) <= 1e-15);
    const auto one = models::spin_operators(1.0);
    CHECK(dist(one.jz, mat({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})) <= 1e-15);
    const auto zero = models::spin_operators(0.0);
    CHECK(zero.dim() == 1);
    CHECK(zero.jx.norm() + zero.jy.norm() + zero.jz.norm() == 0.0);
    CHECK(zero.t_conv.antilinear());
    CHECK(dist(zero.t_conv.unitary_part(), la::identity(1)) <= 1e-15);
    CHECK_THROWS_AS(models::spin_operators(0.3), tvd::PremiseError);
    CHECK_THROWS_AS(models::spin_operators(-1.0), tvd::PremiseError);
  }

  TEST_CASE("spin algebra and time reversal") {
    for (double j : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      const auto s = models::spin_operators(j);
      CHECK(dist(la::commutator(s.jx, s.jy), I * s.jz) <= 1e-10);
      CHECK(dist(la::commutator(s.jy, s.jz), I * s.jx) <= 1e-10);
      CHECK(dist(la::commutator(s.jz, s.jx), I * s.jy) <= 1e-10);
      CHECK(dist(tvd::conjugate_operator(s.t_conv, s.jx), -s.jx) <= 1e-10);
      CHECK(dist(tvd::conjugate_operator(s.t_conv, s.jy), -s.jy) <= 1e-10);
      CHECK(dist(tvd::conjugate_operator(s.t_conv, s.jz), -s.jz) <= 1e-10);
      const bool minus = tvd::wigner::kramers_square(s.t_conv).classification == tvd::wigner::TSquare::MinusIdentity;
      CHECK(minus == s.half_integer());
    }
  }

  TEST_CASE("electric dipole toy") {
    const auto m = models::edm_model(0.5, 0.0, 1.0, {0, 0, 1}, 1.0);
    CHECK(dist(m.hamiltonian, la::pauli::z() / 2.0) <= 1e-15);
    CHECK(tvd::wigner::wigner_principle_check(m.hamiltonian, m.spin.t_conv, 1e-8).is_violation());
    const auto flat = models::edm_model(0.5, 1.0, 0.0, {0, 0, 1}, 1.0);
    CHECK(dist(flat.hamiltonian, la::identity(2)) <= 1e-15);
    CHECK(tvd::invariance_margin(flat.spin.t_conv, flat.hamiltonian).value <= 1e-12);
    CHECK_THROWS_AS(models::edm_model(0.3, 0.0, 1.0, {0, 0, 1}, 1.0), tvd::PremiseError);
    CHECK_THROWS_AS(models::edm_model(0.5, 0.0, 1.0, {0, 0, 1}, 0.0), tvd::PremiseError);
  }

  TEST_CASE("dipole reverses under T like J") {
    const auto m = models::edm_model(1.5, 0.0, 1.0, {0.2, 0.5, -1.0}, 2.0);
    CHECK(dist(tvd::conjugate_operator(m.spin.t_conv, m.dipole), -m.dipole) <= 1e-10);
  }

  TEST_CASE("permanence analysis") {
    const tvd::Tolerances tol;
    const auto m = models::edm_model(0.5, 0.0, 1.0, {0, 0, 1}, 1.0);
    const auto p = models::permanence_analysis(m);
    CHECK(p.c == doctest::Approx(1.0));
    for (const auto& r : p.records) {
      CHECK(r.ray_displacement > tol.tau_violation);
      CHECK(r.forward_residual <= 1e-10);
      CHECK(r.reversed_residual <= 1e-10);
    }
    for (double j : {0.5, 1.0, 1.5}) {
      for (double g : {0.1, 1.0}) {
        for (const auto& e : std::vector<std::array<double, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
          const auto mm = models::edm_model(j, 0.0, g, e, 1.0);
          CHECK(tvd::wigner::wigner_principle_check(mm.hamiltonian, mm.spin.t_conv, 1e-8).is_violation());
          CHECK(tvd::invariance_margin(mm.spin.t_conv, mm.hamiltonian).value > tol.tau_violation);
          for (const auto& r : models::permanence_analysis(mm).records) {
            CHECK(r.forward_residual <= 1e-10);
            CHECK(r.reversed_residual <= 1e-10);
            if (r.ray_displacement <= tol.tau_zero) CHECK(std::abs(r.dipole) <= 1e-9);
          }
        }
      }
    }
  }

  TEST_CASE("kaon oscillation") {
    const auto k = models::kaon_oscillation_model(1.0, 1.0, 0.5);
    CHECK(dist(tvd::apply(k.t_conv, k.k0()), k.k0()) == 0.0);
    CHECK(dist(tvd::apply(k.t_conv, k.k0bar()), k.k0bar()) == 0.0);
    CHECK(tvd::invariance_margin(k.t_conv, k.hamiltonian).value == 0.0);
    for (double t : {0.1, 1.0, 2.5, 7.0}) {
      const ComplexMatrix u = la::evolution(k.hamiltonian, t);
      CHECK(tvd::kabir::amplitudes(u, k.t_conv, k.k0(), k.k0bar()).asymmetry <= 1e-12);
    }
    const auto ki = models::kaon_oscillation_model(1.0, 1.0, I);
    CHECK(tvd::invariance_margin(ki.t_conv, ki.hamiltonian).value > 1e-6);
    const ComplexMatrix u = la::evolution(ki.hamiltonian, 1.0);
    const auto p = tvd::kabir::amplitudes(u, ki.t_conv, ki.k0(), ki.k0bar());
    CHECK(p.asymmetry > 1e-6);
    CHECK(std::abs(std::abs(p.forward) - std::abs(p.reversed)) <= 1e-12);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto h = la::random_hermitian(2, seed);
      const auto km = models::kaon_oscillation_model(h(0, 0).real(), h(1, 1).real(), h(0, 1));
      const ComplexMatrix ut = la::evolution(km.hamiltonian, 0.1 * static_cast<double>(seed));
      CHECK(tvd::kabir::probability_asymmetry(ut, km.k0(), km.k0bar()) <= 1e-12);
    }
  }

  TEST_CASE("kaon decay") {
    const auto zero = models::kaon_decay_scattering_model(0.0);
    CHECK(la::commutator(zero.cp.unitary_part(), zero.s).norm() == 0.0);
    const auto v0 = tvd::curie::scattering_curie_check(zero.s, zero.cp, zero.psi_in, zero.psi_out);
    CHECK_FALSE(v0.is_violation());
    CHECK(std::abs(std::get<tvd::Complex>(v0.witness.at("amplitude"))) <= 1e-12);

    const auto mid = models::kaon_decay_scattering_model(0.2);
    CHECK(std::abs(la::commutator(mid.cp.unitary_part(), mid.s).norm() - 2.0 * kSqrt2 * 0.2) <= 1e-12);
    CHECK(tvd::curie::scattering_curie_check(mid.s, mid.cp, mid.psi_in, mid.psi_out).is_violation());

    const auto edge = models::kaon_decay_scattering_model(0.999);
    CHECK(la::is_unitary(edge.s, 1e-12));
    const auto ve = tvd::curie::scattering_curie_check(edge.s, edge.cp, edge.psi_in, edge.psi_out);
    CHECK(ve.is_violation());
    CHECK(std::abs(ve.margin - 0.999) <= 1e-12);
    CHECK_THROWS_AS(models::kaon_decay_scattering_model(1.0), tvd::PremiseError);
  }

  TEST_CASE("symmetrization") {
    const auto k = SymmetryTransform::conjugation(2);
    const ComplexMatrix real = mat({{1, 2}, {2, -1}});
    CHECK(dist(models::symmetrize_invariant(real, k), real) <= 1e-15);
    CHECK(models::symmetrize_invariant(la::pauli::y(), k).norm() <= 1e-15);
    const auto t = SymmetryTransform::antiunitary(I * la::pauli::y(), "T");
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const ComplexMatrix h = models::symmetrize_invariant(la::random_hermitian(2, seed), t);
      CHECK(tvd::invariance_margin(t, h).value <= 1e-12);
      CHECK(la::is_hermitian(h, 1e-15));
    }
  }

  TEST_CASE("T-symmetric scattering matrices") {
    const ComplexMatrix one = models::t_symmetric_smatrix(1, 4);
    CHECK(std::abs(std::abs(one(0, 0)) - 1.0) <= 1e-12);
    CHECK(std::abs(std::conj(one(0, 0)) * one(0, 0) - 1.0) <= 1e-12);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const std::size_t n = 2 + seed % 5;
      const ComplexMatrix s = models::t_symmetric_smatrix(n, seed);
      CHECK((s.conjugate() - s.adjoint()).norm() <= 1e-10);
    }
  }

  TEST_CASE("finite-time S matrix") {
    const ComplexMatrix h0 = mat({{1, 0, 0}, {0, 2, 0}, {0, 0, -0.5}});
    CHECK(dist(models::build_s_matrix(h0, ComplexMatrix::Zero(3, 3), -1.0, 2.0), la::identity(3)) <= 1e-12);
    const ComplexMatrix vd = mat({{0.3, 0, 0}, {0, -0.1, 0}, {0, 0, 0.7}});
    CHECK(dist(models::build_s_matrix(h0, vd, -1.0, 2.0), la::mat_exp(vd, -I * 3.0)) <= 1e-12);

    // First-order Dyson term by Simpson quadrature.
    const ComplexMatrix v = 1e-3 * la::random_hermitian(3, 17) / la::random_hermitian(3, 17).norm();
    const double ti = -1.5;
    const double tf = 2.0;
    const int steps = 2000;
    const double h = (tf - ti) / steps;
    ComplexMatrix integral = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k <= steps; ++k) {
      const double t = ti + h * k;
      const double w = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
      const ComplexMatrix vi = ref::to_eigen(ref::expm(ref::from_eigen(h0), I * t)) * v *
                               ref::to_eigen(ref::expm(ref::from_eigen(h0), -I * t));
      integral += (w * h / 3.0) * vi;
    }
    const ComplexMatrix first = la::identity(3) - I * integral;
    const double bound = std::pow(v.norm() * (tf - ti), 2);
    CHECK(dist(models::build_s_matrix(h0, v, ti, tf), first) <= bound);
  }

  TEST_CASE("named model scenarios") {
    CHECK_THROWS_AS(models::make_scenario("edm", {{"j", "0.3"}}), tvd::PremiseError);
    CHECK_THROWS_AS(models::make_scenario("nope", {}), tvd::PremiseError);
    CHECK_THROWS_AS(models::make_scenario("kaon-decay", {{"bogus", "1"}}), tvd::PremiseError);
    CHECK(models::parse_real("1/2") == 0.5);
    CHECK(models::parse_complex("1-0.5i") == Complex(1.0, -0.5));
    CHECK(models::parse_complex("-i") == Complex(0.0, -1.0));
    const auto s = models::make_scenario("t-symmetric-s", {{"dim", "4"}, {"seed", "3"}});
    CHECK(s.requests.size() == 12);
  }
}
