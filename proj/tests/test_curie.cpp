#include "doctest.h"
#include "helpers.hpp"
#include "tvd/curie.hpp"
#include "tvd/errors.hpp"
#include "tvd/instances.hpp"
#include "tvd/models.hpp"

using namespace th;
using tvd::SymmetryTransform;
namespace la = tvd::linalg;
namespace curie = tvd::curie;

TEST_SUITE("curie") {
  TEST_CASE("reflection broken by sigma x evolution") {
    const auto r = SymmetryTransform::linear(la::pauli::z(), "R");
    const auto v = curie::unitary_curie_check(la::pauli::x(), r, la::basis_vector(2, 0), kPi / 4.0);
    REQUIRE(v.is_violation());
    CHECK(v.violated_symmetry == "R");
    CHECK(v.margin > 1e-6);
    CHECK_FALSE(v.witness.empty());
    const StateVector psi_f = la::evolution(la::pauli::x(), kPi / 4.0) * la::basis_vector(2, 0);
    CHECK(dist(psi_f, vec({std::cos(kPi / 4.0), -I * std::sin(kPi / 4.0)})) <= 1e-12);
    CHECK(la::commutator(la::pauli::z(), la::pauli::x()).norm() > 0.0);
  }

  TEST_CASE("commuting pair stays symmetric") {
    const auto r = SymmetryTransform::linear(la::pauli::z(), "R");
    const auto v = curie::unitary_curie_check(la::pauli::z(), r, la::basis_vector(2, 0), 2.3);
    CHECK_FALSE(v.is_violation());
    CHECK(v.reason == tvd::Reason::PremiseUnmet);
  }

  TEST_CASE("both states fixed") {
    const auto r = SymmetryTransform::linear(la::pauli::x(), "R");
    const auto v = curie::unitary_curie_check(la::pauli::x(), r, vec({1.0 / kSqrt2, 1.0 / kSqrt2}), 1.0);
    CHECK_FALSE(v.is_violation());
    CHECK(v.detail == "both-states-symmetric");
  }

  TEST_CASE("input validation") {
    const auto r = SymmetryTransform::linear(la::pauli::z(), "R");
    CHECK_THROWS_AS(curie::unitary_curie_check(mat({{0, 1}, {0, 0}}), r, la::basis_vector(2, 0), 1.0),
                    tvd::ClassificationError);
    CHECK_THROWS_AS(curie::unitary_curie_check(la::pauli::x(), r, vec({1, 1}), 1.0), tvd::PremiseError);
    CHECK_THROWS_AS(curie::unitary_curie_check(la::pauli::x(), SymmetryTransform::conjugation(2), la::basis_vector(2, 0), 1.0),
                    tvd::MisuseError);
  }

  TEST_CASE("kaon decay toy") {
    const double eps = 0.2;
    const double c = std::sqrt(1.0 - eps * eps);
    const ComplexMatrix s = mat({{c, eps}, {-eps, c}});
    const auto r = SymmetryTransform::linear(mat({{-1, 0}, {0, 1}}), "CP");
    const auto v = curie::scattering_curie_check(s, r, la::basis_vector(2, 0), la::basis_vector(2, 1));
    REQUIRE(v.is_violation());
    CHECK(std::abs(v.margin - 0.2) <= 1e-12);
    CHECK(std::abs(la::commutator(r.unitary_part(), s).norm() - 2.0 * kSqrt2 * eps) <= 1e-12);
  }

  TEST_CASE("block-diagonal S closes the cross-parity channel") {
    const auto r = SymmetryTransform::linear(mat({{-1, 0}, {0, 1}}), "R");
    const ComplexMatrix s = mat({{std::polar(1.0, 0.4), 0}, {0, std::polar(1.0, -1.1)}});
    const auto v = curie::scattering_curie_check(s, r, la::basis_vector(2, 0), la::basis_vector(2, 1));
    CHECK_FALSE(v.is_violation());
    CHECK(v.reason == tvd::Reason::BelowThreshold);
  }

  TEST_CASE("both states even") {
    const auto r = SymmetryTransform::linear(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), "R");
    const auto v = curie::scattering_curie_check(la::random_unitary(3, 2), r, la::basis_vector(3, 0), la::basis_vector(3, 1));
    CHECK(v.reason == tvd::Reason::PremiseUnmet);
  }

  TEST_CASE("S-matrix inference gate") {
    using tvd::ComparisonKind;
    const auto v = curie::s_matrix_inference({0.0, ComparisonKind::Commutant}, {0.57, ComparisonKind::Commutant});
    CHECK(v.is_violation());
    const auto gate = curie::s_matrix_inference({0.3, ComparisonKind::Commutant}, {0.57, ComparisonKind::Commutant});
    CHECK(gate.reason == tvd::Reason::PremiseUnmet);
  }

  TEST_CASE("S-matrix inference end to end") {
    const ComplexMatrix h0 = mat({{1, 0}, {0, 2}});
    const ComplexMatrix v = mat({{0, 0.3}, {0.3, 0}});
    const auto r = SymmetryTransform::linear(mat({{1, 0}, {0, -1}}), "R");
    const ComplexMatrix s = tvd::models::build_s_matrix(h0, v, -2.0, 2.0);
    const auto verdict = curie::s_matrix_inference(tvd::invariance_margin(r, h0), tvd::invariance_margin(r, s));
    CHECK(verdict.is_violation());
    CHECK(tvd::invariance_margin(r, h0 + v).value > 1e-6);
  }

  TEST_CASE("property: soundness and completeness") {
    const tvd::Tolerances tol;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const std::size_t n = 2 + seed % 5;
      const auto r = tvd::instances::random_reflection(n, seed);
      const ComplexMatrix h = la::random_hermitian(n, seed);
      const StateVector psi = tvd::instances::random_eigenstate(r, 1.0, seed);
      const double t = tvd::instances::uniform(seed, -5.0, 5.0);
      if (curie::unitary_curie_check(h, r, psi, t).is_violation()) {
        CHECK(tvd::invariance_margin(r, h).value > tol.tau_violation);
      }
      const ComplexMatrix hs = tvd::models::symmetrize_invariant(h, r);
      CHECK_FALSE(curie::unitary_curie_check(hs, r, psi, t).is_violation());
    }
  }
}
