#include "doctest.h"
#include "helpers.hpp"
#include "reference.hpp"
#include "tvd/errors.hpp"
#include "tvd/kabir.hpp"
#include "tvd/models.hpp"

using namespace th;
using tvd::SymmetryTransform;
namespace la = tvd::linalg;
namespace kabir = tvd::kabir;

namespace {
// Three sites whose couplings form a loop with a complex phase.
ComplexMatrix flux_triangle() { return mat({{0, I, 1}, {-I, 0, 1}, {1, 1, 0}}); }
}  // namespace

TEST_SUITE("kabir") {
  TEST_CASE("two-level counterexample") {
    const ComplexMatrix s = mat({{0, I}, {1, 0}});
    const auto k = SymmetryTransform::conjugation(2, "T");
    const auto p = kabir::amplitudes(s, k, la::basis_vector(2, 0), la::basis_vector(2, 1));
    CHECK(std::abs(p.forward - Complex(1, 0)) <= 1e-15);
    CHECK(std::abs(p.reversed - I) <= 1e-15);
    CHECK(std::abs(p.asymmetry - kSqrt2) <= 1e-12);
    const auto v = kabir::kabir_check(s, k, la::basis_vector(2, 0), la::basis_vector(2, 1));
    CHECK(v.is_violation());
    CHECK(v.violated_symmetry == "T on S");
    CHECK((s.conjugate() - s.adjoint()).norm() > 1e-6);
  }

  TEST_CASE("T-invariant S gives equal amplitudes") {
    const auto k = SymmetryTransform::conjugation(4, "T");
    const ComplexMatrix s = tvd::models::t_symmetric_smatrix(4, 11);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        CHECK(kabir::amplitudes(s, k, la::basis_vector(4, a), la::basis_vector(4, b)).asymmetry <= 1e-12);
        CHECK_FALSE(kabir::kabir_check(s, k, la::basis_vector(4, a), la::basis_vector(4, b)).is_violation());
      }
  }

  TEST_CASE("same real state in and out") {
    const auto k = SymmetryTransform::conjugation(3, "T");
    const StateVector psi = la::normalize(vec({1, -2, 0.5}));
    const auto p = kabir::amplitudes(la::random_unitary(3, 8), k, psi, psi);
    CHECK(p.forward == p.reversed);
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(kabir::kabir_check(la::identity(2), SymmetryTransform::linear(la::identity(2), "1"),
                                       la::basis_vector(2, 0), la::basis_vector(2, 1)),
                    tvd::MisuseError);
    CHECK_THROWS_AS(kabir::kabir_check(2.0 * la::identity(2), SymmetryTransform::conjugation(2),
                                       la::basis_vector(2, 0), la::basis_vector(2, 1)),
                    tvd::PremiseError);
  }

  TEST_CASE("transition probabilities") {
    CHECK(kabir::transition_probability(la::identity(2), la::basis_vector(2, 0), la::basis_vector(2, 0)) ==
          doctest::Approx(1.0));
    CHECK(kabir::transition_probability(la::identity(2), la::basis_vector(2, 0), la::basis_vector(2, 1)) == 0.0);
    const ComplexMatrix m = la::evolution(la::pauli::x(), kPi / 4.0);
    CHECK(std::abs(kabir::transition_probability(m, la::basis_vector(2, 0), la::basis_vector(2, 1)) - 0.5) <= 1e-12);
  }

  TEST_CASE("two-level unitaries show no probability asymmetry") {
    CHECK(kabir::probability_asymmetry(la::identity(3), la::basis_vector(3, 0), la::basis_vector(3, 1)) == 0.0);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      CHECK(kabir::probability_asymmetry(la::random_unitary(2, seed), la::basis_vector(2, 0), la::basis_vector(2, 1)) <=
            1e-12);
    }
  }

  TEST_CASE("open three-site chain is gauge-equivalent to a real law") {
    const ComplexMatrix g = mat({{0, I, 0}, {-I, 0, 1}, {0, 1, 0}});
    const ComplexMatrix s = la::mat_exp(g, -I);
    CHECK(kabir::probability_asymmetry(s, la::basis_vector(3, 0), la::basis_vector(3, 1)) <= 1e-12);
  }

  TEST_CASE("three-site loop has a probability asymmetry") {
    const ComplexMatrix s = la::mat_exp(flux_triangle(), -I);
    const double mine = kabir::probability_asymmetry(s, la::basis_vector(3, 0), la::basis_vector(3, 1));
    const ref::Dense r = ref::expm(ref::from_eigen(flux_triangle()), -I);
    const double theirs = std::abs(std::norm(r[1][0]) - std::norm(r[0][1]));
    CHECK(std::abs(mine - theirs) <= 1e-12);
    CHECK(std::abs(mine - 0.88180648557211772) <= 1e-12);
    CHECK(mine > 1e-3);
  }
}
