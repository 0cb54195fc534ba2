#include "tvd/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "tvd/errors.hpp"

namespace tvd::linalg {

namespace {

using Index = Eigen::Index;

std::string shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

// Padé-13 numerator/denominator coefficients and the 1-norm bound below which
// the approximant is accurate to double precision without scaling.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

double one_norm(const ComplexMatrix& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

void rotate_largest_component_real(Eigen::Ref<Eigen::VectorXcd> v) {
  const double largest = v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag >= largest * (1.0 - 1e-9)) {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(std::abs(v(i)), 0.0);
      return;
    }
  }
}

ComplexMatrix gaussian_matrix(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Index>(dim);
  ComplexMatrix g(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

void require_positive_dim(std::size_t dim, const char* what) {
  if (dim == 0) throw DimensionError(std::string(what) + ": dimension must be at least 1");
}

}  // namespace

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("inner: vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  return a.dot(b);  // Eigen's dot conjugates the left operand.
}

double frobenius(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix identity(std::size_t dim) {
  const auto n = static_cast<Index>(dim);
  return ComplexMatrix::Identity(n, n);
}

StateVector basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis_vector: index out of range");
  StateVector v = StateVector::Zero(static_cast<Index>(dim));
  v(static_cast<Index>(index)) = 1.0;
  return v;
}

StateVector normalize(const StateVector& v) {
  const double n = v.norm();
  if (v.size() == 0 || n == 0.0 || !std::isfinite(n)) {
    throw DimensionError("normalize: vector has zero or non-finite norm");
  }
  return v / n;
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols() && a.rows() >= 1; }

bool is_hermitian(const ComplexMatrix& a, double tau_zero) {
  return is_square(a) && (a - a.adjoint()).norm() <= tau_zero;
}

bool is_unitary(const ComplexMatrix& a, double tau_zero) {
  return is_square(a) && (a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.rows())).norm() <= tau_zero;
}

bool is_normalized(const StateVector& v, double tau_zero) {
  return v.size() >= 1 && std::abs(v.norm() - 1.0) <= tau_zero;
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!is_square(a)) throw DimensionError(std::string(what) + ": expected a square matrix, got " + shape(a));
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " + shape(a) + " vs " + shape(b));
  }
}

void require_same_dim(const ComplexMatrix& a, const StateVector& v, const char* what) {
  require_square(a, what);
  if (a.rows() != v.size()) {
    throw DimensionError(std::string(what) + ": operator is " + shape(a) + " but state has length " +
                         std::to_string(v.size()));
  }
}

ComplexMatrix mat_exp(const ComplexMatrix& a, Complex scale) {
  require_square(a, "mat_exp");
  const Index n = a.rows();
  ComplexMatrix x = scale * a;

  const double norm = one_norm(x);
  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    x /= std::ldexp(1.0, squarings);
  }

  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix x2 = x * x;
  const ComplexMatrix x4 = x2 * x2;
  const ComplexMatrix x6 = x4 * x2;
  const auto& b = kPade13;

  const ComplexMatrix inner_u = x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2);
  const ComplexMatrix u = x * (inner_u + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
  const ComplexMatrix inner_v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2);
  const ComplexMatrix v = inner_v + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

  ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

ComplexMatrix evolution(const ComplexMatrix& h, double t) {
  return mat_exp(h, Complex(0.0, -t));
}

EigenDecomposition herm_eig(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a, "herm_eig");
  if (!is_hermitian(a, tol.tau_zero)) {
    throw ClassificationError("herm_eig: matrix is not Hermitian (‖A - A†‖_F = " +
                              std::to_string((a - a.adjoint()).norm()) + ")");
  }
  const ComplexMatrix sym = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ClassificationError("herm_eig: eigensolver did not converge");

  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  const Index n = a.rows();
  const double cluster_gap = tol.tau_eig * std::max(1.0, a.norm());

  Index lo = 0;
  while (lo < n) {
    Index hi = lo + 1;
    while (hi < n && out.eigenvalues(hi) - out.eigenvalues(hi - 1) <= cluster_gap) ++hi;
    const Index m = hi - lo;
    if (m > 1) {
      const ComplexMatrix span = out.eigenvectors.middleCols(lo, m);
      ComplexMatrix rebased(n, m);
      Index accepted = 0;
      for (Index i = 0; i < n && accepted < m; ++i) {
        // Projection of e_i onto the eigenspace, then two Gram–Schmidt passes.
        StateVector w = span * span.row(i).adjoint();
        for (int pass = 0; pass < 2; ++pass) {
          for (Index k = 0; k < accepted; ++k) w -= rebased.col(k) * rebased.col(k).dot(w);
        }
        const double residual = w.norm();
        if (residual > 1e-3) rebased.col(accepted++) = w / residual;
      }
      out.eigenvectors.middleCols(lo, m) = rebased;
    }
    lo = hi;
  }
  for (Index k = 0; k < n; ++k) rotate_largest_component_real(out.eigenvectors.col(k));
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  require_positive_dim(dim, "random_unitary");
  const ComplexMatrix g = gaussian_matrix(dim, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const auto n = static_cast<Index>(dim);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  require_positive_dim(dim, "random_hermitian");
  const ComplexMatrix g = gaussian_matrix(dim, seed);
  const auto n = static_cast<Index>(dim);
  ComplexMatrix h(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) h(r, c) = (g(r, c) + std::conj(g(c, r))) / 2.0;
  }
  return h;
}

StateVector random_state(std::size_t dim, std::uint64_t seed) {
  require_positive_dim(dim, "random_state");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector v(static_cast<Index>(dim));
  for (Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return normalize(v);
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace tvd::linalg
