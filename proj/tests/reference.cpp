#include "reference.hpp"

#include <algorithm>
#include <cmath>

namespace ref {

Dense from_eigen(const tvd::ComplexMatrix& m) {
  Dense out(static_cast<std::size_t>(m.rows()), std::vector<C>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

tvd::ComplexMatrix to_eigen(const Dense& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  tvd::ComplexMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense out(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Dense expm(const Dense& a, C scale) {
  const std::size_t n = a.size();
  Dense x(n, std::vector<C>(n));
  double norm1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i][j] = scale * a[i][j];
      col += std::abs(x[i][j]);
    }
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  while (norm1 > 0.25) {
    norm1 /= 2.0;
    ++squarings;
  }
  const double shrink = std::ldexp(1.0, -squarings);
  for (auto& row : x)
    for (auto& v : row) v *= shrink;

  Dense sum(n, std::vector<C>(n));
  Dense term(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i) sum[i][i] = term[i][i] = 1.0;
  for (int k = 1; k <= 30; ++k) {
    term = multiply(term, x);
    for (auto& row : term)
      for (auto& v : row) v /= static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) sum = multiply(sum, sum);
  return sum;
}

std::vector<double> hermitian_eigenvalues(const Dense& a) {
  const std::size_t n = a.size();
  const std::size_t m = 2 * n;
  std::vector<std::vector<double>> s(m, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s[i][j] = s[i + n][j + n] = a[i][j].real();
      s[i + n][j] = a[i][j].imag();
      s[i][j + n] = -a[i][j].imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        total += s[i][j] * s[i][j];
        if (i != j) off += s[i][j] * s[i][j];
      }
    if (off <= 1e-30 * total) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (s[p][q] == 0.0) continue;
        const double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double kp = s[k][p];
          const double kq = s[k][q];
          s[k][p] = c * kp - sn * kq;
          s[k][q] = sn * kp + c * kq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double pk = s[p][k];
          const double qk = s[q][k];
          s[p][k] = c * pk - sn * qk;
          s[q][k] = sn * pk + c * qk;
        }
      }
    }
  }
  std::vector<double> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = s[i][i];
  std::sort(all.begin(), all.end());
  // Every eigenvalue appears twice in the embedding.
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
  return out;
}

}  // namespace ref
