#pragma once

#include <cmath>
#include <initializer_list>
#include <numbers>

#include "tvd/linalg.hpp"

namespace th {

using tvd::Complex;
using tvd::ComplexMatrix;
using tvd::StateVector;

inline constexpr Complex I{0.0, 1.0};
inline const double kSqrt2 = std::numbers::sqrt2;
inline const double kPi = std::numbers::pi;

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline StateVector vec(std::initializer_list<Complex> entries) {
  StateVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }
inline double dist(const StateVector& a, const StateVector& b) { return (a - b).norm(); }

}  // namespace th
