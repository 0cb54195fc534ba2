#pragma once

#include <stdexcept>
#include <string>

namespace tvd {

// Base for every error raised by the library. Detectors and constructors
// throw; the CLI maps any tvd::Error to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (non-square, mismatched dims, dim = 0).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input fails a tolerance-based classification (not Hermitian, not unitary).
class ClassificationError : public Error {
 public:
  using Error::Error;
};

// A detector was handed the wrong kind of symmetry (linear vs antilinear).
class MisuseError : public Error {
 public:
  using Error::Error;
};

// A mathematical premise of a detector or constructor does not hold
// (non-unitary S, zero Hamiltonian, parameter out of range, ...).
class PremiseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tvd
