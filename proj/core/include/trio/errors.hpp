// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace trio {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Physical parameters violate a declared invariant. The message lists
/// every offending field and the bound it violates.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameter file or CLI configuration problem. Carries the source line
/// when one is known (0 = not line-specific).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg, int line = 0)
      : Error(msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The drift matrix has an eigenvalue with non-negative real part, so no
/// stationary covariance exists (or an analytic formula diverges).
class UnstableSystemError : public Error {
 public:
  using Error::Error;
};

/// The Lyapunov operator is numerically rank-deficient (an eigenvalue
/// pair of the drift matrix sums to ~0).
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// The iterative eigenvalue solver failed to converge.
class EigenSolverError : public Error {
 public:
  using Error::Error;
};

/// A covariance matrix fails the uncertainty relation beyond tolerance.
class UnphysicalCovarianceError : public Error {
 public:
  using Error::Error;
};

/// The spectral asymmetry vanishes, so no effective occupation is defined.
class UndefinedOccupationError : public Error {
 public:
  using Error::Error;
};

}  // namespace trio
