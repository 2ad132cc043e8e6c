// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fracmod {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// An iterative method stopped before reaching its target accuracy.
/// Carries the best value it had and the error bound it achieved.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double partial_real, double partial_imag,
                     double achieved_bound)
      : Error(what), partial_real_(partial_real), partial_imag_(partial_imag),
        achieved_bound_(achieved_bound) {}

  double partial_real() const noexcept { return partial_real_; }
  double partial_imag() const noexcept { return partial_imag_; }
  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  double partial_real_;
  double partial_imag_;
  double achieved_bound_;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class BranchNotFound : public Error {
 public:
  using Error::Error;
};

class DivisionFailure : public Error {
 public:
  using Error::Error;
};

class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fracmod
