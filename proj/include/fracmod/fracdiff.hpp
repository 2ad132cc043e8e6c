// SPDX-License-Identifier: Apache-2.0
//
// Fractional differences
//
//   D_delta^beta f(x) = sum_{nu>=0} binom(beta, nu) (-1)^nu f(x + nu delta)
//
// For trigonometric polynomials the difference acts on each Fourier coefficient
// as multiplication by (1 - e^{ik delta})^beta (principal branch).
#pragma once

#include <vector>

#include "fracmod/signal.hpp"

namespace fracmod {

/// Generalized binomial coefficient binom(beta, nu) by the product recurrence.
double frac_binom(double beta, int nu);

/// Principal-branch power (1 - e^{i theta})^beta, computed in polar form
/// (2 sin(theta/2))^beta e^{i beta (theta - pi)/2} with theta reduced into [0, 2pi).
cplx principal_power(double theta, double beta);

/// Multiplier values (1 - e^{ik delta})^beta for k = -M..M.
struct DiffSymbol {
  double beta = 1.0;
  double delta = 0.0;
  std::vector<cplx> values;

  int degree() const noexcept { return static_cast<int>(values.size() / 2); }
  cplx at(int k) const { return values[static_cast<std::size_t>(k + degree())]; }
};

DiffSymbol diff_symbol(double beta, double delta, int degree);

/// D_delta^beta f, exact for trigonometric polynomials.
TrigPoly apply_diff(const TrigPoly& f, double beta, double delta);

/// Series value of D_delta^beta f at x, truncated when the tail bound drops below tol.
/// Throws ConvergenceFailure when more than 10^7 terms would be needed.
cplx apply_diff_series(const TrigPoly& f, double beta, double delta, double x, double tol);

/// Tail bound sum_{nu > n} |binom(beta, nu)| (valid for n > beta).
double binom_tail_bound(double beta, long n);

/// Upper bound for sum_{nu>=0} |binom(beta, nu)|: partial sum plus analytic tail.
double abs_binom_sum(double beta, double tol = 1e-12);

}  // namespace fracmod
