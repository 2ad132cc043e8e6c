// SPDX-License-Identifier: Apache-2.0
//
// Quadrature helpers: a globally adaptive Gauss-Kronrod (7/15) integrator for
// complex-valued integrands and fixed-order Gauss-Legendre rules.
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fracmod {

struct QuadConfig {
  double abs_tol = 1e-10;
  /// Relative target against the integral of |f|; the effective target is the
  /// smaller of the two, floored at a few ulps of that integral.
  double rel_tol = 1e-13;
  int max_subdiv = 2000;

  QuadConfig tightened(double factor) const {
    return {abs_tol / factor, rel_tol / factor, max_subdiv * 4};
  }
};

struct QuadResult {
  std::complex<double> value;
  double error = 0.0;
  /// Integral of |f| over the interval.
  double l1 = 0.0;
  int subintervals = 0;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Integrates f over [a, b]. Throws ConvergenceFailure when max_subdiv is exhausted
/// before the error estimate reaches the target.
QuadResult integrate_gk(const ComplexIntegrand& f, double a, double b, const QuadConfig& cfg);

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule (cached per n).
const GaussRule& gauss_legendre(int n);

}  // namespace fracmod
