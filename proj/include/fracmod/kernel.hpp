// SPDX-License-Identifier: Apache-2.0
//
// The averaging kernel of the linearized modulus:
//
//   psi_beta(t) = int_0^1 (1 - e^{it phi})^beta dphi,
//   z_beta(t)   = t psi_beta(t) = int_0^t (1 - e^{i phi})^beta dphi = x_beta(t) + i y_beta(t).
//
// z_beta is evaluated on [0, 2pi] by adaptive quadrature of the polar-form integrand
// (2 sin(phi/2))^beta e^{i beta (phi - pi)/2}; every other t is reached through
//
//   z(-t) = -conj(z(t)),   z(t + 2pi) = z(t) + 2pi.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fracmod/quadrature.hpp"
#include "fracmod/signal.hpp"

namespace fracmod {

struct KernelPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double beta = 1.0;
};

/// Width of the end panels [0, eps] and [2pi - eps, 2pi] handled by power series.
inline constexpr double kKernelSeriesPanel = 1e-3;

/// The integrand (1 - e^{i phi})^beta for phi in [0, 2pi].
cplx kernel_integrand(double beta, double phi);

/// Mean of |integrand| over a period, Gamma(beta+1)/Gamma(beta/2+1)^2. Natural
/// magnitude scale of z_beta on [0, 2pi] (grows like 2^beta).
double kernel_scale(double beta);

/// int_a^b (1 - e^{i phi})^beta dphi for 0 <= a <= b <= 2pi.
cplx z_between(double beta, double a, double b, const QuadConfig& cfg = {});

cplx z_eval(double beta, double t, const QuadConfig& cfg = {});

/// z_eval(beta, t)/t, with psi(0) = 0.
cplx psi_eval(double beta, double t, const QuadConfig& cfg = {});

/// z_beta at many points; shares one cumulative integration per period.
std::vector<cplx> z_on_grid(double beta, std::span<const double> ts, const QuadConfig& cfg = {});

/// Independent route through the Fourier series of x_beta and y_beta,
///   x = t + sum binom(beta,nu)(-1)^nu sin(nu t)/nu,
///   y = sum binom(beta,nu)(-1)^nu (1 - cos(nu t))/nu,
/// truncated by an analytic tail bound below tol.
cplx z_series(double beta, double t, double tol = 1e-10);

/// (x'_beta(t), y'_beta(t)) in closed form; t is reduced modulo 2pi.
std::pair<double, double> xy_prime(double beta, double t);

/// x_{2n}(pi (1 - 1/n)) through the (finite) series.
double xn_divergence_probe(int n);

/// samples equispaced points of the curve z_beta on [t_lo, t_hi].
std::vector<KernelPoint> kernel_curve(double beta, double t_lo, double t_hi, int samples,
                                      const QuadConfig& cfg = {});

}  // namespace fracmod
