// SPDX-License-Identifier: Apache-2.0
//
// Fourier multipliers on R: the Beurling bracket ||g||_2 + ||g'||_2 (which bounds the
// multiplier-algebra norm up to an absolute constant), the functions g_tau, g_{1,tau},
// g_{2,tau} that compare averaged and plain differences, and coefficientwise comparison
// of two multiplier operators on trigonometric polynomials.
#pragma once

#include <functional>
#include <utility>

#include "fracmod/approx.hpp"
#include "fracmod/signal.hpp"

namespace fracmod {

struct Support {
  enum class Kind { compact, decaying } kind = Kind::compact;
  double a = 0.0;
  double b = 0.0;

  static Support compact(double a, double b) { return {Kind::compact, a, b}; }
  static Support decaying() { return {Kind::decaying, 0.0, 0.0}; }
};

struct MultiplierFn {
  std::function<cplx(double)> value;
  /// Empty: centered difference with step kDerivativeStep.
  std::function<cplx(double)> analytic_derivative;
  Support support;

  static constexpr double kDerivativeStep = 1e-6;

  cplx operator()(double t) const { return value(t); }
  cplx derivative(double t) const;
};

/// ||g||_{L2[-T,T]} + ||g'||_{L2[-T,T]} by composite Gauss-Legendre quadrature.
/// For a decaying g, |g(+-T)| > 1e-6 throws DomainTooSmall unless check_tail is false.
double beurling_bound(const MultiplierFn& g, double T, bool check_tail = true);

/// (1 - e^{i tau t})^beta v(t) / psi_beta(t); the value at t = 0 is the limit (beta+1) tau^beta.
MultiplierFn make_g_tau(double beta, double tau, const CutoffV& v = {});

/// g_{1,tau} = (1 - e^{i tau t})^beta v / (psi_{beta-alpha} psi_alpha) and
/// g_{2,tau} = the same with 1 - v in place of v. psi_0 is read as 1.
std::pair<MultiplierFn, MultiplierFn> make_g1_g2(double beta, double alpha, double tau,
                                                  const CutoffV& v = {});

/// Limits at t = 0 of g_tau and g_{1,tau}.
double g_tau_limit(double beta, double tau);
double g1_limit(double beta, double alpha, double tau);

using Symbol = std::function<cplx(int)>;

/// Polynomial with coefficients num(k)/den(k) c_k. Throws DivisionFailure naming k when
/// den(k) == 0 for an active coefficient.
TrigPoly comparison_apply(const TrigPoly& f, const Symbol& num, const Symbol& den);

}  // namespace fracmod
