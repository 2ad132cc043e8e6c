// SPDX-License-Identifier: Apache-2.0
//
// Trigonometric approximation: L_2 best approximation, de la Vallee-Poussin means
// built from a smooth cutoff, and Jackson-type ratios.
#pragma once

#include <utility>

#include "fracmod/signal.hpp"

namespace fracmod {

/// Smooth even cutoff: 1 on [-1, 1], 0 outside [-2, 2], monotone in between.
/// The transition is s(2-|t|) / (s(2-|t|) + s(|t|-1)) with s(u) = exp(-1/u).
class CutoffV {
 public:
  double operator()(double t) const;
  double derivative(double t) const;
};

/// Fourier truncation to degree n and E_n(f)_2 = (sum_{|k|>n} |c_k|^2)^{1/2}.
std::pair<TrigPoly, double> best_approx_l2(const TrigPoly& f, int n);

/// V_h f with coefficients v(kh) c_k.
TrigPoly vallee_poussin(const TrigPoly& f, double h, const CutoffV& v = {});

/// ||f - V_{1/n} f||_p, an upper proxy for E_n(f)_p. For n = 0 the mean is the approximant.
double near_best_error(const TrigPoly& f, int n, double p);

/// near_best_error(f, n, p) / omega_r(f, 1/n)_p; 0/0 gives 0 and x/0 gives inf.
double jackson_ratio(const TrigPoly& f, int r, int n, double p);

}  // namespace fracmod
