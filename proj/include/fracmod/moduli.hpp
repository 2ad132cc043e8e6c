// SPDX-License-Identifier: Apache-2.0
//
// Moduli of smoothness of a trigonometric polynomial f:
//
//   omega_beta(f,h)_p       = sup_{0<delta<=h} ||D_delta^beta f||_p
//   w_beta(f,h)_p           = ((1/h) int_0^h ||D_delta^beta f||_p^{p1} d delta)^{1/p1},  p1 = min(1,p)
//   omega~_beta(f,h)_p      = ||sum_k psi_beta(kh) c_k e^{ikx}||_p
//   omega*_{beta;alpha}(f,h)_p = ||sum_k psi_{beta-alpha}(kh) psi_alpha(kh) c_k e^{ikx}||_p
//
// and the scan that compares them.
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fracmod/signal.hpp"

namespace fracmod {

struct ModulusRequest {
  double beta = 1.0;
  /// Only for the star modulus: beta - alpha must be a nonnegative integer, 0 < alpha <= 4.
  std::optional<double> alpha;
  double h = 0.1;
  NormParams norm;
  int delta_grid = 256;
  int quad_order = 64;

  /// Throws InvalidArgument on a violated invariant.
  void validate() const;
};

double classical_modulus(const TrigPoly& f, const ModulusRequest& req);
double integral_modulus(const TrigPoly& f, const ModulusRequest& req);
/// Throws UnsupportedParameter for p < 1.
double linearized_modulus(const TrigPoly& f, const ModulusRequest& req);
double star_modulus(const TrigPoly& f, const ModulusRequest& req);

/// The default alpha paired with beta in scans: frac(beta) when positive, else 1.
double default_alpha(double beta);

/// num/den with den treated as zero when den <= 1e-7 num: 0/0 -> 0, x/0 -> inf.
double safe_ratio(double num, double den);

struct EquivRow {
  std::string fid;
  double beta = 0.0;
  double alpha = 0.0;
  double h = 0.0;
  double p = 2.0;
  double omega = 0.0;
  double w = 0.0;
  double omega_tilde = 0.0;
  double omega_star = 0.0;
  double r_w = 0.0;      // omega / w
  double r_tilde = 0.0;  // omega / omega_tilde
  double r_star = 0.0;   // omega / omega_star
  /// E_{[1/h]}(f)_p (exact for p = 2, de la Vallee-Poussin proxy otherwise).
  double best_error = 0.0;
  /// omega / (omega_tilde + best_error)
  double r_rescue = 0.0;
  /// Empty when every quantity was computed; failed quantities are NaN.
  std::string error;

  bool infinite_tilde() const { return std::isinf(r_tilde); }
};

using EquivReport = std::vector<EquivRow>;

struct EquivGrid {
  std::vector<double> betas;
  std::vector<double> hs;
  std::vector<double> ps;
  NormParams norm;  // p is overridden per row
  int delta_grid = 256;
  int quad_order = 64;
  unsigned threads = 0;
};

/// One row per (member, beta, h, p) in that nesting order.
EquivReport equivalence_scan(const std::vector<CorpusMember>& corpus, const EquivGrid& grid);

struct EquivSummary {
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::size_t infinite_tilde = 0;
  double max_r_w = 0.0;
  double max_r_tilde = 0.0;  // over finite values
  double max_r_star = 0.0;
  double min_r_star = kInf;
  double max_r_rescue = 0.0;
  /// Largest omega_tilde / w - 1 and w / omega - 1 seen (chain slack).
  double worst_tilde_over_w = -kInf;
  double worst_w_over_omega = -kInf;
};

EquivSummary summarize(const EquivReport& report);

}  // namespace fracmod
