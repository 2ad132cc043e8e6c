// SPDX-License-Identifier: Apache-2.0
//
// Zeros of z_beta(t) = t psi_beta(t) for t > 0.
//
// y_beta is 2pi-periodic and monotone between the critical points
//   c_m = pi + 2 m pi / beta   (0 < c_m < 2pi),
// so each interval (c_m, c_{m+1}) holds at most one zero of y_beta. A zero
// theta_m(beta) of y on that interval, shifted by 2 pi k, is a zero of z exactly
// when x_beta(theta_m) + 2 pi k = 0. The pair (m, k) labels a branch; zeros are
// located by tracking the sign of x_beta(theta_m(beta)) + 2 pi k along beta.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fracmod/kernel.hpp"

namespace fracmod {

struct ZeroRecord {
  double beta_k = 0.0;
  double t_k = 0.0;
  /// |z_{beta_k}(t_k)|
  double residual = 0.0;
  /// (beta_lo, beta_hi, t_lo, t_hi) of the final bisection bracket.
  std::array<double, 4> bracket{};
  /// Index m of the monotone interval of y_beta holding the zero (after reduction mod 2pi).
  int branch_index = 0;
};

/// Zeros of y_beta in the open interval (t_lo, t_hi), ascending.
std::vector<double> y_zeros(double beta, double t_lo, double t_hi, int grid,
                            const QuadConfig& cfg = {});

/// Zero of y_beta inside the monotone interval (c_m, c_{m+1}) of [0, 2pi], if any.
struct BranchPoint {
  double theta = 0.0;
  cplx z;
};
std::optional<BranchPoint> branch_zero(double beta, int m, const QuadConfig& cfg = {});

/// x_beta at the unique zero of y_beta on (pi(3 - 2/beta), 3pi), for beta in [4, 5].
/// Throws BranchNotFound when that interval has no (or more than one) zero.
double curve_F(double beta, const QuadConfig& cfg = {});

/// The same zero location together with F.
BranchPoint curve_F_point(double beta, const QuadConfig& cfg = {});

/// Bisects F on [4, 5] for the first pathological order beta_0 and its t_0.
ZeroRecord find_beta0(double tol_beta = 1e-10, const QuadConfig& cfg = {});

struct ScanWindow {
  double beta_min = 0.5;
  double beta_max = 40.0;
  double t_max = 40.0 * kPi;
  int beta_grid = 0;  // 0: one column per 0.05 in beta
  int t_grid = 256;   // minimum sample cells per period for y sign detection
  double tol_beta = 1e-10;
  /// Records must satisfy residual <= residual_tol * max(1, kernel_scale(beta_k)).
  double residual_tol = 1e-8;
  unsigned threads = 0;
};

std::vector<ZeroRecord> scan_zero_set(const ScanWindow& window, std::vector<std::string>* notes = nullptr,
                                      const QuadConfig& cfg = {});

std::vector<ZeroRecord> scan_zero_set(double beta_max, double t_max, int beta_grid, int t_grid);

/// min |z_beta| over `grid` equispaced points of [t_lo, t_hi].
double verify_nonvanishing(double beta, double t_lo, double t_hi, int grid, const QuadConfig& cfg = {});

}  // namespace fracmod
