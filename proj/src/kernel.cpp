// SPDX-License-Identifier: Apache-2.0
#include "fracmod/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "fracmod/errors.hpp"
#include "fracmod/fracdiff.hpp"

namespace fracmod {

namespace {

constexpr int kSeriesTerms = 10;
constexpr long kMaxSeriesTerms = 10'000'000;

void check_beta(double beta) {
  if (!(beta > 0.0)) throw InvalidArgument("kernel order beta must be positive");
}

// int_0^u (2 sin(phi/2))^beta e^{i beta (phi - pi)/2} dphi for 0 <= u <= eps.
// The integrand is e^{-i beta pi/2} phi^beta exp(g(phi)) with
//   g(phi) = i beta phi/2 + beta log(sin(phi/2)/(phi/2)),
// and exp(g) is expanded as a power series.
class EndSeries {
 public:
  explicit EndSeries(double beta) : beta_(beta) {
    // log(sin v / v) = -v^2/6 - v^4/180 - v^6/2835 - v^8/37800 - ...
    std::array<cplx, kSeriesTerms> g{};
    g[1] = {0.0, 0.5 * beta};
    g[2] = -beta / 6.0 / 4.0;
    g[4] = -beta / 180.0 / 16.0;
    g[6] = -beta / 2835.0 / 64.0;
    g[8] = -beta / 37800.0 / 256.0;
    e_[0] = 1.0;
    for (int n = 1; n < kSeriesTerms; ++n) {
      cplx s{};
      for (int j = 1; j <= n; ++j) s += double(j) * g[j] * e_[n - j];
      e_[n] = s / double(n);
    }
    phase_ = std::polar(1.0, -0.5 * beta * kPi);
  }

  cplx operator()(double u) const {
    if (u <= 0.0) return {};
    cplx s{};
    double up = std::pow(u, beta_ + 1.0);
    for (int n = 0; n < kSeriesTerms; ++n, up *= u) s += e_[n] * (up / (beta_ + n + 1.0));
    return phase_ * s;
  }

 private:
  double beta_;
  std::array<cplx, kSeriesTerms> e_{};
  cplx phase_;
};

struct Reduced {
  double r;   // in [0, 2pi]
  double shift;  // 2 pi k
  bool negate;   // t < 0
};

Reduced reduce(double t) {
  const bool neg = t < 0.0;
  const double a = std::abs(t);
  double k = std::floor(a / kTwoPi);
  double r = a - k * kTwoPi;
  if (r < 0.0) r += kTwoPi, k -= 1.0;
  if (r > kTwoPi) r -= kTwoPi, k += 1.0;
  return {r, k * kTwoPi, neg};
}

cplx assemble(const Reduced& red, cplx base) {
  const cplx z = base + red.shift;
  return red.negate ? -std::conj(z) : z;
}

}  // namespace

cplx kernel_integrand(double beta, double phi) {
  const double s = 2.0 * std::sin(0.5 * phi);
  if (s <= 0.0) return {};
  return std::polar(std::pow(s, beta), 0.5 * beta * (phi - kPi));
}

double kernel_scale(double beta) {
  return std::exp(std::lgamma(beta + 1.0) - 2.0 * std::lgamma(0.5 * beta + 1.0));
}

cplx z_between(double beta, double a, double b, const QuadConfig& cfg) {
  check_beta(beta);
  if (a > b) return -z_between(beta, b, a, cfg);
  if (a < 0.0 || b > kTwoPi) throw InvalidArgument("z_between needs 0 <= a <= b <= 2pi");
  if (a == b) return {};
  constexpr double eps = kKernelSeriesPanel;
  const EndSeries series(beta);
  cplx total{};

  if (a < eps) total += series(std::min(b, eps)) - series(a);

  const double lo = std::max(a, eps), hi = std::min(b, kTwoPi - eps);
  if (lo < hi) {
    const auto f = [beta](double phi) { return kernel_integrand(beta, phi); };
    total += integrate_gk(f, lo, hi, cfg).value;
  }

  // integrand(2pi - u) = conj(integrand(u))
  if (b > kTwoPi - eps) {
    const double from = std::max(a, kTwoPi - eps);
    total += std::conj(series(kTwoPi - from) - series(kTwoPi - b));
  }
  return total;
}

cplx z_eval(double beta, double t, const QuadConfig& cfg) {
  check_beta(beta);
  const Reduced red = reduce(t);
  return assemble(red, z_between(beta, 0.0, red.r, cfg));
}

cplx psi_eval(double beta, double t, const QuadConfig& cfg) {
  check_beta(beta);
  if (t == 0.0) return {};
  return z_eval(beta, t, cfg) / t;
}

std::vector<cplx> z_on_grid(double beta, std::span<const double> ts, const QuadConfig& cfg) {
  check_beta(beta);
  std::vector<Reduced> red;
  red.reserve(ts.size());
  for (double t : ts) red.push_back(reduce(t));
  std::vector<std::size_t> order(ts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return red[i].r < red[j].r; });

  std::vector<cplx> out(ts.size());
  double prev = 0.0;
  cplx acc{};
  for (std::size_t i : order) {
    acc += z_between(beta, prev, red[i].r, cfg);
    prev = red[i].r;
    out[i] = assemble(red[i], acc);
  }
  return out;
}

cplx z_series(double beta, double t, double tol) {
  check_beta(beta);
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (t == 0.0) return {};

  // |binom(beta,nu)|/nu <= C nu^{-beta-2} for nu >= m; the y terms carry an extra
  // factor 2 from |1 - cos|.
  const long m = static_cast<long>(std::ceil(beta)) + 1;
  const double c = std::abs(frac_binom(beta, static_cast<int>(m))) * std::pow(double(m), beta + 1.0);
  long n_terms = m;
  if (c > 0.0) {
    const double need = std::pow(4.0 * c / ((beta + 1.0) * tol), 1.0 / (beta + 1.0));
    if (need > double(kMaxSeriesTerms)) {
      throw ConvergenceFailure("kernel series needs more than 1e7 terms", 0.0, 0.0,
                               4.0 * c * std::pow(double(kMaxSeriesTerms), -beta - 1.0) / (beta + 1.0));
    }
    n_terms = std::max<long>(m, static_cast<long>(std::ceil(need)) + 1);
  }

  // Neumaier summation of both components.
  double sx = t, cx = 0.0, sy = 0.0, cy = 0.0;
  auto add = [](double& s, double& comp, double v) {
    const double t2 = s + v;
    comp += std::abs(s) >= std::abs(v) ? (s - t2) + v : (v - t2) + s;
    s = t2;
  };
  double binom = 1.0;
  for (long nu = 1; nu <= n_terms; ++nu) {
    binom *= (beta - nu + 1) / nu;
    if (binom == 0.0) break;
    const double a = ((nu % 2) ? -binom : binom) / nu;
    const double arg = double(nu) * t;
    add(sx, cx, a * std::sin(arg));
    add(sy, cy, a * (1.0 - std::cos(arg)));
  }
  return {sx + cx, sy + cy};
}

std::pair<double, double> xy_prime(double beta, double t) {
  check_beta(beta);
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  const double mag = std::pow(2.0 * std::sin(0.5 * r), beta);
  const double ang = 0.5 * beta * (r - kPi);
  return {std::cos(ang) * mag, std::sin(ang) * mag};
}

double xn_divergence_probe(int n) {
  if (n < 1) throw InvalidArgument("divergence probe needs n >= 1");
  return z_series(2.0 * n, kPi * (1.0 - 1.0 / n)).real();
}

std::vector<KernelPoint> kernel_curve(double beta, double t_lo, double t_hi, int samples,
                                      const QuadConfig& cfg) {
  if (samples <= 0) throw InvalidArgument("curve needs at least one sample");
  if (!(t_hi >= t_lo)) throw InvalidArgument("curve needs t_lo <= t_hi");
  std::vector<double> ts(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    ts[static_cast<std::size_t>(i)] = samples == 1 ? t_lo : t_lo + (t_hi - t_lo) * i / (samples - 1);
  const std::vector<cplx> zs = z_on_grid(beta, ts, cfg);
  std::vector<KernelPoint> out;
  out.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out.push_back({ts[i], zs[i].real(), zs[i].imag(), beta});
  return out;
}

}  // namespace fracmod
