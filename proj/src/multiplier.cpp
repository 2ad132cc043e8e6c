// SPDX-License-Identifier: Apache-2.0
#include "fracmod/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fracmod/errors.hpp"
#include "fracmod/fracdiff.hpp"
#include "fracmod/kernel.hpp"
#include "fracmod/quadrature.hpp"

namespace fracmod {

namespace {

constexpr double kTailProbe = 1e-6;
constexpr double kPanelWidth = 0.25;
constexpr int kPanelOrder = 16;

struct PsiValue {
  cplx psi;
  cplx dpsi;
};

// psi = z/t and psi' = (z'(t) t - z)/t^2 with z'(t) = (1 - e^{it})^beta. Order 0 is the constant 1.
PsiValue psi_with_derivative(double order, double t) {
  if (order == 0.0) return {1.0, 0.0};
  const cplx z = z_eval(order, t);
  return {z / t, (principal_power(t, order) * t - z) / (t * t)};
}

// Smallest |psi_beta| on an equispaced grid of [lo, hi] (lo > 0) and where it occurs.
std::pair<double, double> min_abs_psi(double beta, double lo, double hi, int samples) {
  double best = kInf, where = lo;
  for (const KernelPoint& kp : kernel_curve(beta, lo, hi, samples)) {
    const double a = std::hypot(kp.x, kp.y) / kp.t;
    if (a < best) best = a, where = kp.t;
  }
  return {best, where};
}

void require_nonvanishing(double beta, double lo, double hi, const char* name) {
  if (beta == 0.0) return;
  const auto [m, where] = min_abs_psi(beta, lo, hi, 4096);
  if (!(m > 0.0)) {
    std::ostringstream os;
    os << name << " = psi_" << beta << " vanishes near t = " << where;
    throw DivisionFailure(os.str());
  }
}

void check_tau(double beta, double tau) {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidArgument("tau must lie in (0, 1)");
}

int split_order(double beta, double alpha) {
  if (!(alpha > 0.0 && alpha <= 4.0)) throw InvalidArgument("alpha must lie in (0, 4]");
  const double m = std::round(beta - alpha);
  if (m < 0.0 || std::abs(beta - alpha - m) > 1e-9)
    throw InvalidArgument("beta - alpha must be a nonnegative integer");
  return static_cast<int>(m);
}

cplx checked_div(cplx num, cplx den, double t) {
  if (den == cplx{}) {
    std::ostringstream os;
    os << "multiplier denominator vanishes at t = " << t;
    throw DivisionFailure(os.str());
  }
  return num / den;
}

}  // namespace

cplx MultiplierFn::derivative(double t) const {
  if (analytic_derivative) return analytic_derivative(t);
  const double s = kDerivativeStep;
  return (value(t + s) - value(t - s)) / (2.0 * s);
}

double beurling_bound(const MultiplierFn& g, double T, bool check_tail) {
  if (!(T > 0.0)) throw InvalidArgument("domain half-width must be positive");
  double lo = -T, hi = T;
  if (g.support.kind == Support::Kind::compact) {
    lo = std::max(lo, g.support.a);
    hi = std::min(hi, g.support.b);
  } else if (check_tail) {
    const double tail = std::max(std::abs(g(T)), std::abs(g(-T)));
    if (tail > kTailProbe) {
      std::ostringstream os;
      os << "|g(+-T)| = " << tail << " at T = " << T << " exceeds " << kTailProbe;
      throw DomainTooSmall(os.str());
    }
  }
  if (!(lo < hi)) return 0.0;

  std::vector<double> cuts{lo, hi};
  for (double c : {-2.0, -1.0, 0.0, 1.0, 2.0})
    if (c > lo && c < hi) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());

  const GaussRule& rule = gauss_legendre(kPanelOrder);
  double g2 = 0.0, d2 = 0.0;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double len = cuts[s + 1] - cuts[s];
    const int panels = std::max(1, static_cast<int>(std::ceil(len / kPanelWidth)));
    const double w = len / panels;
    for (int j = 0; j < panels; ++j) {
      const double a = cuts[s] + j * w;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = a + 0.5 * w * (rule.nodes[i] + 1.0);
        const double wt = 0.5 * w * rule.weights[i];
        g2 += wt * std::norm(g(t));
        d2 += wt * std::norm(g.derivative(t));
      }
    }
  }
  return std::sqrt(g2) + std::sqrt(d2);
}

double g_tau_limit(double beta, double tau) { return (beta + 1.0) * std::pow(tau, beta); }

double g1_limit(double beta, double alpha, double tau) {
  const double m = beta - alpha;
  return std::pow(tau, beta) * (m == 0.0 ? 1.0 : m + 1.0) * (alpha + 1.0);
}

MultiplierFn make_g_tau(double beta, double tau, const CutoffV& v) {
  check_tau(beta, tau);
  // 2 < pi, where psi_beta has no zeros for any beta.
  require_nonvanishing(beta, 1e-2, 2.0, "g_tau denominator");
  const double limit = g_tau_limit(beta, tau);
  MultiplierFn g;
  g.value = [beta, tau, v, limit](double t) -> cplx {
    if (t == 0.0) return limit;
    const double vt = v(t);
    if (vt == 0.0) return {};
    return checked_div(principal_power(tau * t, beta) * vt, psi_eval(beta, t), t);
  };
  g.support = Support::compact(-2.0, 2.0);
  return g;
}

std::pair<MultiplierFn, MultiplierFn> make_g1_g2(double beta, double alpha, double tau, const CutoffV& v) {
  check_tau(beta, tau);
  const double m = split_order(beta, alpha);
  require_nonvanishing(alpha, 1e-2, 50.0, "psi_alpha");
  require_nonvanishing(m, 1e-2, 50.0, "psi_{beta-alpha}");
  const double limit = g1_limit(beta, alpha, tau);

  MultiplierFn g1;
  g1.value = [=](double t) -> cplx {
    if (t == 0.0) return limit;
    const double vt = v(t);
    if (vt == 0.0) return {};
    const cplx den = psi_with_derivative(m, t).psi * psi_eval(alpha, t);
    return checked_div(principal_power(tau * t, beta) * vt, den, t);
  };
  g1.support = Support::compact(-2.0, 2.0);

  MultiplierFn g2;
  g2.value = [=](double t) -> cplx {
    const double u = 1.0 - v(t);
    if (u == 0.0) return {};
    const cplx den = psi_with_derivative(m, t).psi * psi_eval(alpha, t);
    return checked_div(principal_power(tau * t, beta) * u, den, t);
  };
  g2.analytic_derivative = [=](double t) -> cplx {
    const double u = 1.0 - v(t);
    const double du = -v.derivative(t);
    if (u == 0.0 && du == 0.0) return {};
    const PsiValue pa = psi_with_derivative(alpha, t), pm = psi_with_derivative(m, t);
    const cplx den = pa.psi * pm.psi;
    const cplx dden = pa.dpsi * pm.psi + pa.psi * pm.dpsi;
    const cplx e = std::polar(1.0, tau * t);
    const cplx num = principal_power(tau * t, beta);
    const cplx dnum = beta * principal_power(tau * t, beta - 1.0) * cplx{0.0, -tau} * e;
    const cplx q = checked_div(1.0, den, t);
    return (dnum * u + num * du) * q - num * u * dden * q * q;
  };
  g2.support = Support::decaying();
  return {g1, g2};
}

TrigPoly comparison_apply(const TrigPoly& f, const Symbol& num, const Symbol& den) {
  TrigPoly out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) {
    const cplx c = f.coeff(k);
    if (c == cplx{}) continue;
    const cplx d = den(k);
    if (d == cplx{}) {
      std::ostringstream os;
      os << "denominator symbol vanishes at active k = " << k;
      throw DivisionFailure(os.str());
    }
    out[k] = num(k) / d * c;
  }
  return out;
}

}  // namespace fracmod
