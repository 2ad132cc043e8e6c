// SPDX-License-Identifier: Apache-2.0
#include "fracmod/approx.hpp"

#include <cmath>

#include "fracmod/errors.hpp"
#include "fracmod/moduli.hpp"

namespace fracmod {

namespace {

double s(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
double s_prime(double u) { return u > 0.0 ? s(u) / (u * u) : 0.0; }

}  // namespace

double CutoffV::operator()(double t) const {
  const double u = std::abs(t);
  if (u <= 1.0) return 1.0;
  if (u >= 2.0) return 0.0;
  const double a = s(2.0 - u), b = s(u - 1.0);
  return a / (a + b);
}

double CutoffV::derivative(double t) const {
  const double u = std::abs(t);
  if (u <= 1.0 || u >= 2.0) return 0.0;
  const double a = s(2.0 - u), b = s(u - 1.0);
  const double da = -s_prime(2.0 - u), db = s_prime(u - 1.0);
  const double sum = a + b;
  const double dv = (da * b - a * db) / (sum * sum);
  return t < 0.0 ? -dv : dv;
}

std::pair<TrigPoly, double> best_approx_l2(const TrigPoly& f, int n) {
  if (n < 0) throw InvalidArgument("approximation degree must be nonnegative");
  const int m = std::min(n, f.degree());
  TrigPoly t(m);
  for (int k = -m; k <= m; ++k) t[k] = f.coeff(k);
  // Sum the tail from the outside in so small terms are not swamped.
  double tail = 0.0;
  for (int k = f.degree(); k > n; --k) tail += std::norm(f.coeff(k)) + std::norm(f.coeff(-k));
  return {t, std::sqrt(tail)};
}

TrigPoly vallee_poussin(const TrigPoly& f, double h, const CutoffV& v) {
  if (!(h > 0.0)) throw InvalidArgument("vallee_poussin needs h > 0");
  TrigPoly out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) out[k] = v(k * h) * f.coeff(k);
  return out;
}

double near_best_error(const TrigPoly& f, int n, double p) {
  if (n < 0) throw InvalidArgument("approximation degree must be nonnegative");
  TrigPoly approx = n == 0 ? TrigPoly::constant(f.coeff(0)) : vallee_poussin(f, 1.0 / n);
  return lp_norm(f - approx, NormParams::with_p(p));
}

double jackson_ratio(const TrigPoly& f, int r, int n, double p) {
  if (r < 1) throw InvalidArgument("Jackson order r must be positive");
  if (n < 1) throw InvalidArgument("Jackson degree n must be positive");
  ModulusRequest req;
  req.beta = r;
  req.h = 1.0 / n;
  req.norm = NormParams::with_p(p);
  return safe_ratio(near_best_error(f, n, p), classical_modulus(f, req));
}

}  // namespace fracmod
