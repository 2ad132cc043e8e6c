// SPDX-License-Identifier: Apache-2.0
#include "fracmod/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>

#include "fracmod/errors.hpp"

namespace fracmod {

namespace {

using cplx = std::complex<double>;

struct Panel {
  double a, b;
  cplx value;
  double error;
  double l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const ComplexIntegrand& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& x = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);

  const cplx fc = f(c);
  cplx kron = wk[0] * fc;
  cplx gsum = wg[0] * fc;  // the 7-point Gauss rule shares the centre node
  double l1 = wk[0] * std::abs(fc);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const cplx fp = f(c + h * x[i]), fm = f(c - h * x[i]);
    kron += wk[i] * (fp + fm);
    l1 += wk[i] * (std::abs(fp) + std::abs(fm));
    if (i % 2 == 0) gsum += wg[i / 2] * (fp + fm);
  }
  kron *= h;
  gsum *= h;
  l1 *= std::abs(h);
  // Unscaled Kronrod-Gauss difference; the QUADPACK power-law scaling is too
  // optimistic for the phi^beta endpoint behaviour of the kernel.
  const double err = std::max(std::abs(kron - gsum), 50.0 * std::numeric_limits<double>::epsilon() * l1);
  return {a, b, kron, err, l1};
}

}  // namespace

QuadResult integrate_gk(const ComplexIntegrand& f, double a, double b, const QuadConfig& cfg) {
  if (!(cfg.abs_tol > 0.0)) throw InvalidArgument("quadrature abs_tol must be positive");
  if (a == b) return {};
  std::priority_queue<Panel> heap;
  heap.push(gk15(f, a, b));
  cplx total = heap.top().value;
  double err = heap.top().error, l1 = heap.top().l1;
  int n = 1;

  auto target = [&] {
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1;
    return std::max(std::min(cfg.abs_tol, cfg.rel_tol * l1), floor);
  };

  while (err > target()) {
    if (n >= cfg.max_subdiv) {
      throw ConvergenceFailure("adaptive quadrature exceeded max_subdiv", total.real(), total.imag(),
                               err);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at machine resolution
    const Panel left = gk15(f, worst.a, mid), right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++n;
    // Running sums drift; recompute exactly now and then.
    if (n % 64 == 0) {
      auto copy = heap;
      total = {}, err = 0.0, l1 = 0.0;
      while (!copy.empty()) {
        total += copy.top().value, err += copy.top().error, l1 += copy.top().l1;
        copy.pop();
      }
    }
  }
  return {total, err, l1, n};
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre order must be positive");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // boost returns the nonnegative zeros in ascending order.
  const std::vector<double> pos = boost::math::legendre_p_zeros<double>(n);
  GaussRule rule;
  auto weight = [n](double x) {
    const double dp = boost::math::legendre_p_prime<double>(n, x);
    return 2.0 / ((1.0 - x * x) * dp * dp);
  };
  for (auto r = pos.rbegin(); r != pos.rend(); ++r) {
    if (*r == 0.0) continue;
    rule.nodes.push_back(-*r);
    rule.weights.push_back(weight(*r));
  }
  if (n % 2 == 1) {
    rule.nodes.push_back(0.0);
    rule.weights.push_back(weight(0.0));
  }
  for (double r : pos) {
    if (r == 0.0) continue;
    rule.nodes.push_back(r);
    rule.weights.push_back(weight(r));
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace fracmod
