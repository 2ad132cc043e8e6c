// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the unit tests: seeded generators and naive oracles.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fracmod/signal.hpp"

namespace fracmod::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  cplx complex(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }

  TrigPoly poly(int degree) {
    TrigPoly f(degree);
    for (int k = -degree; k <= degree; ++k) f[k] = complex() / (1.0 + std::abs(k));
    return f;
  }

  TrigPoly real_poly(int degree) {
    TrigPoly f(degree);
    f[0] = uniform(-1.0, 1.0);
    for (int k = 1; k <= degree; ++k) {
      f[k] = complex() / (1.0 + k);
      f[-k] = std::conj(f[k]);
    }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

/// Per-term summation of sum_k c_k e^{ikx}.
inline cplx naive_eval(const TrigPoly& f, double x) {
  cplx s{};
  for (int k = -f.degree(); k <= f.degree(); ++k) s += f.coeff(k) * std::exp(cplx{0.0, k * x});
  return s;
}

/// (1/2pi int |f|^p)^{1/p} by brute-force midpoint sums on n points (naive evaluation).
inline double naive_norm(const TrigPoly& f, double p, int n) {
  double acc = 0.0, mx = 0.0;
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(naive_eval(f, kTwoPi * j / n));
    acc += std::pow(a, std::isinf(p) ? 1.0 : p);
    mx = std::max(mx, a);
  }
  return std::isinf(p) ? mx : std::pow(acc / n, 1.0 / p);
}

inline double max_coeff_diff(const TrigPoly& a, const TrigPoly& b) {
  const int m = std::max(a.degree(), b.degree());
  double d = 0.0;
  for (int k = -m; k <= m; ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

}  // namespace fracmod::test
