// SPDX-License-Identifier: Apache-2.0
#include "fracmod/fracdiff.hpp"

#include <algorithm>
#include <cmath>

#include "fracmod/errors.hpp"

namespace fracmod {

namespace {

constexpr long kMaxSeriesTerms = 10'000'000;

void check_beta(double beta) {
  if (!(beta > 0.0)) throw InvalidArgument("difference order beta must be positive");
}

// |binom(beta, nu)| nu^{beta+1} is nonincreasing for nu > beta, so the value at
// m = ceil(beta) + 1 bounds every later term by C nu^{-beta-1}.
struct TailConstant {
  long m;
  double c;
};

TailConstant tail_constant(double beta) {
  const long m = static_cast<long>(std::ceil(beta)) + 1;
  return {m, std::abs(frac_binom(beta, static_cast<int>(m))) * std::pow(double(m), beta + 1.0)};
}

}  // namespace

double frac_binom(double beta, int nu) {
  if (nu < 0) return 0.0;
  double b = 1.0;
  for (int j = 1; j <= nu; ++j) b *= (beta - j + 1) / j;
  return b;
}

cplx principal_power(double theta, double beta) {
  double th = std::fmod(theta, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  if (th == 0.0 || th == kTwoPi) return {0.0, 0.0};
  const double r = std::pow(2.0 * std::sin(0.5 * th), beta);
  return std::polar(r, 0.5 * beta * (th - kPi));
}

DiffSymbol diff_symbol(double beta, double delta, int degree) {
  check_beta(beta);
  if (degree < 0) throw InvalidArgument("degree must be nonnegative");
  DiffSymbol s{beta, delta, std::vector<cplx>(static_cast<std::size_t>(2 * degree + 1))};
  for (int k = -degree; k <= degree; ++k)
    s.values[static_cast<std::size_t>(k + degree)] = k == 0 ? cplx{} : principal_power(k * delta, beta);
  return s;
}

TrigPoly apply_diff(const TrigPoly& f, double beta, double delta) {
  const DiffSymbol s = diff_symbol(beta, delta, f.degree());
  TrigPoly out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) out[k] = s.at(k) * f.coeff(k);
  return out;
}

double binom_tail_bound(double beta, long n) {
  const auto [m, c] = tail_constant(beta);
  double head = 0.0;
  for (long nu = n + 1; nu < m; ++nu) head += std::abs(frac_binom(beta, static_cast<int>(nu)));
  // sum_{nu>=k+1} C nu^{-beta-1} <= C int_k^inf u^{-beta-1} du for k >= m-1
  const long k = std::max(n, m - 1);
  return head + c * std::pow(double(k), -beta) / beta;
}

cplx apply_diff_series(const TrigPoly& f, double beta, double delta, double x, double tol) {
  check_beta(beta);
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const double sup = f.abs_coeff_sum();
  const auto [m, c] = tail_constant(beta);

  long n_terms = m;
  if (c > 0.0 && sup > 0.0) {
    // smallest n >= m with sup * C n^{-beta} / beta < tol
    const double need = std::pow(sup * c / (beta * tol), 1.0 / beta);
    if (need > double(kMaxSeriesTerms)) {
      cplx partial{};
      double binom = 1.0;
      for (long nu = 0; nu <= kMaxSeriesTerms; ++nu) {
        partial += binom * ((nu % 2) ? -1.0 : 1.0) * evaluate(f, x + nu * delta);
        binom *= (beta - nu) / (nu + 1);
      }
      throw ConvergenceFailure("difference series needs more than 1e7 terms", partial.real(),
                               partial.imag(), sup * binom_tail_bound(beta, kMaxSeriesTerms));
    }
    n_terms = std::max<long>(m, static_cast<long>(std::ceil(need)) + 1);
  }

  // Compensated summation; terms decay slowly for small beta.
  cplx sum{}, comp{};
  double binom = 1.0;
  for (long nu = 0; nu <= n_terms; ++nu) {
    const cplx term = binom * ((nu % 2) ? -1.0 : 1.0) * evaluate(f, x + nu * delta);
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    binom *= (beta - nu) / (nu + 1);
    if (binom == 0.0) break;
  }
  return sum;
}

double abs_binom_sum(double beta, double tol) {
  check_beta(beta);
  const auto [m, c] = tail_constant(beta);
  long n = m;
  if (c > 0.0) {
    const double need = std::pow(c / (beta * tol), 1.0 / beta);
    n = std::max<long>(m, static_cast<long>(std::min(need, 1e6)));
  }
  double s = 0.0, binom = 1.0;
  for (long nu = 0; nu <= n; ++nu) {
    s += std::abs(binom);
    binom *= (beta - nu) / (nu + 1);
  }
  return s + binom_tail_bound(beta, n);
}

}  // namespace fracmod
