// SPDX-License-Identifier: Apache-2.0
#include "fracmod/signal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "fracmod/errors.hpp"

namespace fracmod {

namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
// Plans are created once per (size, direction) and kept for the process lifetime.
fftw_plan cached_plan(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto it = plans.find({n, sign});
  if (it != plans.end()) return it->second;
  std::vector<cplx> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
  fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(std::pair{n, sign}, plan);
  return plan;
}

void run_dft(std::vector<cplx>& in, std::vector<cplx>& out, int sign) {
  fftw_plan plan = cached_plan(static_cast<int>(in.size()), sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void check_p(double p) {
  if (!(p > 0.0)) throw InvalidArgument("norm exponent p must lie in (0, inf]");
}

double unit_uniform(std::mt19937_64& gen) {
  // Fixed conversion so corpus members are identical across standard libraries.
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

TrigPoly::TrigPoly(int degree) {
  if (degree < 0) throw InvalidArgument("TrigPoly degree must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(2 * degree + 1), cplx{});
}

TrigPoly::TrigPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 != 1)
    throw InvalidArgument("TrigPoly needs an odd number (2M+1) of coefficients");
}

TrigPoly TrigPoly::exponential(int n) {
  TrigPoly f(std::abs(n));
  f[n] = 1.0;
  return f;
}

TrigPoly TrigPoly::constant(cplx c) {
  TrigPoly f(0);
  f[0] = c;
  return f;
}

bool TrigPoly::is_real(double tol) const {
  for (int k = 0; k <= degree(); ++k)
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  return true;
}

TrigPoly TrigPoly::padded(int degree) const {
  if (degree <= this->degree()) return *this;
  TrigPoly out(degree);
  for (int k = -this->degree(); k <= this->degree(); ++k) out[k] = coeff(k);
  return out;
}

int TrigPoly::effective_degree() const {
  for (int k = degree(); k > 0; --k)
    if (coeff(k) != cplx{} || coeff(-k) != cplx{}) return k;
  return 0;
}

double TrigPoly::abs_coeff_sum() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s += std::abs(c);
  return s;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  if (other.degree() > degree()) *this = padded(other.degree());
  for (int k = -other.degree(); k <= other.degree(); ++k) (*this)[k] += other.coeff(k);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  if (other.degree() > degree()) *this = padded(other.degree());
  for (int k = -other.degree(); k <= other.degree(); ++k) (*this)[k] -= other.coeff(k);
  return *this;
}

TrigPoly& TrigPoly::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  return *this;
}

int norm_grid_size(int degree, int oversample) {
  if (oversample < 1) throw InvalidArgument("oversample must be a positive integer");
  return std::max(64, oversample * (2 * degree + 1));
}

std::vector<cplx> sample_uniform(const TrigPoly& f, int n) {
  const int m = f.degree();
  if (n < 2 * m + 1) throw InvalidArgument("grid too small for the polynomial degree");
  std::vector<cplx> spec(static_cast<std::size_t>(n)), vals(static_cast<std::size_t>(n));
  for (int k = -m; k <= m; ++k) spec[static_cast<std::size_t>((k % n + n) % n)] += f.coeff(k);
  run_dft(spec, vals, FFTW_BACKWARD);
  return vals;
}

cplx evaluate(const TrigPoly& f, double x) {
  cplx s{};
  for (int k = -f.degree(); k <= f.degree(); ++k) {
    const cplx c = f.coeff(k);
    if (c != cplx{}) s += c * std::polar(1.0, k * x);
  }
  return s;
}

std::vector<cplx> evaluate(const TrigPoly& f, std::span<const double> points) {
  std::vector<cplx> out;
  out.reserve(points.size());
  for (double x : points) out.push_back(evaluate(f, x));
  return out;
}

double lp_norm_on_grid(const TrigPoly& f, double p, int n, bool refine) {
  check_p(p);
  if (n < 4) throw InvalidArgument("degenerate quadrature grid (fewer than 4 points)");
  const std::vector<cplx> vals = sample_uniform(f, n);
  if (std::isinf(p)) {
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t j = 0; j < vals.size(); ++j) {
      const double a = std::abs(vals[j]);
      if (a > best) best = a, arg = j;
    }
    if (!refine || best == 0.0) return best;
    // Golden-section polish of |f| on the two cells around the grid argmax.
    const double step = kTwoPi / n;
    double a = (static_cast<double>(arg) - 1.0) * step, b = (static_cast<double>(arg) + 1.0) * step;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = std::abs(evaluate(f, c)), fd = std::abs(evaluate(f, d));
    for (int it = 0; it < 60; ++it) {
      if (fc > fd) {
        b = d, d = c, fd = fc;
        c = b - g * (b - a), fc = std::abs(evaluate(f, c));
      } else {
        a = c, c = d, fc = fd;
        d = a + g * (b - a), fd = std::abs(evaluate(f, d));
      }
    }
    return std::max({best, fc, fd});
  }
  double s = 0.0;
  if (p == 2.0) {
    for (const cplx& v : vals) s += std::norm(v);
    return std::sqrt(s / n);
  }
  for (const cplx& v : vals) s += std::pow(std::abs(v), p);
  return std::pow(s / n, 1.0 / p);
}

double lp_norm(const TrigPoly& f, const NormParams& np) {
  return lp_norm_on_grid(f, np.p, norm_grid_size(f.degree(), np.oversample), np.refine);
}

TrigPoly from_samples(std::span<const cplx> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw InvalidArgument("from_samples needs at least one sample");
  std::vector<cplx> in(values.begin(), values.end()), spec(values.size());
  run_dft(in, spec, FFTW_FORWARD);
  const int m = (n - 1) / 2;
  TrigPoly f(m);
  for (int k = -m; k <= m; ++k) f[k] = spec[static_cast<std::size_t>((k % n + n) % n)] / double(n);
  return f;
}

TrigPoly corpus(CorpusKind kind, int degree, std::uint64_t seed) {
  switch (kind) {
    case CorpusKind::exponential:
      return TrigPoly::exponential(degree);
    case CorpusKind::random_smooth: {
      if (degree < 0) throw InvalidArgument("corpus degree must be nonnegative");
      std::mt19937_64 gen(seed);
      TrigPoly f(degree);
      f[0] = 0.5 + 0.5 * unit_uniform(gen);
      for (int k = 1; k <= degree; ++k) {
        const double amp = (0.5 + 0.5 * unit_uniform(gen)) / ((1.0 + k) * (1.0 + k));
        const double phase = kTwoPi * unit_uniform(gen);
        f[k] = std::polar(amp, phase);
        f[-k] = std::conj(f[k]);
      }
      return f;
    }
    case CorpusKind::sawtooth_truncated: {
      // (pi - x)/2 on (0, 2pi) = sum_{k>=1} sin(kx)/k.
      if (degree < 0) throw InvalidArgument("corpus degree must be nonnegative");
      TrigPoly f(degree);
      for (int k = 1; k <= degree; ++k) {
        f[k] = cplx{0.0, -0.5 / k};
        f[-k] = cplx{0.0, 0.5 / k};
      }
      return f;
    }
    case CorpusKind::abs_sin_truncated: {
      // |sin x| = 2/pi - (4/pi) sum_{m>=1} cos(2mx)/(4m^2 - 1).
      if (degree < 0) throw InvalidArgument("corpus degree must be nonnegative");
      TrigPoly f(degree);
      f[0] = 2.0 / kPi;
      for (int k = 2; k <= degree; k += 2) {
        const double m = k / 2;
        f[k] = f[-k] = -2.0 / (kPi * (4.0 * m * m - 1.0));
      }
      return f;
    }
  }
  throw InvalidArgument("unknown corpus kind");
}

CorpusKind parse_corpus_kind(const std::string& name) {
  if (name == "exponential") return CorpusKind::exponential;
  if (name == "random_smooth") return CorpusKind::random_smooth;
  if (name == "sawtooth_truncated") return CorpusKind::sawtooth_truncated;
  if (name == "abs_sin_truncated") return CorpusKind::abs_sin_truncated;
  throw InvalidArgument("unknown corpus kind '" + name + "'");
}

std::vector<CorpusMember> default_corpus() {
  std::vector<CorpusMember> out;
  for (int n = 1; n <= 5; ++n)
    out.push_back({"exp:" + std::to_string(n), corpus(CorpusKind::exponential, n)});
  out.push_back({"random:8:1", corpus(CorpusKind::random_smooth, 8, 1)});
  out.push_back({"random:8:2", corpus(CorpusKind::random_smooth, 8, 2)});
  out.push_back({"random:16:3", corpus(CorpusKind::random_smooth, 16, 3)});
  out.push_back({"sawtooth:16", corpus(CorpusKind::sawtooth_truncated, 16)});
  out.push_back({"abssin:16", corpus(CorpusKind::abs_sin_truncated, 16)});
  return out;
}

}  // namespace fracmod
