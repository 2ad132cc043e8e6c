// SPDX-License-Identifier: Apache-2.0
//
// 2pi-periodic functions represented as finite trigonometric polynomials
//
//   f(x) = sum_{k=-M}^{M} c_k e^{ikx},
//
// together with L_p (quasi-)norms on the circle and a deterministic test corpus.
#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace fracmod {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

class TrigPoly {
 public:
  /// The zero polynomial of degree 0.
  TrigPoly() : coeffs_(1, cplx{0.0, 0.0}) {}

  /// Zero polynomial of the given degree.
  explicit TrigPoly(int degree);

  /// Takes coefficients ordered k = -M..M; the length must be odd.
  explicit TrigPoly(std::vector<cplx> coeffs);

  static TrigPoly exponential(int n);
  static TrigPoly constant(cplx c);

  int degree() const noexcept { return static_cast<int>(coeffs_.size() / 2); }

  /// Coefficient of e^{ikx}; zero outside -M..M.
  cplx coeff(int k) const noexcept {
    const int m = degree();
    return (k < -m || k > m) ? cplx{} : coeffs_[static_cast<std::size_t>(k + m)];
  }
  cplx& operator[](int k) { return coeffs_[static_cast<std::size_t>(k + degree())]; }
  const cplx& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k + degree())]; }

  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// True when c_{-k} == conj(c_k) up to `tol` (absolute), i.e. f is real-valued.
  bool is_real(double tol = 0.0) const;

  /// Same function with degree raised to at least `degree` (zero padding).
  TrigPoly padded(int degree) const;

  /// Largest |k| with a nonzero coefficient (0 for constants and zero).
  int effective_degree() const;

  /// sum |c_k|, an upper bound for the sup norm.
  double abs_coeff_sum() const;

  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  TrigPoly& operator*=(cplx s);

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(cplx s, TrigPoly a) { return a *= s; }

  bool operator==(const TrigPoly&) const = default;

 private:
  std::vector<cplx> coeffs_;
};

/// Exponent p in (0, inf] and quadrature resolution for L_p norms.
struct NormParams {
  double p = 2.0;
  int oversample = 8;
  /// p = inf only: polish the grid argmax with a golden-section search.
  bool refine = false;

  double p1() const noexcept { return p < 1.0 ? p : 1.0; }
  static NormParams with_p(double p) { return NormParams{p, 8, false}; }
};

/// Number of quadrature points used for a polynomial of the given degree.
int norm_grid_size(int degree, int oversample);

/// Values of f on the uniform grid x_j = 2 pi j / n, computed by FFT; needs n >= 2M+1.
std::vector<cplx> sample_uniform(const TrigPoly& f, int n);

/// (1/2pi int |f|^p)^{1/p} by the rectangle rule, or max |f| for p = inf.
double lp_norm(const TrigPoly& f, const NormParams& np);

/// lp_norm on an explicit grid size; throws InvalidArgument when n < 4.
double lp_norm_on_grid(const TrigPoly& f, double p, int n, bool refine = false);

/// Direct summation at arbitrary points.
std::vector<cplx> evaluate(const TrigPoly& f, std::span<const double> points);
cplx evaluate(const TrigPoly& f, double x);

/// Interpolating polynomial of degree floor((N-1)/2) through samples at 2 pi j / N.
/// For even N the Nyquist component is discarded, so the round trip is exact only for
/// band-limited samples.
TrigPoly from_samples(std::span<const cplx> values);

enum class CorpusKind { exponential, random_smooth, sawtooth_truncated, abs_sin_truncated };

/// Deterministic corpus member. For `exponential` the degree argument is the frequency n.
TrigPoly corpus(CorpusKind kind, int degree, std::uint64_t seed = 0);

/// Parses "exponential", "random_smooth", "sawtooth_truncated", "abs_sin_truncated".
CorpusKind parse_corpus_kind(const std::string& name);

struct CorpusMember {
  std::string id;
  TrigPoly f;
};

/// e_1..e_5, three random smooth polynomials and the sawtooth and |sin| truncations.
std::vector<CorpusMember> default_corpus();

}  // namespace fracmod
