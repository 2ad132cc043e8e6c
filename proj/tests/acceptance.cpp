// SPDX-License-Identifier: Apache-2.0
// Acceptance harness: one PASS/FAIL line per criterion.
//
//   acceptance                  exit 0 iff every criterion passes
//   acceptance --known-red N..  exit 0 iff the failing set is exactly {N..}
//
// The second form is what ctest runs, so a red criterion that turns green (or a new red)
// breaks the build while the FAIL line stays visible in the log.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fracmod/approx.hpp"
#include "fracmod/errors.hpp"
#include "fracmod/fracdiff.hpp"
#include "fracmod/kernel.hpp"
#include "fracmod/moduli.hpp"
#include "fracmod/multiplier.hpp"
#include "fracmod/signal.hpp"
#include "fracmod/zeros.hpp"

using namespace fracmod;

namespace {

// Pinned tolerances.
constexpr double kCheckpointTol = 2e-3;
constexpr double kBeta0Target = 4.85, kBeta0Tol = 0.05;
constexpr double kResidualTol = 1e-8;
constexpr double kTildeVanish = 1e-7;
constexpr double kRescueBound = 32.0;
constexpr double kOracleTol = 1e-8;
constexpr double kIdentityTol = 1e-9;
constexpr double kDerivativeTol = 1e-6;
constexpr double kSemigroupTol = 1e-12;
constexpr double kFloorRegressRel = 1e-9;
constexpr double kChainSlack = 1e-6;
constexpr double kRatioBound = 50.0;
constexpr double kRegress = 0.01;
constexpr double kHalvingChange = 0.10;
constexpr double kDivergenceBound = -10.0;
constexpr double kTruncationStability = 1e-3;

// Regression baselines, recorded from a reference run.
constexpr double kFloorBaseline[][2] = {
    {0.5, 0.0074533536225523068},    {1.0, 0.0012499131968556839},   {2.5, 7.9841436528950503e-06},
    {3.9, 8.601803821797022e-08},    {4.85, 4.1841230121582927e-09}, {6.0, 1.1153765064563084e-10},
    {8.0, 2.1683048663339959e-13},
};
constexpr double kMaxTildeRatioBaseline = 5.844520589;
constexpr double kDivergenceBaseline = -4118670861.0726075;
constexpr double kJacksonBaseline = 0.276460688;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rel_change(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

ModulusRequest request(double beta, double h, double p) {
  ModulusRequest r;
  r.beta = beta;
  r.h = h;
  r.norm = NormParams::with_p(p);
  return r;
}

void c1(Outcome& o) {
  struct Point {
    double t;
    cplx expected;
  };
  const Point pts[] = {{13 * kPi / 5, {3.622, 2.327}}, {14 * kPi / 5, {-2.803, -5.632}}, {27 * kPi / 10, {-0.413, 0.504}}};
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, std::abs(z_eval(5.0, p.t) - p.expected));
  o.detail << "max |z_5 - ref| = " << g(worst);
  o.require(worst <= kCheckpointTol, "checkpoint distance");
}

void c2(Outcome& o) {
  const ZeroRecord r = find_beta0();
  const double f4 = curve_F(4.0), f5 = curve_F(5.0);
  o.detail << "beta0 = " << g(r.beta_k) << ", t0 = " << g(r.t_k) << ", residual = " << g(r.residual)
           << ", F(4) = " << g(f4) << ", F(5) = " << g(f5);
  o.require(r.beta_k > 4.0 && r.beta_k < 5.0, "beta0 in (4, 5)");
  o.require(std::abs(r.beta_k - kBeta0Target) <= kBeta0Tol, "|beta0 - 4.85| <= 0.05");
  o.require(r.t_k > kTwoPi, "t0 > 2 pi");
  o.require(r.t_k > kPi * (3.0 - 2.0 / r.beta_k) && r.t_k < 3.0 * kPi, "t0 window");
  o.require(r.residual <= kResidualTol, "residual");
  o.require(f4 > 0.0 && f5 < 0.0, "bracket signs");
}

void c3_c4(Outcome& o3, Outcome& o4) {
  const ZeroRecord r = find_beta0();
  const TrigPoly e1 = TrigPoly::exponential(1);
  const ModulusRequest req = request(r.beta_k, r.t_k, 2.0);
  const double tilde = linearized_modulus(e1, req), omega = classical_modulus(e1, req);
  EquivGrid grid;
  grid.betas = {r.beta_k};
  grid.hs = {r.t_k};
  grid.ps = {2.0};
  const EquivReport rep = equivalence_scan({{"exp:1", e1}}, grid);
  o3.detail << "omega_tilde = " << g(tilde) << ", omega = " << g(omega);
  o3.require(tilde <= kTildeVanish, "omega_tilde vanishes");
  o3.require(omega >= 1.0, "omega >= 1");
  o3.require(rep.size() == 1 && rep[0].infinite_tilde(), "row flagged infinite");

  // [1/t0] = 0, so the rescue term is the distance to constants.
  const int n = static_cast<int>(std::floor(1.0 / r.t_k));
  const double e0 = near_best_error(e1, n, 2.0);
  const double c = omega / (tilde + e0);
  o4.detail << "E_0 = " << g(e0) << ", C = " << g(c) << ", row C = " << g(rep.empty() ? NAN : rep[0].r_rescue);
  o4.require(n == 0, "[1/t0] = 0");
  o4.require(std::abs(e0 - 1.0) <= 1e-12, "E_0 = 1");
  o4.require(c <= kRescueBound, "C <= 32");
  o4.require(!rep.empty() && std::abs(rep[0].r_rescue - c) <= 1e-9 * c, "row rescue ratio");
}

void c5(Outcome& o) {
  double worst = 0.0;
  for (double beta : {0.5, 1.5, 2.5, 4.85, 6.0})
    for (double t : {0.3, kPi, kTwoPi - 0.1, 7.0, 13.0})
      worst = std::max(worst, std::abs(z_eval(beta, t) - z_series(beta, t)));
  // Series route: beta >= 2 keeps the term count for 1e-10 well under the cap.
  std::mt19937_64 gen(20240501);
  std::uniform_real_distribution<double> ub(2.0, 6.0), ud(-3.0, 3.0), ux(-5.0, 5.0);
  const auto corpus_members = default_corpus();
  double worst_diff = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly& f = corpus_members[gen() % corpus_members.size()].f;
    const double beta = ub(gen), delta = ud(gen), x = ux(gen);
    worst_diff = std::max(worst_diff, std::abs(apply_diff_series(f, beta, delta, x, 1e-10) -
                                               evaluate(apply_diff(f, beta, delta), x)));
  }
  o.detail << "max |z_eval - z_series| = " << g(worst) << ", max |series - multiplier| = " << g(worst_diff);
  o.require(worst <= kOracleTol, "kernel routes");
  o.require(worst_diff <= kOracleTol, "difference routes");
}

void c6(Outcome& o) {
  double ident = 0.0, deriv = 0.0;
  for (double beta : {0.5, 1.5, 2.5, 4.85, 6.0}) {
    for (double t : {0.3, 1.7, kPi, kTwoPi - 0.1, 7.0, 13.0}) {
      const cplx z = z_eval(beta, t);
      ident = std::max(ident, std::abs(z_eval(beta, -t) + std::conj(z)));
      ident = std::max(ident, std::abs(z_eval(beta, t + kTwoPi) - (z + kTwoPi)));
      ident = std::max(ident, std::abs(z.real() - (kTwoPi - z_eval(beta, kTwoPi - t).real())));
      const double step = 1e-5;
      const cplx fd = (z_eval(beta, t + step) - z_eval(beta, t - step)) / (2.0 * step);
      const auto [xp, yp] = xy_prime(beta, t);
      deriv = std::max(deriv, std::abs(fd - cplx{xp, yp}));
    }
    for (int k = 1; k <= 6; ++k) {
      ident = std::max(ident, std::abs(z_eval(beta, kPi * k).real() - kPi * k));
      if (k % 2 == 0) ident = std::max(ident, std::abs(z_eval(beta, kPi * k).imag()));
    }
  }
  double semi = 0.0;
  const TrigPoly f = corpus(CorpusKind::random_smooth, 8, 5);
  for (double a : {0.5, 1.5, 2.5})
    for (double b : {0.5, 1.0, 2.5})
      for (double h : {0.1, 1.0, 3.0}) {
        const TrigPoly lhs = apply_diff(apply_diff(f, a, h), b, h), rhs = apply_diff(f, a + b, h);
        for (int k = -f.degree(); k <= f.degree(); ++k) semi = std::max(semi, std::abs(lhs.coeff(k) - rhs.coeff(k)));
      }
  o.detail << "identities " << g(ident) << ", derivatives " << g(deriv) << ", semigroup " << g(semi);
  o.require(ident <= kIdentityTol, "identities");
  o.require(deriv <= kDerivativeTol, "derivatives");
  o.require(semi <= kSemigroupTol, "semigroup");
}

void c7(Outcome& o) {
  std::vector<std::string> bad;
  for (const auto& [beta, baseline] : kFloorBaseline) {
    const bool wide = beta < 4.0;
    const double hi = wide ? 8 * kPi : kPi - 0.05;
    const int grid = wide ? 8192 : 3043;
    const double a = verify_nonvanishing(beta, 0.05, hi, grid), b = verify_nonvanishing(beta, 0.05, hi, grid);
    o.detail << (beta == kFloorBaseline[0][0] ? "floors" : ",") << " " << g(beta) << ":" << g(a);
    if (!(a > 0.0 && a == b && rel_change(a, baseline) <= kFloorRegressRel)) bad.push_back(g(beta));
  }
  for (const auto& b : bad) o.require(false, "floor at beta " + b);
}

void c8(Outcome& o) {
  EquivGrid grid;
  grid.betas = {0.5, 1.0, 1.5, 2.5, 3.0};
  grid.hs = {0.05, 0.2, 1.0};
  grid.ps = {1.0, 2.0, kInf};
  const auto corpus_members = default_corpus();
  const EquivReport rep = equivalence_scan(corpus_members, grid);
  const EquivSummary s = summarize(rep);
  bool chain = true, tilde_finite = true;
  for (const EquivRow& r : rep) {
    chain = chain && r.error.empty() && r.omega_tilde <= r.w * (1.0 + kChainSlack) &&
            r.w <= r.omega * (1.0 + kChainSlack);
    tilde_finite = tilde_finite && std::isfinite(r.r_tilde);
  }
  double star_worst = 0.0;
  for (const auto [beta, alpha] : {std::pair{2.5, 2.5}, std::pair{3.5, 2.5}, std::pair{5.0, 4.0}})
    for (const auto& m : corpus_members)
      for (double h : grid.hs)
        for (double p : grid.ps) {
          ModulusRequest req = request(beta, h, p);
          const double omega = classical_modulus(m.f, req);
          req.alpha = alpha;
          const double star = star_modulus(m.f, req);
          star_worst = std::max({star_worst, safe_ratio(star, omega), safe_ratio(omega, star)});
        }
  o.detail << rep.size() << " rows, max omega/w = " << g(s.max_r_w) << ", max omega/omega_tilde = "
           << std::setprecision(10) << s.max_r_tilde << std::setprecision(6)
           << ", worst star ratio = " << g(star_worst);
  o.require(s.failed == 0, "no failed rows");
  o.require(chain, "omega_tilde <= w <= omega");
  o.require(s.max_r_w <= kRatioBound, "omega/w <= 50");
  o.require(tilde_finite, "omega/omega_tilde finite");
  o.require(rel_change(s.max_r_tilde, kMaxTildeRatioBaseline) <= kRegress, "omega/omega_tilde baseline");
  o.require(star_worst <= kRatioBound, "star ratios <= 50");
}

void c9(Outcome& o) {
  // h = 1/(4n) and its half, both inside (0, 1/n).
  double worst_change = 0.0;
  bool finite = true;
  for (double beta : {0.5, 2.5, 4.85, 6.0}) {
    double coarse = 0.0, fine = 0.0;
    for (int n : {4, 8, 16})
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const TrigPoly f = corpus(CorpusKind::random_smooth, n, 100 * n + seed);
        const double h = 1.0 / (4.0 * n);
        const auto ratio = [&](double hh) {
          const ModulusRequest req = request(beta, hh, 2.0);
          return safe_ratio(classical_modulus(f, req), linearized_modulus(f, req));
        };
        coarse = std::max(coarse, ratio(h));
        fine = std::max(fine, ratio(0.5 * h));
      }
    finite = finite && std::isfinite(coarse) && std::isfinite(fine);
    worst_change = std::max(worst_change, rel_change(fine, coarse));
    o.detail << "beta " << beta << ": " << g(coarse) << " -> " << g(fine) << "; ";
  }
  o.require(finite, "finite ratios");
  o.require(worst_change < kHalvingChange, "stable under halving h");
}

void c10(Outcome& o) {
  double prev = kInf, last = 0.0, oracle_gap = 0.0;
  bool decreasing = true;
  for (int n = 5; n <= 20; ++n) {
    const double v = xn_divergence_probe(n);
    // Independent route: adaptive quadrature of the kernel.
    oracle_gap = std::max(oracle_gap, std::abs(v - z_eval(2.0 * n, kPi * (1.0 - 1.0 / n)).real()) / std::abs(v));
    decreasing = decreasing && v < prev;
    prev = last = v;
  }
  o.detail << "x_40(19 pi/20) = " << std::setprecision(17) << last << std::setprecision(6)
           << ", rel gap to quadrature = " << g(oracle_gap);
  o.require(decreasing, "strictly decreasing");
  o.require(last < kDivergenceBound, "n = 20 below -10");
  o.require(oracle_gap <= 1e-8, "quadrature oracle");
  o.require(rel_change(last, kDivergenceBaseline) <= 1e-12, "baseline");
}

void c11(Outcome& o) {
  double worst = 0.0;
  for (const auto& m : default_corpus())
    for (int n : {4, 8, 16}) worst = std::max(worst, jackson_ratio(m.f, 2, n, 2.0));
  o.detail << "max ratio = " << std::setprecision(10) << worst << std::setprecision(6);
  o.require(std::isfinite(worst), "finite");
  o.require(rel_change(worst, kJacksonBaseline) <= kRegress, "baseline");
}

void c12(Outcome& o) {
  double sup_bound = 0.0;
  for (double beta : {0.5, 2.5, 3.9})
    for (int i = 1; i <= 9; ++i) sup_bound = std::max(sup_bound, beurling_bound(make_g_tau(beta, 0.1 * i), 3.0));
  o.detail << "sup g_tau bound = " << g(sup_bound);
  o.require(std::isfinite(sup_bound), "g_tau bounds finite");

  const auto [g1, g2] = make_g1_g2(3.5, 2.5, 0.5);
  const double t = 50.0;
  try {
    const double b1 = beurling_bound(g2, t), b2 = beurling_bound(g2, 2.0 * t);
    o.detail << "; g2 bound " << g(b1) << " -> " << g(b2);
    o.require(rel_change(b2, b1) <= kTruncationStability, "g2 truncation stability");
  } catch (const DomainTooSmall& e) {
    const double b1 = beurling_bound(g2, t, false), b2 = beurling_bound(g2, 2.0 * t, false);
    o.detail << "; g2 does not decay (" << e.what() << "), unchecked bound " << g(b1) << " -> " << g(b2)
             << " (change " << g(rel_change(b2, b1)) << ")";
    o.require(false, "g2 truncation stability");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  bool gate = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--known-red") {
      gate = true;
    } else if (gate) {
      known_red.insert(std::atoi(a.c_str()));
    } else {
      std::fprintf(stderr, "usage: acceptance [--known-red N...]\n");
      return 2;
    }
  }

  std::vector<Outcome> out(13);
  const std::vector<std::pair<int, std::function<void()>>> runs = {
      {1, [&] { c1(out[1]); }},   {2, [&] { c2(out[2]); }},   {3, [&] { c3_c4(out[3], out[4]); }},
      {5, [&] { c5(out[5]); }},   {6, [&] { c6(out[6]); }},   {7, [&] { c7(out[7]); }},
      {8, [&] { c8(out[8]); }},   {9, [&] { c9(out[9]); }},   {10, [&] { c10(out[10]); }},
      {11, [&] { c11(out[11]); }}, {12, [&] { c12(out[12]); }},
  };
  for (const auto& [id, fn] : runs) {
    try {
      fn();
    } catch (const std::exception& e) {
      out[id].pass = false;
      out[id].detail << " [exception: " << e.what() << "]";
      if (id == 3) out[4].pass = false, out[4].detail << " [exception: " << e.what() << "]";
    }
  }

  std::set<int> red;
  for (int id = 1; id <= 12; ++id) {
    std::printf("criterion %2d: %s  %s\n", id, out[id].pass ? "PASS" : "FAIL", out[id].detail.str().c_str());
    if (!out[id].pass) red.insert(id);
  }
  std::printf("%zu/12 criteria pass\n", 12 - red.size());
  if (gate) {
    if (red != known_red) {
      std::printf("failing set differs from the documented red criteria\n");
      return 1;
    }
    return 0;
  }
  return red.empty() ? 0 : 1;
}
