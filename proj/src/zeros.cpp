// SPDX-License-Identifier: Apache-2.0
#include "fracmod/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "fracmod/errors.hpp"
#include "fracmod/parallel.hpp"

namespace fracmod {

namespace {

constexpr double kYTol = 1e-12;
constexpr int kMaxBisect = 200;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Critical points c_m = pi + 2 m pi / beta with 0 < c_m < 2pi.
int m_min(double beta) { return static_cast<int>(std::floor(-0.5 * beta)) + 1; }
int m_max(double beta) { return static_cast<int>(std::ceil(0.5 * beta)) - 1; }
double critical_point(double beta, int m) { return kPi + kTwoPi * m / beta; }

// Label of the monotone interval (c_m, c_{m+1}) containing theta in (0, 2pi).
int interval_label(double beta, double theta) {
  return static_cast<int>(std::floor((theta - kPi) * beta / kTwoPi));
}

// y' has a fixed sign on a monotone cell; a sign change of y whose direction
// disagrees with y' is rounding noise.
bool direction_consistent(double beta, double a, double b, double ya, double yb) {
  const double slope = xy_prime(beta, 0.5 * (a + b)).second;
  return sgn(yb - ya) == sgn(slope) && slope != 0.0;
}

struct Column {
  double beta;
  std::map<int, BranchPoint> branches;
};

// Bisects y on [a, b] (within one period) starting from the known z(a).
BranchPoint bisect_y(double beta, double a, double b, cplx za, const QuadConfig& cfg) {
  double lo = a, hi = b;
  cplx zlo = za, zmid = za;
  double mid = a;
  for (int it = 0; it < kMaxBisect; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    zmid = zlo + z_between(beta, lo, mid, cfg);
    if (std::abs(zmid.imag()) < kYTol) break;
    if (sgn(zmid.imag()) == sgn(zlo.imag())) {
      lo = mid, zlo = zmid;
    } else {
      hi = mid;
    }
  }
  return {mid, zmid};
}

Column compute_column(double beta, int t_grid, const QuadConfig& cfg) {
  std::vector<double> pts;
  const int cells = std::max(t_grid, 8);
  for (int j = 0; j <= cells; ++j) pts.push_back(kTwoPi * j / cells);
  for (int m = m_min(beta); m <= m_max(beta); ++m) pts.push_back(critical_point(beta, m));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.front() = 0.0;
  pts.back() = std::min(pts.back(), kTwoPi);
  const std::vector<cplx> zs = z_on_grid(beta, pts, cfg);

  Column col{beta, {}};
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    const double ya = zs[j].imag(), yb = zs[j + 1].imag();
    if (sgn(ya) * sgn(yb) >= 0) continue;
    if (!direction_consistent(beta, pts[j], pts[j + 1], ya, yb)) continue;
    const BranchPoint bp = bisect_y(beta, pts[j], pts[j + 1], zs[j], cfg);
    col.branches[interval_label(beta, bp.theta)] = bp;
  }
  return col;
}

std::string describe(const char* what, double beta, int m, int k) {
  std::ostringstream os;
  os.precision(12);
  os << what << " (beta=" << beta << ", branch m=" << m << ", shift k=" << k << ")";
  return os.str();
}

}  // namespace

std::optional<BranchPoint> branch_zero(double beta, int m, const QuadConfig& cfg) {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  if (m < m_min(beta) || m + 1 > m_max(beta)) return std::nullopt;
  const double a = critical_point(beta, m), b = critical_point(beta, m + 1);
  const cplx za = z_eval(beta, a, cfg);
  const cplx zb = za + z_between(beta, a, b, cfg);
  if (sgn(za.imag()) * sgn(zb.imag()) >= 0) return std::nullopt;
  return bisect_y(beta, a, b, za, cfg);
}

std::vector<double> y_zeros(double beta, double t_lo, double t_hi, int grid, const QuadConfig& cfg) {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  if (!(t_lo > 0.0 && t_lo < t_hi)) throw InvalidArgument("y_zeros needs 0 < t_lo < t_hi");
  if (grid < 2) throw InvalidArgument("y_zeros needs grid >= 2");

  std::vector<double> pts;
  for (int j = 0; j < grid; ++j) pts.push_back(t_lo + (t_hi - t_lo) * j / (grid - 1));
  pts.back() = t_hi;
  // Add the critical points of y so every cell is monotone.
  const long k_lo = static_cast<long>(std::floor(t_lo / kTwoPi));
  const long k_hi = static_cast<long>(std::floor(t_hi / kTwoPi));
  std::vector<double> bases;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double base = kTwoPi * double(k);
    for (int m = m_min(beta); m <= m_max(beta); ++m) pts.push_back(base + critical_point(beta, m));
    pts.push_back(base);
    bases.push_back(base);
  }
  pts.erase(std::remove_if(pts.begin(), pts.end(), [&](double t) { return t < t_lo || t > t_hi; }),
            pts.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::vector<cplx> zs = z_on_grid(beta, pts, cfg);
  // y vanishes at every 2 pi k and is monotone on either side of it up to the nearest
  // critical point, so cells there hold no crossing; sign flips there are quadrature noise.
  const double c_first = critical_point(beta, m_min(beta)), c_last = critical_point(beta, m_max(beta));
  const auto near_lattice = [&](double t) {
    const double r = t - kTwoPi * std::floor(t / kTwoPi);
    return r < c_first || r > c_last;
  };
  std::vector<double> out;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double ya = zs[j].imag();
    const bool lattice = std::binary_search(bases.begin(), bases.end(), pts[j]);
    if ((ya == 0.0 || lattice) && pts[j] > t_lo && pts[j] < t_hi) out.push_back(pts[j]);
    if (j + 1 == pts.size()) break;
    const double yb = zs[j + 1].imag();
    if (near_lattice(0.5 * (pts[j] + pts[j + 1]))) continue;
    if (sgn(ya) * sgn(yb) >= 0) continue;
    if (!direction_consistent(beta, pts[j], pts[j + 1], ya, yb)) continue;
    double lo = pts[j], hi = pts[j + 1], ylo = ya, mid = lo;
    for (int it = 0; it < kMaxBisect; ++it) {
      mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double ym = z_eval(beta, mid, cfg).imag();
      if (std::abs(ym) < kYTol) break;
      if (sgn(ym) == sgn(ylo)) {
        lo = mid, ylo = ym;
      } else {
        hi = mid;
      }
    }
    out.push_back(mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchPoint curve_F_point(double beta, const QuadConfig& cfg) {
  if (!(beta >= 4.0 && beta <= 5.0)) throw InvalidArgument("curve_F is defined for beta in [4, 5]");
  const double lo = kPi * (3.0 - 2.0 / beta), hi = 3.0 * kPi;
  const std::vector<double> zs = y_zeros(beta, lo, hi, 64, cfg);
  if (zs.size() != 1) {
    std::ostringstream os;
    os << "expected one zero of y on (pi(3-2/beta), 3pi) at beta=" << beta << ", found " << zs.size();
    throw BranchNotFound(os.str());
  }
  return {zs.front(), z_eval(beta, zs.front(), cfg)};
}

double curve_F(double beta, const QuadConfig& cfg) { return curve_F_point(beta, cfg).z.real(); }

ZeroRecord find_beta0(double tol_beta, const QuadConfig& cfg) {
  if (!(tol_beta > 0.0)) throw InvalidArgument("tol_beta must be positive");
  double lo = 4.0, hi = 5.0;
  BranchPoint plo = curve_F_point(lo, cfg), phi = curve_F_point(hi, cfg);
  if (!(plo.z.real() > 0.0 && phi.z.real() < 0.0)) {
    std::ostringstream os;
    os << "F(4) = " << plo.z.real() << ", F(5) = " << phi.z.real() << " do not bracket a sign change";
    throw BracketFailure(os.str());
  }
  while (hi - lo > tol_beta) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const BranchPoint pm = curve_F_point(mid, cfg);
    if (pm.z.real() > 0.0) {
      lo = mid, plo = pm;
    } else {
      hi = mid, phi = pm;
    }
  }
  const double beta0 = 0.5 * (lo + hi);
  const BranchPoint p0 = curve_F_point(beta0, cfg);
  ZeroRecord rec;
  rec.beta_k = beta0;
  rec.t_k = p0.theta;
  rec.residual = std::abs(z_eval(beta0, p0.theta, cfg));
  rec.bracket = {lo, hi, std::min(plo.theta, phi.theta), std::max(plo.theta, phi.theta)};
  rec.branch_index = interval_label(beta0, p0.theta - kTwoPi);
  if (!(beta0 > 4.0 && beta0 < 5.0) || !(p0.theta > kPi * (3.0 - 2.0 / beta0) && p0.theta < 3.0 * kPi))
    throw BracketFailure("beta_0 or t_0 left the interval guaranteed by the construction");
  return rec;
}

std::vector<ZeroRecord> scan_zero_set(const ScanWindow& w, std::vector<std::string>* notes,
                                      const QuadConfig& cfg) {
  if (!(w.beta_min > 0.0 && w.beta_min < w.beta_max)) throw InvalidArgument("scan needs 0 < beta_min < beta_max");
  if (!(w.t_max > 0.0)) throw InvalidArgument("scan needs t_max > 0");
  const int n_cols = w.beta_grid > 0
                         ? std::max(2, w.beta_grid)
                         : std::max(2, static_cast<int>(std::ceil((w.beta_max - w.beta_min) / 0.05)) + 1);
  std::vector<double> betas(static_cast<std::size_t>(n_cols));
  for (int i = 0; i < n_cols; ++i)
    betas[static_cast<std::size_t>(i)] = w.beta_min + (w.beta_max - w.beta_min) * i / (n_cols - 1);
  betas.back() = w.beta_max;

  std::vector<Column> cols(betas.size());
  parallel_for(betas.size(), w.threads, [&](std::size_t i) { cols[i] = compute_column(betas[i], w.t_grid, cfg); });

  struct Candidate {
    std::size_t col;
    int m;
    long k;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
    for (const auto& [m, pa] : cols[i].branches) {
      auto it = cols[i + 1].branches.find(m);
      if (it == cols[i + 1].branches.end()) continue;
      const BranchPoint& pb = it->second;
      const double xa = pa.z.real(), xb = pb.z.real();
      // x + 2 pi k changes sign for the k between -max(x)/2pi and -min(x)/2pi.
      const long k_first = std::max(0L, static_cast<long>(std::ceil(-std::max(xa, xb) / kTwoPi)));
      const double k_window = std::floor((w.t_max - std::min(pa.theta, pb.theta)) / kTwoPi);
      const double k_last = std::min(std::floor(-std::min(xa, xb) / kTwoPi), k_window);
      for (long k = k_first; double(k) <= k_last; ++k) {
        if (sgn(xa + kTwoPi * k) * sgn(xb + kTwoPi * k) >= 0) continue;
        cands.push_back({i, m, k});
      }
    }
  }

  std::vector<std::optional<ZeroRecord>> found(cands.size());
  std::vector<std::string> cand_notes(cands.size());
  parallel_for(cands.size(), w.threads, [&](std::size_t c) {
    const auto [i, m, k] = cands[c];
    const double shift = kTwoPi * double(k);
    double lo = betas[i], hi = betas[i + 1];
    BranchPoint plo = cols[i].branches.at(m), phi = cols[i + 1].branches.at(m);
    const int s_lo = sgn(plo.z.real() + shift);
    // Past tol_beta, keep halving while |x + 2 pi k| is above the residual target and
    // the bracket is wider than a few ulps.
    double best_beta = 0.5 * (lo + hi), best_f = kInf;
    std::optional<BranchPoint> best;
    std::array<double, 4> best_bracket{lo, hi, std::min(plo.theta, phi.theta) + shift,
                                       std::max(plo.theta, phi.theta) + shift};
    while (hi - lo > w.tol_beta || best_f > w.residual_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const auto pm = branch_zero(mid, m, cfg);
      if (!pm) {
        cand_notes[c] = describe("dropped: y-zero branch vanished during refinement", mid, m, static_cast<int>(k));
        return;
      }
      const double fm = pm->z.real() + shift;
      if (sgn(fm) == s_lo) {
        lo = mid, plo = *pm;
      } else {
        hi = mid, phi = *pm;
      }
      // The recorded bracket is the one whose endpoint is the best point.
      if (std::abs(fm) <= best_f) {
        best_f = std::abs(fm), best_beta = mid, best = pm;
        best_bracket = {lo, hi, std::min(plo.theta, phi.theta) + shift, std::max(plo.theta, phi.theta) + shift};
      }
    }
    const double beta_k = best_beta;
    const auto p = best ? best : branch_zero(beta_k, m, cfg);
    if (!p) {
      cand_notes[c] = describe("dropped: y-zero branch vanished at the refined order", beta_k, m, static_cast<int>(k));
      return;
    }
    ZeroRecord rec;
    rec.beta_k = beta_k;
    rec.t_k = p->theta + shift;
    rec.residual = std::abs(z_eval(beta_k, rec.t_k, cfg));
    rec.bracket = best_bracket;
    rec.branch_index = m;
    if (rec.t_k > w.t_max) {
      cand_notes[c] = describe("dropped: zero outside the t window", beta_k, m, static_cast<int>(k));
      return;
    }
    if (rec.residual > w.residual_tol * std::max(1.0, kernel_scale(beta_k))) {
      cand_notes[c] = describe("dropped: residual above tolerance", beta_k, m, static_cast<int>(k));
      return;
    }
    found[c] = rec;
  });

  std::vector<ZeroRecord> out;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (found[c]) out.push_back(*found[c]);
    if (notes && !cand_notes[c].empty()) notes->push_back(cand_notes[c]);
  }
  std::sort(out.begin(), out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.beta_k != b.beta_k ? a.beta_k < b.beta_k : a.t_k < b.t_k;
  });
  return out;
}

std::vector<ZeroRecord> scan_zero_set(double beta_max, double t_max, int beta_grid, int t_grid) {
  ScanWindow w;
  w.beta_max = beta_max;
  w.t_max = t_max;
  w.beta_grid = beta_grid;
  w.t_grid = t_grid;
  return scan_zero_set(w);
}

double verify_nonvanishing(double beta, double t_lo, double t_hi, int grid, const QuadConfig& cfg) {
  if (grid < 1) throw InvalidArgument("verify_nonvanishing needs grid >= 1");
  if (!(t_hi >= t_lo)) throw InvalidArgument("verify_nonvanishing needs t_lo <= t_hi");
  std::vector<double> ts(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i)
    ts[static_cast<std::size_t>(i)] = grid == 1 ? t_lo : t_lo + (t_hi - t_lo) * i / (grid - 1);
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& z : z_on_grid(beta, ts, cfg)) best = std::min(best, std::abs(z));
  return best;
}

}  // namespace fracmod
