// SPDX-License-Identifier: Apache-2.0
#include "fracmod/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracmod/approx.hpp"
#include "fracmod/errors.hpp"
#include "fracmod/fracdiff.hpp"
#include "fracmod/kernel.hpp"
#include "fracmod/parallel.hpp"
#include "fracmod/quadrature.hpp"

namespace fracmod {

namespace {

constexpr double kIntegerTol = 1e-9;
constexpr int kGoldenIterations = 20;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double diff_norm(const TrigPoly& f, double beta, double delta, const NormParams& np) {
  return lp_norm(apply_diff(f, beta, delta), np);
}

// Integer order m = beta - alpha of the first factor of the star symbol.
int star_split(double beta, double alpha) {
  const double m = beta - alpha;
  const double r = std::round(m);
  if (!(alpha > 0.0 && alpha <= 4.0)) throw InvalidArgument("alpha must lie in (0, 4]");
  if (std::abs(m - r) > kIntegerTol || r < 0.0)
    throw InvalidArgument("beta - alpha must be a nonnegative integer");
  return static_cast<int>(r);
}

TrigPoly symbol_apply(const TrigPoly& f, double h, const auto& symbol) {
  TrigPoly out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) {
    const cplx c = f.coeff(k);
    if (c != cplx{}) out[k] = symbol(k * h) * c;
  }
  return out;
}

}  // namespace

void ModulusRequest::validate() const {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  if (!(h > 0.0)) throw InvalidArgument("h must be positive");
  if (delta_grid < 8) throw InvalidArgument("delta_grid must be at least 8");
  if (quad_order < 4) throw InvalidArgument("quad_order must be at least 4");
  if (!(norm.p > 0.0)) throw InvalidArgument("p must be positive");
  if (alpha) star_split(beta, *alpha);
}

double classical_modulus(const TrigPoly& f, const ModulusRequest& req) {
  req.validate();
  if (req.alpha) throw InvalidArgument("classical modulus takes no alpha");
  const int g = req.delta_grid;
  const double step = req.h / g;
  double best = 0.0;
  int arg = 1;
  for (int j = 1; j <= g; ++j) {
    const double v = diff_norm(f, req.beta, j * step, req.norm);
    if (v > best) best = v, arg = j;
  }
  if (best == 0.0) return 0.0;

  // Local golden-section polish on the two cells around the discrete argmax.
  double a = (arg - 1) * step, b = std::min(req.h, (arg + 1) * step);
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = diff_norm(f, req.beta, c, req.norm), fd = diff_norm(f, req.beta, d, req.norm);
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (fc > fd) {
      b = d, d = c, fd = fc;
      c = b - r * (b - a), fc = diff_norm(f, req.beta, c, req.norm);
    } else {
      a = c, c = d, fc = fd;
      d = a + r * (b - a), fd = diff_norm(f, req.beta, d, req.norm);
    }
  }
  return std::max({best, fc, fd});
}

double integral_modulus(const TrigPoly& f, const ModulusRequest& req) {
  req.validate();
  const double p1 = req.norm.p1();
  // delta = h u^2 on u in (0, 1) smooths the delta^beta behaviour at the origin.
  const GaussRule& rule = gauss_legendre(req.quad_order);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double v = diff_norm(f, req.beta, req.h * u * u, req.norm);
    acc += 0.5 * rule.weights[i] * 2.0 * u * std::pow(v, p1);
  }
  return std::pow(acc, 1.0 / p1);
}

double linearized_modulus(const TrigPoly& f, const ModulusRequest& req) {
  req.validate();
  if (req.norm.p < 1.0) throw UnsupportedParameter("the linearized modulus needs p >= 1");
  const double beta = req.beta;
  return lp_norm(symbol_apply(f, req.h, [beta](double t) { return psi_eval(beta, t); }), req.norm);
}

double star_modulus(const TrigPoly& f, const ModulusRequest& req) {
  req.validate();
  if (!req.alpha) throw InvalidArgument("star modulus needs alpha");
  if (req.norm.p < 1.0) throw UnsupportedParameter("the star modulus needs p >= 1");
  const double alpha = *req.alpha;
  const int m = star_split(req.beta, alpha);
  return lp_norm(symbol_apply(f, req.h,
                              [alpha, m](double t) {
                                const cplx first = m == 0 ? cplx{1.0, 0.0} : psi_eval(double(m), t);
                                return first * psi_eval(alpha, t);
                              }),
                 req.norm);
}

double default_alpha(double beta) {
  const double frac = beta - std::floor(beta);
  return frac > kIntegerTol ? frac : 1.0;
}

double safe_ratio(double num, double den) {
  if (std::isnan(num) || std::isnan(den)) return kNaN;
  if (num == 0.0) return 0.0;
  if (den <= 1e-7 * std::abs(num)) return kInf;
  return num / den;
}

EquivReport equivalence_scan(const std::vector<CorpusMember>& corpus, const EquivGrid& grid) {
  struct Task {
    std::size_t member;
    double beta, h, p;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (double beta : grid.betas)
      for (double h : grid.hs)
        for (double p : grid.ps) tasks.push_back({i, beta, h, p});

  EquivReport rows(tasks.size());
  parallel_for(tasks.size(), grid.threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    const TrigPoly& f = corpus[task.member].f;
    EquivRow& row = rows[t];
    row.fid = corpus[task.member].id;
    row.beta = task.beta;
    row.alpha = default_alpha(task.beta);
    row.h = task.h;
    row.p = task.p;

    ModulusRequest req;
    req.beta = task.beta;
    req.h = task.h;
    req.norm = grid.norm;
    req.norm.p = task.p;
    req.delta_grid = grid.delta_grid;
    req.quad_order = grid.quad_order;

    std::ostringstream errors;
    auto guarded = [&](const char* name, auto&& fn) {
      try {
        return fn();
      } catch (const Error& e) {
        errors << (errors.tellp() > 0 ? "; " : "") << name << ": " << e.what();
        return kNaN;
      }
    };
    row.omega = guarded("omega", [&] { return classical_modulus(f, req); });
    row.w = guarded("w", [&] { return integral_modulus(f, req); });
    row.omega_tilde = guarded("omega_tilde", [&] { return linearized_modulus(f, req); });
    row.omega_star = guarded("omega_star", [&] {
      ModulusRequest star = req;
      star.alpha = row.alpha;
      return star_modulus(f, star);
    });
    row.best_error = guarded("best_error", [&] {
      const double inv = 1.0 / task.h;
      const int n = inv >= double(std::numeric_limits<int>::max()) ? std::numeric_limits<int>::max()
                                                                   : static_cast<int>(std::floor(inv));
      return task.p == 2.0 ? best_approx_l2(f, n).second : near_best_error(f, n, task.p);
    });
    row.r_w = safe_ratio(row.omega, row.w);
    row.r_tilde = safe_ratio(row.omega, row.omega_tilde);
    row.r_star = safe_ratio(row.omega, row.omega_star);
    row.r_rescue = safe_ratio(row.omega, row.omega_tilde + row.best_error);
    row.error = errors.str();
  });
  return rows;
}

EquivSummary summarize(const EquivReport& report) {
  EquivSummary s;
  s.rows = report.size();
  auto upd_max = [](double& acc, double v) {
    if (std::isfinite(v)) acc = std::max(acc, v);
  };
  for (const EquivRow& r : report) {
    if (!r.error.empty()) ++s.failed;
    if (r.infinite_tilde()) ++s.infinite_tilde;
    upd_max(s.max_r_w, r.r_w);
    upd_max(s.max_r_tilde, r.r_tilde);
    upd_max(s.max_r_star, r.r_star);
    if (std::isfinite(r.r_star) && r.r_star > 0.0) s.min_r_star = std::min(s.min_r_star, r.r_star);
    upd_max(s.max_r_rescue, r.r_rescue);
    if (r.w > 0.0 && std::isfinite(r.omega_tilde))
      s.worst_tilde_over_w = std::max(s.worst_tilde_over_w, r.omega_tilde / r.w - 1.0);
    if (r.omega > 0.0 && std::isfinite(r.w))
      s.worst_w_over_omega = std::max(s.worst_w_over_omega, r.w / r.omega - 1.0);
  }
  return s;
}

}  // namespace fracmod
