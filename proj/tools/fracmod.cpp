// SPDX-License-Identifier: Apache-2.0
//
// fracmod: kernels, zero scans and moduli of smoothness from the command line.
// Exit codes: 0 ok, 1 usage, 2 numerical failure, 3 I/O.
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracmod/errors.hpp"
#include "fracmod/io.hpp"
#include "fracmod/kernel.hpp"
#include "fracmod/moduli.hpp"
#include "fracmod/zeros.hpp"

using namespace fracmod;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumeric = 2, kIo = 3 };

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw InvalidArgument(std::string(name) + " must be positive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional moduli of smoothness and the averaging kernel psi_beta"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  // psi
  auto* psi = app.add_subcommand("psi", "evaluate psi_beta(t) and z_beta(t) = t psi_beta(t)");
  double psi_beta = 0.0, psi_t = 0.0;
  std::string psi_format = "csv";
  psi->add_option("--beta", psi_beta)->required();
  psi->add_option("--t", psi_t)->required();
  psi->add_option("--format", psi_format)->check(CLI::IsMember({"csv", "json"}));

  // curve
  auto* curve = app.add_subcommand("curve", "sample the curve z_beta on [t-lo, t-hi] as CSV");
  double c_beta = 0.0, c_lo = 0.0, c_hi = kTwoPi;
  int c_samples = 1000;
  std::string c_out;
  curve->add_option("--beta", c_beta)->required();
  curve->add_option("--t-lo", c_lo);
  curve->add_option("--t-hi", c_hi);
  curve->add_option("--samples", c_samples);
  curve->add_option("--out", c_out, "output path (default stdout)");

  // zeros
  auto* zeros = app.add_subcommand("zeros", "scan for zeros of z_beta and write a JSON registry");
  ScanWindow win;
  std::string z_out, z_verify;
  zeros->add_option("--beta-min", win.beta_min);
  zeros->add_option("--beta-max", win.beta_max);
  zeros->add_option("--t-max", win.t_max);
  zeros->add_option("--beta-grid", win.beta_grid, "number of beta columns (0 = step 0.05)");
  zeros->add_option("--t-grid", win.t_grid, "sign-detection cells per period");
  zeros->add_option("--tol-beta", win.tol_beta);
  zeros->add_option("--residual-tol", win.residual_tol);
  zeros->add_option("--out", z_out);
  zeros->add_option("--verify", z_verify, "re-check the residuals of an existing registry instead of scanning");

  // modulus
  auto* modulus = app.add_subcommand("modulus", "one modulus of smoothness of a corpus function");
  modulus->set_help_flag("--help", "print this help message and exit");
  std::string m_kind = "omega", m_fn, m_p = "2";
  double m_beta = 0.0, m_h = 0.0;
  std::optional<double> m_alpha;
  int m_delta_grid = 256, m_quad_order = 64;
  modulus->add_option("--kind", m_kind)->check(CLI::IsMember({"omega", "w", "tilde", "star"}));
  modulus->add_option("--fn", m_fn, "exp:<n> | random:<deg>:<seed> | sawtooth:<deg> | abssin:<deg> | const[:c]")
      ->required();
  modulus->add_option("--beta", m_beta)->required();
  modulus->add_option("--alpha", m_alpha);
  modulus->add_option("--h", m_h)->required();
  modulus->add_option("--p", m_p, "exponent in (0, inf]");
  modulus->add_option("--delta-grid", m_delta_grid);
  modulus->add_option("--quad-order", m_quad_order);

  // equiv
  auto* equiv = app.add_subcommand("equiv", "compare the four moduli over a corpus and parameter grid");
  std::vector<std::string> e_fns, e_ps{"1", "2", "inf"};
  std::string e_corpus = "default", e_out, e_format = "csv";
  std::vector<double> e_betas{0.5, 1.0, 2.5}, e_hs{0.05, 0.3, 1.0};
  equiv->add_option("--corpus", e_corpus, "default | none")->check(CLI::IsMember({"default", "none"}));
  equiv->add_option("--fn", e_fns, "extra function specs");
  equiv->add_option("--betas", e_betas)->delimiter(',');
  equiv->add_option("--hs", e_hs)->delimiter(',');
  equiv->add_option("--ps", e_ps)->delimiter(',');
  equiv->add_option("--out", e_out);
  equiv->add_option("--format", e_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*psi) {
      require_positive(psi_beta, "beta");
      const cplx z = z_eval(psi_beta, psi_t);
      const cplx ps = psi_eval(psi_beta, psi_t);
      if (psi_format == "json") {
        nlohmann::json j{{"beta", psi_beta}, {"t", psi_t},       {"z_re", z.real()},
                         {"z_im", z.imag()}, {"psi_re", ps.real()}, {"psi_im", ps.imag()}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "beta,t,z_re,z_im,psi_re,psi_im\n"
                  << format_double(psi_beta) << ',' << format_double(psi_t) << ',' << format_double(z.real())
                  << ',' << format_double(z.imag()) << ',' << format_double(ps.real()) << ','
                  << format_double(ps.imag()) << '\n';
      }
    } else if (*curve) {
      require_positive(c_beta, "beta");
      std::ostringstream os;
      write_curve_csv(os, kernel_curve(c_beta, c_lo, c_hi, c_samples));
      emit(c_out, os.str());
    } else if (*zeros) {
      if (!z_verify.empty()) {
        const auto recs = parse_zeros_json(read_file(z_verify));
        double worst = 0.0;
        for (const ZeroRecord& r : recs) {
          const double res = std::abs(z_eval(r.beta_k, r.t_k));
          worst = std::max(worst, res / (win.residual_tol * std::max(1.0, kernel_scale(r.beta_k))));
        }
        std::cout << "records," << recs.size() << "\nworst_scaled_residual," << format_double(worst) << '\n';
        return worst <= 1.0 ? kOk : kNumeric;
      }
      win.threads = threads;
      std::vector<std::string> notes;
      const auto recs = scan_zero_set(win, &notes);
      for (const std::string& n : notes) std::cerr << "note: " << n << '\n';
      emit(z_out, zeros_json(recs));
    } else if (*modulus) {
      const CorpusMember f = parse_function_spec(m_fn);
      ModulusRequest req;
      req.beta = m_beta;
      req.h = m_h;
      req.norm = NormParams::with_p(parse_p(m_p));
      req.delta_grid = m_delta_grid;
      req.quad_order = m_quad_order;
      if (m_kind == "star") req.alpha = m_alpha ? *m_alpha : default_alpha(m_beta);
      else if (m_alpha) throw InvalidArgument("--alpha only applies to --kind star");
      req.validate();
      double v = 0.0;
      if (m_kind == "omega") v = classical_modulus(f.f, req);
      else if (m_kind == "w") v = integral_modulus(f.f, req);
      else if (m_kind == "tilde") v = linearized_modulus(f.f, req);
      else v = star_modulus(f.f, req);
      std::cout << format_double(v) << '\n';
    } else if (*equiv) {
      std::vector<CorpusMember> members;
      if (e_corpus == "default") members = default_corpus();
      for (const std::string& s : e_fns) members.push_back(parse_function_spec(s));
      EquivGrid grid;
      grid.betas = e_betas;
      grid.hs = e_hs;
      for (const std::string& s : e_ps) grid.ps.push_back(parse_p(s));
      for (double b : grid.betas) require_positive(b, "beta");
      for (double h : grid.hs) require_positive(h, "h");
      grid.threads = threads;
      const EquivReport report = equivalence_scan(members, grid);
      if (e_format == "json") {
        emit(e_out, equiv_json(report));
      } else {
        std::ostringstream os;
        write_equiv_csv(os, report);
        emit(e_out, os.str());
      }
    }
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
