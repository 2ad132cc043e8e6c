// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracmod/approx.hpp"
#include "fracmod/errors.hpp"
#include "fracmod/fracdiff.hpp"
#include "fracmod/kernel.hpp"
#include "fracmod/moduli.hpp"
#include "fracmod/signal.hpp"
#include "fracmod/zeros.hpp"

namespace py = pybind11;
using namespace fracmod;

namespace {

ModulusRequest make_request(double beta, double h, double p, std::optional<double> alpha, int delta_grid,
                            int quad_order) {
  ModulusRequest req;
  req.beta = beta;
  req.h = h;
  req.alpha = alpha;
  req.norm = NormParams::with_p(p);
  req.delta_grid = delta_grid;
  req.quad_order = quad_order;
  return req;
}

}  // namespace

PYBIND11_MODULE(_fracmod, m) {
  m.doc() = "Fractional moduli of smoothness on the circle";

  static py::exception<Error> base(m, "FracmodError");
  static py::exception<ConvergenceFailure> conv(m, "ConvergenceFailure", base.ptr());
  static py::exception<BracketFailure> bracket(m, "BracketFailure", base.ptr());
  static py::exception<BranchNotFound> branch(m, "BranchNotFound", base.ptr());
  static py::exception<DivisionFailure> division(m, "DivisionFailure", base.ptr());
  static py::exception<DomainTooSmall> domain(m, "DomainTooSmall", base.ptr());
  static py::exception<UnsupportedParameter> unsupported(m, "UnsupportedParameter", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const IoFailure& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    } catch (const ConvergenceFailure& e) {
      py::set_error(conv, e.what());
    } catch (const BracketFailure& e) {
      py::set_error(bracket, e.what());
    } catch (const BranchNotFound& e) {
      py::set_error(branch, e.what());
    } catch (const DivisionFailure& e) {
      py::set_error(division, e.what());
    } catch (const DomainTooSmall& e) {
      py::set_error(domain, e.what());
    } catch (const UnsupportedParameter& e) {
      py::set_error(unsupported, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<TrigPoly>(m, "TrigPoly")
      .def(py::init<std::vector<cplx>>(), py::arg("coeffs"), "coefficients ordered k = -M..M")
      .def_static("exponential", &TrigPoly::exponential)
      .def_static("constant", &TrigPoly::constant)
      .def_property_readonly("degree", &TrigPoly::degree)
      .def("coeff", &TrigPoly::coeff)
      .def_property_readonly("coeffs",
                             [](const TrigPoly& f) { return std::vector<cplx>(f.coeffs().begin(), f.coeffs().end()); })
      .def("__call__", py::overload_cast<const TrigPoly&, double>(&evaluate))
      .def("__repr__", [](const TrigPoly& f) { return "<TrigPoly degree " + std::to_string(f.degree()) + ">"; });

  m.def("corpus", [](const std::string& kind, int degree, std::uint64_t seed) {
    return corpus(parse_corpus_kind(kind), degree, seed);
  }, py::arg("kind"), py::arg("degree"), py::arg("seed") = 0);
  m.def("default_corpus", [] {
    std::vector<std::pair<std::string, TrigPoly>> out;
    for (auto& c : default_corpus()) out.emplace_back(c.id, c.f);
    return out;
  });
  m.def("lp_norm", [](const TrigPoly& f, double p) { return lp_norm(f, NormParams::with_p(p)); }, py::arg("f"),
        py::arg("p") = 2.0);
  m.def("apply_diff", &apply_diff, py::arg("f"), py::arg("beta"), py::arg("delta"));

  m.def("z", [](double beta, double t) { return z_eval(beta, t); }, py::arg("beta"), py::arg("t"));
  m.def("psi", [](double beta, double t) { return psi_eval(beta, t); }, py::arg("beta"), py::arg("t"));
  m.def("z_series", &z_series, py::arg("beta"), py::arg("t"), py::arg("tol") = 1e-10);

  py::class_<ZeroRecord>(m, "ZeroRecord")
      .def_readonly("beta", &ZeroRecord::beta_k)
      .def_readonly("t", &ZeroRecord::t_k)
      .def_readonly("residual", &ZeroRecord::residual)
      .def_readonly("bracket", &ZeroRecord::bracket)
      .def_readonly("branch", &ZeroRecord::branch_index);
  m.def("find_beta0", [](double tol) { return find_beta0(tol); }, py::arg("tol_beta") = 1e-10);
  m.def("scan_zero_set", [](double beta_min, double beta_max, double t_max, unsigned threads) {
    ScanWindow w;
    w.beta_min = beta_min;
    w.beta_max = beta_max;
    w.t_max = t_max;
    w.threads = threads;
    py::gil_scoped_release release;
    return scan_zero_set(w);
  }, py::arg("beta_min") = 0.5, py::arg("beta_max") = 40.0, py::arg("t_max") = 40.0 * kPi, py::arg("threads") = 0);

  m.def("verify_nonvanishing", [](double beta, double t_lo, double t_hi, int grid) {
    return verify_nonvanishing(beta, t_lo, t_hi, grid);
  }, py::arg("beta"), py::arg("t_lo"), py::arg("t_hi"), py::arg("grid"));

  const auto modulus = [&m](const char* name, double (*fn)(const TrigPoly&, const ModulusRequest&)) {
    m.def(name, [fn](const TrigPoly& f, double beta, double h, double p, std::optional<double> alpha,
                     int delta_grid, int quad_order) {
      return fn(f, make_request(beta, h, p, alpha, delta_grid, quad_order));
    }, py::arg("f"), py::arg("beta"), py::arg("h"), py::arg("p") = 2.0, py::arg("alpha") = py::none(),
          py::arg("delta_grid") = 256, py::arg("quad_order") = 64);
  };
  modulus("omega", &classical_modulus);
  modulus("w", &integral_modulus);
  modulus("omega_tilde", &linearized_modulus);
  modulus("omega_star", &star_modulus);

  m.def("best_approx_l2", &best_approx_l2, py::arg("f"), py::arg("n"));
  m.def("near_best_error", &near_best_error, py::arg("f"), py::arg("n"), py::arg("p") = 2.0);
}
