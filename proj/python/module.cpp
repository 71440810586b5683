#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "siegelscan/analytic.hpp"
#include "siegelscan/io.hpp"

namespace py = pybind11;
using namespace siegelscan;

namespace {

std::string qexp_coeff(const QExpansion& f, long n) { return rational_to_string(f.coeff(n)); }

std::string jacobi_coeff(const JacobiExpansion& phi, long n, long r) {
  return rational_to_string(phi.coeff(n, r));
}

std::string siegel_coeff(const SiegelExpansion& f, long n, long r, long m) {
  return rational_to_string(f.coeff({n, r, m}));
}

}  // namespace

PYBIND11_MODULE(_siegelscan, mod) {
  mod.doc() = "sign-change experiments for Siegel, Jacobi and elliptic cusp forms";

  py::class_<QExpansion>(mod, "QExpansion")
      .def_property_readonly("precision", &QExpansion::precision)
      .def("coeff", &qexp_coeff)
      .def("is_zero", &QExpansion::is_zero)
      .def("dump", [](const QExpansion& f) {
        std::ostringstream out;
        write_qexp(out, f);
        return out.str();
      });

  py::class_<JacobiExpansion>(mod, "JacobiExpansion")
      .def_property_readonly("weight", &JacobiExpansion::weight)
      .def_property_readonly("index", &JacobiExpansion::index)
      .def_property_readonly("precision", &JacobiExpansion::precision)
      .def_property_readonly("is_cusp", &JacobiExpansion::is_cusp)
      .def("coeff", &jacobi_coeff)
      .def("specialize_z0", &JacobiExpansion::specialize_z0);

  py::class_<HalfIntMatrix>(mod, "HalfIntMatrix")
      .def(py::init<long, long, long>(), py::arg("n"), py::arg("r"), py::arg("m"))
      .def_readonly("n", &HalfIntMatrix::n)
      .def_readonly("r", &HalfIntMatrix::r)
      .def_readonly("m", &HalfIntMatrix::m)
      .def("trace", &HalfIntMatrix::trace)
      .def("discriminant", &HalfIntMatrix::discriminant)
      .def("__repr__", [](const HalfIntMatrix& t) {
        return "HalfIntMatrix(" + std::to_string(t.n) + ", " + std::to_string(t.r) + ", " +
               std::to_string(t.m) + ")";
      });

  py::class_<SiegelExpansion>(mod, "SiegelExpansion")
      .def_property_readonly("weight", &SiegelExpansion::weight)
      .def_property_readonly("level", &SiegelExpansion::level)
      .def_property_readonly("trace_bound", &SiegelExpansion::trace_bound)
      .def("coeff", &siegel_coeff);

  py::class_<TaylorReport>(mod, "TaylorReport")
      .def_readonly("alpha", &TaylorReport::alpha)
      .def_readonly("alpha_bound", &TaylorReport::alpha_bound)
      .def_readonly("i_alpha_sign", &TaylorReport::i_alpha_sign)
      .def_readonly("chi_alpha_normalized", &TaylorReport::chi_alpha_normalized);

  py::class_<SignChangeReport>(mod, "SignChangeReport")
      .def_readonly("t_plus", &SignChangeReport::t_plus)
      .def_readonly("t_minus", &SignChangeReport::t_minus)
      .def_readonly("interval_lo", &SignChangeReport::interval_lo)
      .def_readonly("interval_hi", &SignChangeReport::interval_hi)
      .def_readonly("positives", &SignChangeReport::positives)
      .def_readonly("negatives", &SignChangeReport::negatives);

  py::class_<FirstSignChange>(mod, "FirstSignChange")
      .def_readonly("t1", &FirstSignChange::t1)
      .def_readonly("t2", &FirstSignChange::t2)
      .def_readonly("max_trace", &FirstSignChange::max_trace);

  mod.def("eisenstein_qexp", &eisenstein_qexp, py::arg("k"), py::arg("precision"));
  mod.def("eta_quotient",
          [](const std::string& spec, long precision) {
            return eta_quotient(EtaQuotientSpec::parse(spec), precision);
          },
          py::arg("spec"), py::arg("precision"));
  mod.def("newform_expansion",
          [](const std::string& label, long precision) {
            return newform_catalog(label).expansion(precision);
          },
          py::arg("label"), py::arg("precision"));
  mod.def("newform_catalog_labels", &newform_catalog_labels);

  mod.def("cohen_h",
          [](long r, long d) { return rational_to_string(cohen_h(r, d)); },
          py::arg("r"), py::arg("d"));
  mod.def("jacobi_eisenstein", &jacobi_eisenstein, py::arg("k"), py::arg("precision"));
  mod.def("jacobi_cusp_phi", &jacobi_cusp_phi, py::arg("k"), py::arg("precision"));
  mod.def("taylor_coefficient", &taylor_coefficient, py::arg("phi"), py::arg("nu"));
  mod.def("first_nonzero_taylor_index", &first_nonzero_taylor_index, py::arg("phi"));

  mod.def("maass_lift", &maass_lift, py::arg("phi"), py::arg("trace_bound"));
  mod.def("fourier_jacobi_slice", &fourier_jacobi_slice, py::arg("f"), py::arg("m"));
  mod.def("scan_signs", &scan_signs, py::arg("f"), py::arg("x"), py::arg("h"));
  mod.def("first_sign_change", &first_sign_change, py::arg("f"));
  mod.def("count_signs_interval", &count_signs_interval, py::arg("f"), py::arg("x"));

  mod.def("normalized_coeffs",
          [](const std::string& label, long up_to) {
            return normalized_coeffs(newform_catalog(label), up_to);
          },
          py::arg("label"), py::arg("up_to"));
  mod.def("deligne_check",
          [](const std::string& label, long up_to) {
            return deligne_check(newform_catalog(label), up_to);
          },
          py::arg("label"), py::arg("up_to"));
  mod.def("rs_partial_sum",
          [](const std::string& label, long x, const std::string& mode) {
            PartialSumReport r =
                rs_partial_sum(newform_catalog(label), x, sum_mode_from_string(mode));
            py::dict out;
            out["x"] = r.x;
            out["raw"] = r.raw_sum;
            out["log"] = r.smoothed_log;
            out["log2"] = r.smoothed_log2;
            out["main_term"] = r.main_term;
            out["slope"] = r.normalized_slope;
            return out;
          },
          py::arg("label"), py::arg("x"), py::arg("mode"));
  mod.def("rs_main_term_constant", &rs_main_term_constant, py::arg("n_level"));
  mod.def("rademacher_bound",
          [](double a, double b, double p, double e_const, double f_const, double alpha,
             double beta, double sigma, double t) {
            return rademacher_bound({a, b, p, e_const, f_const, alpha, beta}, sigma, t);
          },
          py::arg("a"), py::arg("b"), py::arg("p"), py::arg("e_const"), py::arg("f_const"),
          py::arg("alpha"), py::arg("beta"), py::arg("sigma"), py::arg("t"));
  mod.def("evaluate_bound",
          [](const std::string& name, const std::map<std::string, double>& params,
             const std::map<std::string, double>& consts) {
            BoundParams bp;
            for (const auto& [key, value] : consts) bp.set(key, value);
            BoundResult r = evaluate_bound(name, params, bp);
            return py::make_tuple(r.value, r.branch);
          },
          py::arg("name"), py::arg("params"),
          py::arg("consts") = std::map<std::string, double>{});
}
