// Python bindings for the core numerical operations.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>

#include "monopole_lab/bps.hpp"
#include "monopole_lab/dirac_radial.hpp"
#include "monopole_lab/errors.hpp"
#include "monopole_lab/gauge.hpp"
#include "monopole_lab/geometry.hpp"
#include "monopole_lab/symmetry.hpp"
#include "monopole_lab/version.hpp"
#include "monopole_lab/wigner.hpp"

namespace py = pybind11;
using namespace monopole_lab;

namespace {

HalfInt half(double x) { return HalfInt::from_double(x); }

MonopoleSolution make_solution(const std::string& model, double rho, const std::string& kind, double a1, double C,
                               double A, double B, int sign, double b1, double b2, double e) {
  MonopoleSolution s;
  s.model = make_model(parse_geometry(model), rho);
  s.e = e;
  if (kind == "trivial")
    s.kind = Trivial{b1, b2};
  else
    s.kind = TypeI{a1, C, SeedFamily{parse_seed_kind(kind), A, B, sign}};
  return s;
}

DoubletRadialSystem doublet_system(int j, double m, const std::string& w_profile, int mu, int delta) {
  DoubletRadialSystem s;
  s.j = j;
  s.m = m;
  s.mu = mu;
  s.delta = delta;
  if (w_profile == "typeI") s.w_over_s = [](double chi) { return 0.5 / std::sin(chi); };
  else if (w_profile != "zero") throw ArgumentError("w_profile must be 'zero' or 'typeI'");
  if (j == 0) s.form = DoubletForm::J0;
  else if (s.w_over_s) s.form = DoubletForm::WReduced;
  else s.form = DoubletForm::MuReduced;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "BPS monopoles, Wigner D-functions, gauge transitions and radial Dirac spectra";
  mod.attr("__version__") = kVersion;

  py::register_exception<UnsupportedError>(mod, "UnsupportedError", PyExc_NotImplementedError);

  // Geometry ---------------------------------------------------------------
  mod.def("sigma", [](const std::string& model, double rho, double r) {
    return sigma(make_model(parse_geometry(model), rho), r);
  }, py::arg("model"), py::arg("rho"), py::arg("r"));
  mod.def("chi_from_r", [](const std::string& model, double rho, double r) {
    return chi_from_r(make_model(parse_geometry(model), rho), r);
  }, py::arg("model"), py::arg("rho"), py::arg("r"));

  // BPS profiles -----------------------------------------------------------
  py::class_<MonopoleSolution>(mod, "MonopoleSolution")
      .def(py::init(&make_solution), py::arg("model") = "euclid", py::arg("rho") = 1.0,
           py::arg("kind") = "hyperbolic", py::arg("a1") = 1.0, py::arg("C") = 0.0, py::arg("A") = 1.0,
           py::arg("B") = 0.0, py::arg("sign") = 1, py::arg("b1") = 0.0, py::arg("b2") = 1.0, py::arg("e") = 1.0)
      .def("K_Phi", [](const MonopoleSolution& s, double r) {
        const KPhi v = eval_K_Phi(s, r);
        return py::make_tuple(v.K, v.Phi);
      }, py::arg("r"))
      .def("residuals", [](const MonopoleSolution& s, double r, const std::string& method) {
        const FieldResidual res = residual_field_equations(
            s, r, method == "fd5" ? DerivativeMethod::FiniteDifference5 : DerivativeMethod::Jet);
        return py::make_tuple(res.resPhi, res.resK);
      }, py::arg("r"), py::arg("method") = "jet")
      .def("dyon_residuals", [](const MonopoleSolution& s, double c, double r) {
        const DyonResidual res = residual_dyon_equations(dyon_from_monopole(s, c), r);
        return py::make_tuple(res.resPhi, res.resF, res.resK);
      }, py::arg("c"), py::arg("r"))
      .def("W", [](const MonopoleSolution& s, double chi) { return W_profile(s, chi); }, py::arg("chi"))
      .def("to_json", [](const MonopoleSolution& s) { return to_json(s).dump(); });

  // Wigner functions -------------------------------------------------------
  mod.def("d_small", [](double j, double mp, double m, double theta) {
    return d_small(half(j), half(mp), half(m), theta);
  }, py::arg("j"), py::arg("mp"), py::arg("m"), py::arg("theta"));
  mod.def("D_function", [](double j, double mr, double mc, double phi, double theta) {
    return D_function(half(j), half(mr), half(mc), phi, theta);
  }, py::arg("j"), py::arg("m_row"), py::arg("m_col"), py::arg("phi"), py::arg("theta"));
  mod.def("d_matrix", [](double j, double theta) { return wigner_d_matrix_spectral(half(j), theta); },
          py::arg("j"), py::arg("theta"));
  mod.def("pauli_min_j", [](double lambda) -> std::optional<double> {
    const PauliResult r = pauli_allowed(lambda);
    if (const auto* s = std::get_if<AllowedJSet>(&r)) return s->min_j.value();
    return std::nullopt;
  }, py::arg("lambda_"), "Smallest allowed j for the index, or None when the index is rejected.");
  mod.def("charge_admissible", [](double k) { return abelian_charge_admissibility(k).admissible; }, py::arg("k"));

  // Gauge transitions ------------------------------------------------------
  mod.def("rotation_from_gibbs", &rotation_from_gibbs, py::arg("c"));
  mod.def("gibbs_compose", &gibbs_compose, py::arg("c1"), py::arg("c2"));
  mod.def("verify_gauge", [](const std::string& from, const std::string& to, double K, double Phi, double W,
                             double r, double e, int grid) {
    const GaugeVerifyReport rep =
        verify_gauge_transition(parse_frame(from), parse_frame(to), RadialValues{K, Phi, W}, r, e, grid);
    return py::dict(py::arg("max_defect_Phi") = rep.max_defect_Phi, py::arg("max_defect_W") = rep.max_defect_W);
  }, py::arg("from_frame"), py::arg("to_frame"), py::arg("K") = -0.3, py::arg("Phi") = 0.7, py::arg("W") = 0.2,
     py::arg("r") = 1.3, py::arg("e") = 1.0, py::arg("grid") = 20);

  // Radial Dirac spectrum on the unit sphere -----------------------------------
  mod.def("spectrum", [](int j, double m, int count, int grid, const std::string& w_profile, int mu, int delta) {
    const DoubletRadialSystem sys = doublet_system(j, m, w_profile, mu, delta);
    SpectrumResult r;
    {
      py::gil_scoped_release release;
      r = spectrum_s3(make_spectral_problem(RadialSystem(sys), grid), count);
    }
    return py::dict(py::arg("eigenvalues") = r.eigenvalues, py::arg("eigenvalues_refined") = r.eigenvalues_refined,
                    py::arg("drift") = r.drift, py::arg("grid") = r.grid, py::arg("diagnostic") = r.diagnostic);
  }, py::arg("j"), py::arg("m"), py::arg("count") = 5, py::arg("grid") = 4000, py::arg("w_profile") = "zero",
     py::arg("mu") = 1, py::arg("delta") = 1);

  // Symmetry operators and selection rules --------------------------------------
  mod.def("selection_rule", [](int omega, int delta, int delta_prime, double J, double J_prime) {
    return selection_outcome_name(selection_rule(omega, delta, delta_prime, half(J), half(J_prime)));
  }, py::arg("omega"), py::arg("delta"), py::arg("delta_prime"), py::arg("J"), py::arg("J_prime"));
  mod.def("selection_factor", [](int omega, int delta, int delta_prime, double J, double J_prime) {
    return selection_factor(omega, delta, delta_prime, half(J), half(J_prime));
  }, py::arg("omega"), py::arg("delta"), py::arg("delta_prime"), py::arg("J"), py::arg("J_prime"));
  mod.def("n_a_square_defect", [](double A, double jmax) { return n_a_square_defect(A, half(jmax)); },
          py::arg("A"), py::arg("jmax"));
  mod.def("n_a_consistent_angles", &n_a_consistent_angles, py::arg("n"), py::arg("tol"), py::arg("delta"),
          py::arg("epsilon"), py::arg("m"), py::arg("nu_over_s"), py::arg("w_over_s"), py::arg("F_tilde"),
          py::arg("Phi_tilde"));
}
