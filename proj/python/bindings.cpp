#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "orlicz/analysis.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/dp1d.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/psi.hpp"
#include "orlicz/table.hpp"

namespace py = pybind11;
using namespace orlicz;

namespace {

ExtReal ext_from(double s) { return std::isinf(s) ? ExtReal::inf() : ExtReal(s); }

double ext_to(const ExtReal& e) {
  return e.is_finite() ? e.value() : std::numeric_limits<double>::infinity();
}

py::dict report_dict(const conditions::ConditionReport& r) {
  py::dict d;
  d["condition"] = conditions::to_string(r.condition);
  d["verdict"] = conditions::to_string(r.verdict);
  d["witness_beta"] = r.witness_beta ? py::object(py::float_(*r.witness_beta)) : py::none();
  d["witness_L"] = r.witness_L ? py::object(py::float_(*r.witness_L)) : py::none();
  d["margin"] = r.margin;
  d["vacuous_balls"] = r.vacuous_balls;
  d["detail"] = r.detail;
  return d;
}

py::dict table_dict(const ExperimentTable& t) {
  py::dict d;
  d["columns"] = t.columns();
  d["rows"] = t.rows();
  d["metadata"] = t.metadata();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized Orlicz laboratory: Phi-functions, condition checks, norms and "
            "one-dimensional double-phase experiments";

  py::class_<CoefficientFunction>(m, "CoefficientFunction")
      .def_static("constant", &CoefficientFunction::constant)
      .def_static("negative_part_power", &CoefficientFunction::negative_part_power)
      .def_static("abs_power", &CoefficientFunction::abs_power)
      .def_static("from_callable", &CoefficientFunction::from)
      .def("__call__", &CoefficientFunction::operator());

  py::class_<PhiFunction>(m, "PhiFunction")
      .def_static("power", &PhiFunction::power, py::arg("p"), py::arg("scale") = 1.0)
      .def_static("variable_exponent", &PhiFunction::variable_exponent)
      .def_static("double_phase", &PhiFunction::double_phase)
      .def_static("double_phase_max", &PhiFunction::double_phase_max)
      .def_static("power_log", &PhiFunction::power_log)
      .def_static("weighted_power", &PhiFunction::weighted_power)
      .def("with_declared_exponents", &PhiFunction::with_declared_exponents)
      .def("__call__", &PhiFunction::operator())
      .def("derivative", &PhiFunction::derivative)
      .def("inverse", &PhiFunction::inverse)
      .def("conjugate", &PhiFunction::conjugate)
      .def_property_readonly("name", &PhiFunction::name)
      .def_property_readonly("declared_exponents", [](const PhiFunction& f) -> py::object {
        if (!f.declared_exponents()) return py::none();
        return py::make_tuple(f.declared_exponents()->p, f.declared_exponents()->q);
      });

  m.def("conjugate_function", &conjugate_function);
  m.def("weak_phi_samples_ok",
        [](const PhiFunction& phi, double lo, double hi) {
          return weak_phi_samples_ok(phi, lo, hi);
        },
        py::arg("phi"), py::arg("x_lo") = -1.0, py::arg("x_hi") = 1.0);

  py::class_<Ball>(m, "Ball")
      .def(py::init<std::vector<double>, double>(), py::arg("center"), py::arg("radius"))
      .def_static("interval", &Ball::interval)
      .def_property_readonly("radius", &Ball::radius)
      .def_property_readonly("measure", &Ball::measure)
      .def_property_readonly("lo", &Ball::lo)
      .def_property_readonly("hi", &Ball::hi);

  m.def("psi_r",
        [](const PhiFunction& phi, const Ball& ball, double t) { return psi_r(phi, ball, t); });
  py::class_<PsiR>(m, "PsiR")
      .def(py::init<PhiFunction, Ball>())
      .def("__call__", &PsiR::operator())
      .def("phi_min", &PsiR::phi_min);
  m.def("sandwich_constants", [](double p, double q, double Lp, double Lq) {
    const auto c = sandwich_constants(p, q, Lp, Lq);
    return py::make_tuple(c.c1, c.c2);
  }, py::arg("p"), py::arg("q"), py::arg("Lp") = 1.0, py::arg("Lq") = 1.0);

  m.def("sobolev_conjugate_inverse", &sobolev_conjugate_inverse);

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init<double, double, std::vector<double>>())
      .def_static("sample", &GridFunction::sample)
      .def("__call__", &GridFunction::operator())
      .def_property_readonly("values", &GridFunction::values)
      .def("derivative", &GridFunction::derivative);

  m.def("modular", &modular);
  m.def("luxemburg_norm", &luxemburg_norm);
  m.def("lebesgue_norm",
        [](const GridFunction& u, double s, bool normalized) {
          return lebesgue_norm(u, ext_from(s), normalized);
        },
        py::arg("u"), py::arg("s"), py::arg("normalized") = false);
  m.def("sobolev_norm", &sobolev_norm);
  m.def("integral_mean_power", [](const GridFunction& u, double ell, const Ball& ball) {
    const auto r = integral_mean_power(u, ell, ball);
    return py::make_tuple(r.value, r.clipped);
  });
  m.def("ess_bounds", [](const GridFunction& u, const Ball& ball) {
    const auto b = ess_bounds(u, ball);
    return py::make_tuple(b.inf, b.sup);
  });
  m.def("holder_check", &holder_check);

  m.def("check_a0", [](const PhiFunction& phi, double lo, double hi) {
    return report_dict(conditions::check_a0(phi, lo, hi));
  });
  m.def("check_aInc", [](const PhiFunction& phi, double p) {
    return report_dict(conditions::check_aInc(phi, p));
  });
  m.def("check_aDec", [](const PhiFunction& phi, double q) {
    return report_dict(conditions::check_aDec(phi, q));
  });
  m.def("check_a1",
        [](const PhiFunction& phi, double center, int depth) {
          return report_dict(
              conditions::check_a1(phi, conditions::A1SearchSpec::dyadic(center, depth)));
        },
        py::arg("phi"), py::arg("center") = 0.0, py::arg("depth") = 12);
  m.def("check_a1_s",
        [](const PhiFunction& phi, double s, double center, int depth) {
          return report_dict(conditions::check_a1_s(
              phi, s, conditions::A1SearchSpec::dyadic(center, depth)));
        },
        py::arg("phi"), py::arg("s"), py::arg("center") = 0.0, py::arg("depth") = 12);
  m.def("estimate_exponent_range", [](const PhiFunction& phi) {
    const auto r = conditions::estimate_exponent_range(phi);
    return py::make_tuple(r.first, r.second);
  });

  py::class_<dp::DPParams>(m, "DPParams")
      .def(py::init([](double p, double q, double alpha, double c, double x_left,
                       double x_right) {
             return dp::DPParams{p, q, alpha, c, x_left, x_right};
           }),
           py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("c"),
           py::arg("x_left") = -1.0, py::arg("x_right") = 1.0)
      .def_readonly("p", &dp::DPParams::p)
      .def_readonly("q", &dp::DPParams::q)
      .def_readonly("alpha", &dp::DPParams::alpha)
      .def_readonly("c", &dp::DPParams::c);

  py::class_<dp::ExactDPSolution>(m, "ExactDPSolution")
      .def(py::init<dp::DPParams>())
      .def("__call__", &dp::ExactDPSolution::operator())
      .def("derivative", &dp::ExactDPSolution::derivative)
      .def("quadrature_value", &dp::ExactDPSolution::quadrature_value, py::arg("x"),
           py::arg("rel_tol") = 1e-10)
      .def("phi", &dp::ExactDPSolution::phi)
      .def_property_readonly("x0", &dp::ExactDPSolution::x0)
      .def_property_readonly("alpha2", &dp::ExactDPSolution::alpha2);

  py::class_<GrowthField>(m, "GrowthField")
      .def_static("canonical", &GrowthField::canonical)
      .def("flux", &GrowthField::flux)
      .def_readonly("nu", &GrowthField::nu)
      .def_readonly("lambda_", &GrowthField::lambda);

  m.def("solve_double_phase_1d", &dp::solve_double_phase_1d);
  m.def("c_for_x0", &dp::c_for_x0);
  m.def("verify_supersolution",
        [](const GrowthField& field, const GridFunction& u, const GridFunction& h) {
          return dp::verify_supersolution(field, u, h);
        });
  m.def("verify_caccioppoli",
        [](const PhiFunction& phi, const std::function<double(double)>& psi,
           const GridFunction& u, double ell, double s_exponent, double sigma,
           const Ball& ball, double p1, const GrowthField& growth) {
          const dp::CaccioppoliConfig cfg{ell, s_exponent, sigma, ball, p1, std::nullopt};
          const auto r = dp::verify_caccioppoli(phi, psi, u, cfg, growth);
          py::dict d;
          d["lhs"] = r.lhs;
          d["rhs_integral"] = r.rhs_integral;
          d["ratio"] = r.ratio;
          d["reference_constant"] = r.reference_constant;
          return d;
        },
        py::arg("phi"), py::arg("psi"), py::arg("u"), py::arg("ell"),
        py::arg("s_exponent"), py::arg("sigma"), py::arg("ball"), py::arg("p1"),
        py::arg("growth"));
  m.def("hypothesis_quantities",
        [](const PhiFunction& phi, const PhiFunction& omega, const GridFunction& u,
           const Ball& ball, double beta_exp) {
          const auto h = dp::hypothesis_quantities(phi, omega, u, ball, beta_exp);
          py::dict d;
          d["lhs_vbound"] = h.lhs_vbound;
          d["inv_measure"] = h.inv_measure;
          d["scaled_vbound"] = h.scaled_vbound;
          d["beta_mean"] = h.beta_mean;
          d["degenerate"] = h.degenerate;
          return d;
        });
  m.def("harnack_quotient",
        py::overload_cast<double, double>(&dp::harnack_quotient), py::arg("alpha2"),
        py::arg("rho"));
  m.def("energy", &dp::energy);
  m.def("limiting_exponent",
        [](double p, int n) { return ext_to(dp::limiting_exponent(p, n)); });
  m.def("weak_harnack_ratio", &dp::weak_harnack_ratio, py::arg("u"), py::arg("R"),
        py::arg("center"), py::arg("ell0"), py::arg("include_radius_shift") = true);
  m.def("norm_sequence_bounded", [](double p, double q, double alpha, double s) {
    return dp::norm_sequence_bounded(p, q, alpha, ext_from(s));
  });

  m.def("sharpness_sweep",
        [](double p, double q, double alpha, double s, const std::vector<double>& x0s) {
          dp::SharpnessSweepConfig cfg;
          cfg.p = p;
          cfg.q = q;
          cfg.alpha = alpha;
          cfg.s = ext_from(s);
          cfg.x0_sequence = x0s;
          return table_dict(dp::sharpness_sweep(cfg));
        });
  m.def("harnack_sweep",
        [](double p, double q, const std::vector<double>& alphas, double s,
           const std::vector<double>& x0s, double ell0) {
          dp::HarnackSweepConfig cfg;
          cfg.p = p;
          cfg.q = q;
          cfg.alpha_list = alphas;
          cfg.s = ext_from(s);
          cfg.x0_sequence = x0s;
          cfg.ell0 = ell0;
          return table_dict(dp::harnack_sweep(cfg));
        },
        py::arg("p"), py::arg("q"), py::arg("alphas"), py::arg("s"), py::arg("x0s"),
        py::arg("ell0") = 1.0);
  m.def("p_laplace_nonintegrability",
        [](double p, int n, const std::vector<double>& eps, double factor) {
          const auto r = dp::p_laplace_nonintegrability(p, n, eps, factor);
          py::dict d;
          d["infinite_exponent"] = r.infinite_exponent;
          d["exponent_used"] = r.exponent_used;
          d["eps"] = r.eps;
          d["partial"] = r.partial;
          d["closed_form"] = r.closed_form;
          d["slope"] = r.slope;
          d["expected_slope"] = r.expected_slope;
          return d;
        },
        py::arg("p"), py::arg("n"), py::arg("eps"), py::arg("exponent_factor") = 1.0);
}
