#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geocontact/builtin_scenarios.hpp"
#include "geocontact/contact.hpp"
#include "geocontact/geodesic.hpp"
#include "geocontact/rolling.hpp"
#include "geocontact/scenario.hpp"

namespace py = pybind11;
using namespace geocontact;

PYBIND11_MODULE(_geocontact, m) {
  m.doc() = "Geodesic contact-curve synthesis for rolling bodies";

  py::register_exception<InvalidParameterError>(m, "InvalidParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DegenerateChartError>(m, "DegenerateChartError", PyExc_ValueError);
  py::register_exception<SingularProfileError>(m, "SingularProfileError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ScenarioParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ScenarioValidationError", PyExc_ValueError);

  py::class_<Domain>(m, "Domain")
      .def(py::init<>())
      .def_readwrite("u_min", &Domain::u_min)
      .def_readwrite("u_max", &Domain::u_max)
      .def_readwrite("v_min", &Domain::v_min)
      .def_readwrite("v_max", &Domain::v_max)
      .def_readwrite("u_open", &Domain::u_open)
      .def_readwrite("v_open", &Domain::v_open)
      .def_readwrite("u_periodic", &Domain::u_periodic)
      .def_readwrite("v_periodic", &Domain::v_periodic)
      .def("contains", &Domain::contains);

  py::class_<Chart, ChartPtr>(m, "Chart")
      .def("point", &Chart::point)
      .def("du", &Chart::du)
      .def("dv", &Chart::dv)
      .def("duu", &Chart::duu)
      .def("duv", &Chart::duv)
      .def("dvv", &Chart::dvv)
      .def("domain", &Chart::domain)
      .def("name", &Chart::name);

  m.def("sphere_chart", &sphere_chart, py::arg("radius"));
  m.def("ellipsoid_chart", &ellipsoid_chart, py::arg("r1"), py::arg("r2"), py::arg("r3"));
  m.def("cylinder_chart", &cylinder_chart, py::arg("radius"));
  m.def("finite_difference_chart", &finite_difference_chart, py::arg("eval"),
        py::arg("base_domain"), py::arg("step") = 1e-4);

  py::class_<SurfaceGeometry>(m, "SurfaceGeometry")
      .def_readonly("norm_u", &SurfaceGeometry::norm_u)
      .def_readonly("norm_v", &SurfaceGeometry::norm_v)
      .def_readonly("normal", &SurfaceGeometry::normal)
      .def_readonly("gamma1_11", &SurfaceGeometry::gamma1_11)
      .def_readonly("gamma1_12", &SurfaceGeometry::gamma1_12)
      .def_readonly("gamma1_22", &SurfaceGeometry::gamma1_22)
      .def_readonly("gamma2_11", &SurfaceGeometry::gamma2_11)
      .def_readonly("gamma2_12", &SurfaceGeometry::gamma2_12)
      .def_readonly("gamma2_22", &SurfaceGeometry::gamma2_22);
  m.def("geometry_at", &geometry_at, py::arg("chart"), py::arg("u"), py::arg("v"));
  m.def("max_orthogonality_defect", &max_orthogonality_defect, py::arg("chart"),
        py::arg("grid") = 20);

  py::class_<ContactState>(m, "ContactState")
      .def(py::init<>())
      .def_readwrite("u1", &ContactState::u1)
      .def_readwrite("v1", &ContactState::v1)
      .def_readwrite("u2", &ContactState::u2)
      .def_readwrite("v2", &ContactState::v2)
      .def_readwrite("psi", &ContactState::psi)
      .def_readwrite("du1", &ContactState::du1)
      .def_readwrite("dv1", &ContactState::dv1)
      .def_readwrite("du2", &ContactState::du2)
      .def_readwrite("dv2", &ContactState::dv2)
      .def_readwrite("dpsi", &ContactState::dpsi);

  py::class_<RelativeMotion>(m, "RelativeMotion")
      .def_readonly("v_rel_x", &RelativeMotion::v_rel_x)
      .def_readonly("v_rel_y", &RelativeMotion::v_rel_y)
      .def_readonly("a_rel_x", &RelativeMotion::a_rel_x)
      .def_readonly("a_rel_y", &RelativeMotion::a_rel_y);

  m.def("rotation_psi", &rotation_psi, py::arg("psi"));
  m.def("relative_velocity",
        py::overload_cast<const ContactState&, const Chart&, const Chart&>(&relative_velocity),
        py::arg("state"), py::arg("chart1"), py::arg("chart2"));
  m.def("relative_acceleration", &relative_acceleration, py::arg("state"), py::arg("accels"),
        py::arg("chart1"), py::arg("chart2"));
  m.def("proportionality_residual", &proportionality_residual, py::arg("state"), py::arg("sigma"),
        py::arg("t"), py::arg("chart1"), py::arg("chart2"));

  py::class_<SigmaProfile>(m, "SigmaProfile")
      .def(py::init<const std::vector<double>&>(), py::arg("ascending_coeffs"))
      .def("eval",
           [](const SigmaProfile& p, double t) {
             const auto v = p.eval(t);
             return py::make_tuple(v.sigma, v.sigma_dot);
           })
      .def_property_readonly("coefficients", &SigmaProfile::coefficients);

  m.def(
      "geodesic_rhs",
      [](const Chart& chart, double u, double v, double du, double dv, double sigma,
         double sigma_dot) {
        const GeodesicRates r = geodesic_rhs(chart, u, v, du, dv, sigma, sigma_dot);
        return py::make_tuple(r.ddu, r.ddv);
      },
      py::arg("chart"), py::arg("u"), py::arg("v"), py::arg("du"), py::arg("dv"), py::arg("sigma"),
      py::arg("sigma_dot"));
  m.def(
      "modified_geodesic_rhs",
      [](const ContactState& s, const Chart& c1, const Chart& c2, double sigma, double sigma_dot,
         double eta) {
        const GeodesicRates r = modified_geodesic_rhs(s, c1, c2, sigma, sigma_dot, eta);
        return py::make_tuple(r.ddu, r.ddv);
      },
      py::arg("state"), py::arg("chart1"), py::arg("chart2"), py::arg("sigma"),
      py::arg("sigma_dot"), py::arg("eta"));

  py::class_<RollingEvolution>(m, "RollingEvolution")
      .def_readonly("du2", &RollingEvolution::du2)
      .def_readonly("dv2", &RollingEvolution::dv2)
      .def_readonly("dpsi", &RollingEvolution::dpsi);
  m.def("rolling_rates", &rolling_rates, py::arg("state"), py::arg("chart1"), py::arg("chart2"));

  py::class_<PairMetrics>(m, "PairMetrics")
      .def_readonly("max_v_rel", &PairMetrics::max_vrel)
      .def_readonly("max_v_rel_during_disturbance", &PairMetrics::max_vrel_disturbed)
      .def_readonly("rejection_time", &PairMetrics::rejection_time)
      .def_readonly("max_geodesic_residual", &PairMetrics::max_geodesic_residual)
      .def_readonly("max_saturation_defect", &PairMetrics::max_saturation_defect)
      .def_readonly("contraction_warnings", &PairMetrics::contraction_warnings);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("mode", &Scenario::mode)
      .def_readwrite("step", &Scenario::step)
      .def_readwrite("horizon", &Scenario::horizon)
      .def_readwrite("eta", &Scenario::eta)
      .def_readwrite("rejection_threshold", &Scenario::rejection_threshold);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("metrics", &RunResult::metrics)
      .def("summary_json", [](const RunResult& r) { return summary_json(r); });

  m.def("load_scenario", &load_scenario, py::arg("path_or_builtin"));
  m.def("run_scenario", &run_scenario, py::arg("scenario"));
  m.def("write_outputs", &write_outputs, py::arg("result"), py::arg("out_dir"),
        py::arg("seed") = std::nullopt);
  m.def("builtin_scenario_names", [] {
    std::vector<std::string> names;
    for (const auto& b : builtin_scenarios()) names.push_back(b.name);
    return names;
  });
}
