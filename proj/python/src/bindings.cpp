#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hycap/bounds.hpp"
#include "hycap/capacity.hpp"
#include "hycap/certify.hpp"
#include "hycap/cli.hpp"
#include "hycap/errors.hpp"
#include "hycap/potentials.hpp"
#include "hycap/radii.hpp"
#include "hycap/report.hpp"
#include "hycap/version.hpp"

namespace py = pybind11;
using namespace hycap;

namespace {

py::dict verdict_dict(const Verdict& v) {
  py::dict inputs;
  for (const auto& [name, value] : v.inputs) inputs[py::str(name)] = value;
  py::dict d;
  d["theorem_id"] = v.theorem_id;
  d["check"] = v.check;
  d["inputs"] = inputs;
  d["lhs"] = v.lhs;
  d["rhs"] = v.rhs;
  d["relation"] = std::string(to_string(v.relation));
  d["slack"] = v.slack;
  d["tol"] = v.tol;
  d["pass"] = v.pass;
  d["informational"] = v.informational;
  d["note"] = v.note;
  return d;
}

py::list verdict_list(const std::vector<Verdict>& verdicts) {
  py::list out;
  for (const auto& v : verdicts) out.append(verdict_dict(v));
  return out;
}

CertifyOptions options(double tol) {
  CertifyOptions o;
  o.tol = tol;
  return o;
}

}  // namespace

PYBIND11_MODULE(_hycap, m) {
  m.doc() = "Hyperbolic p-capacities of radial condensers, bounds and certificates.";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  constexpr double tol = quadrature::kDefaultTol;

  m.def("sphere_area", &sphere_area, py::arg("n"), py::arg("s"));
  m.def("ball_volume", &ball_volume, py::arg("n"), py::arg("r"));
  m.def("ball_volume_inverse", [](int n, double v) { return ball_volume_inverse(n, v); },
        py::arg("n"), py::arg("volume"));
  m.def("poincare_distance",
        [](std::vector<double> x, std::vector<double> y) {
          return poincare_distance(PoincarePoint(std::move(x)), PoincarePoint(std::move(y)));
        },
        py::arg("x"), py::arg("y"));

  m.def("ring_capacity",
        [](int n, double p, double r, double R, double t) {
          return ring_capacity(RingCondenser({n, p}, r, R), t);
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("R"), py::arg("tol") = tol);
  m.def("ball_capacity",
        [](int n, double p, double r, double t) { return ball_capacity({n, p}, r, t); },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("tol") = tol);
  m.def("kappa", [](int n, double p, double r, double t) { return kappa({n, p}, r, t); },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("tol") = tol);
  m.def("point_capacity",
        [](int n, double p, double R, double t) { return point_capacity({n, p}, R, t); },
        py::arg("n"), py::arg("p"), py::arg("R") = kInfinity, py::arg("tol") = tol);
  m.def("series_combination", &series_combination, py::arg("c1"), py::arg("c2"),
        py::arg("p"));
  m.def("boundary_trace_uhat",
        [](int n, double p, double r, double t) {
          return boundary_trace_uhat_ball({n, p}, r, t);
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("tol") = tol);

  m.def("potential",
        [](int n, double p, double r, double R, double t) {
          return RadialPotential(RingCondenser({n, p}, r, R)).value(t).value;
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("R"), py::arg("t"));
  m.def("flux_integral",
        [](int n, double p, double r, double R, double t) {
          return RadialPotential(RingCondenser({n, p}, r, R)).flux_integral(t);
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("R"), py::arg("t"));

  m.def("rvol", [](int n, double v) { return rvol(n, v).value; }, py::arg("n"),
        py::arg("volume"));
  m.def("rcap",
        [](int n, double p, double c, double t) { return rcap({n, p}, c, t).value; },
        py::arg("n"), py::arg("p"), py::arg("capacity"), py::arg("tol") = tol);
  m.def("relative_volume_ball", &relative_volume_ball, py::arg("n"), py::arg("r"));

  m.def("mazya_lower",
        [](int n, double p, double vol_K, double vol_O, double t) {
          return mazya_lower({n, p}, vol_K, vol_O, MazyaRoute::volume_integral, t);
        },
        py::arg("n"), py::arg("p"), py::arg("vol_K"), py::arg("vol_O"),
        py::arg("tol") = tol);
  m.def("polya_upper",
        [](int n, double p, double area, std::vector<double> P, double t) {
          return polya_upper({n, p}, QuermassData(n, area, std::move(P)), t);
        },
        py::arg("n"), py::arg("p"), py::arg("area"), py::arg("P"), py::arg("tol") = tol);
  m.def("steiner_area",
        [](int n, double area, std::vector<double> P, double s) {
          return steiner_area(QuermassData(n, area, std::move(P)), s);
        },
        py::arg("n"), py::arg("area"), py::arg("P"), py::arg("s"));
  m.def("af_lower_bound", &af_lower_bound, py::arg("n"), py::arg("k"), py::arg("area"));
  m.def("diameter_bound",
        [](double d) {
          const auto b = diameter_harmonic_radius_bound(d);
          return py::make_tuple(b.r_of_d, b.linear_bound, b.excess);
        },
        py::arg("d"));

  m.def("certify_t21",
        [](int n, double p, double r, double R, double t) {
          return verdict_list(certify_t21({n, p}, r, R, options(t)));
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("R"), py::arg("tol") = 1e-8);
  m.def("certify_t31",
        [](int n, double p, double r, double R, double t) {
          return verdict_list(certify_t31_eq31({n, p}, r, R, options(t)));
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("R"), py::arg("tol") = 1e-8);
  m.def("certify_t32",
        [](std::vector<double> grid, double t) {
          return verdict_list(certify_t31_eq32(grid, options(t)));
        },
        py::arg("d_grid"), py::arg("tol") = 1e-8);
  m.def("certify_t41",
        [](int n, double p, double r, double t) {
          return verdict_list(certify_t41({n, p}, r, options(t)));
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("tol") = 1e-8);
  m.def("certify_t51_ball",
        [](int n, double p, double r, double t) {
          return verdict_list(certify_t51_ball({n, p}, r, options(t)));
        },
        py::arg("n"), py::arg("p"), py::arg("r"), py::arg("tol") = 1e-8);

  m.def("run_command",
        [](const std::vector<std::string>& argv) {
          const auto result = cli::run_command(argv);
          return py::make_tuple(result.exit_code, result.output, result.error);
        },
        py::arg("argv"),
        "Run one CLI invocation; returns (exit_code, stdout_text, stderr_text).");
}
