#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thinheat/convergence.hpp"
#include "thinheat/eigenbasis.hpp"
#include "thinheat/evolution.hpp"
#include "thinheat/fd_oracle.hpp"
#include "thinheat/field.hpp"
#include "thinheat/initial_data.hpp"
#include "thinheat/limit1d.hpp"
#include "thinheat/projection.hpp"

namespace py = pybind11;

namespace {

thinheat::TruncationPolicy make_policy(double tol, int max_modes, double t_floor) {
    thinheat::TruncationPolicy policy;
    policy.tol = tol;
    policy.max_modes = max_modes;
    policy.t_floor = t_floor;
    return policy;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral heat flow on thin rectangular plates";
    m.attr("__version__") = "0.1.0";

    py::class_<thinheat::EigenPair>(m, "EigenPair")
        .def_property_readonly("m",
                               [](const thinheat::EigenPair& p) { return p.mode.m; })
        .def_property_readonly("n",
                               [](const thinheat::EigenPair& p) { return p.mode.n; })
        .def_readonly("lambda_", &thinheat::EigenPair::lambda)
        .def_readonly("rank", &thinheat::EigenPair::multiplicity_rank)
        .def("__repr__", [](const thinheat::EigenPair& p) {
            return "EigenPair(m=" + std::to_string(p.mode.m) + ", n=" + std::to_string(p.mode.n) +
                   ", lambda=" + thinheat::detail::fmt17(p.lambda) +
                   ", rank=" + std::to_string(p.multiplicity_rank) + ")";
        });

    py::class_<thinheat::GridField>(m, "GridField")
        .def(py::init<int, int>(), py::arg("nx1"), py::arg("nx2"))
        .def_property_readonly("nx1", &thinheat::GridField::nx1)
        .def_property_readonly("nx2", &thinheat::GridField::nx2)
        .def_property_readonly("is_physical", &thinheat::GridField::is_physical)
        .def_property_readonly("eps",
                               [](const thinheat::GridField& f) -> py::object {
                                   if (!f.is_physical()) return py::none();
                                   return py::float_(f.eps_value());
                               })
        .def("at", [](const thinheat::GridField& f, int i, int j) { return f.at(i, j); },
             py::arg("i"), py::arg("j"))
        .def("set",
             [](thinheat::GridField& f, int i, int j, double v) { f.at(i, j) = v; },
             py::arg("i"), py::arg("j"), py::arg("value"))
        .def("values", [](const thinheat::GridField& f) { return f.values(); })
        .def("coord1", &thinheat::GridField::coord1, py::arg("i"))
        .def("coord2", &thinheat::GridField::coord2, py::arg("j"));

    py::class_<thinheat::GridField1D>(m, "GridField1D")
        .def(py::init<int>(), py::arg("nx"))
        .def_property_readonly("nx", &thinheat::GridField1D::nx)
        .def("at", [](const thinheat::GridField1D& f, int i) { return f.at(i); }, py::arg("i"))
        .def("set", [](thinheat::GridField1D& f, int i, double v) { f.at(i) = v; }, py::arg("i"),
             py::arg("value"))
        .def("values", [](const thinheat::GridField1D& f) { return f.values(); })
        .def("coord", &thinheat::GridField1D::coord, py::arg("i"));

    py::class_<thinheat::SpectralState>(m, "SpectralState")
        .def_property_readonly("eps",
                               [](const thinheat::SpectralState& s) { return s.eps().value(); })
        .def_property_readonly("truncation_count", &thinheat::SpectralState::truncation_count)
        .def_property_readonly("source_norm_sq", &thinheat::SpectralState::source_norm_sq)
        .def_property_readonly("elapsed", &thinheat::SpectralState::elapsed)
        .def("__len__", &thinheat::SpectralState::size)
        .def("pair", &thinheat::SpectralState::pair, py::arg("k"))
        .def("coefficient", &thinheat::SpectralState::coefficient, py::arg("k"))
        .def("coefficients", &thinheat::SpectralState::coefficients)
        .def("sum_coeff_sq", &thinheat::SpectralState::sum_coeff_sq);

    py::class_<thinheat::ErrorCurve>(m, "ErrorCurve")
        .def_readonly("eps", &thinheat::ErrorCurve::eps)
        .def_readonly("t", &thinheat::ErrorCurve::t)
        .def_readonly("error", &thinheat::ErrorCurve::error)
        .def_readonly("sup_error", &thinheat::ErrorCurve::sup_error);

    py::class_<thinheat::EigenRow>(m, "EigenRow")
        .def_readonly("eps", &thinheat::EigenRow::eps)
        .def_readonly("n", &thinheat::EigenRow::n)
        .def_readonly("lambda_", &thinheat::EigenRow::lambda)
        .def_readonly("gap", &thinheat::EigenRow::gap);

    m.def(
        "eigenvalue",
        [](int m_, int n, double eps) {
            return thinheat::eigenvalue({m_, n}, thinheat::Epsilon(eps));
        },
        py::arg("m"), py::arg("n"), py::arg("eps"));
    m.def(
        "norm_const", [](int m_, int n) { return thinheat::norm_const({m_, n}); }, py::arg("m"),
        py::arg("n"));
    m.def(
        "eigenfunction_rescaled",
        [](int m_, int n, double x1, double x2) {
            return thinheat::eigenfunction_rescaled({m_, n}, x1, x2);
        },
        py::arg("m"), py::arg("n"), py::arg("x1"), py::arg("x2"));
    m.def(
        "eigenfunction_physical",
        [](int m_, int n, double eps, double x, double y) {
            return thinheat::eigenfunction_physical({m_, n}, thinheat::Epsilon(eps), x, y);
        },
        py::arg("m"), py::arg("n"), py::arg("eps"), py::arg("x"), py::arg("y"));
    m.def(
        "ordered_spectrum",
        [](double eps, int count) {
            return thinheat::ordered_spectrum(thinheat::Epsilon(eps), count);
        },
        py::arg("eps"), py::arg("count"));

    m.def(
        "sample",
        [](const std::string& selector, int nx1, int nx2) {
            return thinheat::sample(thinheat::make_initial(selector), nx1, nx2);
        },
        py::arg("selector"), py::arg("nx1") = 129, py::arg("nx2") = 129,
        "Sample a named initial-data selector on a reference grid");
    m.def(
        "sample_physical",
        [](const std::string& selector, double eps, int nx1, int nx2) {
            return thinheat::sample_physical(thinheat::make_initial(selector),
                                             thinheat::Epsilon(eps), nx1, nx2);
        },
        py::arg("selector"), py::arg("eps"), py::arg("nx1") = 129, py::arg("nx2") = 129);
    m.def(
        "sample1d",
        [](const std::string& selector, int nx) {
            return thinheat::sample1d(thinheat::make_initial_1d(selector), nx);
        },
        py::arg("selector"), py::arg("nx") = 129);

    m.def("inner_product", &thinheat::inner_product, py::arg("f"), py::arg("g"));
    m.def("inner_product1d", &thinheat::inner_product1d, py::arg("f"), py::arg("g"));
    m.def(
        "project",
        [](const thinheat::GridField& f, double eps, int count) {
            return thinheat::project(f, thinheat::Epsilon(eps), count);
        },
        py::arg("f"), py::arg("eps"), py::arg("count"));
    m.def("reconstruct", &thinheat::reconstruct, py::arg("state"), py::arg("nx1"),
          py::arg("nx2"));
    m.def("parseval_defect", &thinheat::parseval_defect, py::arg("f"), py::arg("state"));
    m.def(
        "evolve",
        [](const thinheat::SpectralState& s, double t) { return thinheat::evolve(s, t); },
        py::arg("state"), py::arg("t"));

    m.def(
        "choose_truncation",
        [](double eps, double t, double norm_bound, double tol, int max_modes, double t_floor) {
            const thinheat::TruncationChoice choice = thinheat::choose_truncation(
                thinheat::Epsilon(eps), t, norm_bound, make_policy(tol, max_modes, t_floor));
            return py::make_tuple(choice.count, choice.certified);
        },
        py::arg("eps"), py::arg("t"), py::arg("norm_bound"), py::arg("tol") = 1e-10,
        py::arg("max_modes") = 4096, py::arg("t_floor") = 1e-6,
        "Returns (count, certified)");
    m.def(
        "solve",
        [](const thinheat::GridField& v0, double eps, double t, double tol, int max_modes,
           double t_floor) {
            return thinheat::solve(v0, thinheat::Epsilon(eps), t,
                                   make_policy(tol, max_modes, t_floor));
        },
        py::arg("v0"), py::arg("eps"), py::arg("t"), py::arg("tol") = 1e-10,
        py::arg("max_modes") = 4096, py::arg("t_floor") = 1e-6);
    m.def(
        "solve_physical",
        [](const thinheat::GridField& u0, double t, double tol, int max_modes, double t_floor) {
            return thinheat::solve_physical(u0, t, make_policy(tol, max_modes, t_floor));
        },
        py::arg("u0"), py::arg("t"), py::arg("tol") = 1e-10, py::arg("max_modes") = 4096,
        py::arg("t_floor") = 1e-6);

    m.def("eigenvalue1d", &thinheat::eigenvalue1d, py::arg("n"));
    m.def("eigenfunction1d", &thinheat::eigenfunction1d, py::arg("n"), py::arg("x"));
    m.def(
        "evolve1d",
        [](const thinheat::GridField1D& v0, double t, double tol, int max_modes, double t_floor) {
            return thinheat::evolve1d(v0, t, make_policy(tol, max_modes, t_floor));
        },
        py::arg("v0"), py::arg("t"), py::arg("tol") = 1e-10, py::arg("max_modes") = 4096,
        py::arg("t_floor") = 1e-6);
    m.def("embed", &thinheat::embed, py::arg("u"), py::arg("nx2"));
    m.def("vertical_average", &thinheat::vertical_average, py::arg("f"));

    m.def(
        "fd_solve",
        [](const thinheat::GridField& v0, double eps, double t, double dt, int nx1, int nx2) {
            thinheat::FDConfig cfg;
            cfg.nx1 = nx1;
            cfg.nx2 = nx2;
            cfg.dt = dt;
            return thinheat::fd_solve(v0, thinheat::Epsilon(eps), t, cfg);
        },
        py::arg("v0"), py::arg("eps"), py::arg("t"), py::arg("dt"), py::arg("nx1") = 0,
        py::arg("nx2") = 0);
    m.def("fd_mean", &thinheat::fd_mean, py::arg("f"));

    m.def("epsilon_threshold", &thinheat::epsilon_threshold, py::arg("k"));
    m.def(
        "eigen_convergence",
        [](int n_max, const std::vector<double>& eps_list) {
            return thinheat::eigen_convergence(n_max, eps_list);
        },
        py::arg("n_max"), py::arg("eps_list"));
    m.def(
        "solution_error",
        [](const thinheat::GridField& v0, double eps, const std::vector<double>& t_grid,
           double tol, int max_modes, double t_floor) {
            return thinheat::solution_error(v0, thinheat::Epsilon(eps), t_grid,
                                            make_policy(tol, max_modes, t_floor));
        },
        py::arg("v0"), py::arg("eps"), py::arg("t_grid"), py::arg("tol") = 1e-10,
        py::arg("max_modes") = 4096, py::arg("t_floor") = 1e-6);
    m.def("geometric_t_grid", &thinheat::geometric_t_grid, py::arg("t0"), py::arg("t1"),
          py::arg("count"));
    m.def(
        "convergence_report_json",
        [](const std::vector<double>& eps_list, const thinheat::GridField& v0, int n_max,
           const std::vector<double>& t_grid, double tol, int max_modes, double t_floor) {
            thinheat::ExperimentSpec spec{eps_list, v0, n_max, t_grid,
                                          make_policy(tol, max_modes, t_floor)};
            return thinheat::to_json(thinheat::convergence_report(spec));
        },
        py::arg("eps_list"), py::arg("v0"), py::arg("n_max"), py::arg("t_grid"),
        py::arg("tol") = 1e-10, py::arg("max_modes") = 4096, py::arg("t_floor") = 1e-6);

    m.def("to_csv",
          [](const thinheat::GridField& f) { return thinheat::to_csv(f); });
    m.def("to_csv1d",
          [](const thinheat::GridField1D& f) { return thinheat::to_csv(f); });
    m.def("parse_csv", &thinheat::parse_csv, py::arg("text"));
    m.def("parse_csv1d", &thinheat::parse_csv1d, py::arg("text"));
    m.def("state_to_json",
          [](const thinheat::SpectralState& s) { return thinheat::to_json(s); });
    m.def("state_from_json", &thinheat::parse_json, py::arg("text"));

    py::register_exception<thinheat::numeric_error>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<thinheat::io_error>(m, "IOError", PyExc_OSError);
}
