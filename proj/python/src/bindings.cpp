#include "zaremba/coeffs.hpp"
#include "zaremba/error.hpp"
#include "zaremba/halfline.hpp"
#include "zaremba/sector.hpp"
#include "zaremba/specfun.hpp"
#include "zaremba/spectra.hpp"
#include "zaremba/verify.hpp"
#include "zaremba/version.hpp"
#include "zaremba/wedge.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace zaremba;

namespace {

wedge::WedgeConfig config(int m, int dim_v, const wedge::VertexCondition& vertex)
{
    return wedge::WedgeConfig(m, dim_v, vertex);
}

} // namespace

PYBIND11_MODULE(_zaremba, mod)
{
    mod.doc() = "Bindings for the zaremba C++ library";
    mod.attr("__version__") = zaremba::version;

    // Translators run newest first, so the base class goes in before DomainError.
    py::register_exception<Error>(mod, "NumericalError", PyExc_RuntimeError);
    py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);

    py::class_<wedge::VertexCondition>(mod, "VertexCondition")
        .def_static("regular", &wedge::VertexCondition::regular)
        .def_static("robin", &wedge::VertexCondition::robin, py::arg("s"))
        .def_property_readonly("is_regular", &wedge::VertexCondition::is_regular)
        .def_property_readonly("s", &wedge::VertexCondition::s)
        .def("__repr__", [](const wedge::VertexCondition& v) {
            return v.is_regular() ? std::string("VertexCondition.regular()")
                                  : "VertexCondition.robin(" + std::to_string(v.s()) + ")";
        });

    py::enum_<spectra::BoundaryCondition>(mod, "BoundaryCondition")
        .value("Dirichlet", spectra::BoundaryCondition::Dirichlet)
        .value("Neumann", spectra::BoundaryCondition::Neumann);

    py::class_<spectra::SectorSpec>(mod, "SectorSpec")
        .def(py::init([](double alpha, double radius, spectra::BoundaryCondition lo,
                         spectra::BoundaryCondition hi) {
                 spectra::SectorSpec s{alpha, radius, lo, hi};
                 s.validate();
                 return s;
             }),
             py::arg("alpha"), py::arg("radius"), py::arg("side_lo"), py::arg("side_hi"))
        .def_readonly("alpha", &spectra::SectorSpec::alpha)
        .def_readonly("radius", &spectra::SectorSpec::radius)
        .def_property_readonly("area", &spectra::SectorSpec::area)
        .def_property_readonly("perimeter", &spectra::SectorSpec::perimeter)
        .def_property_readonly("label", &spectra::SectorSpec::label);

    mod.def("erfcx", &specfun::erfcx, py::arg("z"));
    mod.def(
        "bessel_j",
        [](double nu, double x) { return specfun::bessel_j(specfun::BesselOrder::from_value(nu), x); },
        py::arg("nu"), py::arg("x"));
    mod.def(
        "bessel_j_zeros",
        [](double nu, double x_max) {
            return specfun::bessel_j_zeros(specfun::BesselOrder::from_value(nu), x_max);
        },
        py::arg("nu"), py::arg("x_max"));

    mod.def("dirichlet_kernel", &halfline::dirichlet_kernel, py::arg("t"), py::arg("r"), py::arg("r2"));
    mod.def("neumann_kernel", &halfline::neumann_kernel, py::arg("t"), py::arg("r"), py::arg("r2"));
    mod.def(
        "robin_w",
        [](double t, double rho, double rho2, double s) {
            return halfline::robin_w(t, rho, rho2, halfline::RobinParam{s});
        },
        py::arg("t"), py::arg("rho"), py::arg("rho2"), py::arg("s"));

    mod.def(
        "psi",
        [](double t, double rho, double theta, double rho2, double theta2,
           const wedge::VertexCondition& vertex) {
            return wedge::psi(t, rho, theta, rho2, theta2, vertex);
        },
        py::arg("t"), py::arg("rho"), py::arg("theta"), py::arg("rho2"), py::arg("theta2"),
        py::arg("vertex"));
    mod.def(
        "mixed_diagonal",
        [](double t, double rho, double theta, const wedge::VertexCondition& vertex, int m, int dim_v) {
            return wedge::mixed_diagonal(t, rho, theta, config(m, dim_v, vertex));
        },
        py::arg("t"), py::arg("rho"), py::arg("theta"), py::arg("vertex"), py::arg("m") = 2,
        py::arg("dim_v") = 1);
    mod.def(
        "strip_trace",
        [](double t, double eps3, const wedge::VertexCondition& vertex, int m, int dim_v) {
            return wedge::strip_trace(t, eps3, config(m, dim_v, vertex));
        },
        py::arg("t"), py::arg("eps3"), py::arg("vertex"), py::arg("m") = 2, py::arg("dim_v") = 1);
    mod.def(
        "extract_strip_coefficient",
        [](const wedge::VertexCondition& vertex, double eps3, double t_max, int m, int dim_v) {
            const auto lim = wedge::extract_strip_coefficient(config(m, dim_v, vertex), eps3, t_max);
            return py::dict(py::arg("bracket") = lim.bracket, py::arg("bracket_stderr") = lim.bracket_stderr,
                            py::arg("b2") = lim.b2);
        },
        py::arg("vertex"), py::arg("eps3") = 1.0, py::arg("t_max") = 1e-4, py::arg("m") = 2,
        py::arg("dim_v") = 1);
    mod.def(
        "sigma0_b2",
        [](const wedge::VertexCondition& vertex, int m, int dim_v) {
            coeffs::GeometryData g;
            g.m = m;
            g.dim_v = dim_v;
            return coeffs::sigma0_b2(g, vertex);
        },
        py::arg("vertex"), py::arg("m") = 2, py::arg("dim_v") = 1);

    mod.def(
        "eigenvalues",
        [](const spectra::SectorSpec& spec, double lambda_max, int threads) {
            py::gil_scoped_release release;
            return spectra::eigenvalues(spec, lambda_max, {threads});
        },
        py::arg("spec"), py::arg("lambda_max"), py::arg("threads") = 1);
    mod.def(
        "heat_trace",
        [](const spectra::SectorSpec& spec, std::vector<double> t_grid, double lambda_max, int threads) {
            std::vector<spectra::HeatTraceSample> samples;
            {
                py::gil_scoped_release release;
                samples = spectra::heat_trace_grid(spec, t_grid, lambda_max, {threads});
            }
            py::list rows;
            for (const auto& s : samples) rows.append(py::make_tuple(s.t, s.value, s.tail_bound));
            return rows;
        },
        py::arg("spec"), py::arg("t_grid"), py::arg("lambda_max"), py::arg("threads") = 1);
    mod.def(
        "extract_constant",
        [](const spectra::SectorSpec& spec, std::vector<double> t_grid, double lambda_max, int threads) {
            coeffs::GeometryData g;
            if (t_grid.empty()) t_grid = spectra::default_t_grid();
            if (lambda_max <= 0.0) lambda_max = spectra::default_lambda_max(t_grid.front());
            std::optional<spectra::ConstantEstimate> est;
            {
                py::gil_scoped_release release;
                est = spectra::extract_constant(spec, t_grid, g, lambda_max, {threads});
            }
            return py::dict(py::arg("constant") = est->constant, py::arg("stderr") = est->stderr,
                            py::arg("exponents") = est->fit.exponents,
                            py::arg("coefficients") = est->fit.coefficients,
                            py::arg("predicted_b0") = est->prediction.b0,
                            py::arg("predicted_b1") = est->prediction.b1,
                            py::arg("b2_known") = est->prediction.b2_known);
        },
        py::arg("spec"), py::arg("t_grid") = std::vector<double>{}, py::arg("lambda_max") = 0.0,
        py::arg("threads") = 1);

    mod.def(
        "verify",
        [](const std::string& suite, int threads) {
            std::string text;
            {
                py::gil_scoped_release release;
                const auto report = verify::run_suite(verify::parse_suite(suite), {}, {threads});
                text = verify::to_json(report).dump();
            }
            return py::module_::import("json").attr("loads")(text);
        },
        py::arg("suite") = "specfun", py::arg("threads") = 1);
}
