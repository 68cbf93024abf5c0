#include "zaremba/verify.hpp"

#include "zaremba/coeffs.hpp"
#include "zaremba/error.hpp"
#include "zaremba/halfline.hpp"
#include "zaremba/numerics.hpp"
#include "zaremba/specfun.hpp"
#include "zaremba/spectra.hpp"
#include "zaremba/wedge.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace zaremba::verify {

namespace {

constexpr double pi = std::numbers::pi;

using numerics::QuadratureSpec;
using wedge::PsiMethod;
using wedge::VertexCondition;

Check make_check(std::string name, double measured, double target, double tolerance)
{
    const bool pass = std::isfinite(measured) && std::abs(measured - target) <= tolerance;
    return Check{std::move(name), measured, target, tolerance, pass};
}

std::string fmt(const char* pattern, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

std::string fmt(const char* pattern, double a, double b)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::string vertex_label(const VertexCondition& v)
{
    return v.is_regular() ? std::string("regular") : fmt("robin(%g)", v.s());
}

// Nested adaptive quadrature over a rectangle split at the given points.
double integrate_2d(const std::function<double(double, double)>& f, const std::vector<double>& outer,
                    const std::vector<double>& inner, double abs_tol, double rel_tol)
{
    const QuadratureSpec inner_spec{abs_tol, rel_tol, 40};
    const QuadratureSpec outer_spec{abs_tol, rel_tol, 40};
    const auto outer_f = [&](double x) {
        return numerics::integrate_partitioned([&](double y) { return f(x, y); }, inner, inner_spec)
            .value;
    };
    return numerics::integrate_partitioned(outer_f, outer, outer_spec).value;
}

using wide = boost::multiprecision::cpp_bin_float_50;

// 2 sum_n I_{n+1/2}(z) cos((n+1/2) gamma) in 50-digit arithmetic. Near
// gamma = pi the terms are ~e^z while the sum is ~e^{-z}, so double
// precision cannot resolve it for z of a few tens.
double omega_series_wide(double z, double gamma)
{
    const wide zw = z;
    const wide gw = gamma;
    wide sum = 0;
    wide largest = 0;
    for (int n = 0; n < 2000; ++n) {
        const wide order = wide(n) + wide(0.5);
        const wide term = boost::math::cyl_bessel_i(order, zw);
        largest = std::max(largest, term);
        sum += term * cos(order * gw);
        if (n > z && term < largest * wide("1e-45")) {
            return static_cast<double>(2 * sum);
        }
    }
    throw NonConvergence(static_cast<double>(2 * sum), static_cast<double>(largest));
}

double max_of(const std::vector<double>& v)
{
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

} // namespace

Suite parse_suite(const std::string& name)
{
    if (name == "specfun") return Suite::Specfun;
    if (name == "kernels") return Suite::Kernels;
    if (name == "coeff-pipeline") return Suite::CoeffPipeline;
    if (name == "all") return Suite::All;
    throw DomainError("unknown suite '" + name + "' (expected specfun, kernels, coeff-pipeline, all)");
}

std::string suite_name(Suite suite)
{
    switch (suite) {
    case Suite::Specfun: return "specfun";
    case Suite::Kernels: return "kernels";
    case Suite::CoeffPipeline: return "coeff-pipeline";
    case Suite::All: return "all";
    }
    return "all";
}

bool Criterion::pass() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool Report::pass() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.pass(); });
}

Criterion omega_identity(const Tolerances& tol)
{
    Criterion out{"AC-1", "Omega series vs closed form", {}};
    double worst = 0.0;
    double worst_double = 0.0;
    for (double z : {0.1, 0.5, 1.0, 3.0, 10.0, 30.0}) {
        for (double gamma : {-3.0, -1.5, 0.0, 0.8, 1.5, 3.0}) {
            const double closed = wedge::omega(z, gamma);
            const double series = omega_series_wide(z, gamma);
            const double floor = std::exp(z * std::cos(gamma)) * 1e-3;
            worst = std::max(worst, std::abs(series - closed) / std::max(std::abs(closed), floor));
            // The double-precision mode sum can only be held to the size of its terms.
            worst_double = std::max(worst_double,
                                    std::abs(wedge::omega_series(z, gamma) - series) / std::exp(z));
        }
    }
    out.checks.push_back(make_check("max relative deviation over 36 (z, gamma)", worst, 0.0,
                                    tol.omega_identity));
    out.checks.push_back(make_check("double-precision mode sum, deviation / e^z", worst_double, 0.0,
                                    tol.omega_identity));
    return out;
}

Criterion hankel_consistency(const Tolerances& tol)
{
    Criterion out{"AC-2", "radial modes vs Hankel quadrature", {}};
    struct Tuple {
        int n;
        double t, rho, rho_prime;
    };
    const std::array<Tuple, 6> tuples{{{1, 0.7, 1.2, 0.9},
                                       {2, 0.5, 1.0, 1.3},
                                       {3, 1.0, 2.0, 1.5},
                                       {1, 0.2, 0.5, 0.6},
                                       {4, 0.8, 2.5, 2.2},
                                       {2, 0.3, 0.8, 1.1}}};
    for (const auto& c : tuples) {
        const auto order = specfun::BesselOrder::half_integer(c.n);
        const auto integrand = [&](double mu) {
            if (mu <= 0.0) return 0.0;
            return mu * std::exp(-c.t * mu * mu) * specfun::bessel_j(order, mu * c.rho) *
                   specfun::bessel_j(order, mu * c.rho_prime);
        };
        // Beyond sqrt(40/t) the Gaussian factor is below e^{-40}.
        const double cut = std::sqrt(40.0 / c.t);
        const std::vector<double> points{0.0, 0.25 * cut, 0.5 * cut, cut, numerics::infinity};
        const double quad =
            numerics::integrate_partitioned(integrand, points, QuadratureSpec{1e-12, 1e-12, 40}).value;
        const double mode = wedge::radial_mode(c.n, c.t, c.rho, c.rho_prime);
        char name[96];
        std::snprintf(name, sizeof name, "n=%d t=%g rho=%g rho'=%g |mode - quadrature|", c.n, c.t,
                      c.rho, c.rho_prime);
        out.checks.push_back(make_check(name, std::abs(mode - quad), 0.0, tol.hankel));
    }
    return out;
}

Criterion pde_boundary_suite(const Tolerances& tol)
{
    Criterion out{"AC-3", "heat equation and boundary conditions by finite differences", {}};

    struct Sample {
        double t, rho, theta, rho_prime, theta_prime;
        VertexCondition vertex;
    };
    const std::vector<Sample> samples{
        {0.3, 1.0, 0.2, 1.2, -0.3, VertexCondition::regular()},
        {0.5, 0.8, -0.9, 1.1, 0.4, VertexCondition::regular()},
        {0.25, 1.5, 1.0, 1.3, 0.9, VertexCondition::regular()},
        {0.7, 2.0, -1.2, 1.6, -0.5, VertexCondition::regular()},
        {0.4, 1.2, 0.0, 0.9, 0.6, VertexCondition::robin(0.5)},
        {0.6, 0.9, -0.7, 1.4, -1.1, VertexCondition::robin(0.5)},
        {0.35, 1.7, 0.5, 1.0, -0.2, VertexCondition::robin(2.0)},
        {0.8, 1.1, 1.3, 2.1, 0.1, VertexCondition::robin(2.0)},
        {0.45, 1.3, -0.4, 1.3, 0.3, VertexCondition::robin(-1.0)},
        {0.3, 0.7, 0.8, 0.8, -1.3, VertexCondition::robin(0.0)},
    };

    // Psi_t - Psi_rr - Psi_r / rho - Psi_thth / rho^2 with central differences.
    double worst_heat = 0.0;
    for (const auto& p : samples) {
        const auto f = [&](double t, double rho, double theta) {
            return wedge::psi(t, rho, theta, p.rho_prime, p.theta_prime, p.vertex);
        };
        const double h = 1e-3;
        const double ht = 1e-3 * p.t;
        const double f0 = f(p.t, p.rho, p.theta);
        const double dt = (f(p.t + ht, p.rho, p.theta) - f(p.t - ht, p.rho, p.theta)) / (2.0 * ht);
        const double fr_plus = f(p.t, p.rho + h, p.theta);
        const double fr_minus = f(p.t, p.rho - h, p.theta);
        const double drr = (fr_plus - 2.0 * f0 + fr_minus) / (h * h);
        const double dr = (fr_plus - fr_minus) / (2.0 * h);
        const double dthth =
            (f(p.t, p.rho, p.theta + h) - 2.0 * f0 + f(p.t, p.rho, p.theta - h)) / (h * h);
        const double residual = dt - drr - dr / p.rho - dthth / (p.rho * p.rho);
        const double scale = std::abs(dt) + std::abs(drr) + std::abs(dr / p.rho) +
                             std::abs(dthth / (p.rho * p.rho));
        worst_heat = std::max(worst_heat, std::abs(residual) / scale);
    }
    out.checks.push_back(
        make_check("max heat residual / scale over 10 points", worst_heat, 0.0, tol.heat_residual));

    // Dirichlet side: exact zero expected.
    double worst_dirichlet = 0.0;
    for (const auto& p : samples) {
        worst_dirichlet = std::max(
            worst_dirichlet,
            std::abs(wedge::psi(p.t, p.rho, pi / 2, p.rho_prime, p.theta_prime, p.vertex)));
    }
    out.checks.push_back(make_check("max |Psi| at theta = pi/2", worst_dirichlet, 0.0,
                                    tol.dirichlet_side));

    // Neumann side: one-sided second-order difference into the wedge.
    double worst_neumann = 0.0;
    for (const auto& p : samples) {
        const double h = 1e-4;
        const auto f = [&](double theta) {
            return wedge::psi(p.t, p.rho, theta, p.rho_prime, p.theta_prime, p.vertex);
        };
        const double f0 = f(-pi / 2);
        const double deriv = (-3.0 * f0 + 4.0 * f(-pi / 2 + h) - f(-pi / 2 + 2.0 * h)) / (2.0 * h);
        worst_neumann = std::max(worst_neumann, std::abs(deriv) / std::abs(f0));
    }
    out.checks.push_back(make_check("max |d_theta Psi| / |Psi| at theta = -pi/2", worst_neumann,
                                    0.0, tol.neumann_side));

    // Vertex condition (d/drho - s) w = 0 for the half-line Robin kernel.
    for (double s : {-1.0, 0.0, 2.0}) {
        const double t = 0.3;
        const double rho_prime = 0.8;
        const double h = 1e-4;
        const auto w = [&](double rho) {
            return halfline::robin_w(t, rho, rho_prime, halfline::RobinParam{s});
        };
        const double w0 = w(0.0);
        const double deriv = (-3.0 * w0 + 4.0 * w(h) - w(2.0 * h)) / (2.0 * h);
        const double scale = std::abs(deriv) + std::abs(s * w0) + std::abs(w0);
        out.checks.push_back(make_check(fmt("s=%g |(d_rho - s) w| / scale at rho = 0", s),
                                        std::abs(deriv - s * w0) / scale, 0.0, tol.robin_vertex));
    }
    return out;
}

Criterion semigroup_and_delta(const Tolerances& tol)
{
    Criterion out{"AC-4", "semigroup property and delta initial condition", {}};
    const auto regular = VertexCondition::regular();

    const std::vector<double> theta_points{-pi / 2, -0.75, 0.0, 0.75, pi / 2};
    for (double t : {0.2, 0.3}) {
        const double rho = 1.0, theta = 0.3, rho2 = 1.3, theta2 = -0.4;
        const auto integrand = [&](double r, double th) {
            if (r <= 0.0) return 0.0;
            return wedge::psi(t, rho, theta, r, th, regular) *
                   wedge::psi(t, r, th, rho2, theta2, regular) * r;
        };
        const std::vector<double> rho_points{0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
        const double composed = integrate_2d(integrand, rho_points, theta_points, 1e-11, 1e-10);
        const double direct = wedge::psi(2.0 * t, rho, theta, rho2, theta2, regular);
        out.checks.push_back(make_check(fmt("t=t'=%g |composition - Psi(2t)|", t),
                                        std::abs(composed - direct), 0.0, tol.semigroup));
    }

    // Gaussian bump centred at Cartesian (5, 0); it is below e^{-25} on the
    // wedge boundary, so it is supported inside the wedge to double precision.
    const double x0 = 5.0;
    const double sigma = 0.7;
    const auto bump = [&](double r, double th) {
        const double dx = r * std::cos(th) - x0;
        const double dy = r * std::sin(th);
        return std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    };
    const auto ts = numerics::log_grid(1e-3, 1e-1, 5);
    std::vector<double> log_t, log_err;
    for (double t : ts) {
        const double w = std::sqrt(t);
        const auto integrand = [&](double r, double th) {
            return wedge::psi(t, x0, 0.0, r, th, VertexCondition::robin(1.0)) * bump(r, th) * r;
        };
        const double reach = 6.5 * sigma;
        const std::vector<double> rho_points{x0 - reach, x0 - 8.0 * w, x0 - 2.0 * w, x0,
                                             x0 + 2.0 * w, x0 + 8.0 * w, x0 + reach};
        const double a = std::asin(reach / x0);
        const std::vector<double> th_points{-a, -8.0 * w / x0, -2.0 * w / x0, 0.0,
                                            2.0 * w / x0, 8.0 * w / x0, a};
        const double value = integrate_2d(integrand, rho_points, th_points, 1e-11, 1e-10);
        log_t.push_back(std::log(t));
        log_err.push_back(std::log(std::abs(value - bump(x0, 0.0))));
    }
    const double mt = std::accumulate(log_t.begin(), log_t.end(), 0.0) / log_t.size();
    const double me = std::accumulate(log_err.begin(), log_err.end(), 0.0) / log_err.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < log_t.size(); ++i) {
        sxy += (log_t[i] - mt) * (log_err[i] - me);
        sxx += (log_t[i] - mt) * (log_t[i] - mt);
    }
    out.checks.push_back(
        make_check("delta error slope in log t over [1e-3, 1e-1]", sxy / sxx, 1.0, tol.delta_slope));
    return out;
}

Criterion strip_trace_identity(const Tolerances& tol)
{
    Criterion out{"AC-5", "strip trace closed form vs 2D quadrature of the diagonal", {}};
    const double eps3 = 1.0;
    const std::vector<double> rho_points{0.0, 0.1, 0.3, eps3};
    const std::vector<double> theta_points{-pi / 2, -1.0, 0.0, 1.0, pi / 2};
    for (const auto& vertex :
         {VertexCondition::robin(0.5), VertexCondition::robin(2.0), VertexCondition::regular()}) {
        const wedge::WedgeConfig cfg(2, 1, vertex);
        for (double t : {0.05, 0.1}) {
            const auto integrand = [&](double rho, double theta) {
                if (rho <= 0.0) return 0.0;
                return rho * wedge::mixed_diagonal(t, rho, theta, cfg);
            };
            const double quad = cfg.dim_v * integrate_2d(integrand, rho_points, theta_points, 1e-14, 1e-12);
            const double closed = wedge::strip_trace(t, eps3, cfg);
            out.checks.push_back(make_check(
                fmt("t=%g ", t) + vertex_label(vertex) + " relative deviation",
                std::abs(closed - quad) / std::abs(quad), 0.0, tol.strip_identity));
        }
    }
    return out;
}

Criterion robin_constant(const Tolerances& tol)
{
    Criterion out{"AC-6", "interface coefficient from the strip trace as t -> 0", {}};
    const double eps3 = 1.0;
    const double t_max = 1e-4;
    const coeffs::GeometryData g;
    for (double s : {0.5, 2.0, 10.0}) {
        const wedge::WedgeConfig cfg(2, 1, VertexCondition::robin(s));
        const auto lim = wedge::extract_strip_coefficient(cfg, eps3, t_max);
        out.checks.push_back(make_check(fmt("s=%g bracket", s), lim.bracket, 7.0 * pi / 4.0,
                                        tol.robin_bracket));
        out.checks.push_back(make_check(fmt("s=%g b2 (closed form %.4f)", s, 7.0 / 16.0), lim.b2,
                                        coeffs::sigma0_b2(g, cfg.vertex),
                                        tol.robin_bracket / (4.0 * pi)));
    }
    const wedge::WedgeConfig reg(2, 1, VertexCondition::regular());
    const auto lim = wedge::extract_strip_coefficient(reg, eps3, t_max);
    out.checks.push_back(make_check("regular bracket", lim.bracket, -pi / 4.0, tol.regular_bracket));
    out.checks.push_back(make_check("regular b2 closed form", coeffs::sigma0_b2(g, reg.vertex),
                                    -1.0 / 16.0, 0.0));
    return out;
}

Criterion spectral_pipeline(const Tolerances& tol, const RunOptions& options)
{
    Criterion out{"AC-7", "sector spectra -> corner system -> interface coefficient", {}};
    using spectra::SectorSpec;
    using BC = spectra::BoundaryCondition;
    const coeffs::GeometryData g;
    const auto grid = spectra::default_t_grid();
    const double lambda_max = 2e4;
    const spectra::EnumerationOptions enum_opts{options.threads};

    const std::array<SectorSpec, 4> specs{{{pi / 2, 1.0, BC::Dirichlet, BC::Dirichlet},
                                           {pi / 2, 1.0, BC::Dirichlet, BC::Neumann},
                                           {pi, 1.0, BC::Dirichlet, BC::Neumann},
                                           {pi / 3, 1.0, BC::Dirichlet, BC::Dirichlet}}};
    std::vector<spectra::SectorRun> runs;
    for (const auto& spec : specs) {
        runs.push_back({spec, spectra::extract_constant(spec, grid, g, lambda_max, enum_opts)});
    }

    const auto solution = spectra::solve_corner_system(std::span(runs).first(3));
    out.checks.push_back(make_check("b2 interface (Regular) = DN corner at pi",
                                    solution.value_of(coeffs::CornerType::DN, pi), -0.0625,
                                    tol.corner_b2));
    out.checks.push_back(make_check("DD corner at pi/2",
                                    solution.value_of(coeffs::CornerType::DD, pi / 2), 0.0625,
                                    tol.corner_dd));

    for (const auto& run : runs) {
        const auto& est = run.estimate;
        const double b0 = est.fit.coefficient_for(-1.0);
        const double b1 = est.fit.coefficient_for(-0.5);
        out.checks.push_back(make_check(run.spec.label() + " B0 relative deviation",
                                        std::abs(b0 - est.prediction.b0) / est.prediction.b0, 0.0,
                                        tol.weyl_b0));
        out.checks.push_back(make_check(run.spec.label() + " B1 relative deviation",
                                        std::abs(b1 - est.prediction.b1) / std::abs(est.prediction.b1),
                                        0.0, tol.perimeter_b1));
    }

    // Fourth run: same bookkeeping, DD corner at pi/3 against its classical value.
    const auto full = spectra::solve_corner_system(runs);
    const double alpha = pi / 3;
    out.checks.push_back(make_check("DD corner at pi/3 (four-run system)",
                                    full.value_of(coeffs::CornerType::DD, alpha),
                                    (pi * pi - alpha * alpha) / (24.0 * pi * alpha), tol.corner_dd));
    return out;
}

Criterion special_functions(const Tolerances& tol)
{
    Criterion out{"AC-8", "erfcx and Bessel zero completeness", {}};
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double z = 0.5 * i;
        const auto integrand = [z](double u) { return std::exp(-u * u - 2.0 * u * z); };
        const double scale = 1.0 / (1.0 + z);
        const std::vector<double> points{0.0, scale, 4.0 * scale, 16.0 * scale, numerics::infinity};
        const double oracle =
            2.0 / std::sqrt(pi) *
            numerics::integrate_partitioned(integrand, points, QuadratureSpec{1e-300, 1e-13, 40}).value;
        worst = std::max(worst, std::abs(specfun::erfcx(z) - oracle) / oracle);
    }
    out.checks.push_back(make_check("erfcx max relative error on [0, 30]", worst, 0.0, tol.erfcx));

    const auto zeros = specfun::bessel_j_zeros(specfun::BesselOrder::half_integer(0), 100.0 * pi);
    out.checks.push_back(make_check("zeros of J_1/2 up to 100 pi", static_cast<double>(zeros.size()),
                                    100.0, 0.0));
    std::vector<double> dev;
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        dev.push_back(std::abs(zeros[k] - (k + 1.0) * pi));
    }
    out.checks.push_back(make_check("max |x_k - k pi|", dev.empty() ? NAN : max_of(dev), 0.0,
                                    tol.bessel_zero));
    return out;
}

Criterion symmetries(const Tolerances& tol)
{
    Criterion out{"AC-9", "kernel symmetries", {}};
    struct Pair {
        double t, rho, theta, rho2, theta2;
    };
    const std::vector<Pair> pairs{{0.3, 1.0, 0.2, 1.4, -0.7},
                                  {0.05, 0.4, -1.3, 0.5, 1.1},
                                  {1.2, 2.5, 0.9, 0.3, -0.1},
                                  {0.01, 3.0, -0.2, 3.05, -0.25}};
    const std::vector<VertexCondition> vertices{VertexCondition::regular(), VertexCondition::robin(0.7),
                                                VertexCondition::robin(-0.5)};

    double worst_exchange = 0.0;
    for (const auto& v : vertices) {
        for (const auto& p : pairs) {
            const double a = wedge::psi(p.t, p.rho, p.theta, p.rho2, p.theta2, v);
            const double b = wedge::psi(p.t, p.rho2, p.theta2, p.rho, p.theta, v);
            worst_exchange = std::max(worst_exchange, std::abs(a - b) / std::max(1.0, std::abs(a)));
        }
    }
    out.checks.push_back(make_check("Psi exchange symmetry", worst_exchange, 0.0, tol.symmetry));

    double worst_period = 0.0, worst_flip = 0.0, worst_mirror = 0.0;
    for (const auto& v : vertices) {
        const wedge::WedgeConfig cfg(3, 1, v);
        for (const auto& pr : pairs) {
            const wedge::PolarPoint p{pr.rho, pr.theta, {0.1}};
            const wedge::PolarPoint q{pr.rho2, pr.theta2, {-0.2}};
            const double base = wedge::l_function(pr.t, p, q, cfg);
            const double norm = std::max(1.0, std::abs(base));
            auto shifted = q;
            shifted.theta += 4.0 * pi;
            worst_period = std::max(worst_period,
                                    std::abs(wedge::l_function(pr.t, p, shifted, cfg) - base) / norm);
            auto half_turn = q;
            half_turn.theta += 2.0 * pi;
            worst_flip = std::max(
                worst_flip, std::abs(wedge::l_function(pr.t, p, half_turn, cfg) + base) / norm);
            worst_mirror = std::max(
                worst_mirror,
                std::abs(wedge::l_function(pr.t, wedge::mirror(p), wedge::mirror(q), cfg) - base) / norm);
        }
    }
    out.checks.push_back(make_check("L periodicity theta' -> theta' + 4 pi", worst_period, 0.0,
                                    tol.symmetry));
    out.checks.push_back(make_check("L sign flip theta' -> theta' + 2 pi", worst_flip, 0.0,
                                    tol.symmetry));
    out.checks.push_back(make_check("L(Tp, Tq) = L(p, q)", worst_mirror, 0.0, tol.symmetry));

    double worst_odd = 0.0, worst_even = 0.0;
    for (double t : {0.1, 0.7, 3.0}) {
        for (double r : {0.2, 1.1, 2.5}) {
            for (double r2 : {0.4, 0.9, 3.0}) {
                const double d = halfline::dirichlet_kernel(t, r, r2);
                const double n = halfline::neumann_kernel(t, r, r2);
                const double scale = std::max(std::abs(d), 1e-300);
                worst_odd = std::max({worst_odd,
                                      std::abs(halfline::dirichlet_kernel(t, -r, r2) + d) / scale,
                                      std::abs(halfline::dirichlet_kernel(t, r, -r2) + d) / scale});
                worst_even = std::max({worst_even,
                                       std::abs(halfline::neumann_kernel(t, -r, r2) - n) / n,
                                       std::abs(halfline::neumann_kernel(t, r, -r2) - n) / n});
            }
        }
    }
    out.checks.push_back(make_check("Dirichlet kernel oddness", worst_odd, 0.0, tol.parity));
    out.checks.push_back(make_check("Neumann kernel evenness", worst_even, 0.0, tol.parity));
    return out;
}

Report run_suite(Suite suite, const Tolerances& tol, const RunOptions& options)
{
    Report report{suite, {}};
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Specfun) {
        report.criteria.push_back(omega_identity(tol));
        report.criteria.push_back(special_functions(tol));
    }
    if (all || suite == Suite::Kernels) {
        report.criteria.push_back(hankel_consistency(tol));
        report.criteria.push_back(pde_boundary_suite(tol));
        report.criteria.push_back(semigroup_and_delta(tol));
        report.criteria.push_back(strip_trace_identity(tol));
        report.criteria.push_back(symmetries(tol));
    }
    if (all || suite == Suite::CoeffPipeline) {
        report.criteria.push_back(robin_constant(tol));
        report.criteria.push_back(spectral_pipeline(tol, options));
    }
    std::sort(report.criteria.begin(), report.criteria.end(),
              [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    return report;
}

std::string format_report(const Report& report)
{
    std::string text;
    char line[256];
    for (const auto& c : report.criteria) {
        text += c.id + (c.pass() ? " PASS  " : " FAIL  ") + c.title + "\n";
        for (const auto& k : c.checks) {
            std::snprintf(line, sizeof line, "    [%s] %s: measured %.10g, target %.10g, tolerance %.3g\n",
                          k.pass ? "ok" : "FAIL", k.name.c_str(), k.measured, k.target, k.tolerance);
            text += line;
        }
    }
    return text;
}

nlohmann::ordered_json to_json(const Report& report)
{
    nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
    for (const auto& c : report.criteria) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& k : c.checks) {
            checks.push_back({{"name", k.name},
                              {"measured", k.measured},
                              {"target", k.target},
                              {"tolerance", k.tolerance},
                              {"pass", k.pass}});
        }
        criteria.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}});
    }
    return {{"suite", suite_name(report.suite)}, {"pass", report.pass()}, {"criteria", criteria}};
}

nlohmann::ordered_json to_json(const Tolerances& tol)
{
    return {{"omega_identity", tol.omega_identity}, {"hankel", tol.hankel},
            {"heat_residual", tol.heat_residual},   {"dirichlet_side", tol.dirichlet_side},
            {"neumann_side", tol.neumann_side},     {"robin_vertex", tol.robin_vertex},
            {"semigroup", tol.semigroup},           {"delta_slope", tol.delta_slope},
            {"strip_identity", tol.strip_identity}, {"robin_bracket", tol.robin_bracket},
            {"regular_bracket", tol.regular_bracket}, {"corner_b2", tol.corner_b2},
            {"weyl_b0", tol.weyl_b0},               {"perimeter_b1", tol.perimeter_b1},
            {"corner_dd", tol.corner_dd},           {"erfcx", tol.erfcx},
            {"bessel_zero", tol.bessel_zero},       {"symmetry", tol.symmetry},
            {"parity", tol.parity}};
}

} // namespace zaremba::verify
