#include "zaremba/wedge.hpp"

#include "zaremba/error.hpp"
#include "zaremba/halfline.hpp"
#include "zaremba/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zaremba::wedge {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double angle_slack = 1e-12;

void require_wedge_angle(double theta)
{
    if (!(std::abs(theta) <= 0.5 * pi + angle_slack)) {
        throw DomainError("angle " + std::to_string(theta) +
                          " lies outside [-pi/2, pi/2]; mirror images go through l_function");
    }
}

void require_positive_radius(double rho, const char* what)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

// Upper bound on I_{nu+1}(z) / I_nu(z) for nu = n + 1/2.
double bessel_ratio_bound(int n, double z)
{
    const double next = n + 1.5;
    return z / (next + std::hypot(next, z));
}

int mode_count(double z)
{
    return static_cast<int>(std::ceil(z + 12.0 * std::sqrt(z) + 40.0));
}

// exp(-(rho^2 + rho'^2 - 2 rho rho' cos gamma)/4t) * erf(sqrt(rho rho'/t) cos(gamma/2)):
// the Omega term with its Gaussian envelope folded in.
double paired_omega(double t, double rho, double rho_prime, double gamma)
{
    const double half = 0.5 * gamma;
    const double sin_half = std::sin(half);
    const double d = rho - rho_prime;
    const double dist2 = d * d + 4.0 * rho * rho_prime * sin_half * sin_half;
    return std::exp(-dist2 / (4.0 * t)) * std::erf(std::sqrt(rho * rho_prime / t) * std::cos(half));
}

double psi_closed_form(double t, double rho, double theta, double rho_prime, double theta_prime,
                       const VertexCondition& vertex)
{
    const double g1 = theta - theta_prime;
    const double g2 = theta + theta_prime + pi;
    double value = paired_omega(t, rho, rho_prime, g1) + paired_omega(t, rho, rho_prime, g2);
    if (!vertex.is_regular()) {
        value += phi(t, rho, rho_prime, vertex) * (std::cos(0.5 * g1) + std::cos(0.5 * g2));
    }
    return value / (4.0 * pi * t);
}

double psi_mode_sum(double t, double rho, double theta, double rho_prime, double theta_prime,
                    const VertexCondition& vertex)
{
    require_positive_radius(rho, "rho");
    require_positive_radius(rho_prime, "rho'");
    const double z = rho * rho_prime / (2.0 * t);
    const int n_max = mode_count(z);
    const auto scaled = specfun::bessel_i_half_scaled_sequence(n_max, z);
    const double d = rho - rho_prime;
    const double envelope = std::exp(-d * d / (4.0 * t)) / (2.0 * t);

    numerics::CompensatedSum sum;
    sum.add(angular_eigenfunction(0, theta) * angular_eigenfunction(0, theta_prime) *
            radial_mode_0(t, rho, rho_prime, vertex));
    double largest = scaled[0];
    for (int n = 1; n <= n_max; ++n) {
        const double s_n = scaled[static_cast<std::size_t>(n)];
        largest = std::max(largest, s_n);
        sum.add(angular_eigenfunction(n, theta) * angular_eigenfunction(n, theta_prime) * envelope *
                s_n);
        if (n + 1.5 > z) {
            const double q = bessel_ratio_bound(n, z);
            if (s_n * q / (1.0 - q) < 1e-16 * largest) {
                return sum.value();
            }
        }
    }
    throw NonConvergence(sum.value(), envelope * scaled.back());
}

double l_function_unchecked(double t, const PolarPoint& p, const PolarPoint& q, const WedgeConfig& cfg)
{
    double transverse2 = 0.0;
    for (std::size_t i = 0; i < p.transverse.size(); ++i) {
        const double dx = p.transverse[i] - q.transverse[i];
        transverse2 += dx * dx;
    }
    const double gamma = p.theta - q.theta;
    double value = paired_omega(t, p.rho, q.rho, gamma);
    if (!cfg.vertex.is_regular()) {
        value += phi(t, p.rho, q.rho, cfg.vertex) * std::cos(0.5 * gamma);
    }
    return std::pow(4.0 * pi * t, -0.5 * cfg.m) * std::exp(-transverse2 / (4.0 * t)) * value;
}

void check_point(const PolarPoint& p, const WedgeConfig& cfg)
{
    if (p.transverse.size() != static_cast<std::size_t>(cfg.m - 2)) {
        throw DimensionMismatch("point has " + std::to_string(p.transverse.size()) +
                                " interface coordinates, expected m-2 = " +
                                std::to_string(cfg.m - 2));
    }
    if (!(p.rho >= 0.0) || !std::isfinite(p.rho) || !std::isfinite(p.theta)) {
        throw DomainError("polar point needs finite rho >= 0 and finite theta");
    }
}

} // namespace

VertexCondition VertexCondition::robin(double s)
{
    if (!std::isfinite(s)) {
        throw DomainError("Robin parameter must be finite");
    }
    return VertexCondition(Robin{s});
}

double VertexCondition::s() const
{
    if (const auto* r = std::get_if<Robin>(&state_)) {
        return r->s;
    }
    throw DomainError("the regular vertex condition has no Robin parameter");
}

PolarPoint mirror(const PolarPoint& p)
{
    return PolarPoint{p.rho, -p.theta - pi, p.transverse};
}

WedgeConfig::WedgeConfig(int ambient_dimension, int fiber_dimension, VertexCondition vertex_condition)
    : m(ambient_dimension), dim_v(fiber_dimension), vertex(vertex_condition)
{
    if (m < 2) {
        throw DomainError("ambient dimension m must be at least 2");
    }
    if (dim_v < 1) {
        throw DomainError("fiber dimension must be at least 1");
    }
}

double angular_eigenvalue(int n)
{
    if (n < 0) {
        throw DomainError("angular mode index must be >= 0");
    }
    const double nu = n + 0.5;
    return nu * nu;
}

double angular_eigenfunction(int n, double theta)
{
    if (n < 0) {
        throw DomainError("angular mode index must be >= 0");
    }
    require_wedge_angle(theta);
    return std::sqrt(2.0 / pi) * std::cos((n + 0.5) * (theta + 0.5 * pi));
}

double radial_mode(int n, double t, double rho, double rho_prime)
{
    if (n < 1) {
        throw DomainError("radial_mode covers n >= 1; use radial_mode_0 for n = 0");
    }
    halfline::require_positive_time(t);
    require_positive_radius(rho, "rho");
    require_positive_radius(rho_prime, "rho'");
    const double z = rho * rho_prime / (2.0 * t);
    const double d = rho - rho_prime;
    return std::exp(-d * d / (4.0 * t)) / (2.0 * t) * specfun::bessel_i_half_scaled(n, z);
}

double radial_mode_0(double t, double rho, double rho_prime, const VertexCondition& vertex)
{
    halfline::require_positive_time(t);
    require_positive_radius(rho, "rho");
    require_positive_radius(rho_prime, "rho'");
    const double w = vertex.is_regular()
                         ? halfline::dirichlet_kernel(t, rho, rho_prime)
                         : halfline::robin_w(t, rho, rho_prime, halfline::RobinParam{vertex.s()});
    return w / std::sqrt(rho * rho_prime);
}

double omega(double z, double gamma)
{
    if (!(z >= 0.0)) {
        throw DomainError("omega requires z >= 0");
    }
    return std::exp(z * std::cos(gamma)) * std::erf(std::sqrt(2.0 * z) * std::cos(0.5 * gamma));
}

double omega_series(double z, double gamma, double tol)
{
    if (!(z >= 0.0)) {
        throw DomainError("omega requires z >= 0");
    }
    if (z == 0.0) {
        return 0.0;
    }
    const int n_max = mode_count(z);
    const auto scaled = specfun::bessel_i_half_scaled_sequence(n_max, z);
    numerics::CompensatedSum sum;
    double largest = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double s_n = scaled[static_cast<std::size_t>(n)];
        largest = std::max(largest, s_n);
        sum.add(s_n * std::cos((n + 0.5) * gamma));
        if (n + 1.5 > z) {
            const double q = bessel_ratio_bound(n, z);
            if (s_n * q / (1.0 - q) < tol * largest) {
                return 2.0 * std::exp(z) * sum.value();
            }
        }
    }
    throw NonConvergence(2.0 * std::exp(z) * sum.value(), 2.0 * std::exp(z) * scaled.back());
}

double phi(double t, double rho, double rho_prime, const VertexCondition& vertex)
{
    halfline::require_positive_time(t);
    if (vertex.is_regular()) {
        return 0.0;
    }
    require_positive_radius(rho, "rho");
    require_positive_radius(rho_prime, "rho'");
    const double a = rho + rho_prime;
    const double image = std::exp(-a * a / (4.0 * t)) - halfline::robin_image_tail(t, a, vertex.s());
    return 4.0 / std::sqrt(pi) * std::sqrt(t / (rho * rho_prime)) * image;
}

double psi(double t, double rho, double theta, double rho_prime, double theta_prime,
           const VertexCondition& vertex, PsiMethod method)
{
    halfline::require_positive_time(t);
    require_wedge_angle(theta);
    require_wedge_angle(theta_prime);
    if (!(rho >= 0.0) || !(rho_prime >= 0.0)) {
        throw DomainError("psi requires rho, rho' >= 0");
    }
    if (method == PsiMethod::ModeSum) {
        return psi_mode_sum(t, rho, theta, rho_prime, theta_prime, vertex);
    }
    return psi_closed_form(t, rho, theta, rho_prime, theta_prime, vertex);
}

double l_function(double t, const PolarPoint& p, const PolarPoint& q, const WedgeConfig& cfg)
{
    halfline::require_positive_time(t);
    check_point(p, cfg);
    check_point(q, cfg);
    return l_function_unchecked(t, p, q, cfg);
}

double mixed_parametrix(double t, const PolarPoint& p, const PolarPoint& q, const WedgeConfig& cfg)
{
    halfline::require_positive_time(t);
    check_point(p, cfg);
    check_point(q, cfg);
    return l_function_unchecked(t, p, q, cfg) + l_function_unchecked(t, p, mirror(q), cfg);
}

double mixed_diagonal(double t, double rho, double theta, const WedgeConfig& cfg)
{
    halfline::require_positive_time(t);
    if (!(rho >= 0.0)) {
        throw DomainError("mixed_diagonal requires rho >= 0");
    }
    const double root_t = std::sqrt(t);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double value = std::erf(rho / root_t) - std::exp(-rho * rho * c * c / t) * std::erf(rho * s / root_t);
    if (!cfg.vertex.is_regular()) {
        value += (1.0 - s) * phi(t, rho, rho, cfg.vertex);
    }
    return std::pow(4.0 * pi * t, -0.5 * cfg.m) * value;
}

double strip_remainder(double t, double eps3, const VertexCondition& vertex)
{
    halfline::require_positive_time(t);
    if (!(eps3 > 0.0)) {
        throw DomainError("strip radius must be positive");
    }
    const double root_t = std::sqrt(t);
    double x = 0.5 * std::sqrt(pi * t) * eps3 * std::exp(-eps3 * eps3 / t) +
               (0.25 * pi * t - 0.5 * pi * eps3 * eps3) * std::erfc(eps3 / root_t);
    if (!vertex.is_regular()) {
        x -= 2.0 * pi * t * halfline::robin_image_product(t, 2.0 * eps3, vertex.s());
    }
    return x;
}

double strip_trace(double t, double eps3, const WedgeConfig& cfg)
{
    halfline::require_positive_time(t);
    double bracket = -0.25 * pi;
    if (!cfg.vertex.is_regular()) {
        bracket += 2.0 * pi * specfun::erfcx(std::sqrt(t) * cfg.vertex.s());
    }
    const double braces = 0.5 * pi * eps3 * eps3 + t * bracket + strip_remainder(t, eps3, cfg.vertex);
    return std::pow(4.0 * pi * t, -0.5 * cfg.m) * cfg.dim_v * braces;
}

StripLimit extract_strip_coefficient(const WedgeConfig& cfg, double eps3, double t_max, int points)
{
    halfline::require_positive_time(t_max);
    const auto grid = numerics::log_grid(t_max / 100.0, t_max, points);
    std::vector<numerics::FitSample> samples;
    samples.reserve(grid.size());
    const double area = 0.5 * pi * eps3 * eps3;
    for (double t : grid) {
        const double braces = strip_trace(t, eps3, cfg) * std::pow(4.0 * pi * t, 0.5 * cfg.m) / cfg.dim_v;
        samples.push_back({t, (braces - area) / t, 1.0});
    }
    const std::vector<double> exponents{0.0, 0.5, 1.0, 1.5, 2.0};
    StripLimit out{};
    out.fit = numerics::fit_powers(samples, exponents);
    out.bracket = out.fit.coefficient_for(0.0);
    out.bracket_stderr = out.fit.stderr_for(0.0);
    out.b2 = std::pow(4.0 * pi, -0.5 * cfg.m) * cfg.dim_v * out.bracket;
    return out;
}

} // namespace zaremba::wedge
