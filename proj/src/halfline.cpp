#include "zaremba/halfline.hpp"

#include "zaremba/error.hpp"
#include "zaremba/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zaremba::halfline {

namespace {

constexpr double pi = std::numbers::pi;

double gauss_prefactor(double t)
{
    return 1.0 / std::sqrt(4.0 * pi * t);
}

} // namespace

void require_positive_time(double t)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw NonpositiveTime(t);
    }
}

double free_kernel(double t, double x, double x_prime)
{
    require_positive_time(t);
    const double d = x - x_prime;
    return gauss_prefactor(t) * std::exp(-d * d / (4.0 * t));
}

double dirichlet_kernel(double t, double r, double r_prime)
{
    require_positive_time(t);
    // e^{-(r-r')^2/4t} - e^{-(r+r')^2/4t} = e^{-(r-r')^2/4t} (1 - e^{-r r'/t})
    const double d = r - r_prime;
    return gauss_prefactor(t) * std::exp(-d * d / (4.0 * t)) * -std::expm1(-r * r_prime / t);
}

double neumann_kernel(double t, double r, double r_prime)
{
    require_positive_time(t);
    const double d = r - r_prime;
    const double a = r + r_prime;
    return gauss_prefactor(t) * (std::exp(-d * d / (4.0 * t)) + std::exp(-a * a / (4.0 * t)));
}

double robin_image_product(double t, double a, double s)
{
    require_positive_time(t);
    if (s < 0.0 && t * s * s > robin_exponent_bound) {
        throw Overflow("Robin kernel: t*s^2 = " + std::to_string(t * s * s) +
                       " exceeds the representability bound for s < 0");
    }
    const double root_t = std::sqrt(t);
    const double z = a / (2.0 * root_t) + s * root_t;
    const double gauss = std::exp(-a * a / (4.0 * t));
    if (z > -specfun::erfcx_series_threshold) {
        return gauss * specfun::erfcx(z);
    }
    // erfcx(z) = 2 e^{z^2} - erfcx(-z) and e^{-a^2/4t} e^{z^2} = e^{t s^2 + a s}
    return 2.0 * std::exp(t * s * s + a * s) - gauss * specfun::erfcx(-z);
}

double robin_image_tail(double t, double a, double s)
{
    if (s == 0.0) {
        require_positive_time(t);
        return 0.0;
    }
    return std::sqrt(pi * t) * s * robin_image_product(t, a, s);
}

double robin_w(double t, double rho, double rho_prime, RobinParam s)
{
    require_positive_time(t);
    const double d = rho - rho_prime;
    const double a = rho + rho_prime;
    return gauss_prefactor(t) * (std::exp(-d * d / (4.0 * t)) + std::exp(-a * a / (4.0 * t)) -
                                 2.0 * robin_image_tail(t, a, s.s));
}

} // namespace zaremba::halfline
