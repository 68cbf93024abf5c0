#pragma once

namespace zaremba::halfline {

/// Robin parameter s of the vertex condition (d/drho - s) w = 0, in inverse
/// length units. Any finite sign is allowed.
struct RobinParam {
    double s;
};

/// Largest t*s^2 accepted for s < 0. Beyond it the e^{t s^2} growth of the
/// Robin image term swamps double precision and the kernels refuse to
/// evaluate rather than return noise.
inline constexpr double robin_exponent_bound = 600.0;

/// Free one-dimensional heat kernel (4 pi t)^{-1/2} exp(-(x-x')^2 / 4t).
double free_kernel(double t, double x, double x_prime);

/// Half-line kernel with w(0) = 0 (odd image). Defined for all real r, r'
/// and odd in each.
double dirichlet_kernel(double t, double r, double r_prime);

/// Half-line kernel with w'(0) = 0 (even image).
double neumann_kernel(double t, double r, double r_prime);

/// Half-line kernel with (d/drho - s) w = 0 at rho = 0. Equals the Neumann
/// kernel at s = 0 and tends to the Dirichlet kernel as s -> +infinity.
double robin_w(double t, double rho, double rho_prime, RobinParam s);

/// exp(t s^2 + a s) * erfc(a / (2 sqrt t) + s sqrt t), evaluated as
/// e^{-a^2/4t} erfcx(.) (or its reflection for very negative arguments).
/// Throws Overflow when s < 0 and t s^2 > robin_exponent_bound.
double robin_image_product(double t, double a, double s);

/// sqrt(pi t) * s * exp(t s^2 + a s) * erfc(a / (2 sqrt t) + s sqrt t),
/// assembled as sqrt(pi t) s e^{-a^2/4t} erfcx(.) so it never overflows for
/// s >= 0. Throws Overflow when s < 0 and t s^2 > robin_exponent_bound.
double robin_image_tail(double t, double a, double s);

/// Throws NonpositiveTime unless t > 0 and finite.
void require_positive_time(double t);

} // namespace zaremba::halfline
