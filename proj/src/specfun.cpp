#include "zaremba/specfun.hpp"

#include "zaremba/error.hpp"
#include "zaremba/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace zaremba::specfun {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt_pi = std::numbers::inv_sqrtpi;
constexpr double max_exp_argument = 709.0;

// Continued fraction erfcx(z) = (1/sqrt(pi)) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
// modified Lentz evaluation.
double erfcx_continued_fraction(double z)
{
    constexpr double tiny = 1e-300;
    double f = z;
    double c = z;
    double d = 0.0;
    for (int k = 1; k < 2000; ++k) {
        const double a = 0.5 * k;
        d = z + a * d;
        d = d == 0.0 ? tiny : d;
        c = z + a / c;
        c = c == 0.0 ? tiny : c;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return inv_sqrt_pi / f;
}

double i_half_scaled_closed(int n, double z)
{
    // e^{-z} I_{n+1/2}(z) = (2 pi z)^{-1/2} [ sum_k (-1)^k c_k (2z)^{-k}
    //                       + (-1)^{n+1} e^{-2z} sum_k c_k (2z)^{-k} ],
    // c_k = (n+k)! / (k! (n-k)!).
    if (n == 0) {
        return std::sqrt(2.0 / (pi * z)) * (-0.5 * std::expm1(-2.0 * z));
    }
    double alternating = 0.0;
    double plain = 0.0;
    double term = 1.0;
    for (int k = 0; k <= n; ++k) {
        alternating += (k % 2 == 0 ? term : -term);
        plain += term;
        term *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) /
                (static_cast<double>(k + 1) * 2.0 * z);
    }
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return (alternating + sign * std::exp(-2.0 * z) * plain) / std::sqrt(2.0 * pi * z);
}

// I_{nu}/I_{nu-1} by its continued fraction 1/(2nu/z + 1/(2(nu+1)/z + ...)).
double i_ratio(double nu, double z)
{
    constexpr double tiny = 1e-300;
    double f = tiny;
    double c = f;
    double d = 0.0;
    for (int k = 0; k < 1000000; ++k) {
        const double b = 2.0 * (nu + k) / z;
        d = b + d;
        d = d == 0.0 ? tiny : d;
        c = b + 1.0 / c;
        c = c == 0.0 ? tiny : c;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            return f;
        }
    }
    throw Error("continued fraction for I_nu ratio did not converge");
}

double j_series(double nu, double x)
{
    const double q = -0.25 * x * x;
    double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

int miller_start(double order, double x)
{
    const double top = std::max(order, x);
    int start = static_cast<int>(std::ceil(top + 10.0 * std::cbrt(top) + 20.0));
    return start + (start % 2);
}

constexpr double rescale_limit = 1e250;

// Spherical Bessel j_n(x) for x > 2.
double spherical_j(int n, double x)
{
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double j0 = s / x;
    const double j1 = s / (x * x) - c / x;
    if (n == 0) {
        return j0;
    }
    if (n == 1) {
        return j1;
    }
    if (n <= x) {
        double prev = j0;
        double cur = j1;
        for (int k = 1; k < n; ++k) {
            const double next = (2.0 * k + 1.0) / x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // Miller: backward from a high start, scaled to match j0 and j1 in the
    // least-squares sense so a zero of either does not spoil normalisation.
    const int start = miller_start(n, x);
    double above = 0.0;
    double cur = 1.0;
    double at_n = 0.0;
    for (int k = start; k >= 1; --k) {
        const double below = (2.0 * k + 1.0) / x * cur - above;
        above = cur;
        cur = below;
        if (k - 1 == n) {
            at_n = cur;
        }
        if (std::abs(cur) > rescale_limit) {
            cur /= rescale_limit;
            above /= rescale_limit;
            at_n /= rescale_limit;
        }
    }
    // Now cur = f_0, above = f_1.
    const double f0 = cur;
    const double f1 = above;
    if (n == 1) {
        at_n = f1;
    }
    const double scale = (f0 * j0 + f1 * j1) / (f0 * f0 + f1 * f1);
    return at_n * scale;
}

// Integer-order J_n(x) for x > 2 by Miller's algorithm normalised with
// J_0 + 2 sum_k J_{2k} = 1.
double integer_j_miller(int n, double x)
{
    const int start = miller_start(n, x);
    double above = 0.0;
    double cur = 1.0;
    double at_n = 0.0;
    double norm = 2.0 * cur;
    for (int k = start; k >= 1; --k) {
        const double below = 2.0 * k / x * cur - above;
        above = cur;
        cur = below;
        if (k - 1 == n) {
            at_n = cur;
        }
        if ((k - 1) % 2 == 0) {
            norm += (k - 1 == 0) ? cur : 2.0 * cur;
        }
        if (std::abs(cur) > rescale_limit) {
            cur /= rescale_limit;
            above /= rescale_limit;
            at_n /= rescale_limit;
            norm /= rescale_limit;
        }
    }
    return at_n / norm;
}

} // namespace

double erf(double x)
{
    return std::erf(x);
}

double erfc(double x)
{
    return std::erfc(x);
}

double erfcx(double z)
{
    if (std::isnan(z)) {
        return z;
    }
    if (z >= erfcx_series_threshold) {
        return erfcx_continued_fraction(z);
    }
    if (z > -erfcx_series_threshold) {
        return std::exp(z * z) * std::erfc(z);
    }
    if (z * z > max_exp_argument) {
        throw Overflow("erfcx: e^{z^2} is not representable for z=" + std::to_string(z));
    }
    return 2.0 * std::exp(z * z) - erfcx_continued_fraction(-z);
}

std::vector<double> bessel_i_half_scaled_sequence(int n_max, double z)
{
    if (n_max < 0) {
        throw DomainError("bessel_i_half_scaled: order index must be >= 0");
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("bessel_i_half_scaled: argument must be positive and finite");
    }
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    if (z >= 2.0 * n_max * (n_max + 1.0)) {
        for (int k = 0; k <= n_max; ++k) {
            out[static_cast<std::size_t>(k)] = i_half_scaled_closed(k, z);
        }
        return out;
    }
    // Downward recurrence I_{nu-1} = I_{nu+1} + (2 nu / z) I_nu has only
    // positive terms, so it is stable; seed it with the continued fraction
    // for I_{N+1/2}/I_{N-1/2} and normalise at order 1/2.
    std::vector<double> f(static_cast<std::size_t>(n_max) + 2);
    f[static_cast<std::size_t>(n_max)] = 1.0;
    f[static_cast<std::size_t>(n_max) + 1] = i_ratio(n_max + 1.5, z);
    for (int k = n_max; k >= 1; --k) {
        const auto uk = static_cast<std::size_t>(k);
        f[uk - 1] = f[uk + 1] + (2.0 * k + 1.0) / z * f[uk];
        if (f[uk - 1] > rescale_limit) {
            for (std::size_t j = uk - 1; j < f.size(); ++j) {
                f[j] /= rescale_limit;
            }
        }
    }
    const double scale = i_half_scaled_closed(0, z) / f[0];
    for (int k = 0; k <= n_max; ++k) {
        out[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] * scale;
    }
    return out;
}

double bessel_i_half_scaled(int n, double z)
{
    if (n < 0) {
        throw DomainError("bessel_i_half_scaled: order index must be >= 0");
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("bessel_i_half_scaled: argument must be positive and finite");
    }
    if (n == 0 || z >= 2.0 * n * (n + 1.0)) {
        return i_half_scaled_closed(n, z);
    }
    return bessel_i_half_scaled_sequence(n, z).back();
}

BesselOrder::BesselOrder(int twice) : twice_(twice)
{
    if (twice < 0) {
        throw DomainError("Bessel order must be non-negative");
    }
}

BesselOrder BesselOrder::integer(int n)
{
    return BesselOrder(2 * n);
}

BesselOrder BesselOrder::half_integer(int n)
{
    return BesselOrder(2 * n + 1);
}

BesselOrder BesselOrder::from_value(double nu)
{
    const double twice = 2.0 * nu;
    const double rounded = std::round(twice);
    if (!(nu >= -1e-9) || std::abs(twice - rounded) > 2e-9) {
        throw DomainError("Bessel order must be a non-negative integer or half-integer, got " +
                          std::to_string(nu));
    }
    return BesselOrder(static_cast<int>(rounded));
}

double bessel_j(BesselOrder nu, double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("bessel_j: argument must be positive and finite");
    }
    if (x <= 2.0) {
        return j_series(nu.value(), x);
    }
    if (nu.is_half_integer()) {
        return std::sqrt(2.0 * x / pi) * spherical_j(nu.floor(), x);
    }
    return integer_j_miller(nu.floor(), x);
}

std::vector<double> bessel_j_zeros(BesselOrder nu, double x_max)
{
    constexpr double step = 0.5;
    constexpr double slack = 1e-10;
    constexpr double root_tol = 1e-13;
    std::vector<double> zeros;
    // J_nu has no zero in (0, nu], and consecutive zeros are more than
    // 2 * step apart for every order, so each step brackets at most one.
    double a = std::max(nu.value(), 1e-3);
    const double end = x_max + slack;
    if (!(end > a)) {
        return zeros;
    }
    auto f = [nu](double x) { return bessel_j(nu, x); };
    double fa = f(a);
    while (a < end) {
        const double b = std::min(a + step, end);
        const double fb = f(b);
        if (fb == 0.0) {
            zeros.push_back(b);
        } else if (fa != 0.0 && std::signbit(fa) != std::signbit(fb)) {
            zeros.push_back(numerics::find_root(f, a, b, root_tol));
        }
        a = b;
        fa = fb;
    }
    return zeros;
}

bool zeros_interlace(std::span<const double> zeros, std::span<const double> zeros_next)
{
    const std::size_t n = zeros.size();
    const std::size_t m = zeros_next.size();
    if (m > n || n > m + 1) {
        return false;
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (!(zeros[k] < zeros_next[k])) {
            return false;
        }
        if (k + 1 < n && !(zeros_next[k] < zeros[k + 1])) {
            return false;
        }
    }
    return true;
}

} // namespace zaremba::specfun
