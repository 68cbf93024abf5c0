#include "zaremba/error.hpp"
#include "zaremba/halfline.hpp"
#include "zaremba/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

using namespace zaremba;
using namespace zaremba::halfline;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

namespace {

using Kernel = std::function<double(double, double, double)>;

double heat_residual(const Kernel& k, double t, double r, double r2)
{
    const double h = 1e-3;
    const double ht = 1e-4;
    const double dt = (k(t + ht, r, r2) - k(t - ht, r, r2)) / (2.0 * ht);
    const double drr = (k(t, r + h, r2) - 2.0 * k(t, r, r2) + k(t, r - h, r2)) / (h * h);
    return std::abs(dt - drr) / (std::abs(dt) + std::abs(drr));
}

double half_line_integral(const std::function<double(double)>& f)
{
    return numerics::integrate_partitioned(f, std::vector<double>{0.0, 1.0, 3.0, 8.0, numerics::infinity},
                                           {1e-13, 1e-12, 40})
        .value;
}

} // namespace

TEST_CASE("free kernel")
{
    CHECK(free_kernel(1.0, 0.3, 0.3) == Approx(1.0 / std::sqrt(4.0 * pi)).epsilon(1e-15));
    CHECK(free_kernel(0.7, 0.2, 1.5) == free_kernel(0.7, 1.5, 0.2));
    const double mass = numerics::integrate_adaptive([](double x) { return free_kernel(1.0, x, 0.0); }, 0.0,
                                                     numerics::infinity);
    CHECK(2.0 * mass == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(free_kernel(0.0, 0.0, 0.0), NonpositiveTime);
    CHECK_THROWS_AS(free_kernel(-1.0, 0.0, 0.0), NonpositiveTime);
    CHECK_THROWS_AS(free_kernel(NAN, 0.0, 0.0), NonpositiveTime);
}

TEST_CASE("Dirichlet kernel")
{
    CHECK(dirichlet_kernel(1.0, 0.0, 1.0) == 0.0);
    CHECK(dirichlet_kernel(1.0, 1.0, 0.0) == 0.0);
    CHECK(dirichlet_kernel(1.0, 1.0, 1.0) == Approx((1.0 - std::exp(-1.0)) / std::sqrt(4.0 * pi)).epsilon(1e-15));
    CHECK(dirichlet_kernel(0.4, -0.6, 1.1) == Approx(-dirichlet_kernel(0.4, 0.6, 1.1)).epsilon(1e-15));
    CHECK(heat_residual(dirichlet_kernel, 0.3, 0.7, 1.1) <= 1e-5);
    // tiny r r'/t keeps relative accuracy through expm1
    const double tiny = dirichlet_kernel(1.0, 1e-9, 1e-9);
    CHECK(tiny == Approx(1e-18 / std::sqrt(4.0 * pi)).epsilon(1e-8));
    CHECK_THROWS_AS(dirichlet_kernel(0.0, 1.0, 1.0), NonpositiveTime);
}

TEST_CASE("Neumann kernel")
{
    CHECK(neumann_kernel(1.0, 1.0, 1.0) == Approx((1.0 + std::exp(-1.0)) / std::sqrt(4.0 * pi)).epsilon(1e-15));
    const double h = 1e-5;
    const double deriv = (neumann_kernel(0.5, h, 0.8) - neumann_kernel(0.5, -h, 0.8)) / (2.0 * h);
    CHECK(std::abs(deriv) <= 1e-6);
    CHECK(half_line_integral([](double r) { return neumann_kernel(0.6, r, 1.3); }) == Approx(1.0).epsilon(1e-11));
    CHECK(heat_residual(neumann_kernel, 0.3, 0.7, 1.1) <= 1e-5);
}

TEST_CASE("Robin kernel")
{
    for (double r : {0.0, 0.3, 1.7}) {
        CHECK(robin_w(0.4, r, 0.9, {0.0}) == neumann_kernel(0.4, r, 0.9));
    }
    CHECK(robin_w(0.5, 1.0, 1.0, {1e6}) == Approx(dirichlet_kernel(0.5, 1.0, 1.0)).epsilon(1e-4));
    // mpmath, direct formula with unscaled erfc
    CHECK(robin_w(0.5, 0.3, 0.8, {1.0}) == Approx(0.39295139521552754608).epsilon(1e-13));
    CHECK(robin_w(0.5, 0.3, 0.8, {-1.5}) == Approx(1.7330722453135335244).epsilon(1e-13));

    SUBCASE("vertex condition by finite differences")
    {
        for (double s : {-1.0, 0.0, 2.0, 5.0}) {
            const double t = 0.3, rp = 0.8, r0 = 1e-6, h = 1e-7;
            const auto w = [&](double r) { return robin_w(t, r, rp, {s}); };
            const double deriv = (w(r0 + h) - w(r0 - h)) / (2.0 * h);
            const double scale = std::abs(deriv) + std::abs(s * w(r0)) + std::abs(w(r0));
            CHECK(std::abs(deriv - s * w(r0)) <= 1e-4 * scale);
        }
    }
    SUBCASE("heat equation")
    {
        for (double s : {-0.5, 1.0, 3.0}) {
            const Kernel k = [s](double t, double r, double r2) { return robin_w(t, r, r2, {s}); };
            CHECK(heat_residual(k, 0.3, 0.7, 1.1) <= 1e-5);
        }
    }
    SUBCASE("continuity in s and monotone interpolation of the diagonal")
    {
        CHECK(robin_w(0.5, 0.7, 0.7, {1e-12}) == Approx(robin_w(0.5, 0.7, 0.7, {-1e-12})).epsilon(1e-11));
        double prev = robin_w(0.5, 0.7, 0.7, {0.0});
        for (double s = 0.25; s < 1e4; s *= 2.0) {
            const double v = robin_w(0.5, 0.7, 0.7, {s});
            CHECK(v < prev);
            CHECK(v > dirichlet_kernel(0.5, 0.7, 0.7));
            prev = v;
        }
    }
    SUBCASE("no overflow for large positive s t; representability bound for s < 0")
    {
        CHECK(std::isfinite(robin_w(50.0, 10.0, 20.0, {1e4})));
        CHECK(std::isfinite(robin_w(1.0, 0.0, 0.0, {-20.0})));
        CHECK_THROWS_AS(robin_w(10.0, 1.0, 1.0, {-10.0}), Overflow);
        CHECK_THROWS_AS(robin_image_product(1.0, 1.0, -25.0), Overflow);
        CHECK(robin_image_tail(1.0, 2.0, 0.0) == 0.0);
    }
}

TEST_CASE("semigroup of the half-line kernels")
{
    const std::vector<Kernel> kernels{
        [](double t, double a, double b) { return dirichlet_kernel(t, a, b); },
        [](double t, double a, double b) { return neumann_kernel(t, a, b); },
        [](double t, double a, double b) { return robin_w(t, a, b, {1.5}); },
        [](double t, double a, double b) { return robin_w(t, a, b, {-0.7}); },
    };
    for (const auto& k : kernels) {
        for (auto [t, t2, r, r2] : std::vector<std::array<double, 4>>{{0.2, 0.3, 0.5, 1.1}, {0.5, 0.1, 1.4, 0.3}}) {
            const double composed = half_line_integral([&](double u) { return k(t, r, u) * k(t2, u, r2); });
            CHECK(composed == Approx(k(t + t2, r, r2)).epsilon(1e-8));
        }
    }
    // whole-line semigroup of the free kernel
    const double composed = 2.0 * half_line_integral([](double u) {
        return 0.5 * (free_kernel(0.2, 0.3, u) * free_kernel(0.4, u, -0.5) +
                      free_kernel(0.2, 0.3, -u) * free_kernel(0.4, -u, -0.5));
    });
    CHECK(composed == Approx(free_kernel(0.6, 0.3, -0.5)).epsilon(1e-8));
}

TEST_CASE("initial condition: first-order convergence in t")
{
    // smooth bump supported in [1, 3], so it also vanishes at the Dirichlet end
    const auto f = [](double u) {
        const double x = u - 2.0;
        return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
    };
    const double r = 2.2;
    std::vector<double> errs;
    for (double t : {1e-3, 1e-2}) {
        const double v = numerics::integrate_partitioned(
                             [&](double u) { return dirichlet_kernel(t, r, u) * f(u); },
                             std::vector<double>{1.0, 2.0, r, 3.0}, {1e-15, 1e-13, 40})
                             .value;
        errs.push_back(std::abs(v - f(r)));
    }
    const double slope = std::log10(errs[1] / errs[0]);
    CHECK(slope == Approx(1.0).epsilon(0.2));
}
