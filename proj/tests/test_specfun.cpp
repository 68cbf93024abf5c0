#include "zaremba/error.hpp"
#include "zaremba/numerics.hpp"
#include "zaremba/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace zaremba;
using namespace zaremba::specfun;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

TEST_CASE("erf and erfc")
{
    CHECK(specfun::erf(0.0) == 0.0);
    CHECK(specfun::erfc(0.0) == 1.0);
    const double quad = 2.0 / std::sqrt(pi) *
                        numerics::integrate_adaptive([](double u) { return std::exp(-u * u); }, 0.0, 1.0);
    CHECK(specfun::erf(1.0) == Approx(quad).epsilon(1e-13));
    for (double x = 1e-4; x < 6.0; x *= 1.7) {
        CHECK(specfun::erf(-x) == -specfun::erf(x));
        CHECK(std::abs(specfun::erf(x) + specfun::erfc(x) - 1.0) <= 1e-14);
        CHECK(specfun::erfcx(x) == Approx(std::exp(x * x) * specfun::erfc(x)).epsilon(1e-13));
    }
}

TEST_CASE("erfcx values")
{
    CHECK(erfcx(0.0) == 1.0);
    // mpmath, 40 digits
    CHECK(erfcx(1.0) == Approx(0.42758357615580700441).epsilon(1e-14));
    CHECK(erfcx(5.0) == Approx(0.11070463773306862637).epsilon(1e-14));
    CHECK(erfcx(30.0) == Approx(0.018795888861416751497).epsilon(1e-14));
    CHECK(erfcx(-2.0) == Approx(108.94090438997797241).epsilon(1e-14));
    CHECK(erfcx(30.0) == Approx(1.0 / (std::sqrt(pi) * 30.0)).epsilon(2e-3));
    // continuity across the series/continued-fraction switch
    const double th = erfcx_series_threshold;
    CHECK(erfcx(std::nextafter(th, 0.0)) == Approx(erfcx(th)).epsilon(1e-14));
    CHECK(erfcx(-std::nextafter(th, 0.0)) == Approx(erfcx(-th)).epsilon(1e-14));

    // e^{-z^2}: quadrature oracle
    const double z = 1.0;
    const double oracle = 2.0 / std::sqrt(pi) *
                          numerics::integrate_adaptive(
                              [z](double u) { return std::exp(-u * u - 2.0 * u * z); }, 0.0,
                              numerics::infinity, {1e-300, 1e-13, 40});
    CHECK(erfcx(1.0) == Approx(oracle).epsilon(1e-13));
}

TEST_CASE("erfcx extremes")
{
    const double big = erfcx(1e8);
    CHECK(std::isfinite(big));
    CHECK(big == Approx(1.0 / (std::sqrt(pi) * 1e8)).epsilon(1e-15));
    for (double z = 10.0; z < 1e6; z *= 3.0) {
        const double asym = 1.0 / (std::sqrt(pi) * z);
        CHECK(std::abs(erfcx(z) - asym) / asym <= 2.0 / (z * z));
    }
    // reflection identity where e^{z^2} is representable
    for (double z = 0.1; z < 20.0; z *= 1.9) {
        CHECK(erfcx(-z) == Approx(2.0 * std::exp(z * z) - erfcx(z)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(erfcx(-30.0), Overflow);
}

TEST_CASE("scaled modified Bessel of half-integer order")
{
    CHECK(bessel_i_half_scaled(0, 1.0) ==
          Approx(std::sqrt(2.0 / pi) * (1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-15));
    const double z = 1e-9;
    CHECK(bessel_i_half_scaled(0, z) == Approx(std::sqrt(2.0 * z / pi) * std::exp(-z)).epsilon(1e-8));

    // power series e^{-1} sum_k (1/2)^{3/2+2k} / (k! Gamma(k+5/2))
    double series = 0.0;
    for (int k = 0; k < 30; ++k) {
        series += std::pow(0.5, 1.5 + 2 * k) / (std::tgamma(k + 1.0) * std::tgamma(k + 2.5));
    }
    CHECK(bessel_i_half_scaled(1, 1.0) == Approx(std::exp(-1.0) * series).epsilon(1e-14));
    // mpmath
    CHECK(bessel_i_half_scaled(1, 1.0) == Approx(0.10798193302637610390).epsilon(1e-14));
    CHECK(bessel_i_half_scaled(5, 0.3) == Approx(7.5944635936138162292e-8).epsilon(1e-13));
    CHECK(bessel_i_half_scaled(20, 50.0) == Approx(8.6013101726813982649e-4).epsilon(1e-13));
    CHECK(std::isfinite(bessel_i_half_scaled(3, 1e8)));
    CHECK(bessel_i_half_scaled(3, 1e8) == Approx(1.0 / std::sqrt(2.0 * pi * 1e8)).epsilon(1e-6));

    CHECK_THROWS_AS(bessel_i_half_scaled(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_i_half_scaled(1, 0.0), DomainError);
}

TEST_CASE("scaled I against Boost and the three-term recurrence")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> order(1, 40);
    std::uniform_real_distribution<double> logz(-3.0, 2.5);
    for (int i = 0; i < 300; ++i) {
        const int n = order(rng);
        const double z = std::pow(10.0, logz(rng));
        const double ref = std::exp(-z) * boost::math::cyl_bessel_i(n + 0.5, z);
        if (ref < 1e-280) continue;
        CHECK(bessel_i_half_scaled(n, z) == Approx(ref).epsilon(1e-12));
        // I_{nu+1} = I_{nu-1} - (2 nu / z) I_nu, nu = n + 1/2
        const double lhs = bessel_i_half_scaled(n + 1, z);
        const double rhs = bessel_i_half_scaled(n - 1, z) - (2.0 * n + 1.0) / z * bessel_i_half_scaled(n, z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * bessel_i_half_scaled(n - 1, z));
    }
    const auto seq = bessel_i_half_scaled_sequence(30, 7.5);
    for (int n = 0; n <= 30; ++n) CHECK(seq[n] == Approx(bessel_i_half_scaled(n, 7.5)).epsilon(1e-13));
}

TEST_CASE("BesselOrder")
{
    CHECK(BesselOrder::half_integer(1).value() == 1.5);
    CHECK(BesselOrder::integer(3).value() == 3.0);
    CHECK(BesselOrder::from_value(2.5) == BesselOrder::half_integer(2));
    CHECK(BesselOrder::from_value(2.5).is_half_integer());
    CHECK_FALSE(BesselOrder::from_value(2.0).is_half_integer());
    CHECK(BesselOrder::half_integer(2).plus_one() == BesselOrder::half_integer(3));
    CHECK(BesselOrder::half_integer(4).floor() == 4);
    CHECK_THROWS_AS(BesselOrder::from_value(0.3), DomainError);
    CHECK_THROWS_AS(BesselOrder::from_value(-0.5), DomainError);
    CHECK_THROWS_AS(BesselOrder::integer(-1), DomainError);
}

TEST_CASE("bessel_j values")
{
    const auto half = BesselOrder::half_integer(0);
    const auto three_half = BesselOrder::half_integer(1);
    for (double x : {0.3, 1.0, 2.5, 10.0, 77.0}) {
        CHECK(bessel_j(half, x) == Approx(std::sqrt(2.0 / (pi * x)) * std::sin(x)).epsilon(1e-13));
        CHECK(bessel_j(three_half, x) ==
              Approx(std::sqrt(2.0 / (pi * x)) * (std::sin(x) / x - std::cos(x))).epsilon(1e-11));
    }
    CHECK(std::abs(bessel_j(half, pi)) < 1e-15);
    CHECK(bessel_j(three_half, 4.49) * bessel_j(three_half, 4.50) < 0.0);
    CHECK(bessel_j(BesselOrder::integer(1), 3.8) * bessel_j(BesselOrder::integer(1), 3.9) < 0.0);
    // mpmath
    CHECK(bessel_j(BesselOrder::integer(7), 3.3) == Approx(0.0046690886053591581017).epsilon(1e-12));
    CHECK(bessel_j(BesselOrder::integer(0), 25.0) == Approx(0.096266783275958116174).epsilon(1e-12));
    CHECK(bessel_j(BesselOrder::half_integer(12), 40.0) == Approx(-0.11677617976922572195).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_j(half, 0.0), DomainError);
}

TEST_CASE("bessel_j against Boost")
{
    double worst = 0.0;
    for (int twice = 0; twice <= 120; twice += 3) {
        for (double x = 0.05; x < 120.0; x = x * 1.31 + 0.2) {
            const double ref = boost::math::cyl_bessel_j(0.5 * twice, x);
            const double got = bessel_j(BesselOrder::from_value(0.5 * twice), x);
            // relative error, with an absolute floor near zeros scaled to the envelope
            const double envelope = std::max(std::abs(ref), 1e-3 * std::sqrt(2.0 / (pi * x)));
            if (std::abs(ref) < 1e-250) continue;
            worst = std::max(worst, std::abs(got - ref) / envelope);
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("Bessel zeros")
{
    const auto z = bessel_j_zeros(BesselOrder::half_integer(0), 10.0);
    REQUIRE(z.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(z[k] == Approx((k + 1) * pi).epsilon(1e-14));

    const auto w = bessel_j_zeros(BesselOrder::half_integer(1), 8.0);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Approx(4.4934094579090641753).epsilon(1e-14));
    CHECK(w[1] == Approx(7.7252518369377071642).epsilon(1e-14));
    for (double x : w) CHECK(std::abs(std::tan(x) - x) < 1e-9);

    const auto j1 = bessel_j_zeros(BesselOrder::integer(1), 4.0);
    REQUIRE(j1.size() == 1);
    CHECK(j1[0] == Approx(3.8317059702075123156).epsilon(1e-14));

    const auto hundred = bessel_j_zeros(BesselOrder::half_integer(0), 100.0 * pi);
    CHECK(hundred.size() == 100);

    SUBCASE("counts follow X/pi - nu/2 and consecutive orders interlace")
    {
        const double x_max = 150.0;
        for (int twice = 0; twice <= 60; ++twice) {
            const auto nu = BesselOrder::from_value(0.5 * twice);
            const auto a = bessel_j_zeros(nu, x_max);
            const auto b = bessel_j_zeros(nu.plus_one(), x_max);
            CHECK(zeros_interlace(a, b));
            const double predicted = x_max / pi - nu.value() / 2.0 - 0.25;
            CHECK(std::abs(static_cast<double>(a.size()) - predicted) < 2.0);
        }
    }
    CHECK_FALSE(zeros_interlace(std::vector<double>{1.0, 2.0}, std::vector<double>{2.5, 3.0}));
    CHECK(bessel_j_zeros(BesselOrder::integer(5), 3.0).empty());
}
