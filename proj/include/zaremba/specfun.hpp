#pragma once

#include <span>
#include <vector>

namespace zaremba::specfun {

double erf(double x);
double erfc(double x);

/// Scaled complementary error function e^{z^2} erfc(z).
///
/// For |z| below `erfcx_series_threshold` the product is formed directly;
/// above it a continued fraction is summed, so large positive arguments
/// never overflow. For z <= -threshold the reflection 2e^{z^2} - erfcx(-z)
/// is used and Overflow is thrown once e^{z^2} is not representable.
double erfcx(double z);

inline constexpr double erfcx_series_threshold = 3.0;

/// e^{-z} I_{n+1/2}(z) for n >= 0, z > 0.
double bessel_i_half_scaled(int n, double z);

/// e^{-z} I_{k+1/2}(z) for k = 0..n_max, computed in one sweep.
std::vector<double> bessel_i_half_scaled_sequence(int n_max, double z);

/// Bessel order restricted to non-negative integers and half-integers,
/// stored as the integer 2*nu.
class BesselOrder {
public:
    static BesselOrder integer(int n);
    /// Order n + 1/2.
    static BesselOrder half_integer(int n);
    /// Accepts nu within 1e-9 of a non-negative multiple of 1/2.
    static BesselOrder from_value(double nu);

    double value() const noexcept { return 0.5 * twice_; }
    int twice() const noexcept { return twice_; }
    bool is_half_integer() const noexcept { return twice_ % 2 == 1; }
    /// Integer part: n for orders n and n + 1/2.
    int floor() const noexcept { return twice_ / 2; }
    BesselOrder plus_one() const { return BesselOrder(twice_ + 2); }

    friend bool operator==(BesselOrder, BesselOrder) = default;

private:
    explicit BesselOrder(int twice);
    int twice_;
};

/// Bessel function of the first kind J_nu(x), x > 0.
double bessel_j(BesselOrder nu, double x);

/// Every zero of J_nu in (0, x_max], ascending. Zeros within 1e-10 above
/// x_max are included so that a zero sitting exactly on the boundary is not
/// lost to rounding in x_max.
std::vector<double> bessel_j_zeros(BesselOrder nu, double x_max);

/// True when zeros_next (order nu+1) strictly interlaces zeros (order nu):
/// z_1 < w_1 < z_2 < w_2 < ... and the counts differ by at most one.
bool zeros_interlace(std::span<const double> zeros, std::span<const double> zeros_next);

} // namespace zaremba::specfun
