#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace zaremba::numerics {

/// Controls for adaptive Gauss-Kronrod quadrature.
///
/// The integration stops as soon as the summed error estimate drops below
/// max(abs_tol, rel_tol * |I|). An interval that has been bisected
/// `max_depth` times is never split again; if the target is still missed once
/// every remaining interval is at the depth limit, or after `max_subdivisions`
/// bisections, NonConvergence is thrown.
struct QuadratureSpec {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_depth = 40;
    int max_subdivisions = 20000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

using RealFunction = std::function<double(double)>;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Integrate f over [a, b]. `b` may be +infinity, in which case the
/// substitution x = a + u/(1-u) maps the half-line onto [0, 1).
double integrate_adaptive(const RealFunction& f, double a, double b,
                          const QuadratureSpec& spec = {});

/// Same, but starts from the partition given by `points` (sorted, at least
/// two entries). Useful when the integrand has known peaks or kinks. The
/// last point may be +infinity.
QuadratureResult integrate_partitioned(const RealFunction& f, std::span<const double> points,
                                       const QuadratureSpec& spec = {});

/// Bracketed root finding: regula falsi with the Illinois modification and a
/// forced bisection whenever the interpolated point leaves the bracket or
/// the bracket fails to halve over two steps. Result does not depend on the
/// order of (lo, hi).
double find_root(const RealFunction& f, double lo, double hi, double tol);

struct FitSample {
    double t;
    double y;
    double weight = 1.0;
};

/// Result of a weighted least-squares fit of y ~ sum_k c_k t^{e_k}.
struct AsymptoticFit {
    std::vector<double> exponents;
    std::vector<double> coefficients;
    std::vector<double> stderrs;
    double max_relative_residual = 0.0;
    /// Condition number of the (column-equilibrated) normal matrix.
    double condition = 1.0;
    bool ill_conditioned = false;

    /// Coefficient belonging to `exponent`; throws DomainError if absent.
    double coefficient_for(double exponent) const;
    double stderr_for(double exponent) const;
};

struct FitOptions {
    double condition_cap = 1e14;
};

/// Default weight that equalises the dominant term across the t-window:
/// w = t^{-e_min}.
double default_fit_weight(double t, double min_exponent);

/// Builds samples with the default weight from parallel arrays.
std::vector<FitSample> make_fit_samples(std::span<const double> t, std::span<const double> y,
                                        double min_exponent);

/// Exponents are sorted ascending in the result; at least len(exponents)+2
/// samples are required.
AsymptoticFit fit_powers(std::span<const FitSample> samples, std::span<const double> exponents,
                         const FitOptions& options = {});

/// Log-spaced grid of `points` values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

/// Neumaier-compensated sum accumulated in the given order.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace zaremba::numerics
