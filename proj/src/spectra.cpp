#include "zaremba/spectra.hpp"

#include "zaremba/error.hpp"
#include "zaremba/specfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

namespace zaremba::spectra {

namespace {

constexpr double pi = std::numbers::pi;

struct OrderZeros {
    std::vector<double> zeros;
    bool interlaced = false;
};

template <typename Body>
void parallel_for(std::size_t count, int threads, Body body)
{
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const std::size_t used = std::min(workers, count);
    pool.reserve(used);
    for (std::size_t w = 0; w < used; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                body(i);
            }
        });
    }
}

void require_lambda_max(double lambda_max)
{
    if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
        throw DomainError("lambda_max must be positive and finite");
    }
}

} // namespace

double angular_order(const SectorSpec& spec, int n)
{
    spec.validate();
    if (n < 0) {
        throw DomainError("angular mode index must be >= 0");
    }
    const double unit = pi / spec.alpha;
    if (spec.side_lo == BoundaryCondition::Dirichlet && spec.side_hi == BoundaryCondition::Dirichlet) {
        return (n + 1) * unit;
    }
    if (spec.side_lo == BoundaryCondition::Neumann && spec.side_hi == BoundaryCondition::Neumann) {
        return n * unit;
    }
    return (n + 0.5) * unit;
}

std::vector<double> eigenvalues(const SectorSpec& spec, double lambda_max,
                                const EnumerationOptions& options)
{
    spec.validate();
    require_lambda_max(lambda_max);
    const double x_max = spec.radius * std::sqrt(lambda_max);

    // j_{nu,1} > nu, so orders at or above x_max contribute nothing.
    std::vector<specfun::BesselOrder> orders;
    for (int n = 0;; ++n) {
        const double nu = angular_order(spec, n);
        if (nu >= x_max) {
            break;
        }
        try {
            orders.push_back(specfun::BesselOrder::from_value(nu));
        } catch (const DomainError&) {
            throw UnsupportedGeometry("sector " + spec.label() +
                                      " has angular orders that are not (half-)integers");
        }
    }

    std::vector<OrderZeros> per_order(orders.size());
    parallel_for(orders.size(), options.threads, [&](std::size_t i) {
        auto zeros = specfun::bessel_j_zeros(orders[i], x_max);
        const auto next = specfun::bessel_j_zeros(orders[i].plus_one(), x_max);
        per_order[i].interlaced = specfun::zeros_interlace(zeros, next);
        per_order[i].zeros = std::move(zeros);
    });

    std::vector<double> out;
    std::size_t previous_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < per_order.size(); ++i) {
        const auto& entry = per_order[i];
        if (!entry.interlaced) {
            throw IncompleteEnumeration("zeros of J_" + std::to_string(orders[i].value()) +
                                        " do not interlace with the next order");
        }
        if (entry.zeros.size() > previous_count) {
            throw IncompleteEnumeration("zero count increases with the Bessel order at nu=" +
                                        std::to_string(orders[i].value()));
        }
        previous_count = entry.zeros.size();
        for (double j : entry.zeros) {
            const double k = j / spec.radius;
            out.push_back(k * k);
        }
    }
    if (out.empty()) {
        throw DomainError("lambda_max lies below the first eigenvalue of " + spec.label());
    }
    std::sort(out.begin(), out.end());

    const double weyl = spec.area() * lambda_max / (4.0 * pi);
    const double margin = spec.perimeter() * std::sqrt(lambda_max) / (2.0 * pi) + 10.0;
    const auto found = static_cast<double>(out.size());
    if (std::abs(found - weyl) > margin) {
        std::ostringstream os;
        os << "eigenvalue count " << out.size() << " for " << spec.label() << " is off the Weyl estimate "
           << weyl << " by more than " << margin;
        throw IncompleteEnumeration(os.str());
    }
    return out;
}

double heat_trace_tail_bound(const SectorSpec& spec, double t, double lambda_max)
{
    // t * int_Lambda^inf N(l) e^{-t l} dl with N(l) <= a l + b sqrt(l) + c.
    const double a = spec.area() / (4.0 * pi);
    const double b = spec.perimeter() / (2.0 * pi);
    constexpr double c = 10.0;
    const double root = std::sqrt(lambda_max);
    return std::exp(-t * lambda_max) *
           (a * (lambda_max + 1.0 / t) + b * (root + 1.0 / (2.0 * t * root)) + c);
}

HeatTraceSample heat_trace(std::span<const double> spectrum, const SectorSpec& spec, double t,
                           double lambda_max)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw NonpositiveTime(t);
    }
    require_lambda_max(lambda_max);
    numerics::CompensatedSum sum;
    for (double lambda : spectrum) {
        sum.add(std::exp(-t * lambda));
    }
    return HeatTraceSample{t, sum.value(), heat_trace_tail_bound(spec, t, lambda_max)};
}

HeatTraceSample heat_trace(const SectorSpec& spec, double t, double lambda_max,
                           const EnumerationOptions& options)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw NonpositiveTime(t);
    }
    const auto spectrum = eigenvalues(spec, lambda_max, options);
    return heat_trace(spectrum, spec, t, lambda_max);
}

std::vector<HeatTraceSample> heat_trace_grid(const SectorSpec& spec, std::span<const double> t_grid,
                                             double lambda_max, const EnumerationOptions& options)
{
    for (double t : t_grid) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw NonpositiveTime(t);
        }
    }
    const auto spectrum = eigenvalues(spec, lambda_max, options);
    std::vector<HeatTraceSample> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        out.push_back(heat_trace(spectrum, spec, t, lambda_max));
    }
    return out;
}

std::vector<double> default_t_grid()
{
    return numerics::log_grid(0.002, 0.02, 16);
}

double default_lambda_max(double t_min)
{
    return 40.0 / t_min;
}

std::vector<double> sector_fit_exponents()
{
    return {-1.0, -0.5, 0.0, 0.5};
}

ConstantEstimate extract_constant(const SectorSpec& spec, std::span<const double> t_grid,
                                  const coeffs::GeometryData& g, double lambda_max,
                                  const EnumerationOptions& options, double max_tail)
{
    if (t_grid.size() < 6) {
        throw DomainError("extract_constant needs at least six t values");
    }
    const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
    if (!(*lo > 0.0) || *hi < 10.0 * *lo * (1.0 - 1e-12)) {
        throw DomainError("extract_constant needs a positive t grid spanning at least one decade");
    }

    ConstantEstimate out{};
    out.prediction = coeffs::predict_sector_coeffs(spec, g);
    out.samples = heat_trace_grid(spec, t_grid, lambda_max, options);
    for (const auto& s : out.samples) {
        if (s.tail_bound > max_tail) {
            throw DomainError("truncation tail bound exceeds the fit tolerance at t=" + std::to_string(s.t) +
                              "; raise lambda_max");
        }
    }
    const auto exponents = sector_fit_exponents();
    std::vector<numerics::FitSample> samples;
    samples.reserve(out.samples.size());
    for (const auto& s : out.samples) {
        samples.push_back({s.t, s.value, numerics::default_fit_weight(s.t, exponents.front())});
    }
    out.fit = numerics::fit_powers(samples, exponents);
    out.constant = out.fit.coefficient_for(0.0);
    out.stderr = out.fit.stderr_for(0.0);
    return out;
}

double CornerSolution::value_of(coeffs::CornerType type, double angle) const
{
    const coeffs::CornerSlot probe{type, angle, 1, false};
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (coeffs::same_corner(slots[i], probe)) {
            return values[i];
        }
    }
    throw DomainError("corner " + probe.label() + " is not part of the solved system");
}

CornerSolution solve_corner_system(std::span<const SectorRun> runs)
{
    CornerSolution out;
    for (const auto& run : runs) {
        for (const auto& slot : run.estimate.prediction.corners) {
            const bool known = std::any_of(out.slots.begin(), out.slots.end(),
                                           [&](const auto& s) { return coeffs::same_corner(s, slot); });
            if (!known) {
                out.slots.push_back({slot.type, slot.angle, 1, false});
            }
        }
    }
    const auto rows = static_cast<Eigen::Index>(runs.size());
    const auto cols = static_cast<Eigen::Index>(out.slots.size());
    if (rows < cols) {
        throw DomainError("corner system is underdetermined: " + std::to_string(runs.size()) + " runs for " +
                          std::to_string(out.slots.size()) + " corner types");
    }
    Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& run = runs[static_cast<std::size_t>(r)];
        rhs(r) = run.estimate.constant - run.estimate.prediction.b2_known;
        for (const auto& slot : run.estimate.prediction.corners) {
            for (Eigen::Index c = 0; c < cols; ++c) {
                if (coeffs::same_corner(out.slots[static_cast<std::size_t>(c)], slot)) {
                    matrix(r, c) += slot.multiplicity;
                }
            }
        }
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(matrix);
    if (qr.rank() < cols) {
        throw DomainError("corner system is rank deficient; add a run that separates the corner types");
    }
    const Eigen::VectorXd x = qr.solve(rhs);
    const Eigen::VectorXd residual = matrix * x - rhs;
    out.values.assign(x.data(), x.data() + cols);
    out.residuals.assign(residual.data(), residual.data() + rows);
    return out;
}

} // namespace zaremba::spectra
