#include "zaremba/numerics.hpp"

#include "zaremba/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace zaremba::numerics {

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (max_depth < 1) {
        throw DomainError("quadrature depth must be at least 1");
    }
    if (max_subdivisions < 1) {
        throw DomainError("quadrature subdivision budget must be at least 1");
    }
}

namespace {

// 15-point Kronrod rule with its embedded 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    int depth;
    // NaN for a finite panel; otherwise the origin a of x = a + u/(1-u).
    double origin;
};

struct PanelOrder {
    bool operator()(const Panel& a, const Panel& b) const
    {
        if (a.error != b.error) {
            return a.error < b.error;
        }
        return a.lo > b.lo;
    }
};

class Integrator {
public:
    explicit Integrator(const RealFunction& f) : f_(f) {}

    double eval(double u, double origin)
    {
        ++evaluations;
        if (std::isnan(origin)) {
            return f_(u);
        }
        const double one_minus = 1.0 - u;
        const double x = origin + u / one_minus;
        if (!std::isfinite(x)) {
            return 0.0;
        }
        return f_(x) / (one_minus * one_minus);
    }

    Panel rule(double lo, double hi, int depth, double origin)
    {
        const double center = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        const double fc = eval(center, origin);
        double res_gauss = fc * gauss_weights[3];
        double res_kronrod = fc * kronrod_weights[7];
        double res_abs = std::abs(res_kronrod);
        std::array<double, 7> f1{};
        std::array<double, 7> f2{};
        for (int j = 0; j < 3; ++j) {
            const int k = 2 * j + 1;
            const double dx = half * kronrod_nodes[k];
            const double a = eval(center - dx, origin);
            const double b = eval(center + dx, origin);
            f1[k] = a;
            f2[k] = b;
            res_gauss += gauss_weights[j] * (a + b);
            res_kronrod += kronrod_weights[k] * (a + b);
            res_abs += kronrod_weights[k] * (std::abs(a) + std::abs(b));
        }
        for (int j = 0; j < 4; ++j) {
            const int k = 2 * j;
            const double dx = half * kronrod_nodes[k];
            const double a = eval(center - dx, origin);
            const double b = eval(center + dx, origin);
            f1[k] = a;
            f2[k] = b;
            res_kronrod += kronrod_weights[k] * (a + b);
            res_abs += kronrod_weights[k] * (std::abs(a) + std::abs(b));
        }
        const double mean = 0.5 * res_kronrod;
        double res_asc = kronrod_weights[7] * std::abs(fc - mean);
        for (int k = 0; k < 7; ++k) {
            res_asc += kronrod_weights[k] * (std::abs(f1[k] - mean) + std::abs(f2[k] - mean));
        }
        const double scale = std::abs(half);
        res_asc *= scale;
        res_abs *= scale;
        double err = std::abs((res_kronrod - res_gauss) * half);
        if (res_asc != 0.0 && err != 0.0) {
            err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
        }
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
            err = std::max(50.0 * eps * res_abs, err);
        }
        return Panel{lo, hi, res_kronrod * half, err, depth, origin};
    }

    int evaluations = 0;

private:
    const RealFunction& f_;
};

} // namespace

QuadratureResult integrate_partitioned(const RealFunction& f, std::span<const double> points,
                                       const QuadratureSpec& spec)
{
    spec.validate();
    if (points.size() < 2) {
        throw DomainError("quadrature partition needs at least two points");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i] < points[i + 1]) || std::isinf(points[i])) {
            throw DomainError("quadrature partition must be strictly increasing and finite "
                              "except for a final +infinity");
        }
    }

    Integrator integrator(f);
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> active;
    std::vector<Panel> frozen;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (std::isinf(points[i + 1])) {
            active.push(integrator.rule(0.0, 1.0, 0, points[i]));
        } else {
            active.push(integrator.rule(points[i], points[i + 1], 0,
                                        std::numeric_limits<double>::quiet_NaN()));
        }
    }

    auto totals = [&]() {
        CompensatedSum value;
        CompensatedSum error;
        auto copy = active;
        while (!copy.empty()) {
            value.add(copy.top().value);
            error.add(copy.top().error);
            copy.pop();
        }
        for (const auto& p : frozen) {
            value.add(p.value);
            error.add(p.error);
        }
        return std::pair{value.value(), error.value()};
    };

    // Running totals are updated incrementally; a full recount is done at
    // the end so the result does not depend on accumulated cancellation.
    auto [value, error] = totals();
    int subdivisions = 0;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (active.empty() || subdivisions == spec.max_subdivisions) {
            std::tie(value, error) = totals();
            throw NonConvergence(value, error);
        }
        Panel worst = active.top();
        active.pop();
        if (worst.depth >= spec.max_depth) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            frozen.push_back(worst);
            continue;
        }
        ++subdivisions;
        Panel left = integrator.rule(worst.lo, mid, worst.depth + 1, worst.origin);
        Panel right = integrator.rule(mid, worst.hi, worst.depth + 1, worst.origin);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }
    std::tie(value, error) = totals();
    return QuadratureResult{value, error, integrator.evaluations};
}

double integrate_adaptive(const RealFunction& f, double a, double b, const QuadratureSpec& spec)
{
    if (std::isnan(a) || std::isnan(b) || std::isinf(a)) {
        throw DomainError("integration limits must be finite (upper limit may be +infinity)");
    }
    if (a == b) {
        return 0.0;
    }
    if (b < a) {
        return -integrate_adaptive(f, b, a, spec);
    }
    const std::array<double, 2> points{a, b};
    return integrate_partitioned(f, points, spec).value;
}

double find_root(const RealFunction& f, double lo, double hi, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("root tolerance must be positive");
    }
    if (lo > hi) {
        std::swap(lo, hi);
    }
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi)) {
        throw InvalidBracket(lo, hi, f_lo, f_hi);
    }

    int retained = 0; // +1: lo kept last step, -1: hi kept last step
    double width_checkpoint = hi - lo;
    bool force_bisection = false;
    for (int iter = 0; iter < 400; ++iter) {
        const double width = hi - lo;
        const double mid = lo + 0.5 * width;
        if (width <= tol || mid <= lo || mid >= hi) {
            break;
        }
        double x = mid;
        if (!force_bisection) {
            const double interp = lo - f_lo * (hi - lo) / (f_hi - f_lo);
            if (interp > lo && interp < hi) {
                x = interp;
            }
        }
        const double fx = f(x);
        if (fx == 0.0) {
            return x;
        }
        if (std::signbit(fx) == std::signbit(f_lo)) {
            lo = x;
            f_lo = fx;
            if (retained == -1) {
                f_hi *= 0.5;
            }
            retained = -1;
        } else {
            hi = x;
            f_hi = fx;
            if (retained == 1) {
                f_lo *= 0.5;
            }
            retained = 1;
        }
        if (iter % 2 == 1) {
            force_bisection = (hi - lo) > 0.5 * width_checkpoint;
            width_checkpoint = hi - lo;
        } else {
            force_bisection = false;
        }
    }
    return lo + 0.5 * (hi - lo);
}

double AsymptoticFit::coefficient_for(double exponent) const
{
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (std::abs(exponents[k] - exponent) < 1e-12) {
            return coefficients[k];
        }
    }
    throw DomainError("fit has no term with exponent " + std::to_string(exponent));
}

double AsymptoticFit::stderr_for(double exponent) const
{
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (std::abs(exponents[k] - exponent) < 1e-12) {
            return stderrs[k];
        }
    }
    throw DomainError("fit has no term with exponent " + std::to_string(exponent));
}

double default_fit_weight(double t, double min_exponent)
{
    return std::pow(t, -min_exponent);
}

std::vector<FitSample> make_fit_samples(std::span<const double> t, std::span<const double> y,
                                        double min_exponent)
{
    if (t.size() != y.size()) {
        throw DimensionMismatch("fit samples: t and y have different lengths");
    }
    std::vector<FitSample> samples;
    samples.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        samples.push_back({t[i], y[i], default_fit_weight(t[i], min_exponent)});
    }
    return samples;
}

AsymptoticFit fit_powers(std::span<const FitSample> samples, std::span<const double> exponents,
                         const FitOptions& options)
{
    const auto p = static_cast<Eigen::Index>(exponents.size());
    const auto n = static_cast<Eigen::Index>(samples.size());
    if (p == 0) {
        throw DomainError("fit_powers: no exponents given");
    }
    if (n < p + 2) {
        throw DomainError("fit_powers: need at least len(exponents)+2 samples");
    }
    for (const auto& s : samples) {
        if (!(s.t > 0.0) || !(s.weight > 0.0) || !std::isfinite(s.y)) {
            throw DomainError("fit_powers: samples need t > 0, weight > 0 and finite y");
        }
    }

    std::vector<double> sorted(exponents.begin(), exponents.end());
    std::sort(sorted.begin(), sorted.end());

    Eigen::MatrixXd design(n, p);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < p; ++j) {
            design(i, j) = s.weight * std::pow(s.t, sorted[static_cast<std::size_t>(j)]);
        }
        rhs(i) = s.weight * s.y;
    }
    const Eigen::VectorXd column_norm = design.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < p; ++j) {
        if (!(column_norm(j) > 0.0)) {
            throw DomainError("fit_powers: degenerate design column");
        }
        design.col(j) /= column_norm(j);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double ratio = sv(p - 1) > 0.0 ? sv(0) / sv(p - 1) : std::numeric_limits<double>::infinity();

    AsymptoticFit fit;
    fit.exponents = sorted;
    fit.condition = std::max(1.0, ratio * ratio);
    fit.ill_conditioned = !(fit.condition <= options.condition_cap);

    const Eigen::VectorXd scaled = svd.solve(rhs);
    const Eigen::VectorXd residual = rhs - design * scaled;
    const double dof = static_cast<double>(n - p);
    const double variance = residual.squaredNorm() / dof;

    Eigen::VectorXd inv_sv2(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        inv_sv2(j) = sv(j) > 0.0 ? 1.0 / (sv(j) * sv(j)) : 0.0;
    }
    const Eigen::MatrixXd& v = svd.matrixV();
    fit.coefficients.resize(static_cast<std::size_t>(p));
    fit.stderrs.resize(static_cast<std::size_t>(p));
    for (Eigen::Index j = 0; j < p; ++j) {
        const double cov = variance * (v.row(j).array().square() * inv_sv2.transpose().array()).sum();
        fit.coefficients[static_cast<std::size_t>(j)] = scaled(j) / column_norm(j);
        fit.stderrs[static_cast<std::size_t>(j)] = std::sqrt(cov) / column_norm(j);
    }

    double worst = 0.0;
    for (const auto& s : samples) {
        double model = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            model += fit.coefficients[static_cast<std::size_t>(j)] *
                     std::pow(s.t, sorted[static_cast<std::size_t>(j)]);
        }
        const double denom = s.y != 0.0 ? std::abs(s.y) : 1.0;
        worst = std::max(worst, std::abs(s.y - model) / denom);
    }
    fit.max_relative_residual = worst;
    return fit;
}

std::vector<double> log_grid(double lo, double hi, int points)
{
    if (!(lo > 0.0) || !(hi > lo) || points < 2) {
        throw DomainError("log_grid needs 0 < lo < hi and at least two points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

void CompensatedSum::add(double x) noexcept
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

} // namespace zaremba::numerics
