#pragma once

#include "zaremba/coeffs.hpp"
#include "zaremba/numerics.hpp"
#include "zaremba/sector.hpp"

#include <span>
#include <vector>

// Exact Dirichlet-arc spectra of flat disk sectors. Separation of
// variables gives eigenvalues (j_{nu,k} / R)^2 with nu drawn from the
// angular problem on (0, alpha); the heat trace is then a plain sum.
namespace zaremba::spectra {

/// Angular order of the n-th sector mode:
/// DD (n+1) pi/alpha, NN n pi/alpha, mixed (n+1/2) pi/alpha.
double angular_order(const SectorSpec& spec, int n);

struct EnumerationOptions {
    int threads = 1;
};

/// Sorted list of all eigenvalues <= lambda_max (with multiplicity).
///
/// Completeness is certified by three checks, any failure raising
/// IncompleteEnumeration: zeros of J_nu interlace with those of J_{nu+1};
/// zero counts do not increase with the order; and the total count lies
/// within L sqrt(Lambda)/(2 pi) + 10 of the Weyl term area*Lambda/(4 pi).
/// Sector angles must make every order an integer or half-integer.
std::vector<double> eigenvalues(const SectorSpec& spec, double lambda_max,
                                const EnumerationOptions& options = {});

struct HeatTraceSample {
    double t;
    double value;
    /// Bound on the truncated remainder sum_{lambda > Lambda} e^{-t lambda},
    /// from the counting majorant N(l) <= A l/(4pi) + L sqrt(l)/(2pi) + 10.
    double tail_bound;
};

double heat_trace_tail_bound(const SectorSpec& spec, double t, double lambda_max);

/// Heat trace from an already enumerated spectrum (ascending).
HeatTraceSample heat_trace(std::span<const double> spectrum, const SectorSpec& spec, double t,
                           double lambda_max);

HeatTraceSample heat_trace(const SectorSpec& spec, double t, double lambda_max,
                           const EnumerationOptions& options = {});

std::vector<HeatTraceSample> heat_trace_grid(const SectorSpec& spec, std::span<const double> t_grid,
                                             double lambda_max, const EnumerationOptions& options = {});

/// 16 log-spaced points on [0.002, 0.02].
std::vector<double> default_t_grid();
/// 40 / t_min, so the truncation tail is below e^{-40}.
double default_lambda_max(double t_min);

/// Exponents fitted by extract_constant: t^{-1}, t^{-1/2}, t^0, t^{1/2}.
std::vector<double> sector_fit_exponents();

struct ConstantEstimate {
    double constant;
    double stderr;
    numerics::AsymptoticFit fit;
    coeffs::SectorPrediction prediction;
    std::vector<HeatTraceSample> samples;
};

/// Fits the heat trace on t_grid and returns its t^0 coefficient.
/// Throws DomainError if the grid spans less than a decade or any tail
/// bound exceeds `max_tail`.
ConstantEstimate extract_constant(const SectorSpec& spec, std::span<const double> t_grid,
                                  const coeffs::GeometryData& g, double lambda_max,
                                  const EnumerationOptions& options = {}, double max_tail = 1e-9);

struct SectorRun {
    SectorSpec spec;
    ConstantEstimate estimate;
};

struct CornerSolution {
    std::vector<coeffs::CornerSlot> slots;
    std::vector<double> values;
    /// Per-run residual of the linear corner system.
    std::vector<double> residuals;

    /// Value of the corner of given type and angle; throws if not solved for.
    double value_of(coeffs::CornerType type, double angle) const;
};

/// Solves sum_slots multiplicity * corner = constant - b2_known across runs.
/// Needs at least as many runs as distinct corner slots.
CornerSolution solve_corner_system(std::span<const SectorRun> runs);

} // namespace zaremba::spectra
