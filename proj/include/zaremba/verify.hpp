#pragma once

#include <json.hpp>

#include <string>
#include <vector>

// Executable acceptance checks. Each criterion compares the closed-form
// implementation against an independent route (quadrature, finite
// differences, series, or the exact sector spectrum).
namespace zaremba::verify {

enum class Suite { Specfun, Kernels, CoeffPipeline, All };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

/// Thresholds for every criterion; defaults are the acceptance values.
struct Tolerances {
    double omega_identity = 1e-10;
    double hankel = 1e-8;
    double heat_residual = 1e-4;
    double dirichlet_side = 1e-12;
    double neumann_side = 1e-5;
    double robin_vertex = 1e-4;
    double semigroup = 1e-6;
    double delta_slope = 0.2;
    double strip_identity = 1e-8;
    double robin_bracket = 1e-3;
    double regular_bracket = 1e-9;
    double corner_b2 = 5e-3;
    double weyl_b0 = 1e-3;
    double perimeter_b1 = 1e-2;
    double corner_dd = 5e-3;
    double erfcx = 1e-12;
    double bessel_zero = 1e-10;
    double symmetry = 1e-12;
    double parity = 1e-14;
};

struct RunOptions {
    int threads = 1;
};

/// One measured quantity: passes when |measured - target| <= tolerance.
struct Check {
    std::string name;
    double measured;
    double target;
    double tolerance;
    bool pass;
};

struct Criterion {
    std::string id;
    std::string title;
    std::vector<Check> checks;

    bool pass() const;
};

struct Report {
    Suite suite;
    std::vector<Criterion> criteria;

    bool pass() const;
};

Criterion omega_identity(const Tolerances& tol);
Criterion hankel_consistency(const Tolerances& tol);
Criterion pde_boundary_suite(const Tolerances& tol);
Criterion semigroup_and_delta(const Tolerances& tol);
Criterion strip_trace_identity(const Tolerances& tol);
Criterion robin_constant(const Tolerances& tol);
Criterion spectral_pipeline(const Tolerances& tol, const RunOptions& options);
Criterion special_functions(const Tolerances& tol);
Criterion symmetries(const Tolerances& tol);

Report run_suite(Suite suite, const Tolerances& tol = {}, const RunOptions& options = {});

/// "AC-7 PASS  spectral pipeline ..." plus one indented line per check.
std::string format_report(const Report& report);

nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const Tolerances& tol);

} // namespace zaremba::verify
