#pragma once

#include "zaremba/numerics.hpp"

#include <variant>
#include <vector>

// Leading-order heat kernel of the Zaremba problem near the interface
// where the boundary condition switches from Dirichlet to Neumann.
//
// Coordinates: the normal plane to the interface is parametrised by
// (rho, theta) with theta in [-pi/2, pi/2]; the Dirichlet side sits at
// theta = +pi/2 and the Neumann side at theta = -pi/2. The remaining m-2
// coordinates run along the (flat) interface.
namespace zaremba::wedge {

/// Extra condition at rho = 0 needed to single out the kernel: either
/// sqrt(rho rho') Psi -> 0 ("regular") or (d/drho - s)[sqrt(rho rho') Psi] = 0.
class VertexCondition {
public:
    static VertexCondition regular() { return VertexCondition(Regular{}); }
    static VertexCondition robin(double s);

    bool is_regular() const noexcept { return std::holds_alternative<Regular>(state_); }
    /// Robin parameter; throws DomainError for the regular condition.
    double s() const;

private:
    struct Regular {};
    struct Robin {
        double s;
    };
    explicit VertexCondition(std::variant<Regular, Robin> state) : state_(state) {}
    std::variant<Regular, Robin> state_;
};

struct PolarPoint {
    double rho = 0.0;
    double theta = 0.0;
    /// Offsets along the interface (m - 2 entries).
    std::vector<double> transverse;
};

/// Reflection theta -> -theta - pi. L is invariant when both arguments are
/// reflected; a 2 pi shift of one argument flips its sign (period 4 pi).
PolarPoint mirror(const PolarPoint& p);

struct WedgeConfig {
    WedgeConfig(int ambient_dimension, int fiber_dimension, VertexCondition vertex_condition);

    int m;
    int dim_v;
    VertexCondition vertex;
};

double angular_eigenvalue(int n);
/// sqrt(2/pi) cos((n + 1/2)(theta + pi/2)); vanishes at +pi/2, flat at -pi/2.
double angular_eigenfunction(int n, double theta);

/// Radial mode n >= 1: (1/2t) exp(-(rho^2+rho'^2)/4t) I_{n+1/2}(rho rho'/2t).
double radial_mode(int n, double t, double rho, double rho_prime);

/// Radial mode n = 0, which depends on the vertex condition.
double radial_mode_0(double t, double rho, double rho_prime, const VertexCondition& vertex);

/// Omega(z, gamma) = e^{z cos gamma} erf(sqrt(2z) cos(gamma/2)).
/// Overflows for z cos(gamma) > ~709; psi never calls it unpaired.
double omega(double z, double gamma);

/// Omega by its defining series 2 sum_n I_{n+1/2}(z) cos((n+1/2) gamma),
/// truncated once the Bessel tail bound falls below `tol` times the
/// largest term.
double omega_series(double z, double gamma, double tol = 1e-16);

/// The vertex-dependent amplitude Phi(t | rho, rho'); identically zero for
/// the regular condition.
double phi(double t, double rho, double rho_prime, const VertexCondition& vertex);

enum class PsiMethod {
    ClosedForm,
    /// Direct summation over angular modes; kept as an internal oracle.
    ModeSum,
};

/// Two-dimensional mixed heat kernel Psi(t | rho, theta; rho', theta').
/// Angles must lie in [-pi/2, pi/2].
double psi(double t, double rho, double theta, double rho_prime, double theta_prime,
           const VertexCondition& vertex, PsiMethod method = PsiMethod::ClosedForm);

/// The building block L of the m-dimensional parametrix. Accepts any real
/// angles (mirror images included).
double l_function(double t, const PolarPoint& p, const PolarPoint& q, const WedgeConfig& cfg);

/// L(p, q) + L(p, mirror(q)).
double mixed_parametrix(double t, const PolarPoint& p, const PolarPoint& q, const WedgeConfig& cfg);

/// Diagonal value of the mixed parametrix at (rho, theta), per fiber
/// component (no dim V factor).
double mixed_diagonal(double t, double rho, double theta, const WedgeConfig& cfg);

/// The exponentially small remainder X(t) of the strip integral.
double strip_remainder(double t, double eps3, const VertexCondition& vertex);

/// Integral of tr_V of the diagonal over the half-disk of radius eps3 in
/// the normal plane, per unit interface volume, in closed form.
double strip_trace(double t, double eps3, const WedgeConfig& cfg);

struct StripLimit {
    /// Limit t -> 0 of the coefficient of t inside the braces
    /// (-pi/4 + 2 pi Theta(sqrt(t) s) for Robin, -pi/4 for regular).
    double bracket;
    double bracket_stderr;
    /// The interface coefficient (4 pi)^{-m/2} dim V * bracket.
    double b2;
    numerics::AsymptoticFit fit;
};

/// Extracts the t -> 0 limit of the strip bracket from strip_trace values on
/// a log-spaced window [t_max / 100, t_max] by fitting a series in sqrt(t).
StripLimit extract_strip_coefficient(const WedgeConfig& cfg, double eps3, double t_max,
                                     int points = 24);

} // namespace zaremba::wedge
