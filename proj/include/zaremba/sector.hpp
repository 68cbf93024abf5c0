#pragma once

#include <string>

namespace zaremba::spectra {

enum class BoundaryCondition { Dirichlet, Neumann };

char boundary_letter(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(const std::string& text);

/// Flat disk sector {0 < r < radius, 0 < phi < alpha}. The arc always
/// carries a Dirichlet condition; each straight side carries its own.
struct SectorSpec {
    double alpha;
    double radius;
    BoundaryCondition side_lo;
    BoundaryCondition side_hi;

    void validate() const;
    double area() const;
    double perimeter() const;
    double arc_length() const;
    /// "DN@pi, R=1" style label.
    std::string label() const;
};

/// Writes alpha as a multiple of pi when it is a simple fraction
/// ("pi/2", "2pi/3"), otherwise as a decimal number.
std::string format_angle(double angle);

} // namespace zaremba::spectra
