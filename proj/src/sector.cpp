#include "zaremba/sector.hpp"

#include "zaremba/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace zaremba::spectra {

char boundary_letter(BoundaryCondition bc)
{
    return bc == BoundaryCondition::Dirichlet ? 'D' : 'N';
}

BoundaryCondition parse_boundary_condition(const std::string& text)
{
    if (text == "D" || text == "d" || text == "dirichlet") {
        return BoundaryCondition::Dirichlet;
    }
    if (text == "N" || text == "n" || text == "neumann") {
        return BoundaryCondition::Neumann;
    }
    throw DomainError("unknown boundary condition '" + text + "' (expected D or N)");
}

void SectorSpec::validate() const
{
    if (!(alpha > 0.0) || !(alpha < 2.0 * std::numbers::pi)) {
        throw UnsupportedGeometry("sector angle must lie in (0, 2 pi)");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw UnsupportedGeometry("sector radius must be positive and finite");
    }
}

double SectorSpec::area() const
{
    return 0.5 * alpha * radius * radius;
}

double SectorSpec::arc_length() const
{
    return alpha * radius;
}

double SectorSpec::perimeter() const
{
    return 2.0 * radius + arc_length();
}

std::string SectorSpec::label() const
{
    std::ostringstream os;
    os << boundary_letter(side_lo) << boundary_letter(side_hi) << '@' << format_angle(alpha)
       << ", R=" << radius;
    return os.str();
}

std::string format_angle(double angle)
{
    const double ratio = angle / std::numbers::pi;
    for (int q = 1; q <= 12; ++q) {
        const double p = std::round(ratio * q);
        if (p >= 1.0 && std::abs(ratio * q - p) < 1e-9) {
            std::ostringstream os;
            const auto num = static_cast<long>(p);
            if (num != 1) {
                os << num;
            }
            os << "pi";
            if (q != 1) {
                os << '/' << q;
            }
            return os.str();
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << angle;
    return os.str();
}

} // namespace zaremba::spectra
