#include "zaremba/coeffs.hpp"

#include "zaremba/error.hpp"

#include <cmath>
#include <numbers>

namespace zaremba::coeffs {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double four_pi = 4.0 * pi;

CornerType corner_between(BoundaryCondition a, BoundaryCondition b)
{
    if (a == BoundaryCondition::Dirichlet && b == BoundaryCondition::Dirichlet) {
        return CornerType::DD;
    }
    if (a == BoundaryCondition::Neumann && b == BoundaryCondition::Neumann) {
        return CornerType::NN;
    }
    return CornerType::DN;
}

void add_slot(std::vector<CornerSlot>& slots, CornerSlot slot)
{
    for (auto& existing : slots) {
        if (same_corner(existing, slot)) {
            existing.multiplicity += slot.multiplicity;
            existing.includes_vertex = existing.includes_vertex || slot.includes_vertex;
            return;
        }
    }
    slots.push_back(slot);
}

} // namespace

void GeometryData::validate() const
{
    if (m < 2) {
        throw DomainError("geometry: m must be at least 2");
    }
    if (dim_v < 1) {
        throw DomainError("geometry: dim_v must be at least 1");
    }
}

double interior_b0(const GeometryData& g)
{
    g.validate();
    return std::pow(four_pi, -0.5 * g.m) * g.dim_v;
}

double interior_b2(const GeometryData& g)
{
    g.validate();
    return std::pow(four_pi, -0.5 * g.m) * (g.tr_q - g.r_scalar * g.dim_v / 6.0);
}

double boundary_b1(const GeometryData& g, BoundaryCondition side)
{
    g.validate();
    const double magnitude = std::pow(four_pi, -0.5 * (g.m - 1)) * g.dim_v / 4.0;
    return side == BoundaryCondition::Dirichlet ? -magnitude : magnitude;
}

double boundary_b2(const GeometryData& g, BoundaryCondition /*side*/)
{
    g.validate();
    return std::pow(four_pi, -0.5 * g.m) * g.dim_v * g.k_trace / 3.0;
}

double sigma0_b2(const GeometryData& g, const wedge::VertexCondition& vertex)
{
    g.validate();
    const double scale = std::pow(four_pi, -0.5 * (g.m - 2)) * g.dim_v;
    return vertex.is_regular() ? -scale / 16.0 : scale * 7.0 / 16.0;
}

std::string corner_type_name(CornerType type)
{
    switch (type) {
    case CornerType::DD:
        return "DD";
    case CornerType::DN:
        return "DN";
    case CornerType::NN:
        return "NN";
    }
    return "??";
}

std::string CornerSlot::label() const
{
    return corner_type_name(type) + "@" + spectra::format_angle(angle);
}

bool same_corner(const CornerSlot& a, const CornerSlot& b)
{
    return a.type == b.type && std::abs(a.angle - b.angle) < 1e-9;
}

SectorPrediction predict_sector_coeffs(const spectra::SectorSpec& spec, const GeometryData& g)
{
    spec.validate();
    g.validate();
    if (g.m != 2 || g.r_scalar != 0.0) {
        throw UnsupportedGeometry("sector predictions need a flat two-dimensional geometry");
    }
    SectorPrediction out{};
    out.b0 = interior_b0(g) * spec.area();
    out.b1 = boundary_b1(g, spec.side_lo) * spec.radius + boundary_b1(g, spec.side_hi) * spec.radius +
             boundary_b1(g, BoundaryCondition::Dirichlet) * spec.arc_length();

    GeometryData arc = g;
    arc.k_trace = 1.0 / spec.radius;
    out.b2_known = interior_b2(g) * spec.area() +
                   boundary_b2(arc, BoundaryCondition::Dirichlet) * spec.arc_length();

    add_slot(out.corners, {corner_between(spec.side_lo, spec.side_hi), spec.alpha, 1, true});
    add_slot(out.corners,
             {corner_between(spec.side_lo, BoundaryCondition::Dirichlet), 0.5 * pi, 1, false});
    add_slot(out.corners,
             {corner_between(spec.side_hi, BoundaryCondition::Dirichlet), 0.5 * pi, 1, false});
    return out;
}

} // namespace zaremba::coeffs
