#pragma once

#include "zaremba/sector.hpp"
#include "zaremba/wedge.hpp"

#include <string>
#include <vector>

namespace zaremba::coeffs {

/// Local geometric input to the coefficient formulas.
///
/// Fiber traces are carried explicitly: `tr_q` is tr_V Q, and the scalar
/// curvature enters b_2 as R * dim_v / 6.
struct GeometryData {
    int m = 2;
    int dim_v = 1;
    double tr_q = 0.0;
    double r_scalar = 0.0;
    /// Trace of the extrinsic curvature of the boundary, 1/length.
    double k_trace = 0.0;

    void validate() const;
};

using spectra::BoundaryCondition;

double interior_b0(const GeometryData& g);
double interior_b2(const GeometryData& g);

/// -(4pi)^{-(m-1)/2} dim V / 4 for Dirichlet, + for Neumann.
double boundary_b1(const GeometryData& g, BoundaryCondition side);
/// (4pi)^{-m/2} dim V K / 3 (identical for both sides).
double boundary_b2(const GeometryData& g, BoundaryCondition side);

/// Interface coefficient b_2^{(2)}: 7/16 for any Robin vertex condition,
/// -1/16 for the regular one, times (4pi)^{-(m-2)/2} dim V.
double sigma0_b2(const GeometryData& g, const wedge::VertexCondition& vertex);

enum class CornerType { DD, DN, NN };

std::string corner_type_name(CornerType type);

/// A corner whose heat-trace constant is unknown to the coefficient
/// formulas and must be supplied by the spectral pipeline.
struct CornerSlot {
    CornerType type;
    double angle;
    int multiplicity;
    /// True when the sector apex contributes to this slot.
    bool includes_vertex;

    std::string label() const;
};

bool same_corner(const CornerSlot& a, const CornerSlot& b);

struct SectorPrediction {
    double b0;
    double b1;
    /// Every t^0 contribution except corners: interior b_2 times area plus
    /// the Dirichlet arc curvature term.
    double b2_known;
    std::vector<CornerSlot> corners;
};

/// Heat-trace coefficients of a flat 2D sector that follow from the
/// interior and boundary formulas, with corner constants left as slots.
SectorPrediction predict_sector_coeffs(const spectra::SectorSpec& spec, const GeometryData& g);

} // namespace zaremba::coeffs
