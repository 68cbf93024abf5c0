#include "zaremba/coeffs.hpp"
#include "zaremba/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zaremba;
using namespace zaremba::coeffs;
using doctest::Approx;
using spectra::BoundaryCondition;
using spectra::SectorSpec;

constexpr double pi = std::numbers::pi;
constexpr auto D = BoundaryCondition::Dirichlet;
constexpr auto N = BoundaryCondition::Neumann;

TEST_CASE("interior coefficients")
{
    CHECK(interior_b0(GeometryData{}) == Approx(1.0 / (4 * pi)).epsilon(1e-15));
    CHECK(interior_b0(GeometryData{3, 2}) == Approx(2.0 * std::pow(4 * pi, -1.5)).epsilon(1e-15));
    // tr_V(Q - R/6) with tr_V Q = 1, dim V = 2, R = 6
    const GeometryData g{3, 2, 1.0, 6.0, 0.0};
    CHECK(interior_b2(g) == Approx(-std::pow(4 * pi, -1.5)).epsilon(1e-15));
    CHECK(interior_b2(GeometryData{2, 1, 0.5, 0.0, 0.0}) == Approx(0.5 / (4 * pi)).epsilon(1e-15));
    CHECK_THROWS_AS(interior_b0(GeometryData{1, 1}), DomainError);
    CHECK_THROWS_AS(interior_b2(GeometryData{2, 0}), DomainError);
}

TEST_CASE("boundary coefficients")
{
    const GeometryData g{};
    CHECK(boundary_b1(g, D) == Approx(-0.25 / std::sqrt(4 * pi)).epsilon(1e-15));
    CHECK(boundary_b1(g, D) + boundary_b1(g, N) == 0.0);
    GeometryData arc = g;
    arc.k_trace = 1.0;
    CHECK(boundary_b2(arc, D) * pi == Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(boundary_b2(arc, D) == boundary_b2(arc, N));
}

TEST_CASE("interface coefficient")
{
    const GeometryData g{};
    CHECK(sigma0_b2(g, wedge::VertexCondition::robin(1.0)) == 7.0 / 16.0);
    CHECK(sigma0_b2(g, wedge::VertexCondition::regular()) == -1.0 / 16.0);
    for (double s : {-3.0, 0.0, 0.1, 100.0}) {
        CHECK(sigma0_b2(g, wedge::VertexCondition::robin(s)) == 7.0 / 16.0);
    }
    CHECK(sigma0_b2(GeometryData{4, 2}, wedge::VertexCondition::regular()) ==
          Approx(-2.0 / (16.0 * 4 * pi)).epsilon(1e-15));
}

TEST_CASE("half-disk prediction")
{
    const SectorSpec half{pi, 1.0, D, N};
    const auto p = predict_sector_coeffs(half, GeometryData{});
    CHECK(p.b0 == Approx(0.125).epsilon(1e-15));
    CHECK(p.b1 == Approx(-pi / 4.0 / std::sqrt(4 * pi)).epsilon(1e-15));
    CHECK(p.b2_known == Approx(1.0 / 12.0).epsilon(1e-15));
    REQUIRE(p.corners.size() == 3);
    CHECK(p.corners[0].label() == "DN@pi");
    CHECK(p.corners[0].includes_vertex);
    CHECK(p.corners[1].label() == "DD@pi/2");
    CHECK(p.corners[2].label() == "DN@pi/2");
    CHECK_FALSE(p.corners[2].includes_vertex);

    // swapping the sides mirrors the sector and changes nothing
    const auto swapped = predict_sector_coeffs(SectorSpec{pi, 1.0, N, D}, GeometryData{});
    CHECK(swapped.b1 == p.b1);
    CHECK(swapped.corners.size() == 3);

    // both straight sides Dirichlet vs Neumann: b1 moves by 2R/(4 sqrt(4 pi)) each way
    const auto dd = predict_sector_coeffs(SectorSpec{pi, 1.0, D, D}, GeometryData{});
    const auto nn = predict_sector_coeffs(SectorSpec{pi, 1.0, N, N}, GeometryData{});
    CHECK(nn.b1 - dd.b1 == Approx(1.0 / std::sqrt(4 * pi)).epsilon(1e-15));
    REQUIRE(dd.corners.size() == 2);
    CHECK(dd.corners[1].multiplicity == 2);

    const auto quarter = predict_sector_coeffs(SectorSpec{pi / 2, 2.0, D, D}, GeometryData{});
    REQUIRE(quarter.corners.size() == 1);
    CHECK(quarter.corners[0].multiplicity == 3);
    CHECK(quarter.corners[0].includes_vertex);
    CHECK(quarter.b0 == Approx(pi / (4 * pi)).epsilon(1e-15));

    CHECK_THROWS_AS(predict_sector_coeffs(half, GeometryData{3, 1}), UnsupportedGeometry);
    CHECK_THROWS_AS(predict_sector_coeffs(half, GeometryData{2, 1, 0.0, 1.0, 0.0}), UnsupportedGeometry);
    CHECK_THROWS_AS(predict_sector_coeffs(SectorSpec{0.0, 1.0, D, N}, GeometryData{}), UnsupportedGeometry);
}
