#include "severi/integral_polygon.hpp"
#include "severi/lattice.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace severi;

namespace {

std::set<LatticeVector> rays_of(const LatticePolygon& p) {
    std::set<LatticeVector> out;
    for (const auto& r : normal_fan(p)) out.insert(r.primitive_direction);
    return out;
}

}  // namespace

TEST(Exact, RationalHelpers) {
    EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
    EXPECT_EQ(floor(make_rational(-3, 2)), BigInt(-2));
    EXPECT_EQ(ceil(make_rational(-3, 2)), BigInt(-1));
    EXPECT_EQ(parse_rational("-7/14"), make_rational(-1, 2));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(make_rational(1, 0), ParseError);
}

TEST(Lattice, DeltaCounts) {
    const auto delta = presets::delta();
    EXPECT_EQ(interior_count(delta, Sublattice::identity()), 3u);
    EXPECT_EQ(boundary_count(delta, Sublattice::identity()), 4u);
    EXPECT_EQ(normalized_volume(delta, Sublattice::identity()), 8);
    EXPECT_EQ(expected_point_count(delta, 1), 4);
    EXPECT_EQ(expected_point_count(delta, 0), 3);
}

TEST(Lattice, DeltaNormalFan) {
    const auto fan = normal_fan(presets::delta());
    ASSERT_EQ(fan.size(), 4u);
    for (const auto& r : fan) EXPECT_EQ(r.edge_lattice_length, 1);
    std::set<LatticeVector> expected{{2, 1}, {-2, 1}, {-2, -1}, {2, -1}};
    EXPECT_EQ(rays_of(presets::delta()), expected);
}

TEST(Lattice, RefinedLatticeCounts) {
    const Sublattice m_prime = presets::refined_lattice();
    EXPECT_EQ(m_prime.generator(0), RationalPoint(make_rational(1, 2), 0));
    EXPECT_EQ(m_prime.generator(1), RationalPoint(0, 1));
    EXPECT_EQ(interior_count(presets::delta(), m_prime), 5u);
    EXPECT_EQ(interior_count(presets::delta0(), m_prime), 1u);
    EXPECT_EQ(boundary_count(presets::delta0(), m_prime), 4u);
    EXPECT_EQ(normalized_volume(presets::delta0(), m_prime), 4);
    EXPECT_EQ(normalized_volume(presets::delta(), m_prime), 16);
    EXPECT_EQ(rebase(presets::delta(), m_prime), rebase(presets::delta0(), m_prime).scaled(2));
}

TEST(Lattice, RebaseRejectsNonLatticeVertex) {
    EXPECT_THROW(rebase(presets::delta0(), Sublattice::identity()), IntegralityError);
}

TEST(Lattice, RebaseRoundTrip) {
    const Sublattice m_prime = presets::refined_lattice();
    const auto coords = rebase(presets::delta0(), m_prime);
    EXPECT_TRUE(coords.is_integral());
    EXPECT_EQ(unrebase(coords, m_prime), presets::delta0());
}

TEST(Lattice, DegeneratePolygons) {
    const auto segment = LatticePolygon::from_integer({{0, 0}, {3, 0}});
    EXPECT_TRUE(segment.is_degenerate());
    EXPECT_THROW(interior_count(segment, Sublattice::identity()), GeometryError);
    EXPECT_EQ(lattice_points(segment).size(), 4u);
    EXPECT_THROW(normal_fan(segment), GeometryError);
    EXPECT_THROW(normalized_volume(segment, Sublattice::identity()), GeometryError);
    const auto point = LatticePolygon::from_integer({{1, 1}});
    EXPECT_EQ(lattice_points(point).size(), 1u);
}

TEST(Lattice, VertexNormalization) {
    const auto p = LatticePolygon::from_integer({{0, 2}, {2, 0}, {0, 0}});
    EXPECT_EQ(p, presets::triangle(2));
    EXPECT_EQ(p.vertices().front(), RationalPoint(0, 0));
    EXPECT_THROW(LatticePolygon::from_integer({{0, 0}, {2, 0}, {1, 0}, {0, 2}}), GeometryError);
    EXPECT_THROW(LatticePolygon::from_integer({{0, 0}, {4, 0}, {1, 1}, {0, 4}}), GeometryError);
    EXPECT_THROW(LatticePolygon::from_integer({{0, 0}, {0, 0}, {1, 0}}), GeometryError);
}

TEST(Lattice, NegativeGenusRejected) {
    EXPECT_THROW(expected_point_count(presets::delta(), -1), GeometryError);
}

TEST(Lattice, SublatticeContainment) {
    const auto two = Sublattice::generated_by({2, 0}, {0, 1});
    EXPECT_TRUE(two.is_sublattice_of(Sublattice::identity()));
    EXPECT_FALSE(Sublattice::identity().is_sublattice_of(two));
    EXPECT_TRUE(Sublattice::identity().is_sublattice_of(presets::refined_lattice()));
    EXPECT_EQ(two.covolume(), Rational(2));
    EXPECT_THROW(Sublattice::generated_by({1, 2}, {2, 4}), GeometryError);
}

TEST(IntegralPolygon, TrianglePoints) {
    IntegralPolygon t(presets::triangle(3));
    EXPECT_EQ(t.points().size(), 10u);
    EXPECT_EQ(t.interior_points().size(), 1u);
    EXPECT_EQ(t.boundary_points().size(), 9u);
    EXPECT_TRUE(t.is_vertex({3, 0}));
    EXPECT_TRUE(t.is_boundary({1, 0}));
    EXPECT_FALSE(t.contains({2, 2}));
}
