#include "severi/subdivision.hpp"

#include <gtest/gtest.h>

using namespace severi;

TEST(Cell, TriangleAndParallelogram) {
    Cell t = Cell::make({{0, 0}, {2, 0}, {0, 1}});
    EXPECT_TRUE(t.is_triangle());
    EXPECT_EQ(t.twice_area(), 2);
    Cell p = Cell::make({{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    EXPECT_TRUE(p.is_parallelogram());
    EXPECT_EQ(p.twice_area(), 2);
    Cell q = Cell::make({{0, 0}, {2, 0}, {1, 1}, {0, 1}});
    EXPECT_FALSE(q.is_parallelogram());
}

TEST(Subdivision, FineTriangulationCounts) {
    // Frozen from an independent brute-force cover count.
    for (auto [d, expected] : {std::pair{1, 1}, {2, 4}, {3, 79}}) {
        IntegralPolygon t(presets::triangle(d));
        EXPECT_EQ(triangulations(t.points(), boundary_ring(t)).size(), static_cast<std::size_t>(expected)) << d;
    }
}

TEST(Subdivision, NodalSubdivisionCounts) {
    IntegralPolygon cubic(presets::triangle(3));
    EXPECT_EQ(nodal_subdivisions(cubic, 0).size(), 188u);
    EXPECT_EQ(nodal_subdivisions(cubic, 1).size(), 79u);
    EXPECT_EQ(nodal_subdivisions(IntegralPolygon(presets::triangle(2)), 0).size(), 4u);
}

TEST(Subdivision, AreaIsConserved) {
    IntegralPolygon delta(presets::delta());
    for (std::int64_t g : {0, 1, 2, 3})
        for (const auto& s : nodal_subdivisions(delta, g)) {
            EXPECT_EQ(s.twice_area(), delta.twice_area());
            std::int64_t interior_vertices = 0;
            for (const auto& v : s.vertex_set()) interior_vertices += delta.locate(v) == 1;
            EXPECT_EQ(interior_vertices - static_cast<std::int64_t>(s.parallelogram_count()), g);
        }
}

TEST(Subdivision, MikhalkinMultiplicity) {
    // Star of the origin in Delta: four triangles of twice-area 2.
    DualSubdivision star({Cell::make({{-1, 0}, {0, -2}, {0, 0}}), Cell::make({{-1, 0}, {0, 0}, {0, 2}}),
                          Cell::make({{0, -2}, {1, 0}, {0, 0}}), Cell::make({{0, 0}, {1, 0}, {0, 2}})});
    EXPECT_EQ(star.mikhalkin_multiplicity(), 16);
    EXPECT_EQ(star.parallelogram_count(), 0u);
    EXPECT_EQ(star.twice_area(), 8);
}

TEST(Subdivision, GenusAboveInteriorHasNoSubdivision) {
    EXPECT_TRUE(nodal_subdivisions(IntegralPolygon(presets::delta()), 4).empty());
}
