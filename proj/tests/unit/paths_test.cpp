#include "severi/lattice_paths.hpp"
#include "severi/severi_degree.hpp"

#include <gtest/gtest.h>

using namespace severi;

TEST(Paths, DeltaPathCountWithFourSteps) {
    // 7 lattice points with distinct lambda values: choose 3 of the 5 middle points.
    PathCounter pc(presets::delta());
    EXPECT_EQ(pc.enumerate(4).size(), 10u);
    EXPECT_EQ(pc.source(), (LatticeVector{-1, 0}));
    EXPECT_EQ(pc.sink(), (LatticeVector{1, 0}));
}

TEST(Paths, EnumerationIsStrictlyIncreasing) {
    const LinearFunctional lambda = LinearFunctional::standard();
    PathCounter pc(presets::triangle(3));
    const auto paths = pc.enumerate(8);
    EXPECT_EQ(paths.size(), 8u);  // choose 7 of the 8 middle points
    for (const auto& p : paths) {
        ASSERT_EQ(p.steps(), 8u);
        for (std::size_t i = 1; i < p.points.size(); ++i) EXPECT_TRUE(lambda.less(p.points[i - 1], p.points[i]));
    }
}

TEST(Paths, BoundaryPathsHaveUnitMultiplicity) {
    PathCounter pc(presets::delta());
    EXPECT_EQ(pc.mu_plus(pc.clockwise_boundary()), 1);
    EXPECT_EQ(pc.mu_minus(pc.counterclockwise_boundary()), 1);
    EXPECT_EQ(pc.clockwise_boundary().points.front(), pc.source());
    EXPECT_EQ(pc.counterclockwise_boundary().points.back(), pc.sink());
}

TEST(Paths, DeltaGenusOneIs34) { EXPECT_EQ(PathCounter(presets::delta()).count(4), 34); }

TEST(Paths, DeltaGenusZeroIs16) { EXPECT_EQ(PathCounter(presets::delta()).count(3), 16); }

TEST(Paths, ClassicalPlaneCurveCounts) {
    // Plane curves of degree d with delta nodes through the expected number of points.
    EXPECT_EQ(PathCounter(presets::triangle(1)).count(2), 1);
    EXPECT_EQ(PathCounter(presets::triangle(2)).count(5), 1);
    EXPECT_EQ(PathCounter(presets::triangle(3)).count(9), 1);
    EXPECT_EQ(PathCounter(presets::triangle(3)).count(8), 12);
    EXPECT_EQ(PathCounter(presets::triangle(4)).count(14), 1);
    EXPECT_EQ(PathCounter(presets::triangle(4)).count(13), 27);
    EXPECT_EQ(PathCounter(presets::triangle(4)).count(12), 225);
    EXPECT_EQ(PathCounter(presets::triangle(4)).count(11), 675);
}

TEST(Paths, RefinedLatticeCounts) {
    EXPECT_EQ(severi_degree(presets::delta0(), presets::refined_lattice(), 1).degree, 1);
    EXPECT_EQ(severi_degree(presets::delta0(), presets::refined_lattice(), 0).degree, 4);
}

TEST(Paths, ReversedFunctionalAgrees) {
    for (std::int64_t steps : {3, 4})
        EXPECT_EQ(PathCounter(presets::delta(), LinearFunctional::reversed()).count(steps),
                  PathCounter(presets::delta()).count(steps));
}

TEST(Paths, NonInjectiveFunctionalRejected) {
    LinearFunctional vertical{{0, 1}, {0, 0}};
    EXPECT_THROW(PathCounter(presets::triangle(2), vertical), GeometryError);
}

TEST(Paths, DegeneratePolygonHasNoPaths) {
    PathCounter pc(LatticePolygon::from_integer({{0, 0}, {2, 0}}));
    EXPECT_TRUE(pc.enumerate(2).empty());
    EXPECT_EQ(pc.count(2), 0);
}

TEST(SeveriDegree, EdgeCasesGiveZeroWithWarning) {
    auto seg = severi_degree(LatticePolygon::from_integer({{0, 0}, {2, 0}}), 0);
    EXPECT_EQ(seg.degree, 0);
    EXPECT_FALSE(seg.warnings.empty());
    auto high = severi_degree(presets::delta(), 4);
    EXPECT_EQ(high.degree, 0);
    EXPECT_FALSE(high.warnings.empty());
    EXPECT_THROW(severi_degree(presets::delta(), -1), GeometryError);
}

TEST(SeveriDegree, BackendParsing) {
    EXPECT_EQ(parse_backend("both"), Backend::both);
    EXPECT_EQ(to_string(Backend::direct), "direct");
    EXPECT_THROW(parse_backend("fast"), ParseError);
}
