#include "severi/ec_witness.hpp"

#include <gtest/gtest.h>

using namespace severi;

namespace {

CurvePoint pt(std::int64_t x, std::int64_t y) { return CurvePoint::affine(x, y); }

}  // namespace

TEST(Field, Inverse) {
    PrimeField f(13);
    for (std::int64_t a = 1; a < 13; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    EXPECT_THROW(f.inv(0), InconsistencyError);
    EXPECT_THROW(PrimeField(9), GeometryError);
    EXPECT_THROW(PrimeField(3), GeometryError);
}

TEST(Curve, GroupLawOnSmallCurve) {
    WeierstrassCurve e(5, -1, 0);
    EXPECT_EQ(e.add(pt(2, 1), pt(2, 1)), pt(0, 0));
    EXPECT_EQ(e.order(pt(2, 1)), 4);
    EXPECT_EQ(find_point_of_order(e, 2), pt(0, 0));
    EXPECT_EQ(e.negate(pt(2, 1)), pt(2, 4));
    EXPECT_EQ(e.multiply(4, pt(2, 1)), CurvePoint::at_infinity());
    EXPECT_EQ(e.multiply(-1, pt(2, 1)), pt(2, 4));
}

TEST(Curve, PointCount) { EXPECT_EQ(WeierstrassCurve(5, 0, 1).points().size(), 6u); }

TEST(Curve, Errors) {
    EXPECT_THROW(WeierstrassCurve(5, 0, 0), GeometryError);
    WeierstrassCurve e(5, -1, 0);
    EXPECT_THROW(e.add(pt(1, 1), pt(0, 0)), GeometryError);
    EXPECT_FALSE(find_point_of_order(e, 3).has_value());
}

TEST(LineDivisor, ChordTangentAndVertical) {
    WeierstrassCurve e(5, -1, 0);
    const CurvePoint O = CurvePoint::at_infinity();
    // Vertical x = 2: zeros at (2, 1), (2, 4), pole of order 2 at O.
    EXPECT_EQ(line_divisor(e, {e.field().neg(2), 1, 0}), (Divisor{{pt(2, 1), 1}, {pt(2, 4), 1}, {O, -2}}));
    // x = 0 meets the curve only at the 2-torsion point (0, 0), doubly.
    EXPECT_EQ(line_divisor(e, {0, 1, 0}), (Divisor{{pt(0, 0), 2}, {O, -2}}));
    EXPECT_EQ(line_divisor(e, {3, 0, 0}), Divisor{});
    EXPECT_THROW(line_divisor(e, {0, 0, 0}), InconsistencyError);
}

TEST(FunctionWithDivisor, ExactDivisor) {
    WeierstrassCurve e(13, 1, 2);
    const auto pts = e.points();
    for (const auto& p : pts)
        for (const auto& q : pts) {
            Divisor d{{p, 1}, {q, 1}, {e.add(p, q), -1}, {CurvePoint::at_infinity(), -1}};
            EXPECT_EQ(function_with_divisor(e, d).divisor(), d);
        }
}

TEST(FunctionWithDivisor, Errors) {
    WeierstrassCurve e(5, -1, 0);
    try {
        function_with_divisor(e, Divisor{{pt(2, 1), 1}});
        FAIL();
    } catch (const GeometryError& err) {
        EXPECT_NE(std::string(err.what()).find("degree"), std::string::npos);
    }
    try {
        function_with_divisor(e, Divisor{{pt(2, 1), 1}, {CurvePoint::at_infinity(), -1}});
        FAIL();
    } catch (const GeometryError& err) {
        EXPECT_NE(std::string(err.what()).find("sum"), std::string::npos);
    }
}

TEST(Witness, BuildPreconditions) {
    WeierstrassCurve e(17, 1, 2);
    const CurvePoint p = *find_point_of_order(e, 4);
    EXPECT_THROW(build_witness(e, p, CurvePoint::at_infinity()), GeometryError);
    EXPECT_THROW(build_witness(e, p, p), GeometryError);
    EXPECT_THROW(build_witness(e, p, e.negate(p)), GeometryError);
    const auto points = e.points();
    for (const auto& r : points)
        if (e.order(r) != 2 && e.order(r) != 4 && !r.infinity) {
            EXPECT_THROW(build_witness(e, r, p), GeometryError);
            break;
        }
}

TEST(Witness, DivisorsFollowTheRays) {
    WeierstrassCurve e(17, 1, 2);
    for (std::int64_t k : {2, 4}) {
        const CurvePoint p = *find_point_of_order(e, k);
        for (const auto& q : e.points()) {
            if (q.infinity || q == p || q == e.negate(p)) continue;
            TorusMapWitness w = build_witness(e, p, q);
            EXPECT_EQ(w.order_tag, k);
            EXPECT_EQ(w.phi_m1.divisor(), (Divisor{{w.p1, 4}, {w.p3, -4}}));
            for (const auto& m : delta_characters()) EXPECT_EQ(w.phi(m).divisor(), expected_divisor(w, m));
        }
    }
}

TEST(Witness, SearchFindsBothOrders) {
    for (std::int64_t k : {2, 4}) {
        auto r = find_witness(k);
        ASSERT_TRUE(r.has_value());
        EXPECT_LE(r->witness.curve.prime(), 50);
        EXPECT_EQ(r->witness.order_tag, k);
        EXPECT_EQ(r->rank_first, 6u);
        EXPECT_EQ(r->rank_second, 6u);
        auto j = witness_export(*r);
        EXPECT_EQ(j["order_tag"], k);
        EXPECT_TRUE(j.contains("phi_m1"));
    }
}

TEST(Witness, TooFewSamples) {
    auto r = find_witness(4);
    ASSERT_TRUE(r.has_value());
    auto samples = usable_samples(r->witness);
    samples.resize(5);
    EXPECT_THROW(verify_linear_system(r->witness, samples), GeometryError);
}

TEST(Rank, ModP) {
    PrimeField f(7);
    EXPECT_EQ(rank_mod_p({{1, 2}, {2, 4}}, f), 1u);
    EXPECT_EQ(rank_mod_p({{1, 2}, {3, 4}}, f), 2u);
    EXPECT_EQ(rank_mod_p({{7, 14}, {0, 0}}, f), 0u);
}
