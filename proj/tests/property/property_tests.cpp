// Randomized and exhaustive property checks. All arithmetic is exact.
// Random inputs come from fixed-seed mt19937_64 streams reduced by modulo,
// so every run sees the same cases.

#include "severi/severi.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace severi;

namespace {

const std::string data_dir = SEVERI_DATA_DIR;

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Convex hull (strict) of random integer points, or nullopt if degenerate.
std::optional<LatticePolygon> random_polygon(std::mt19937_64& rng, std::int64_t range) {
    std::vector<LatticeVector> pts;
    const auto n = uniform(rng, 3, 8);
    for (std::int64_t i = 0; i < n; ++i) pts.push_back({uniform(rng, -range, range), uniform(rng, -range, range)});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return std::nullopt;
    std::vector<LatticeVector> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) return std::nullopt;
    return LatticePolygon::from_integer(hull);
}

std::vector<std::pair<std::string, LatticePolygon>> corpus() {
    std::vector<std::pair<std::string, LatticePolygon>> out;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir + "/corpus"))
        out.emplace_back(entry.path().stem().string(), read_polygon_file(entry.path().string()).polygon);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

PointConfig random_config(std::mt19937_64& rng, std::size_t n) {
    PointConfig c;
    for (std::size_t i = 0; i < n; ++i) c.points.push_back({Rational(uniform(rng, -1000, 1000)), Rational(uniform(rng, -1000, 1000))});
    return c;
}

std::int64_t total(const std::vector<TropicalWitness>& ws) {
    std::int64_t t = 0;
    for (const auto& w : ws) t += w.multiplicity;
    return t;
}

}  // namespace

// ---- lattice geometry ----

TEST(Property, PickIdentity) {
    std::mt19937_64 rng(1);
    int cases = 0;
    while (cases < 150) {
        auto poly = random_polygon(rng, 6);
        if (!poly) continue;
        ++cases;
        const auto lat = Sublattice::identity();
        const auto interior = static_cast<std::int64_t>(interior_count(*poly, lat));
        const auto boundary = static_cast<std::int64_t>(boundary_count(*poly, lat));
        ASSERT_EQ(normalized_volume(*poly, lat), 2 * interior + boundary - 2) << poly->str();
    }
}

TEST(Property, PickIdentityInRefinedLattice) {
    std::mt19937_64 rng(2);
    const Sublattice m_prime = presets::refined_lattice();
    int cases = 0;
    while (cases < 100) {
        auto poly = random_polygon(rng, 5);
        if (!poly) continue;
        ++cases;
        const auto interior = static_cast<std::int64_t>(interior_count(*poly, m_prime));
        const auto boundary = static_cast<std::int64_t>(boundary_count(*poly, m_prime));
        ASSERT_EQ(normalized_volume(*poly, m_prime), 2 * interior + boundary - 2) << poly->str();
    }
}

TEST(Property, FanBalancing) {
    std::mt19937_64 rng(3);
    int cases = 0;
    while (cases < 150) {
        auto poly = random_polygon(rng, 7);
        if (!poly) continue;
        ++cases;
        LatticeVector sum{0, 0};
        std::int64_t perimeter = 0;
        for (const auto& r : normal_fan(*poly)) {
            sum = sum + r.primitive_direction * r.edge_lattice_length;
            perimeter += r.edge_lattice_length;
        }
        ASSERT_EQ(sum, (LatticeVector{0, 0})) << poly->str();
        ASSERT_EQ(perimeter, static_cast<std::int64_t>(boundary_count(*poly, Sublattice::identity())));
    }
}

TEST(Property, DualAreaConservation) {
    int cases = 0;
    for (const auto& [name, poly] : corpus()) {
        IntegralPolygon ip(rebase(poly));
        for (std::int64_t g = 0; g <= static_cast<std::int64_t>(ip.interior_points().size()); ++g)
            for (const auto& s : nodal_subdivisions(ip, g)) {
                ++cases;
                ASSERT_EQ(s.twice_area(), ip.twice_area()) << name << " " << s.str();
            }
    }
    EXPECT_GE(cases, 100);
}

// ---- tropical counts ----

TEST(Property, BackendEquivalenceOnCorpus) {
    int polygons = 0;
    for (const auto& [name, poly] : corpus()) {
        IntegralPolygon ip(rebase(poly));
        ASSERT_LE(ip.boundary_points().size(), 6u) << name;
        if (ip.is_degenerate()) continue;
        ++polygons;
        const auto max_g = std::min<std::int64_t>(1, static_cast<std::int64_t>(ip.interior_points().size()));
        for (std::int64_t g = 0; g <= max_g; ++g) {
            auto r = severi_degree(poly, poly.lattice(), g, Backend::both);
            ASSERT_TRUE(r.paths_count && r.direct_count);
            EXPECT_EQ(*r.paths_count, *r.direct_count) << name << " g=" << g;
        }
    }
    EXPECT_GE(polygons, 8);
}

TEST(Property, LambdaIndependence) {
    std::vector<LinearFunctional> functionals{
        LinearFunctional::standard(), LinearFunctional::reversed(), {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}},
        {{0, -1}, {1, 0}},           {{1, 1}, {1, -1}},            {{2, -1}, {0, 1}}, {{1, 3}, {0, 1}}};
    auto check = [&](const std::string& name, const LatticePolygon& poly, std::int64_t steps) {
        std::optional<std::int64_t> expected;
        int used = 0;
        for (const auto& f : functionals) {
            std::int64_t c = 0;
            try {
                c = PathCounter(rebase(poly), f).count(steps);
            } catch (const GeometryError&) {
                continue;  // not injective on this polygon
            }
            ++used;
            if (!expected) expected = c;
            EXPECT_EQ(c, *expected) << name << " steps=" << steps;
        }
        EXPECT_GE(used, 2) << name;
    };
    for (const auto& [name, poly] : corpus()) {
        IntegralPolygon ip(rebase(poly));
        for (std::int64_t g = 0; g <= static_cast<std::int64_t>(ip.interior_points().size()); ++g)
            check(name, poly, static_cast<std::int64_t>(ip.boundary_points().size()) + g - 1);
    }
    check("triangle3", presets::triangle(3), 8);
    check("triangle4", presets::triangle(4), 12);
    check("delta_refined", LatticePolygon(presets::delta().vertices(), presets::refined_lattice()), 8);
}

TEST(Property, ConfigurationIndependenceAndWitnessBalancing) {
    std::mt19937_64 rng(5);
    struct Case {
        LatticePolygon poly;
        std::int64_t genus;
        std::int64_t expected;
    };
    const std::vector<Case> cases{{presets::delta(), 1, 34},
                                  {presets::delta(), 0, 16},
                                  {presets::triangle(2), 0, 1},
                                  {LatticePolygon::from_integer({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}), 1, 0},
                                  {rebase(presets::delta0(), presets::refined_lattice()), 0, 4}};
    int runs = 0, witnesses = 0, generic = 0;
    for (const auto& c : cases) {
        IntegralPolygon ip(c.poly);
        DirectEnumerator enumerator(ip, c.genus);
        const std::int64_t expected =
            c.expected ? c.expected : PathCounter(c.poly).count(enumerator.required_points());
        for (int trial = 0; trial < 25; ++trial) {
            ++runs;
            auto config = random_config(rng, static_cast<std::size_t>(enumerator.required_points()));
            std::vector<TropicalWitness> ws;
            try {
                ws = enumerator.run(config);
            } catch (const GenericityError&) {
                continue;
            }
            ++generic;
            EXPECT_EQ(total(ws), expected) << c.poly.str() << " trial " << trial;
            for (const auto& w : ws) {
                ++witnesses;
                EXPECT_TRUE(is_balanced(w));
                EXPECT_EQ(dual_of(w), w.dual);
                EXPECT_EQ(w.dual.twice_area(), ip.twice_area());
                EXPECT_EQ(w.dual.mikhalkin_multiplicity(), w.multiplicity);
                EXPECT_EQ(graph_genus(w), w.genus);
                EXPECT_EQ(w.leg_count(), ip.boundary_points().size());
            }
        }
    }
    EXPECT_GE(runs, 100);
    EXPECT_GE(generic, 100);
    EXPECT_GE(witnesses, 100);
}

// ---- elliptic curves ----

TEST(Property, GroupLawAssociativityExhaustive) {
    std::size_t triples = 0;
    for (std::int64_t p : {5, 7, 11, 13})
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b) {
                std::optional<WeierstrassCurve> e;
                try {
                    e.emplace(p, a, b);
                } catch (const GeometryError&) {
                    continue;
                }
                const auto pts = e->points();
                for (const auto& x : pts)
                    for (const auto& y : pts) {
                        const auto xy = e->add(x, y);
                        ASSERT_EQ(xy, e->add(y, x));
                        for (const auto& z : pts) {
                            ++triples;
                            ASSERT_EQ(e->add(xy, z), e->add(x, e->add(y, z)));
                        }
                    }
                for (const auto& x : pts) {
                    ASSERT_EQ(e->add(x, e->negate(x)), CurvePoint::at_infinity());
                    ASSERT_EQ(e->multiply(static_cast<std::int64_t>(pts.size()), x), CurvePoint::at_infinity());
                }
            }
    EXPECT_GT(triples, 100u);
}

TEST(Property, PrincipalDivisorsRealized) {
    std::mt19937_64 rng(9);
    WeierstrassCurve e(23, 1, 1);
    const auto pts = e.points();
    for (int trial = 0; trial < 120; ++trial) {
        Divisor d;
        for (int i = 0; i < 4; ++i) d.add(pts[rng() % pts.size()], uniform(rng, -3, 3));
        // Close up: subtract the sum and restore degree 0 at O.
        d.add(e.negate(d.sum(e)), 1);
        d.add(CurvePoint::at_infinity(), -d.degree());
        ASSERT_EQ(function_with_divisor(e, d).divisor(), d) << d.str();
    }
}

TEST(Property, WitnessDivisorsOnRandomCharacters) {
    std::mt19937_64 rng(10);
    for (std::int64_t k : {2, 4}) {
        auto r = find_witness(k);
        ASSERT_TRUE(r);
        for (int trial = 0; trial < 100; ++trial) {
            LatticeVector m{uniform(rng, -6, 6), uniform(rng, -6, 6)};
            ASSERT_EQ(r->witness.phi(m).divisor(), expected_divisor(r->witness, m)) << m.str();
        }
    }
}

// ---- polynomials ----

TEST(Property, SubstituteIsRingHomomorphism) {
    std::mt19937_64 rng(12);
    const MonomialMap map = MonomialMap::standard();
    auto random_poly = [&] {
        SparsePoly p(w_variables());
        const auto terms = uniform(rng, 1, 4);
        for (std::int64_t t = 0; t < terms; ++t) {
            SparsePoly::Exponents e(7, 0);
            for (int i = 0; i < 2; ++i) e[rng() % 7] += uniform(rng, 0, 2);
            p.add_term(e, uniform(rng, -5, 5));
        }
        return p;
    };
    for (int trial = 0; trial < 120; ++trial) {
        const SparsePoly f = random_poly(), g = random_poly();
        ASSERT_EQ(map.apply(f * g), map.apply(f) * map.apply(g));
        ASSERT_EQ(map.apply(f + g), map.apply(f) + map.apply(g));
        ASSERT_EQ(map.apply(f - g), map.apply(f) - map.apply(g));
    }
}

TEST(Property, PolynomialTextRoundTrip) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        SparsePoly p(xyz_variables());
        for (int t = 0; t < 4; ++t)
            p.add_term({uniform(rng, 0, 3), uniform(rng, 0, 3), uniform(rng, 0, 3)}, uniform(rng, -9, 9));
        ASSERT_EQ(SparsePoly::parse(p.str(), xyz_variables()), p) << p.str();
    }
}
