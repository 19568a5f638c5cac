#pragma once

// Splitting a Severi degree along an isogeny-type cover: the part lifted
// from the base polygon, and the tropical classification of witnesses by
// whether their dual subdivision is a scaled copy of a base subdivision.

#include "severi/exact.hpp"
#include "severi/lattice.hpp"
#include "severi/severi_degree.hpp"
#include "severi/subdivision.hpp"
#include "severi/tropical_curve.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace severi {

/// A cover given by a finite-index cocharacter sublattice N' of N. The
/// character lattice of the cover is the dual M' of N'. `polygon` (in the
/// lattice `polygon_lattice`) equals `scale` times `base` once both are
/// written in M'.
struct CoverData {
    std::array<std::int64_t, 4> cocharacter_basis{1, 0, 0, 1};  // columns (a,c), (b,d)
    Sublattice base_lattice = Sublattice::identity();           // M'
    std::int64_t deck_order = 1;
    LatticePolygon base;
    LatticePolygon polygon;
    Sublattice polygon_lattice = Sublattice::identity();
    std::int64_t scale = 1;

    /// Validates the invariants; throws GeometryError on violation.
    static CoverData make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, const LatticePolygon& base,
                          const LatticePolygon& polygon, const Sublattice& polygon_lattice, std::int64_t scale) {
        std::int64_t det = a * d - b * c;
        if (det == 0) throw GeometryError("cocharacter sublattice basis is singular");
        if (scale < 1) throw GeometryError("cover scale must be positive");
        Sublattice m_prime = Sublattice::dual_of_cocharacters(a, b, c, d);
        if (!Sublattice::identity().is_sublattice_of(m_prime))
            throw GeometryError("the cocharacter basis does not span a sublattice of N");
        CoverData cover{{a, b, c, d}, m_prime, std::llabs(det), base, polygon, polygon_lattice, scale};
        LatticePolygon lhs = rebase(polygon, m_prime);
        LatticePolygon rhs = rebase(base, m_prime).scaled(Rational(scale));
        if (!(lhs == rhs))
            throw GeometryError("cover invariant violated: " + lhs.str() + " is not " + std::to_string(scale) +
                                " times " + rebase(base, m_prime).str() + " in the cover lattice");
        return cover;
    }

    /// The identity cover of a polygon: M' is the polygon's own lattice.
    static CoverData trivial(const LatticePolygon& polygon, const Sublattice& lat) {
        return {{1, 0, 0, 1}, lat, 1, polygon, polygon, lat, 1};
    }
};

struct ComponentSplit {
    std::int64_t total = 0;
    std::int64_t lifted = 0;
    std::int64_t residual = 0;
};

struct TropicalSplit {
    std::int64_t doubled = 0;
    std::int64_t other = 0;
};

/// deck_order^(n-1) * N(base, g): each of the n points has deck_order
/// preimages, and deck translates of a lifted curve have the same image.
inline std::int64_t lifting_degree(const CoverData& cover, std::int64_t genus, Backend backend = Backend::paths) {
    std::int64_t n = expected_point_count(cover.base, cover.base_lattice, genus);
    if (n < 1) throw GeometryError("lifting degree needs at least one point condition");
    std::int64_t base = severi_degree(cover.base, cover.base_lattice, genus, backend).degree;
    std::int64_t factor = 1;
    for (std::int64_t i = 1; i < n; ++i) factor *= cover.deck_order;
    return factor * base;
}

inline ComponentSplit split_degrees(const CoverData& cover, std::int64_t genus, Backend backend = Backend::paths) {
    ComponentSplit s;
    s.total = severi_degree(cover.polygon, cover.polygon_lattice, genus, backend).degree;
    s.lifted = lifting_degree(cover, genus, backend);
    s.residual = s.total - s.lifted;
    if (s.residual < 0)
        throw InconsistencyError("lifted degree " + std::to_string(s.lifted) + " exceeds the total " +
                                 std::to_string(s.total));
    return s;
}

/// True iff every vertex v of S (coordinates in the polygon lattice)
/// satisfies v / scale in the cover lattice M'.
inline bool is_doubled_subdivision(const DualSubdivision& s, const CoverData& cover) {
    for (const auto& v : s.vertex_set()) {
        RationalPoint p = cover.polygon_lattice.ambient(RationalPoint(v));
        if (!cover.base_lattice.contains(p * make_rational(1, cover.scale))) return false;
    }
    return true;
}

inline TropicalSplit tropical_split(const std::vector<WitnessRecord>& witnesses, const CoverData& cover) {
    TropicalSplit t;
    for (const auto& w : witnesses) (is_doubled_subdivision(w.dual, cover) ? t.doubled : t.other) += w.multiplicity;
    return t;
}

inline TropicalSplit tropical_split(const std::vector<TropicalWitness>& witnesses, const CoverData& cover) {
    std::vector<WitnessRecord> records;
    for (const auto& w : witnesses) records.push_back(record_of(w));
    return tropical_split(records, cover);
}

inline nlohmann::json split_report(const ComponentSplit& s, const std::optional<TropicalSplit>& t) {
    nlohmann::json j = {{"total", s.total}, {"lifted", s.lifted}, {"residual", s.residual}};
    if (t) {
        j["tropical_doubled"] = t->doubled;
        j["tropical_other"] = t->other;
    } else {
        j["tropical_doubled"] = nullptr;
        j["tropical_other"] = nullptr;
    }
    return j;
}

namespace presets {

/// N' = <2e_1, e_2> with base conv{+-e^1/2, +-e^2} and total polygon Delta.
inline CoverData cover() { return CoverData::make(2, 0, 0, 1, delta0(), delta(), Sublattice::identity(), 2); }

}  // namespace presets

}  // namespace severi
