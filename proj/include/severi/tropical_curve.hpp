#pragma once

// Plane tropical curves as produced by the direct enumeration backend:
// a parametrized graph with rational vertex positions, the tropical
// polynomial that cuts it out, and its dual subdivision.

#include "severi/exact.hpp"
#include "severi/lattice.hpp"
#include "severi/subdivision.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace severi {

/// Raised when a point configuration turns out not to be generic for the
/// curves being counted (a marked point on a vertex or crossing, or a
/// non-simple solution).
class GenericityError : public Error {
public:
    using Error::Error;
};

/// Points in the tropical plane.
struct PointConfig {
    std::vector<RationalPoint> points;

    std::size_t count() const { return points.size(); }

    /// Vertically stretched configuration (i, K^i), i = 1..n.
    static PointConfig stretched(std::size_t n, const BigInt& k) {
        PointConfig c;
        BigInt y = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            y *= k;
            c.points.emplace_back(Rational(static_cast<std::int64_t>(i)), Rational(y));
        }
        return c;
    }

    static BigInt default_stretch() { return BigInt(1) << 20; }
};

/// One edge of the parametrized graph. `tail`/`head` index vertices, or are
/// -1 for an unbounded end. `direction` is primitive and points from tail to
/// head; for a leg (head == -1) it points to infinity.
struct TropicalEdge {
    int tail = -1;
    int head = -1;
    LatticeVector direction;
    std::int64_t weight = 1;
    std::optional<std::size_t> marked_point;  // index into the configuration
    RationalPoint anchor;                     // a point on the edge's line

    bool is_bounded() const { return tail >= 0 && head >= 0; }
};

struct TropicalWitness {
    std::string type_id;
    std::vector<RationalPoint> vertex_positions;
    std::vector<RationalPoint> crossings;  // transversal self-intersections (parallelogram cells)
    std::vector<TropicalEdge> edges;
    std::int64_t genus = 0;
    std::int64_t multiplicity = 0;
    DualSubdivision dual;  // subdivision the solver started from
    /// Coefficients of the tropical polynomial max_v (c_v + <v, x>).
    std::vector<std::pair<LatticeVector, Rational>> coefficients;

    std::size_t leg_count() const {
        std::size_t n = 0;
        for (const auto& e : edges) n += (e.tail < 0) + (e.head < 0);
        return n;
    }
};

/// Sum of weight * outgoing primitive direction at every vertex.
inline std::vector<LatticeVector> balancing_defects(const TropicalWitness& w) {
    std::vector<LatticeVector> defect(w.vertex_positions.size());
    for (const auto& e : w.edges) {
        if (e.tail >= 0) defect[static_cast<std::size_t>(e.tail)] = defect[static_cast<std::size_t>(e.tail)] + e.direction * e.weight;
        if (e.head >= 0) defect[static_cast<std::size_t>(e.head)] = defect[static_cast<std::size_t>(e.head)] - e.direction * e.weight;
    }
    return defect;
}

inline bool is_balanced(const TropicalWitness& w) {
    for (const auto& d : balancing_defects(w))
        if (d != LatticeVector{0, 0}) return false;
    return true;
}

/// b1 - b0 + 1 of the parametrized graph: the genus for a connected curve,
/// and the usual sum(g_i) - (#components) + 1 otherwise.
inline std::int64_t graph_genus(const TropicalWitness& w) {
    std::int64_t bounded = 0, lines = 0;
    for (const auto& e : w.edges) {
        if (e.is_bounded()) ++bounded;
        if (e.tail < 0 && e.head < 0) ++lines;
    }
    return bounded - static_cast<std::int64_t>(w.vertex_positions.size()) - lines + 1;
}

/// Value max_v (c_v + <v, x>) and the monomials attaining it.
inline std::pair<Rational, std::vector<LatticeVector>> tropical_argmax(
    const std::vector<std::pair<LatticeVector, Rational>>& coefficients, const RationalPoint& x) {
    Rational best;
    std::vector<LatticeVector> arg;
    for (const auto& [v, c] : coefficients) {
        Rational value = c + x.x * v.a + x.y * v.b;
        if (arg.empty() || value > best) {
            best = value;
            arg = {v};
        } else if (value == best) {
            arg.push_back(v);
        }
    }
    return {best, arg};
}

/// The subdivision dual to a balanced curve: one cell per vertex and per
/// crossing, read off from the monomials that attain the maximum there.
inline DualSubdivision dual_of(const TropicalWitness& w) {
    if (!is_balanced(w)) throw InconsistencyError("tropical curve " + w.type_id + " is not balanced");
    std::vector<Cell> cells;
    auto add = [&](const RationalPoint& x) {
        auto [value, arg] = tropical_argmax(w.coefficients, x);
        cells.push_back(Cell::make(std::move(arg)));
    };
    for (const auto& x : w.vertex_positions) add(x);
    for (const auto& x : w.crossings) add(x);
    return DualSubdivision(std::move(cells));
}

}  // namespace severi
