#pragma once

// The embedding of the toric surface of Delta = conv{+-e^1, +-2e^2} by the
// seven degree-5 forms w0..w6, its quadric and determinantal relations, and
// membership of the four torus-fixed points.

#include "severi/exact.hpp"
#include "severi/lattice.hpp"
#include "severi/sparse_poly.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace severi {

inline const std::vector<std::string>& xyz_variables() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

inline const std::vector<std::string>& w_variables() {
    static const std::vector<std::string> v{"w0", "w1", "w2", "w3", "w4", "w5", "w6"};
    return v;
}

/// Lattice point (i, j) of Delta goes to x^(1+i) y^(2+j) z^(2-i-j).
inline SparsePoly monomial_of(const LatticeVector& m) {
    SparsePoly::Exponents e{1 + m.a, 2 + m.b, 2 - m.a - m.b};
    return SparsePoly::monomial(xyz_variables(), std::move(e));
}

struct MonomialMap {
    std::vector<LatticeVector> points;  // the lattice point behind w_i
    std::vector<SparsePoly> images;     // w_i in x, y, z

    /// w0..w6 = x z^4, x y z^3, y^2 z^3, x y^2 z^2, x^2 y^2 z, x y^3 z, x y^4.
    static MonomialMap standard() {
        MonomialMap m;
        m.points = {{0, -2}, {0, -1}, {-1, 0}, {0, 0}, {1, 0}, {0, 1}, {0, 2}};
        for (const auto& p : m.points) m.images.push_back(monomial_of(p));
        return m;
    }

    SparsePoly apply(const SparsePoly& relation) const {
        if (relation.variables() != w_variables()) throw GeometryError("relation must be written in w0..w6");
        return relation.substitute(images);
    }
};

inline SparsePoly w_poly(const std::string& text) { return SparsePoly::parse(text, w_variables()); }

struct NamedRelation {
    std::string name;
    SparsePoly poly;
};

/// w2 w4 - w3^2 and the six 2x2 minors of ((w0,w1,w3,w5),(w1,w3,w5,w6)).
inline std::vector<NamedRelation> embedding_relations() {
    std::vector<NamedRelation> out{{"quadric", w_poly("w2*w4 - w3^2")}};
    const std::array<std::string, 4> top{"w0", "w1", "w3", "w5"}, bottom{"w1", "w3", "w5", "w6"};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            std::string text = top[i] + "*" + bottom[j] + " - " + top[j] + "*" + bottom[i];
            out.push_back({"minor(" + std::to_string(i) + "," + std::to_string(j) + ")", w_poly(text)});
        }
    return out;
}

/// A quadric that does not vanish on the surface.
inline NamedRelation negative_control() { return {"w0*w2 - w1^2", w_poly("w0*w2 - w1^2")}; }

/// True iff every relation vanishes at the projective point pt.
inline bool check_point(const std::vector<BigInt>& pt, const std::vector<SparsePoly>& relations) {
    if (pt.size() != w_variables().size()) throw GeometryError("a point of P^6 needs 7 coordinates");
    bool nonzero = false;
    for (const auto& c : pt) nonzero = nonzero || c != 0;
    if (!nonzero) throw GeometryError("the zero vector is not a projective point");
    for (const auto& r : relations)
        if (r.evaluate(pt) != 0) return false;
    return true;
}

/// The coordinate points of w0, w2, w4, w6.
inline std::vector<std::vector<BigInt>> fixed_points() {
    std::vector<std::vector<BigInt>> out;
    for (std::size_t i : {0u, 2u, 4u, 6u}) {
        std::vector<BigInt> pt(7, 0);
        pt[i] = 1;
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace severi
