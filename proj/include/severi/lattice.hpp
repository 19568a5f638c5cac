#pragma once

// Two-dimensional lattice geometry over exact rationals: lattice vectors,
// the character/cocharacter pairing, lattices given by rational bases,
// lattice polygons and their enumerative invariants.

#include "severi/exact.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace severi {

/// Integer vector of a rank-2 lattice, either a character lattice M
/// (coordinates in e^1, e^2) or a cocharacter lattice N (in e_1, e_2).
struct LatticeVector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    constexpr LatticeVector operator+(const LatticeVector& o) const { return {a + o.a, b + o.b}; }
    constexpr LatticeVector operator-(const LatticeVector& o) const { return {a - o.a, b - o.b}; }
    constexpr LatticeVector operator-() const { return {-a, -b}; }
    constexpr LatticeVector operator*(std::int64_t k) const { return {a * k, b * k}; }

    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

/// The dual pairing between a character m and a cocharacter n.
constexpr std::int64_t pairing(const LatticeVector& m, const LatticeVector& n) {
    return m.a * n.a + m.b * n.b;
}

/// det(u, v) = u.a * v.b - u.b * v.a.
constexpr std::int64_t cross(const LatticeVector& u, const LatticeVector& v) {
    return u.a * v.b - u.b * v.a;
}

/// Lattice length of an integer vector (gcd of its coordinates).
inline std::int64_t lattice_length(const LatticeVector& v) {
    return std::gcd(std::llabs(v.a), std::llabs(v.b));
}

/// Divides by the gcd of the coordinates. The zero vector is returned as is.
inline LatticeVector primitive(const LatticeVector& v) {
    std::int64_t g = lattice_length(v);
    if (g == 0) return v;
    return {v.a / g, v.b / g};
}

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    RationalPoint(const LatticeVector& v) : x(v.a), y(v.b) {}  // NOLINT(implicit)

    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RationalPoint& o) const { return !(*this == o); }
    bool operator<(const RationalPoint& o) const { return x < o.x || (x == o.x && y < o.y); }

    RationalPoint operator+(const RationalPoint& o) const { return {x + o.x, y + o.y}; }
    RationalPoint operator-(const RationalPoint& o) const { return {x - o.x, y - o.y}; }
    RationalPoint operator*(const Rational& k) const { return {x * k, y * k}; }

    bool is_integral() const { return is_integer(x) && is_integer(y); }

    LatticeVector to_lattice_vector() const { return {to_int64(x), to_int64(y)}; }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const RationalPoint& p) { return os << p.str(); }

inline Rational cross(const RationalPoint& u, const RationalPoint& v) { return u.x * v.y - u.y * v.x; }

/// Orientation of (a, b, c): positive for a counterclockwise turn.
inline int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    return sign(cross(b - a, c - a));
}

/// A full-rank lattice in the ambient plane, given by a rational basis whose
/// columns are the generators in ambient coordinates. Both sublattices of M
/// and refinements such as M' (basis (1/2,0), (0,1)) are representable.
class Sublattice {
public:
    /// Columns (c00, c10) and (c01, c11).
    Sublattice(Rational c00, Rational c01, Rational c10, Rational c11)
        : m_{{{std::move(c00), std::move(c01)}, {std::move(c10), std::move(c11)}}} {
        if (det() == 0) throw GeometryError("lattice basis is singular");
    }

    static Sublattice identity() { return {1, 0, 0, 1}; }

    /// Lattice generated by integer ambient vectors u, v.
    static Sublattice generated_by(const LatticeVector& u, const LatticeVector& v) {
        return {u.a, v.a, u.b, v.b};
    }

    /// The lattice dual to the cocharacter lattice spanned by the columns of
    /// an integer matrix [[a, b], [c, d]] (columns (a, c) and (b, d)). For
    /// N' = <2e_1, e_2> this is M' = <e^1/2, e^2>.
    static Sublattice dual_of_cocharacters(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        Rational det = Rational(a) * d - Rational(b) * c;
        if (det == 0) throw GeometryError("cocharacter basis is singular");
        // (B^{-1})^T
        return {Rational(d) / det, Rational(-c) / det, Rational(-b) / det, Rational(a) / det};
    }

    const Rational& at(int row, int col) const { return m_[row][col]; }

    Rational det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

    /// Covolume: the area of a fundamental domain, |det|.
    Rational covolume() const { return abs(det()); }

    RationalPoint generator(int i) const { return {m_[0][i], m_[1][i]}; }

    /// Coordinates of an ambient point with respect to this basis.
    RationalPoint coordinates(const RationalPoint& p) const {
        Rational d = det();
        return {(m_[1][1] * p.x - m_[0][1] * p.y) / d, (-m_[1][0] * p.x + m_[0][0] * p.y) / d};
    }

    RationalPoint ambient(const RationalPoint& c) const {
        return {m_[0][0] * c.x + m_[0][1] * c.y, m_[1][0] * c.x + m_[1][1] * c.y};
    }

    bool contains(const RationalPoint& p) const { return coordinates(p).is_integral(); }

    /// True when both bases generate the same lattice.
    bool operator==(const Sublattice& o) const {
        return contains(o.generator(0)) && contains(o.generator(1)) && o.contains(generator(0)) &&
               o.contains(generator(1));
    }

    /// True when every point of this lattice lies in `o`.
    bool is_sublattice_of(const Sublattice& o) const {
        return o.contains(generator(0)) && o.contains(generator(1));
    }

    std::string str() const {
        return "[[" + m_[0][0].str() + "," + m_[0][1].str() + "],[" + m_[1][0].str() + "," + m_[1][1].str() + "]]";
    }

private:
    std::array<std::array<Rational, 2>, 2> m_;
};

enum class Region { interior, boundary, all };

/// Strictly convex polygon with exact vertices and a reference lattice.
///
/// Vertices are normalized on construction: counterclockwise, starting from
/// the lexicographically smallest one. Duplicate, collinear and non-convex
/// vertex lists are rejected. One- and two-vertex (degenerate) polygons are
/// allowed; they have zero area.
class LatticePolygon {
public:
    LatticePolygon(std::vector<RationalPoint> vertices, Sublattice lattice = Sublattice::identity())
        : vertices_(normalize(std::move(vertices))), lattice_(std::move(lattice)) {}

    static LatticePolygon from_integer(const std::vector<LatticeVector>& vertices,
                                       Sublattice lattice = Sublattice::identity()) {
        std::vector<RationalPoint> pts(vertices.begin(), vertices.end());
        return {std::move(pts), std::move(lattice)};
    }

    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    const Sublattice& lattice() const { return lattice_; }
    std::size_t size() const { return vertices_.size(); }

    bool is_degenerate() const { return vertices_.size() < 3; }

    /// Twice the Euclidean area in ambient coordinates.
    Rational twice_area() const {
        Rational s = 0;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            s += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
        return s;
    }

    /// -1 outside, 0 on the boundary, +1 in the interior.
    int locate(const RationalPoint& p) const {
        const auto n = vertices_.size();
        if (n == 1) return p == vertices_[0] ? 0 : -1;
        if (n == 2) {
            const auto& a = vertices_[0];
            const auto& b = vertices_[1];
            if (orientation(a, b, p) != 0) return -1;
            Rational t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
            Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
            return (t >= 0 && t <= len) ? 0 : -1;
        }
        bool on_edge = false;
        for (std::size_t i = 0; i < n; ++i) {
            int o = orientation(vertices_[i], vertices_[(i + 1) % n], p);
            if (o < 0) return -1;
            if (o == 0) on_edge = true;
        }
        return on_edge ? 0 : 1;
    }

    bool operator==(const LatticePolygon& o) const { return vertices_ == o.vertices_ && lattice_ == o.lattice_; }

    /// True when every vertex lies in the polygon's own lattice.
    bool is_integral() const {
        return std::all_of(vertices_.begin(), vertices_.end(), [&](const auto& v) { return lattice_.contains(v); });
    }

    LatticePolygon scaled(const Rational& k) const {
        if (k <= 0) throw GeometryError("polygon scale factor must be positive");
        std::vector<RationalPoint> pts;
        for (const auto& v : vertices_) pts.push_back(v * k);
        return {std::move(pts), lattice_};
    }

    /// Integer vertices; requires integral coordinates in the ambient basis.
    std::vector<LatticeVector> integer_vertices() const {
        std::vector<LatticeVector> out;
        for (const auto& v : vertices_) {
            if (!v.is_integral()) throw IntegralityError("vertex " + v.str() + " is not integral");
            out.push_back(v.to_lattice_vector());
        }
        return out;
    }

    std::string str() const {
        std::string s = "conv{";
        for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? "," : "") + vertices_[i].str();
        return s + "}";
    }

private:
    static std::vector<RationalPoint> normalize(std::vector<RationalPoint> pts) {
        if (pts.empty()) throw GeometryError("polygon needs at least one vertex");
        std::vector<RationalPoint> sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GeometryError("duplicate polygon vertex");
        if (sorted.size() <= 2) return sorted;

        // Andrew's monotone chain, strict turns only.
        std::vector<RationalPoint> hull(2 * sorted.size());
        std::size_t k = 0;
        for (const auto& p : sorted) {
            while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
            hull[k++] = p;
        }
        for (std::size_t i = sorted.size() - 1, t = k + 1; i-- > 0;) {
            const auto& p = sorted[i];
            while (k >= t && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
            hull[k++] = p;
        }
        hull.resize(k - 1);
        if (hull.size() < 3) throw GeometryError("polygon vertices are collinear");
        if (hull.size() != sorted.size()) {
            for (const auto& p : sorted) {
                if (std::find(hull.begin(), hull.end(), p) != hull.end()) continue;
                bool on_boundary = false;
                for (std::size_t i = 0; i < hull.size(); ++i)
                    if (orientation(hull[i], hull[(i + 1) % hull.size()], p) == 0) on_boundary = true;
                throw GeometryError((on_boundary ? "collinear vertex " : "non-convex vertex ") + p.str());
            }
        }
        return hull;
    }

    std::vector<RationalPoint> vertices_;
    Sublattice lattice_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePolygon& p) { return os << p.str(); }

/// Points of lattice `lat` in the requested region of `poly`, in ambient
/// coordinates, sorted lexicographically.
inline std::vector<RationalPoint> lattice_points(const LatticePolygon& poly, const Sublattice& lat,
                                                 Region region = Region::all) {
    if (region == Region::interior && poly.is_degenerate())
        throw GeometryError("interior of a degenerate polygon " + poly.str() + " is empty");
    std::vector<RationalPoint> coords;
    for (const auto& v : poly.vertices()) coords.push_back(lat.coordinates(v));
    Rational x0 = coords[0].x, x1 = coords[0].x, y0 = coords[0].y, y1 = coords[0].y;
    for (const auto& c : coords) {
        x0 = std::min(x0, c.x);
        x1 = std::max(x1, c.x);
        y0 = std::min(y0, c.y);
        y1 = std::max(y1, c.y);
    }
    std::vector<RationalPoint> out;
    for (BigInt i = ceil(x0); i <= floor(x1); ++i) {
        for (BigInt j = ceil(y0); j <= floor(y1); ++j) {
            RationalPoint p = lat.ambient({Rational(i), Rational(j)});
            int where = poly.locate(p);
            bool take = (region == Region::all && where >= 0) || (region == Region::boundary && where == 0) ||
                        (region == Region::interior && where == 1);
            if (take) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<RationalPoint> lattice_points(const LatticePolygon& poly, Region region = Region::all) {
    return lattice_points(poly, poly.lattice(), region);
}

/// Rewrites the vertices in the basis of `lat`. The result has integer
/// vertices and the identity lattice.
inline LatticePolygon rebase(const LatticePolygon& poly, const Sublattice& lat) {
    std::vector<RationalPoint> pts;
    for (const auto& v : poly.vertices()) {
        RationalPoint c = lat.coordinates(v);
        if (!c.is_integral())
            throw IntegralityError("vertex " + v.str() + " is not in the lattice " + lat.str());
        pts.push_back(std::move(c));
    }
    return LatticePolygon(std::move(pts));
}

inline LatticePolygon rebase(const LatticePolygon& poly) { return rebase(poly, poly.lattice()); }

/// Inverse of `rebase`: reads the vertices as coordinates in `lat`.
inline LatticePolygon unrebase(const LatticePolygon& coords, const Sublattice& lat) {
    std::vector<RationalPoint> pts;
    for (const auto& c : coords.vertices()) pts.push_back(lat.ambient(c));
    return LatticePolygon(std::move(pts), lat);
}

/// Normal fan ray of one polygon edge: the primitive outer normal (in the
/// lattice dual to the polygon's lattice, i.e. in rebased coordinates) and
/// the number of lattice segments on the edge.
struct FanRayData {
    LatticeVector primitive_direction;
    std::int64_t edge_lattice_length = 0;

    bool operator==(const FanRayData&) const = default;
};

/// One ray per edge, in edge order (edge i joins vertex i to vertex i+1).
inline std::vector<FanRayData> normal_fan(const LatticePolygon& poly) {
    if (poly.is_degenerate()) throw GeometryError("normal fan needs a polygon of positive area");
    auto verts = rebase(poly).integer_vertices();
    // rebase() renormalizes: its counterclockwise order is the one we walk.
    std::vector<FanRayData> out;
    const auto n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e = verts[(i + 1) % n] - verts[i];
        LatticeVector normal = primitive(LatticeVector{e.b, -e.a});
        const auto& other = verts[(i + 2) % n];
        if (pairing(other, normal) > pairing(verts[i], normal)) normal = -normal;
        out.push_back({normal, lattice_length(e)});
    }
    return out;
}

/// Twice the area of the polygon measured in fundamental domains of `lat`.
inline std::int64_t normalized_volume(const LatticePolygon& poly, const Sublattice& lat) {
    if (poly.is_degenerate()) throw GeometryError("normalized volume needs a polygon of positive area");
    Rational v = poly.twice_area() / lat.covolume();
    if (!is_integer(v)) throw IntegralityError("polygon " + poly.str() + " is not integral in " + lat.str());
    return to_int64(v);
}

inline std::int64_t normalized_volume(const LatticePolygon& poly) { return normalized_volume(poly, poly.lattice()); }

/// Dimension of the family of genus-g curves with Newton polygon `poly`:
/// |boundary points| + g - 1.
inline std::int64_t expected_point_count(const LatticePolygon& poly, const Sublattice& lat, std::int64_t genus) {
    if (genus < 0) throw GeometryError("genus must be non-negative");
    auto boundary = static_cast<std::int64_t>(lattice_points(poly, lat, Region::boundary).size());
    std::int64_t n = boundary + genus - 1;
    if (n < 0) throw GeometryError("over-constrained genus: expected point count is negative");
    return n;
}

inline std::int64_t expected_point_count(const LatticePolygon& poly, std::int64_t genus) {
    return expected_point_count(poly, poly.lattice(), genus);
}

inline std::size_t interior_count(const LatticePolygon& poly, const Sublattice& lat) {
    return lattice_points(poly, lat, Region::interior).size();
}

inline std::size_t boundary_count(const LatticePolygon& poly, const Sublattice& lat) {
    return lattice_points(poly, lat, Region::boundary).size();
}

namespace presets {

/// conv{+-e^1, +-2e^2} in M = Z^2.
inline LatticePolygon delta() { return LatticePolygon::from_integer({{1, 0}, {0, 2}, {-1, 0}, {0, -2}}); }

/// M' = <e^1/2, e^2>, dual to N' = <2e_1, e_2>.
inline Sublattice refined_lattice() { return Sublattice::dual_of_cocharacters(2, 0, 0, 1); }

/// conv{+-e^1/2, +-e^2}, integral with respect to M'.
inline LatticePolygon delta0() {
    return LatticePolygon({{make_rational(1, 2), 0}, {0, 1}, {make_rational(-1, 2), 0}, {0, -1}}, refined_lattice());
}

/// The fan generators n_1..n_4 = (2,1), (-2,1), (-2,-1), (2,-1).
inline std::array<LatticeVector, 4> fan_rays() { return {{{2, 1}, {-2, 1}, {-2, -1}, {2, -1}}}; }

/// conv{(0,0), (d,0), (0,d)}.
inline LatticePolygon triangle(std::int64_t d) { return LatticePolygon::from_integer({{0, 0}, {d, 0}, {0, d}}); }

}  // namespace presets

}  // namespace severi
