#pragma once

// Lattice subdivisions of a polygon into triangles and parallelograms:
// enumeration of triangulations with a prescribed vertex set and of the
// "simple" subdivisions that can be dual to nodal tropical curves.

#include "severi/integral_polygon.hpp"
#include "severi/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace severi {

/// A lattice polygon cell, vertices counterclockwise starting from the
/// lexicographically smallest.
struct Cell {
    std::vector<LatticeVector> vertices;

    static Cell make(std::vector<LatticeVector> pts) {
        // Sort counterclockwise around the lexicographically smallest point;
        // cells are convex so the angular order is the boundary order.
        std::sort(pts.begin(), pts.end());
        LatticeVector o = pts.front();
        std::sort(pts.begin() + 1, pts.end(), [&](const LatticeVector& u, const LatticeVector& v) {
            return cross(u - o, v - o) > 0;
        });
        return {std::move(pts)};
    }

    bool is_triangle() const { return vertices.size() == 3; }

    bool is_parallelogram() const {
        return vertices.size() == 4 && vertices[0] + vertices[2] == vertices[1] + vertices[3];
    }

    std::int64_t twice_area() const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            s += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
        return s;
    }

    bool has_vertex(const LatticeVector& v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < vertices.size(); ++i) s += (i ? "," : "") + vertices[i].str();
        return s + "]";
    }
};

/// A polyhedral subdivision, cells kept sorted so that equality is canonical.
struct DualSubdivision {
    std::vector<Cell> cells;

    DualSubdivision() = default;
    explicit DualSubdivision(std::vector<Cell> c) : cells(std::move(c)) { std::sort(cells.begin(), cells.end()); }

    std::vector<LatticeVector> vertex_set() const {
        std::set<LatticeVector> s;
        for (const auto& c : cells) s.insert(c.vertices.begin(), c.vertices.end());
        return {s.begin(), s.end()};
    }

    std::int64_t twice_area() const {
        std::int64_t s = 0;
        for (const auto& c : cells) s += c.twice_area();
        return s;
    }

    std::size_t parallelogram_count() const {
        return static_cast<std::size_t>(
            std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.is_parallelogram(); }));
    }

    /// Product of 2*Area over triangles.
    std::int64_t mikhalkin_multiplicity() const {
        std::int64_t m = 1;
        for (const auto& c : cells)
            if (c.is_triangle()) m *= c.twice_area();
        return m;
    }

    bool operator==(const DualSubdivision&) const = default;
    auto operator<=>(const DualSubdivision&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? " " : "") + cells[i].str();
        return s;
    }
};

namespace detail {

inline std::int64_t orient(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
    return cross(b - a, c - a);
}

/// True when some point of `pts` other than the triangle's corners lies in
/// the closed triangle (a, b, c) (counterclockwise).
inline bool triangle_has_extra_point(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c,
                                     const std::vector<LatticeVector>& pts) {
    for (const auto& p : pts) {
        if (p == a || p == b || p == c) continue;
        if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0) return true;
    }
    return false;
}

/// Interiors of two counterclockwise triangles are disjoint iff one of the
/// six edge lines weakly separates them.
inline bool interiors_disjoint(const std::array<LatticeVector, 3>& s, const std::array<LatticeVector, 3>& t) {
    auto separates = [](const std::array<LatticeVector, 3>& a, const std::array<LatticeVector, 3>& b) {
        for (int i = 0; i < 3; ++i) {
            const auto& u = a[i];
            const auto& w = a[(i + 1) % 3];
            if (orient(u, w, b[0]) <= 0 && orient(u, w, b[1]) <= 0 && orient(u, w, b[2]) <= 0) return true;
        }
        return false;
    };
    return separates(s, t) || separates(t, s);
}

using DirectedEdge = std::pair<LatticeVector, LatticeVector>;

inline void triangulate(const std::vector<LatticeVector>& pts, std::set<DirectedEdge>& frontier,
                        std::vector<std::array<LatticeVector, 3>>& triangles,
                        std::vector<std::vector<std::array<LatticeVector, 3>>>& out) {
    if (frontier.empty()) {
        out.push_back(triangles);
        return;
    }
    // The smallest open edge; every triangulation has exactly one triangle
    // on its left, so each triangulation is produced exactly once.
    const DirectedEdge edge = *frontier.begin();
    const auto& [u, w] = edge;
    for (const auto& v : pts) {
        if (orient(u, w, v) <= 0) continue;
        if (triangle_has_extra_point(u, w, v, pts)) continue;
        std::array<LatticeVector, 3> tri{u, w, v};
        bool ok = true;
        for (const auto& t : triangles)
            if (!interiors_disjoint(tri, t)) {
                ok = false;
                break;
            }
        if (!ok) continue;

        std::vector<DirectedEdge> removed, added;
        bool conflict = false;
        for (const DirectedEdge& e : {DirectedEdge{u, w}, DirectedEdge{w, v}, DirectedEdge{v, u}}) {
            if (frontier.count(e)) {
                removed.push_back(e);
            } else {
                DirectedEdge back{e.second, e.first};
                if (frontier.count(back)) {
                    conflict = true;  // the other side is already waiting: overlap
                    break;
                }
                added.push_back(back);
            }
        }
        if (conflict) continue;
        for (const auto& e : removed) frontier.erase(e);
        for (const auto& e : added) frontier.insert(e);
        triangles.push_back(tri);
        triangulate(pts, frontier, triangles, out);
        triangles.pop_back();
        for (const auto& e : added) frontier.erase(e);
        for (const auto& e : removed) frontier.insert(e);
    }
}

}  // namespace detail

/// All triangulations of conv(pts) whose vertex set is exactly `pts`.
/// `hull` is the counterclockwise list of points of `pts` on the boundary of
/// the convex hull (including points in the middle of hull edges).
inline std::vector<DualSubdivision> triangulations(const std::vector<LatticeVector>& pts,
                                                   const std::vector<LatticeVector>& hull) {
    std::set<detail::DirectedEdge> frontier;
    for (std::size_t i = 0; i < hull.size(); ++i) frontier.insert({hull[i], hull[(i + 1) % hull.size()]});
    std::vector<std::array<LatticeVector, 3>> current;
    std::vector<std::vector<std::array<LatticeVector, 3>>> raw;
    detail::triangulate(pts, frontier, current, raw);
    std::vector<DualSubdivision> out;
    for (const auto& tris : raw) {
        std::vector<Cell> cells;
        for (const auto& t : tris) cells.push_back(Cell::make({t[0], t[1], t[2]}));
        out.emplace_back(std::move(cells));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Boundary lattice points of an integral polygon in counterclockwise order,
/// starting at its first vertex.
inline std::vector<LatticeVector> boundary_ring(const IntegralPolygon& poly) {
    std::vector<LatticeVector> ring;
    const auto& verts = poly.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        LatticeVector a = verts[i], b = verts[(i + 1) % verts.size()];
        LatticeVector step = primitive(b - a);
        for (LatticeVector p = a; p != b; p = p + step) ring.push_back(p);
    }
    return ring;
}

namespace detail {

inline void choose_parallelograms(const std::vector<std::pair<std::size_t, std::size_t>>& candidates, std::size_t start,
                                  std::size_t needed, std::vector<bool>& used,
                                  std::vector<std::pair<std::size_t, std::size_t>>& chosen,
                                  const DualSubdivision& tri, std::set<DualSubdivision>& out) {
    if (needed == 0) {
        std::vector<Cell> cells;
        std::vector<bool> merged(tri.cells.size(), false);
        for (const auto& [i, j] : chosen) {
            merged[i] = merged[j] = true;
            std::set<LatticeVector> pts(tri.cells[i].vertices.begin(), tri.cells[i].vertices.end());
            pts.insert(tri.cells[j].vertices.begin(), tri.cells[j].vertices.end());
            cells.push_back(Cell::make({pts.begin(), pts.end()}));
        }
        for (std::size_t i = 0; i < tri.cells.size(); ++i)
            if (!merged[i]) cells.push_back(tri.cells[i]);
        out.insert(DualSubdivision(std::move(cells)));
        return;
    }
    for (std::size_t k = start; k < candidates.size(); ++k) {
        auto [i, j] = candidates[k];
        if (used[i] || used[j]) continue;
        used[i] = used[j] = true;
        chosen.push_back(candidates[k]);
        choose_parallelograms(candidates, k + 1, needed - 1, used, chosen, tri, out);
        chosen.pop_back();
        used[i] = used[j] = false;
    }
}

}  // namespace detail

/// Subdivisions of `poly` into lattice triangles and exactly
/// `parallelograms` parallelograms whose vertex set is exactly `pts`.
inline std::vector<DualSubdivision> simple_subdivisions(const IntegralPolygon& poly,
                                                        const std::vector<LatticeVector>& pts,
                                                        std::size_t parallelograms) {
    std::vector<LatticeVector> hull;
    for (const auto& p : boundary_ring(poly))
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) hull.push_back(p);
    std::set<DualSubdivision> out;
    for (const auto& tri : triangulations(pts, hull)) {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t i = 0; i < tri.cells.size(); ++i)
            for (std::size_t j = i + 1; j < tri.cells.size(); ++j) {
                std::set<LatticeVector> u(tri.cells[i].vertices.begin(), tri.cells[i].vertices.end());
                u.insert(tri.cells[j].vertices.begin(), tri.cells[j].vertices.end());
                if (u.size() != 4) continue;
                if (Cell::make({u.begin(), u.end()}).is_parallelogram()) candidates.emplace_back(i, j);
            }
        std::vector<bool> used(tri.cells.size(), false);
        std::vector<std::pair<std::size_t, std::size_t>> chosen;
        detail::choose_parallelograms(candidates, 0, parallelograms, used, chosen, tri, out);
    }
    return {out.begin(), out.end()};
}

/// Every subdivision that can be dual to a simple tropical curve of the
/// given genus through |boundary| + g - 1 generic points: all boundary
/// lattice points are vertices, cells are triangles and parallelograms, and
/// (#interior vertices) - (#parallelograms) = genus.
inline std::vector<DualSubdivision> nodal_subdivisions(const IntegralPolygon& poly, std::int64_t genus) {
    std::vector<DualSubdivision> out;
    if (poly.is_degenerate() || genus < 0) return out;
    const auto& interior = poly.interior_points();
    const auto& boundary = poly.boundary_points();
    const std::size_t k = interior.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<LatticeVector> pts = boundary;
        std::int64_t used = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1U) {
                pts.push_back(interior[i]);
                ++used;
            }
        if (used < genus) continue;
        std::sort(pts.begin(), pts.end());
        auto subs = simple_subdivisions(poly, pts, static_cast<std::size_t>(used - genus));
        out.insert(out.end(), subs.begin(), subs.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace severi
