#pragma once

// Integer-coordinate view of a lattice polygon, used by the tropical
// counting code after rebasing to the polygon's own lattice.

#include "severi/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace severi {

class IntegralPolygon {
public:
    explicit IntegralPolygon(const LatticePolygon& poly) : vertices_(rebase(poly).integer_vertices()) {
        for (std::int64_t x = min_coord(0); x <= max_coord(0); ++x)
            for (std::int64_t y = min_coord(1); y <= max_coord(1); ++y) {
                int where = locate({x, y});
                if (where >= 0) points_.push_back({x, y});
                if (where == 0) boundary_.push_back({x, y});
                if (where == 1) interior_.push_back({x, y});
            }
    }

    explicit IntegralPolygon(const std::vector<LatticeVector>& vertices)
        : IntegralPolygon(LatticePolygon::from_integer(vertices)) {}

    const std::vector<LatticeVector>& vertices() const { return vertices_; }
    const std::vector<LatticeVector>& points() const { return points_; }
    const std::vector<LatticeVector>& boundary_points() const { return boundary_; }
    const std::vector<LatticeVector>& interior_points() const { return interior_; }

    bool is_degenerate() const { return vertices_.size() < 3; }

    std::int64_t twice_area() const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            s += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
        return s;
    }

    /// -1 outside, 0 on the boundary, +1 in the interior.
    int locate(const LatticeVector& p) const {
        const auto n = vertices_.size();
        if (n == 1) return p == vertices_[0] ? 0 : -1;
        if (n == 2) {
            LatticeVector d = vertices_[1] - vertices_[0], q = p - vertices_[0];
            if (cross(d, q) != 0) return -1;
            std::int64_t t = pairing(d, q);
            return (t >= 0 && t <= pairing(d, d)) ? 0 : -1;
        }
        bool edge = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t o = cross(vertices_[(i + 1) % n] - vertices_[i], p - vertices_[i]);
            if (o < 0) return -1;
            if (o == 0) edge = true;
        }
        return edge ? 0 : 1;
    }

    bool contains(const LatticeVector& p) const { return locate(p) >= 0; }
    bool is_boundary(const LatticeVector& p) const { return locate(p) == 0; }

    bool is_vertex(const LatticeVector& p) const {
        return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
    }

private:
    std::int64_t min_coord(int axis) const {
        std::int64_t m = axis == 0 ? vertices_[0].a : vertices_[0].b;
        for (const auto& v : vertices_) m = std::min(m, axis == 0 ? v.a : v.b);
        return m;
    }
    std::int64_t max_coord(int axis) const {
        std::int64_t m = axis == 0 ? vertices_[0].a : vertices_[0].b;
        for (const auto& v : vertices_) m = std::max(m, axis == 0 ? v.a : v.b);
        return m;
    }

    std::vector<LatticeVector> vertices_;
    std::vector<LatticeVector> points_;
    std::vector<LatticeVector> boundary_;
    std::vector<LatticeVector> interior_;
};

}  // namespace severi
