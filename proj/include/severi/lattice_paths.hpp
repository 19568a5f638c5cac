#pragma once

// Lattice-path backend for tropical curve counts.
//
// Paths are lambda-increasing sequences of lattice points of the polygon
// from the lambda-minimal vertex p to the lambda-maximal vertex q. A path
// with s = |boundary points| + g - 1 steps contributes mu_+ * mu_-, where
// mu_+ is computed by the compression recursion:
//
//   * mu_+(alpha_+) = 1, alpha_+ being the boundary path from p to q that
//     runs clockwise;
//   * otherwise take the first vertex gamma(j) (1 <= j < s) where gamma
//     turns left; if there is none, mu_+ = 0;
//   * gamma'  drops gamma(j) (the triangle T = gamma(j-1), gamma(j),
//     gamma(j+1) is cut off), gamma'' replaces gamma(j) by
//     gamma(j-1) + gamma(j+1) - gamma(j) (a parallelogram is cut off);
//   * mu_+(gamma) = 2 Area(T) * mu_+(gamma') + mu_+(gamma''),
//     where a path leaving the polygon contributes 0.
//
// mu_- is the mirror image: right turns, counterclockwise boundary path.

#include "severi/integral_polygon.hpp"
#include "severi/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace severi {

/// Linear functional lambda(p) = <primary, p>, ties broken by <tiebreak, p>,
/// compared exactly (no epsilon).
struct LinearFunctional {
    LatticeVector primary{1, 0};
    LatticeVector tiebreak{0, -1};

    /// lambda(x, y) = x - eps*y.
    static LinearFunctional standard() { return {}; }
    /// lambda(x, y) = -x + eps*y.
    static LinearFunctional reversed() { return {{-1, 0}, {0, 1}}; }

    bool less(const LatticeVector& u, const LatticeVector& v) const {
        auto pu = pairing(u, primary), pv = pairing(v, primary);
        if (pu != pv) return pu < pv;
        return pairing(u, tiebreak) < pairing(v, tiebreak);
    }
    bool same(const LatticeVector& u, const LatticeVector& v) const { return !less(u, v) && !less(v, u); }
};

struct LatticePath {
    std::vector<LatticeVector> points;

    std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
    bool operator==(const LatticePath&) const = default;
    auto operator<=>(const LatticePath&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < points.size(); ++i) s += (i ? "->" : "") + points[i].str();
        return s;
    }
};

class PathCounter {
public:
    PathCounter(const LatticePolygon& poly, LinearFunctional lambda = LinearFunctional::standard())
        : poly_(poly), lambda_(lambda) {
        points_ = poly_.points();
        std::sort(points_.begin(), points_.end(), [&](const auto& u, const auto& v) { return lambda_.less(u, v); });
        for (std::size_t i = 1; i < points_.size(); ++i)
            if (lambda_.same(points_[i - 1], points_[i]))
                throw GeometryError("linear functional is not injective on the lattice points (" +
                                    points_[i - 1].str() + " vs " + points_[i].str() +
                                    "); choose a different tie-break");
        if (poly_.is_degenerate()) return;
        source_ = points_.front();
        sink_ = points_.back();
        build_boundary_paths();
    }

    const IntegralPolygon& polygon() const { return poly_; }
    const LatticeVector& source() const { return source_; }
    const LatticeVector& sink() const { return sink_; }
    const LatticePath& clockwise_boundary() const { return alpha_plus_; }
    const LatticePath& counterclockwise_boundary() const { return alpha_minus_; }

    /// All lambda-increasing paths with exactly `steps` steps from the
    /// lambda-minimal to the lambda-maximal vertex, in lexicographic order of
    /// the lambda-index sequences.
    std::vector<LatticePath> enumerate(std::int64_t steps) const {
        std::vector<LatticePath> out;
        if (poly_.is_degenerate() || steps < 1) return out;
        std::vector<LatticeVector> current{source_};
        extend(0, steps, current, out);
        return out;
    }

    std::int64_t mu_plus(const LatticePath& path) const { return mu(path.points, +1); }
    std::int64_t mu_minus(const LatticePath& path) const { return mu(path.points, -1); }
    std::int64_t multiplicity(const LatticePath& path) const {
        std::int64_t p = mu_plus(path);
        return p == 0 ? 0 : p * mu_minus(path);
    }

    /// Sum of multiplicities over all paths with the given number of steps.
    std::int64_t count(std::int64_t steps) const {
        std::int64_t total = 0;
        for (const auto& path : enumerate(steps)) total += multiplicity(path);
        return total;
    }

private:
    void extend(std::size_t index, std::int64_t remaining, std::vector<LatticeVector>& current,
                std::vector<LatticePath>& out) const {
        if (remaining == 1) {
            current.push_back(sink_);
            out.push_back({current});
            current.pop_back();
            return;
        }
        // Leave enough points for the remaining steps.
        for (std::size_t next = index + 1; next + 1 < points_.size(); ++next) {
            if (static_cast<std::int64_t>(points_.size() - 1 - next) < remaining - 1) break;
            current.push_back(points_[next]);
            extend(next, remaining - 1, current, out);
            current.pop_back();
        }
    }

    void build_boundary_paths() {
        // Sort boundary points counterclockwise around the polygon.
        const auto& verts = poly_.vertices();
        std::vector<LatticeVector> ccw;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            LatticeVector a = verts[i], b = verts[(i + 1) % verts.size()];
            LatticeVector step = primitive(b - a);
            for (LatticeVector p = a; p != b; p = p + step) ccw.push_back(p);
        }
        auto at = [&](const LatticeVector& v) {
            return static_cast<std::size_t>(std::find(ccw.begin(), ccw.end(), v) - ccw.begin());
        };
        const std::size_t n = ccw.size(), ip = at(source_), iq = at(sink_);
        alpha_minus_.points.clear();
        for (std::size_t i = ip;; i = (i + 1) % n) {
            alpha_minus_.points.push_back(ccw[i]);
            if (i == iq) break;
        }
        alpha_plus_.points.clear();
        for (std::size_t i = ip;; i = (i + n - 1) % n) {
            alpha_plus_.points.push_back(ccw[i]);
            if (i == iq) break;
        }
    }

    // side = +1: left turns and the clockwise boundary; side = -1: mirror.
    std::int64_t mu(const std::vector<LatticeVector>& path, int side) const {
        const auto& target = side > 0 ? alpha_plus_.points : alpha_minus_.points;
        if (path == target) return 1;
        auto key = std::make_pair(side, path);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::int64_t result = 0;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            std::int64_t turn = cross(path[j] - path[j - 1], path[j + 1] - path[j]);
            if (turn * side <= 0) continue;
            std::int64_t weight = std::llabs(cross(path[j - 1] - path[j], path[j + 1] - path[j]));
            LatticeVector moved = path[j - 1] + path[j + 1] - path[j];
            if (poly_.contains(moved)) {
                auto compressed = path;
                compressed[j] = moved;
                result += mu(compressed, side);
            }
            auto shortened = path;
            shortened.erase(shortened.begin() + static_cast<std::ptrdiff_t>(j));
            result += weight * mu(shortened, side);
            break;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    IntegralPolygon poly_;
    LinearFunctional lambda_;
    std::vector<LatticeVector> points_;
    LatticeVector source_{}, sink_{};
    LatticePath alpha_plus_, alpha_minus_;
    mutable std::map<std::pair<int, std::vector<LatticeVector>>, std::int64_t> memo_;
};

}  // namespace severi
