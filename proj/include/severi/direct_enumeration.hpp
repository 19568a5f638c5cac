#pragma once

// Direct enumeration of tropical curves through a point configuration.
//
// For every subdivision S that can be dual to a simple curve of the given
// genus, the parametrized graph of S is built (vertices = triangles, edges =
// chains of dual edges running straight through parallelogram cells). A set
// of marked edges is admissible when every component of the graph cut at the
// marked points is a tree with exactly one unbounded end; orienting each such
// tree towards its end, every vertex has two incoming edges whose lines are
// known once their sources are, so vertex positions follow by intersecting
// lines. Points are matched to marked edges during that propagation, and a
// branch is cut as soon as an edge would get non-positive length. Survivors
// are checked exactly against the tropical polynomial they define.

#include "severi/exact.hpp"
#include "severi/integral_polygon.hpp"
#include "severi/subdivision.hpp"
#include "severi/tropical_curve.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace severi {

namespace detail {

using SegmentKey = std::pair<LatticeVector, LatticeVector>;

inline SegmentKey segment_key(LatticeVector u, LatticeVector w) {
    if (w < u) std::swap(u, w);
    return {u, w};
}

/// Outer normal of a cell at its edge (u, w), primitive.
inline LatticeVector outer_normal(const Cell& cell, const LatticeVector& u, const LatticeVector& w) {
    LatticeVector n = primitive(LatticeVector{(w - u).b, -(w - u).a});
    for (const auto& t : cell.vertices) {
        if (t == u || t == w) continue;
        if (pairing(t - u, n) > 0) n = -n;
        break;
    }
    return n;
}

inline RationalPoint step(const RationalPoint& p, const LatticeVector& d, const Rational& t) {
    return {p.x + t * d.a, p.y + t * d.b};
}

inline Rational dot(const LatticeVector& v, const RationalPoint& x) { return x.x * v.a + x.y * v.b; }

/// Parametrized graph of a simple subdivision.
struct ChainGraph {
    struct End {
        int triangle = -1;  // index into `triangles`, -1 for an unbounded end
        SegmentKey segment;
    };
    struct Chain {
        std::array<End, 2> ends;
        std::vector<SegmentKey> segments;
        LatticeVector direction;  // primitive, travelling from ends[0] to ends[1]
        std::int64_t weight = 1;
    };

    std::vector<std::size_t> triangles;       // cell indices of triangles
    std::vector<std::size_t> parallelograms;  // cell indices of parallelograms
    std::vector<Chain> chains;
    std::vector<std::array<std::pair<std::size_t, int>, 3>> triangle_ends;  // (chain, end) per triangle
    std::map<SegmentKey, std::size_t> chain_of_segment;

    explicit ChainGraph(const DualSubdivision& s) {
        std::map<SegmentKey, std::vector<std::size_t>> cells_of;
        std::map<std::size_t, int> triangle_index;
        for (std::size_t c = 0; c < s.cells.size(); ++c) {
            const auto& vs = s.cells[c].vertices;
            for (std::size_t i = 0; i < vs.size(); ++i) cells_of[segment_key(vs[i], vs[(i + 1) % vs.size()])].push_back(c);
            if (s.cells[c].is_triangle()) {
                triangle_index[c] = static_cast<int>(triangles.size());
                triangles.push_back(c);
            } else {
                parallelograms.push_back(c);
            }
        }
        auto opposite = [&](std::size_t cell, const SegmentKey& seg) {
            const auto& vs = s.cells[cell].vertices;
            for (std::size_t i = 0; i < 4; ++i) {
                SegmentKey k = segment_key(vs[i], vs[(i + 1) % 4]);
                if (k.first != seg.first && k.first != seg.second && k.second != seg.first && k.second != seg.second)
                    return k;
            }
            throw InconsistencyError("parallelogram without an opposite side");
        };
        // Walk from `seg` into `cell` until a triangle or the boundary.
        auto walk = [&](SegmentKey seg, std::optional<std::size_t> cell, std::vector<SegmentKey>& path) -> End {
            while (cell && !s.cells[*cell].is_triangle()) {
                seg = opposite(*cell, seg);
                path.push_back(seg);
                const auto& around = cells_of[seg];
                std::optional<std::size_t> next;
                for (auto c : around)
                    if (c != *cell) next = c;
                cell = next;
            }
            if (!cell) return {-1, seg};
            return {triangle_index.at(*cell), seg};
        };

        for (const auto& [seg, around] : cells_of) {
            if (chain_of_segment.count(seg)) continue;
            std::optional<std::size_t> side0 = around[0];
            std::optional<std::size_t> side1;
            if (around.size() > 1) side1 = around[1];
            std::vector<SegmentKey> back, forward;
            End e0 = walk(seg, side0, back);
            End e1 = walk(seg, side1, forward);
            Chain chain;
            chain.ends = {e0, e1};
            std::reverse(back.begin(), back.end());
            chain.segments = back;
            chain.segments.push_back(seg);
            chain.segments.insert(chain.segments.end(), forward.begin(), forward.end());
            chain.weight = lattice_length(seg.second - seg.first);
            // Travel direction from end 0 towards end 1.
            if (e0.triangle >= 0) {
                chain.direction = outer_normal(s.cells[triangles[static_cast<std::size_t>(e0.triangle)]], e0.segment.first,
                                               e0.segment.second);
            } else if (e1.triangle >= 0) {
                chain.direction = -outer_normal(s.cells[triangles[static_cast<std::size_t>(e1.triangle)]],
                                                e1.segment.first, e1.segment.second);
            } else {
                chain.direction = primitive(LatticeVector{(seg.second - seg.first).b, -(seg.second - seg.first).a});
            }
            const std::size_t id = chains.size();
            for (const auto& k : chain.segments) chain_of_segment[k] = id;
            chains.push_back(std::move(chain));
        }

        triangle_ends.resize(triangles.size());
        std::vector<int> filled(triangles.size(), 0);
        for (std::size_t c = 0; c < chains.size(); ++c)
            for (int e = 0; e < 2; ++e) {
                int t = chains[c].ends[static_cast<std::size_t>(e)].triangle;
                if (t < 0) continue;
                auto ti = static_cast<std::size_t>(t);
                if (filled[ti] >= 3) throw InconsistencyError("triangle with more than three chain ends");
                triangle_ends[ti][static_cast<std::size_t>(filled[ti]++)] = {c, e};
            }
    }

    /// Outgoing primitive direction of a chain at one of its ends.
    LatticeVector outward(std::size_t chain, int end) const {
        return end == 0 ? chains[chain].direction : -chains[chain].direction;
    }
};

/// A floating-point coordinate pair with absolute error bounds, used to
/// decide signs during the search without exact arithmetic.
struct ApproxPoint {
    long double x = 0, y = 0;
    long double ex = 0, ey = 0;
};

/// Unit roundoff of long double with a safety factor.
inline constexpr long double approx_unit = 0x1p-58L;

inline long double to_long_double(const Rational& q) { return q.convert_to<long double>(); }

inline ApproxPoint approximate(const RationalPoint& p) {
    ApproxPoint a{to_long_double(p.x), to_long_double(p.y), 0, 0};
    a.ex = std::fabs(a.x) * approx_unit + LDBL_MIN;
    a.ey = std::fabs(a.y) * approx_unit + LDBL_MIN;
    return a;
}

}  // namespace detail

class DirectEnumerator {
public:
    DirectEnumerator(const IntegralPolygon& poly, std::int64_t genus) : poly_(poly), genus_(genus) {
        if (!poly_.is_degenerate() && genus_ >= 0) subdivisions_ = nodal_subdivisions(poly_, genus_);
    }

    const std::vector<DualSubdivision>& candidate_subdivisions() const { return subdivisions_; }

    std::int64_t required_points() const {
        return static_cast<std::int64_t>(poly_.boundary_points().size()) + genus_ - 1;
    }

    /// Every curve through `config`, sorted canonically. Throws
    /// GenericityError if the configuration is special for this count.
    std::vector<TropicalWitness> run(const PointConfig& config) const {
        if (static_cast<std::int64_t>(config.count()) != required_points())
            throw GeometryError("configuration has " + std::to_string(config.count()) + " points, " +
                                std::to_string(required_points()) + " required");
        std::vector<TropicalWitness> out;
        std::vector<detail::ApproxPoint> approx;
        for (const auto& p : config.points) approx.push_back(detail::approximate(p));
        for (const auto& s : subdivisions_) solve_subdivision(s, config, approx, out);
        std::sort(out.begin(), out.end(), [](const TropicalWitness& a, const TropicalWitness& b) {
            if (a.type_id != b.type_id) return a.type_id < b.type_id;
            return a.vertex_positions < b.vertex_positions;
        });
        return out;
    }

private:
    struct Search {
        const DualSubdivision* subdivision = nullptr;
        const detail::ChainGraph* graph = nullptr;
        const PointConfig* config = nullptr;
        const std::vector<detail::ApproxPoint>* point_approx = nullptr;
        std::vector<char> marked;                      // per chain
        std::vector<std::size_t> order;                // triangles, children first
        std::vector<std::array<std::pair<std::size_t, int>, 2>> incoming;  // per triangle
        std::vector<std::optional<std::size_t>> point_of_chain;
        std::vector<char> point_used;
        std::vector<RationalPoint> position;     // exact, valid where exact_valid is set
        std::vector<char> exact_valid;
        std::vector<detail::ApproxPoint> approx;  // during the search
        std::vector<TropicalWitness>* out = nullptr;
    };

    void solve_subdivision(const DualSubdivision& s, const PointConfig& config,
                           const std::vector<detail::ApproxPoint>& point_approx,
                           std::vector<TropicalWitness>& out) const {
        detail::ChainGraph graph(s);
        const std::size_t m = graph.chains.size();
        const auto n = static_cast<std::size_t>(required_points());
        if (n > m) return;

        std::vector<std::size_t> pick(n);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            Search search;
            search.subdivision = &s;
            search.graph = &graph;
            search.config = &config;
            search.point_approx = &point_approx;
            search.marked.assign(m, 0);
            for (auto c : pick) search.marked[c] = 1;
            if (orient(search)) {
                search.point_of_chain.assign(m, std::nullopt);
                search.point_used.assign(n, 0);
                search.position.assign(graph.triangles.size(), RationalPoint{});
                search.approx.assign(graph.triangles.size(), detail::ApproxPoint{});
                search.exact_valid.assign(graph.triangles.size(), 0);
                search.out = &out;
                descend(search, 0);
            }
            // next combination
            std::size_t i = n;
            while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    /// Checks that cutting the marked chains leaves trees with exactly one
    /// unbounded end each, and orients them towards that end.
    static bool orient(Search& search) {
        const auto& g = *search.graph;
        const std::size_t t = g.triangles.size();
        // Nodes: triangles, then one node per unbounded end.
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(t);  // (neighbour node, chain)
        std::vector<bool> is_infinity(t, false);
        auto node_of = [&](std::size_t chain, int end) -> std::size_t {
            int tri = g.chains[chain].ends[static_cast<std::size_t>(end)].triangle;
            if (tri >= 0) return static_cast<std::size_t>(tri);
            adj.emplace_back();
            is_infinity.push_back(true);
            return adj.size() - 1;
        };
        for (std::size_t c = 0; c < g.chains.size(); ++c) {
            if (search.marked[c]) continue;
            std::size_t a = node_of(c, 0), b = node_of(c, 1);
            adj[a].push_back({b, c});
            adj[b].push_back({a, c});
        }
        const std::size_t nodes = adj.size();
        std::vector<int> component(nodes, -1);
        std::vector<std::size_t> parent_chain(nodes, SIZE_MAX);
        std::vector<std::size_t> bfs;
        search.order.clear();
        search.incoming.assign(t, {});
        // Each component must contain exactly one unbounded end; grow from it.
        int comp = 0;
        for (std::size_t root = 0; root < nodes; ++root) {
            if (!is_infinity[root] || component[root] >= 0) continue;
            bfs.assign(1, root);
            component[root] = comp;
            std::size_t edges = 0;
            for (std::size_t k = 0; k < bfs.size(); ++k) {
                std::size_t u = bfs[k];
                for (auto [v, c] : adj[u]) {
                    ++edges;
                    if (component[v] >= 0) continue;
                    component[v] = comp;
                    parent_chain[v] = c;
                    bfs.push_back(v);
                }
            }
            edges /= 2;
            std::size_t ends = 0;
            for (auto u : bfs) ends += is_infinity[u];
            if (ends != 1 || edges + 1 != bfs.size()) return false;
            for (std::size_t k = bfs.size(); k-- > 1;) search.order.push_back(bfs[k]);
            ++comp;
        }
        for (std::size_t u = 0; u < t; ++u)
            if (component[u] < 0) return false;  // a component without unbounded end
        for (std::size_t u = 0; u < t; ++u) {
            std::size_t k = 0;
            for (const auto& [chain, end] : g.triangle_ends[u]) {
                if (chain == parent_chain[u] && !search.marked[chain]) continue;
                if (k == 2) return false;
                search.incoming[u][k++] = {chain, end};
            }
            if (k != 2) return false;
        }
        return true;
    }

    // Source point of an incoming chain at a triangle: a marked point, or the
    // vertex at the chain's other end.
    static const RationalPoint& source(const Search& search, std::size_t chain, int end) {
        if (search.marked[chain]) return search.config->points[*search.point_of_chain[chain]];
        int other = search.graph->chains[chain].ends[static_cast<std::size_t>(1 - end)].triangle;
        return search.position[static_cast<std::size_t>(other)];
    }

    static const detail::ApproxPoint& approx_source(const Search& search, std::size_t chain, int end) {
        if (search.marked[chain]) return (*search.point_approx)[*search.point_of_chain[chain]];
        int other = search.graph->chains[chain].ends[static_cast<std::size_t>(1 - end)].triangle;
        return search.approx[static_cast<std::size_t>(other)];
    }

    // Exact vertex position, computing exact source vertices on demand;
    // returns false if an incoming edge would have non-positive length.
    static bool exact_vertex(Search& search, std::size_t tri) {
        const auto& g = *search.graph;
        for (const auto& [chain, end] : search.incoming[tri]) {
            if (search.marked[chain]) continue;
            auto other = static_cast<std::size_t>(g.chains[chain].ends[static_cast<std::size_t>(1 - end)].triangle);
            if (!search.exact_valid[other] && !exact_vertex(search, other)) return false;
        }
        const auto [c1, e1] = search.incoming[tri][0];
        const auto [c2, e2] = search.incoming[tri][1];
        LatticeVector d1 = g.outward(c1, e1), d2 = g.outward(c2, e2);
        const std::int64_t det = cross(d1, d2);
        const RationalPoint& s1 = source(search, c1, e1);
        RationalPoint r = s1 - source(search, c2, e2);
        Rational n1 = r.x * d2.b - r.y * d2.a;
        Rational n2 = r.x * d1.b - r.y * d1.a;
        if (n1.sign() == 0 || n2.sign() == 0) throw GenericityError("a marked point or vertex lies on another vertex");
        const int s = det > 0 ? 1 : -1;
        if (n1.sign() != s || n2.sign() != s) return false;
        search.position[tri] = detail::step(s1, d1, -(n1 / det));
        search.exact_valid[tri] = 1;
        return true;
    }

    void descend(Search& search, std::size_t k) const {
        const auto& g = *search.graph;
        if (k == search.order.size()) {
            assign_lines(search, 0);
            return;
        }
        const std::size_t tri = search.order[k];
        // Branch over points for incoming marked chains that still lack one.
        for (const auto& [chain, end] : search.incoming[tri]) {
            if (!search.marked[chain] || search.point_of_chain[chain]) continue;
            for (std::size_t p = 0; p < search.point_used.size(); ++p) {
                if (search.point_used[p]) continue;
                search.point_used[p] = 1;
                search.point_of_chain[chain] = p;
                descend(search, k);
                search.point_of_chain[chain] = std::nullopt;
                search.point_used[p] = 0;
            }
            return;
        }
        const auto [c1, e1] = search.incoming[tri][0];
        const auto [c2, e2] = search.incoming[tri][1];
        LatticeVector d1 = g.outward(c1, e1), d2 = g.outward(c2, e2);
        // v + t1*d1 = s1 and v + t2*d2 = s2 with t1, t2 > 0.
        const std::int64_t det = cross(d1, d2);
        if (det == 0) throw InconsistencyError("parallel edges at a trivalent vertex");
        const auto& s1 = approx_source(search, c1, e1);
        const auto& s2 = approx_source(search, c2, e2);
        constexpr long double u = detail::approx_unit;
        const long double rx = s1.x - s2.x, ry = s1.y - s2.y;
        const long double erx = s1.ex + s2.ex + std::fabs(rx) * u, ery = s1.ey + s2.ey + std::fabs(ry) * u;
        auto numerator = [&](const LatticeVector& d, long double& err) {
            long double p = rx * static_cast<long double>(d.b), q = ry * static_cast<long double>(d.a);
            err = erx * std::fabs(static_cast<long double>(d.b)) + ery * std::fabs(static_cast<long double>(d.a)) +
                  (std::fabs(p) + std::fabs(q)) * 2 * u;
            return p - q;
        };
        long double en1 = 0, en2 = 0;
        const long double n1 = numerator(d2, en1), n2 = numerator(d1, en2);
        if (std::fabs(n1) <= en1 || std::fabs(n2) <= en2) {
            // Undecided in floating point: settle it exactly.
            search.exact_valid[tri] = 0;
            if (!exact_vertex(search, tri)) return;
            search.approx[tri] = detail::approximate(search.position[tri]);
        } else {
            search.exact_valid[tri] = 0;
            const long double s = det > 0 ? 1 : -1;
            if (n1 * s < 0 || n2 * s < 0) return;
            const long double t = n1 / static_cast<long double>(det);
            const long double et = en1 / std::fabs(static_cast<long double>(det)) + std::fabs(t) * u;
            auto& v = search.approx[tri];
            v.x = s1.x - t * static_cast<long double>(d1.a);
            v.y = s1.y - t * static_cast<long double>(d1.b);
            v.ex = s1.ex + et * std::fabs(static_cast<long double>(d1.a)) + std::fabs(v.x) * 2 * u;
            v.ey = s1.ey + et * std::fabs(static_cast<long double>(d1.b)) + std::fabs(v.y) * 2 * u;
        }
        descend(search, k + 1);
    }

    // Marked chains without any vertex (lines) take the remaining points.
    void assign_lines(Search& search, std::size_t from) const {
        const auto& g = *search.graph;
        for (std::size_t c = from; c < g.chains.size(); ++c) {
            if (!search.marked[c] || search.point_of_chain[c]) continue;
            for (std::size_t p = 0; p < search.point_used.size(); ++p) {
                if (search.point_used[p]) continue;
                search.point_used[p] = 1;
                search.point_of_chain[c] = p;
                assign_lines(search, c + 1);
                search.point_of_chain[c] = std::nullopt;
                search.point_used[p] = 0;
            }
            return;
        }
        finish(search);
    }

    void finish(Search& search) const {
        bool exact_ok = true;
        for (auto tri : search.order) search.exact_valid[tri] = 0;
        for (auto tri : search.order) exact_ok = exact_ok && (search.exact_valid[tri] || exact_vertex(search, tri));
        if (!exact_ok)
            throw InconsistencyError("floating-point filter accepted a vertex that exact arithmetic rejects");
        const auto& g = *search.graph;
        const auto& s = *search.subdivision;
        const auto& pts = search.config->points;

        std::vector<RationalPoint> anchor(g.chains.size());
        for (std::size_t c = 0; c < g.chains.size(); ++c) {
            if (auto p = search.point_of_chain[c]) {
                anchor[c] = pts[*p];
            } else {
                int t = g.chains[c].ends[0].triangle;
                if (t < 0) t = g.chains[c].ends[1].triangle;
                anchor[c] = search.position[static_cast<std::size_t>(t)];
            }
        }

        // Dual point of every cell: the vertex for a triangle, the crossing
        // of the two chains through a parallelogram.
        std::vector<RationalPoint> dual_point(s.cells.size());
        for (std::size_t i = 0; i < g.triangles.size(); ++i) dual_point[g.triangles[i]] = search.position[i];
        std::vector<RationalPoint> crossings;
        for (auto cell : g.parallelograms) {
            const auto& vs = s.cells[cell].vertices;
            std::size_t a = g.chain_of_segment.at(detail::segment_key(vs[0], vs[1]));
            std::size_t b = g.chain_of_segment.at(detail::segment_key(vs[1], vs[2]));
            LatticeVector da = g.chains[a].direction, db = g.chains[b].direction;
            // anchor[a] + u*da = anchor[b] + w*db
            RationalPoint r = anchor[b] - anchor[a];
            Rational u = (r.x * db.b - r.y * db.a) / cross(da, db);
            dual_point[cell] = detail::step(anchor[a], da, u);
            crossings.push_back(dual_point[cell]);
        }

        // Coefficients of the tropical polynomial, propagated across cells.
        const auto vertices = s.vertex_set();
        std::map<LatticeVector, Rational> coeff;
        coeff[vertices.front()] = 0;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t cell = 0; cell < s.cells.size(); ++cell) {
                const auto& vs = s.cells[cell].vertices;
                auto known = std::find_if(vs.begin(), vs.end(), [&](const auto& v) { return coeff.count(v) > 0; });
                if (known == vs.end()) continue;
                Rational level = coeff[*known] + detail::dot(*known, dual_point[cell]);
                for (const auto& v : vs) {
                    Rational c = level - detail::dot(v, dual_point[cell]);
                    auto it = coeff.find(v);
                    if (it == coeff.end()) {
                        coeff.emplace(v, c);
                        grew = true;
                    } else if (it->second != c) {
                        return;  // the cell's dual point is inconsistent: not a curve of type S
                    }
                }
            }
        }
        if (coeff.size() != vertices.size()) throw InconsistencyError("subdivision is not connected");
        std::vector<std::pair<LatticeVector, Rational>> coefficients(coeff.begin(), coeff.end());

        // Every cell must be exactly the set of maximizing monomials.
        for (std::size_t cell = 0; cell < s.cells.size(); ++cell) {
            auto [value, arg] = tropical_argmax(coefficients, dual_point[cell]);
            std::sort(arg.begin(), arg.end());
            auto expected = s.cells[cell].vertices;
            std::sort(expected.begin(), expected.end());
            if (arg == expected) continue;
            if (std::includes(arg.begin(), arg.end(), expected.begin(), expected.end()))
                throw GenericityError("solution has a non-simple vertex");
            return;
        }
        // Each marked point sits in the relative interior of a segment of its chain.
        for (std::size_t c = 0; c < g.chains.size(); ++c) {
            auto p = search.point_of_chain[c];
            if (!p) continue;
            auto [value, arg] = tropical_argmax(coefficients, pts[*p]);
            if (arg.size() > 2) throw GenericityError("marked point " + pts[*p].str() + " lies on a vertex or crossing");
            if (arg.size() != 2) return;
            auto it = g.chain_of_segment.find(detail::segment_key(arg[0], arg[1]));
            if (it == g.chain_of_segment.end() || it->second != c) return;
        }

        TropicalWitness w;
        w.type_id = s.str();
        w.dual = s;
        w.coefficients = std::move(coefficients);
        w.vertex_positions = search.position;
        w.crossings = std::move(crossings);
        for (std::size_t c = 0; c < g.chains.size(); ++c) {
            const auto& chain = g.chains[c];
            TropicalEdge e;
            e.tail = chain.ends[0].triangle;
            e.head = chain.ends[1].triangle;
            e.direction = chain.direction;
            if (e.tail < 0 && e.head >= 0) {
                // legs are stored vertex first, pointing to infinity
                std::swap(e.tail, e.head);
                e.direction = -e.direction;
            }
            e.weight = chain.weight;
            e.marked_point = search.point_of_chain[c];
            e.anchor = anchor[c];
            w.edges.push_back(e);
        }
        w.genus = graph_genus(w);
        w.multiplicity = s.mikhalkin_multiplicity();
        search.out->push_back(std::move(w));
    }

    IntegralPolygon poly_;
    std::int64_t genus_;
    std::vector<DualSubdivision> subdivisions_;
};

}  // namespace severi
