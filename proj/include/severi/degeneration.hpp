#pragma once

// Unions of two cocharacter curves t -> (t^{n_k . e^1}, t^{n_k . e^2}) in the
// torus, their nodes as roots of unity, and the order of the Jacobian class
// t1(r)/t1(q) attached to a pair of kept nodes.

#include "severi/exact.hpp"
#include "severi/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace severi {

// ---- Smith normal form ----

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.size(), std::vector<std::int64_t>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// D = U * A * V with U, V unimodular, D diagonal with non-negative entries
/// d_1 | d_2 | ... .
struct SmithForm {
    IntMatrix u, d, v;

    std::vector<std::int64_t> invariants() const {
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < std::min(d.size(), d.empty() ? 0 : d[0].size()); ++i) out.push_back(d[i][i]);
        return out;
    }
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    SmithForm s{identity_matrix(rows), a, identity_matrix(cols)};
    auto& d = s.d;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : d) std::swap(r[i], r[j]);
        for (auto& r : s.v) std::swap(r[i], r[j]);
    };
    auto add_row = [&](std::size_t target, std::size_t src, std::int64_t k) {  // row_t += k row_s
        for (std::size_t j = 0; j < cols; ++j) d[target][j] += k * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[target][j] += k * s.u[src][j];
    };
    auto add_col = [&](std::size_t target, std::size_t src, std::int64_t k) {  // col_t += k col_s
        for (std::size_t i = 0; i < rows; ++i) d[i][target] += k * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.v[i][target] += k * s.v[i][src];
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Pivot: smallest non-zero absolute value in the remaining block.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d[i][j] != 0 && (pi == rows || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return s;  // remaining block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                add_row(i, t, -(d[i][t] / d[t][t]));
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                add_col(j, t, -(d[t][j] / d[t][t]));
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold a non-divisible entry into the pivot row.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < rows; ++j) s.u[t][j] = -s.u[t][j];
        }
    }
    return s;
}

// ---- roots of unity ----

/// exp(2 pi i * exponent / order_k), stored symbolically.
struct RootOfUnity {
    std::int64_t order_k = 1;
    std::int64_t exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(std::int64_t k, std::int64_t e) : order_k(k), exponent(0) {
        if (k < 1) throw GeometryError("root of unity needs a positive order");
        exponent = ((e % k) + k) % k;
    }

    /// Multiplicative order of the element.
    std::int64_t order() const { return order_k / std::gcd(exponent, order_k); }

    /// The same element written with denominator k (k a multiple of order_k).
    RootOfUnity lifted_to(std::int64_t k) const {
        if (k % order_k != 0) throw GeometryError("cannot write a root of unity of order " + std::to_string(order_k) +
                                                  " over " + std::to_string(k));
        return {k, exponent * (k / order_k)};
    }

    bool operator==(const RootOfUnity& o) const {
        std::int64_t k = std::lcm(order_k, o.order_k);
        return lifted_to(k).exponent == o.lifted_to(k).exponent;
    }

    RootOfUnity operator*(const RootOfUnity& o) const {
        std::int64_t k = std::lcm(order_k, o.order_k);
        return {k, lifted_to(k).exponent + o.lifted_to(k).exponent};
    }

    RootOfUnity inverse() const { return {order_k, -exponent}; }

    /// "1", "-1", "i", "-i" for fourth roots, "zeta_k^e" otherwise.
    std::string str() const {
        switch (order()) {
            case 1: return "1";
            case 2: return "-1";
            case 4: return lifted_to(std::lcm(order_k, std::int64_t{4})) == RootOfUnity(4, 1) ? "i" : "-i";
            default: return "zeta_" + std::to_string(order_k) + "^" + std::to_string(exponent);
        }
    }
};

// ---- cocharacter curves and their nodes ----

struct CocharCurve {
    LatticeVector direction;

    explicit CocharCurve(LatticeVector d) : direction(d) {
        if (d == LatticeVector{0, 0} || lattice_length(d) != 1)
            throw GeometryError("cocharacter direction " + d.str() + " is not primitive");
    }
};

/// A transversal intersection point (t1, t2) of the two parametrizations.
struct Node {
    RootOfUnity t1;
    RootOfUnity t2;
};

struct NodalUnionModel {
    CocharCurve first;
    CocharCurve second;
    std::vector<Node> nodes;  // sorted by the exponent of t1, then t2
};

/// Solves t1^{<m,n1>} = t2^{<m,n2>} for m in the basis e^1, e^2 of M.
inline NodalUnionModel compute_nodes(const CocharCurve& c1, const CocharCurve& c2) {
    const LatticeVector n1 = c1.direction, n2 = c2.direction;
    if (cross(n1, n2) == 0)
        throw GeometryError("cocharacter directions " + n1.str() + " and " + n2.str() +
                            " are parallel; the curves do not meet transversally in the torus");
    // Row m: <m,n1> log t1 - <m,n2> log t2 in 2 pi i Z.
    IntMatrix a{{n1.a, -n2.a}, {n1.b, -n2.b}};
    SmithForm snf = smith_normal_form(a);
    // log t = V log s, and d_j log s_j in 2 pi i Z, so s_j = zeta_{d_j}^{k_j}.
    const std::int64_t d1 = snf.d[0][0], d2 = snf.d[1][1];
    const std::int64_t k = d2;  // d1 | d2
    NodalUnionModel model{c1, c2, {}};
    for (std::int64_t k1 = 0; k1 < d1; ++k1)
        for (std::int64_t k2 = 0; k2 < d2; ++k2) {
            // s_1 = zeta_k^{k1 * k/d1}, s_2 = zeta_k^{k2}
            std::int64_t e1 = k1 * (k / d1), e2 = k2;
            RootOfUnity t1(k, snf.v[0][0] * e1 + snf.v[0][1] * e2);
            RootOfUnity t2(k, snf.v[1][0] * e1 + snf.v[1][1] * e2);
            model.nodes.push_back({t1, t2});
        }
    std::sort(model.nodes.begin(), model.nodes.end(), [](const Node& x, const Node& y) {
        return std::make_pair(x.t1.exponent, x.t2.exponent) < std::make_pair(y.t1.exponent, y.t2.exponent);
    });
    const auto expected = static_cast<std::size_t>(std::llabs(cross(n1, n2)));
    if (model.nodes.size() != expected)
        throw InconsistencyError("node count " + std::to_string(model.nodes.size()) + " differs from |det| = " +
                                 std::to_string(expected));
    return model;
}

/// The two fan rays used by the degenerate curve: n1 = (2,1), n2 = (-2,1).
inline NodalUnionModel default_nodal_model() { return compute_nodes(CocharCurve({2, 1}), CocharCurve({-2, 1})); }

/// Order of r/q; q and r must be distinct.
inline std::int64_t jacobian_class_order(const RootOfUnity& q, const RootOfUnity& r) {
    if (q == r) throw GeometryError("a pair of kept nodes must consist of two distinct nodes");
    return (r * q.inverse()).order();
}

struct NodePair {
    std::size_t first = 0;
    std::size_t second = 0;
    std::int64_t exponent_difference = 0;  // of t1, in units of 1/order_k
    std::int64_t order = 0;
};

/// All unordered pairs of nodes with the order of t1(second)/t1(first).
inline std::vector<NodePair> classify_pairs(const NodalUnionModel& model) {
    std::vector<NodePair> out;
    const auto& nodes = model.nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            RootOfUnity ratio = nodes[j].t1 * nodes[i].t1.inverse();
            out.push_back({i, j, ratio.exponent, jacobian_class_order(nodes[i].t1, nodes[j].t1)});
        }
    return out;
}

/// Pair count per order.
inline std::map<std::int64_t, std::size_t> order_histogram(const std::vector<NodePair>& pairs) {
    std::map<std::int64_t, std::size_t> h;
    for (const auto& p : pairs) ++h[p.order];
    return h;
}

/// Arithmetic genus of the partial normalization of a union of two rational
/// curves that keeps `kept_nodes` of the nodes: 0 + 0 + kept - 1.
inline std::int64_t partial_normalization_genus(std::int64_t kept_nodes) {
    if (kept_nodes < 1) throw GeometryError("a connected partial normalization keeps at least one node");
    return kept_nodes - 1;
}

}  // namespace severi
