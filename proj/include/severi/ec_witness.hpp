#pragma once

// Elliptic curves over small prime fields, rational functions written as
// products of powers of lines, and the genus-one torus-map witnesses
// (E; p1..p4; phi_m1, phi_m2) whose divisors follow the fan rays
// n1..n4 = (2,1), (-2,1), (-2,-1), (2,-1).

#include "severi/exact.hpp"
#include "severi/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace severi {

// ---- prime field ----

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimeField {
    std::int64_t p;

    explicit PrimeField(std::int64_t prime) : p(prime) {
        if (!is_prime(prime) || prime < 5)
            throw GeometryError("field characteristic " + std::to_string(prime) + " must be a prime >= 5");
    }

    std::int64_t norm(std::int64_t v) const { return ((v % p) + p) % p; }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return norm(a + b); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return norm(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return norm(norm(a) * norm(b)); }
    std::int64_t neg(std::int64_t a) const { return norm(-a); }
    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        std::int64_t r = 1, base = norm(a);
        for (; e > 0; e >>= 1, base = mul(base, base))
            if (e & 1) r = mul(r, base);
        return r;
    }
    std::int64_t inv(std::int64_t a) const {
        if (norm(a) == 0) throw InconsistencyError("division by zero in F_" + std::to_string(p));
        return pow(a, p - 2);
    }
    std::int64_t div(std::int64_t a, std::int64_t b) const { return mul(a, inv(b)); }
};

// ---- points and curves ----

struct CurvePoint {
    bool infinity = true;
    std::int64_t x = 0;
    std::int64_t y = 0;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(std::int64_t x, std::int64_t y) { return {false, x, y}; }

    bool operator==(const CurvePoint&) const = default;
    auto operator<=>(const CurvePoint& o) const {
        if (infinity != o.infinity) return infinity ? std::strong_ordering::less : std::strong_ordering::greater;
        if (x != o.x) return x <=> o.x;
        return y <=> o.y;
    }

    std::string str() const { return infinity ? "O" : "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// y^2 = x^3 + a x + b over F_p, p >= 5.
class WeierstrassCurve {
public:
    WeierstrassCurve(std::int64_t p, std::int64_t a, std::int64_t b) : f_(p), a_(f_.norm(a)), b_(f_.norm(b)) {
        std::int64_t disc = f_.add(f_.mul(4, f_.pow(a_, 3)), f_.mul(27, f_.mul(b_, b_)));
        if (disc == 0)
            throw GeometryError("curve y^2 = x^3 + " + std::to_string(a_) + "x + " + std::to_string(b_) +
                                " is singular over F_" + std::to_string(p));
    }

    const PrimeField& field() const { return f_; }
    std::int64_t prime() const { return f_.p; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

    std::int64_t rhs(std::int64_t x) const { return f_.add(f_.add(f_.pow(x, 3), f_.mul(a_, x)), b_); }

    bool contains(const CurvePoint& P) const {
        if (P.infinity) return true;
        if (P.x != f_.norm(P.x) || P.y != f_.norm(P.y)) return false;
        return f_.mul(P.y, P.y) == rhs(P.x);
    }

    /// All points, O first, then affine points in (x, y) order.
    std::vector<CurvePoint> points() const {
        std::vector<CurvePoint> out{CurvePoint::at_infinity()};
        for (std::int64_t x = 0; x < f_.p; ++x)
            for (std::int64_t y = 0; y < f_.p; ++y)
                if (f_.mul(y, y) == rhs(x)) out.push_back(CurvePoint::affine(x, y));
        return out;
    }

    void require(const CurvePoint& P) const {
        if (!contains(P)) throw GeometryError("point " + P.str() + " is not on " + str());
    }

    CurvePoint negate(const CurvePoint& P) const {
        require(P);
        if (P.infinity) return P;
        return CurvePoint::affine(P.x, f_.neg(P.y));
    }

    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const {
        require(P);
        require(Q);
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x && f_.add(P.y, Q.y) == 0) return CurvePoint::at_infinity();
        std::int64_t lambda = P.x == Q.x ? f_.div(f_.add(f_.mul(3, f_.mul(P.x, P.x)), a_), f_.mul(2, P.y))
                                         : f_.div(f_.sub(Q.y, P.y), f_.sub(Q.x, P.x));
        std::int64_t x3 = f_.sub(f_.sub(f_.mul(lambda, lambda), P.x), Q.x);
        std::int64_t y3 = f_.sub(f_.mul(lambda, f_.sub(P.x, x3)), P.y);
        return CurvePoint::affine(x3, y3);
    }

    CurvePoint multiply(std::int64_t n, const CurvePoint& P) const {
        require(P);
        CurvePoint base = n < 0 ? negate(P) : P;
        CurvePoint r = CurvePoint::at_infinity();
        for (std::int64_t k = n < 0 ? -n : n; k > 0; k >>= 1, base = add(base, base))
            if (k & 1) r = add(r, base);
        return r;
    }

    /// Smallest k >= 1 with kP = O, by stepping through multiples.
    std::int64_t order(const CurvePoint& P) const {
        require(P);
        CurvePoint Q = P;
        for (std::int64_t k = 1;; ++k) {
            if (Q.infinity) return k;
            Q = add(Q, P);
        }
    }

    std::string str() const {
        return "y^2 = x^3 + " + std::to_string(a_) + "x + " + std::to_string(b_) + " over F_" + std::to_string(f_.p);
    }

private:
    PrimeField f_;
    std::int64_t a_, b_;
};

/// First point of exact order k in (x, y) order, if any.
inline std::optional<CurvePoint> find_point_of_order(const WeierstrassCurve& E, std::int64_t k) {
    for (const auto& P : E.points())
        if (E.order(P) == k) return P;
    return std::nullopt;
}

// ---- divisors and functions ----

/// Formal sum of points with integer coefficients; zero coefficients are
/// never stored.
class Divisor {
public:
    Divisor() = default;
    Divisor(std::initializer_list<std::pair<CurvePoint, std::int64_t>> terms) {
        for (const auto& [P, n] : terms) add(P, n);
    }

    void add(const CurvePoint& P, std::int64_t n) {
        if (n == 0) return;
        auto& c = terms_[P];
        c += n;
        if (c == 0) terms_.erase(P);
    }

    Divisor& operator+=(const Divisor& o) {
        for (const auto& [P, n] : o.terms_) add(P, n);
        return *this;
    }
    Divisor operator*(std::int64_t k) const {
        Divisor d;
        if (k != 0)
            for (const auto& [P, n] : terms_) d.terms_[P] = n * k;
        return d;
    }
    Divisor operator+(const Divisor& o) const {
        Divisor d = *this;
        return d += o;
    }
    Divisor operator-(const Divisor& o) const { return *this + o * -1; }

    bool operator==(const Divisor&) const = default;

    std::int64_t degree() const {
        std::int64_t s = 0;
        for (const auto& [P, n] : terms_) s += n;
        return s;
    }

    CurvePoint sum(const WeierstrassCurve& E) const {
        CurvePoint s = CurvePoint::at_infinity();
        for (const auto& [P, n] : terms_) s = E.add(s, E.multiply(n, P));
        return s;
    }

    const std::map<CurvePoint, std::int64_t>& terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [P, n] : terms_) {
            if (!s.empty()) s += n > 0 ? " + " : " - ";
            else if (n < 0) s += "-";
            std::int64_t m = n < 0 ? -n : n;
            s += (m == 1 ? "" : std::to_string(m)) + P.str();
        }
        return s;
    }

private:
    std::map<CurvePoint, std::int64_t> terms_;
};

/// c0 + cx x + cy y over F_p, viewed as a rational function on E.
struct Line {
    std::int64_t c0 = 1, cx = 0, cy = 0;

    bool operator==(const Line&) const = default;
    bool is_constant() const { return cx == 0 && cy == 0; }

    std::int64_t evaluate(const PrimeField& f, std::int64_t x, std::int64_t y) const {
        return f.add(f.add(c0, f.mul(cx, x)), f.mul(cy, y));
    }

    std::string str() const {
        return std::to_string(c0) + " + " + std::to_string(cx) + "x + " + std::to_string(cy) + "y";
    }
};

/// Divisor of a line, computed by intersecting it with the curve: affine
/// zeros with multiplicity, and the matching pole at O.
inline Divisor line_divisor(const WeierstrassCurve& E, const Line& l) {
    const auto& f = E.field();
    Divisor d;
    if (l.is_constant()) {
        if (f.norm(l.c0) == 0) throw InconsistencyError("the zero function has no divisor");
        return d;
    }
    // Coefficients of a polynomial in one variable, lowest degree first.
    using Poly = std::vector<std::int64_t>;
    auto root_multiplicity = [&](Poly poly, std::int64_t r) {
        std::int64_t m = 0;
        while (poly.size() > 1) {
            // Synthetic division by (t - r).
            Poly q(poly.size() - 1);
            std::int64_t carry = 0;
            for (std::size_t i = poly.size(); i-- > 0;) {
                carry = f.add(f.mul(carry, r), poly[i]);
                if (i > 0) q[i - 1] = carry;
            }
            if (carry != 0) break;
            poly = q;
            ++m;
        }
        return m;
    };
    std::int64_t affine_zeros = 0;
    if (f.norm(l.cy) != 0) {
        // y = u + v x, substituted into y^2 = x^3 + a x + b.
        std::int64_t u = f.neg(f.div(l.c0, l.cy)), v = f.neg(f.div(l.cx, l.cy));
        Poly poly{f.sub(E.b(), f.mul(u, u)), f.sub(E.a(), f.mul(2, f.mul(u, v))), f.neg(f.mul(v, v)), 1};
        for (std::int64_t x = 0; x < f.p; ++x) {
            std::int64_t m = root_multiplicity(poly, x);
            if (m == 0) continue;
            d.add(CurvePoint::affine(x, f.add(u, f.mul(v, x))), m);
            affine_zeros += m;
        }
    } else {
        // Vertical line x = x0: zeros at the roots of y^2 = rhs(x0).
        std::int64_t x0 = f.neg(f.div(l.c0, l.cx));
        Poly poly{f.neg(E.rhs(x0)), 0, 1};
        for (std::int64_t y = 0; y < f.p; ++y) {
            std::int64_t m = root_multiplicity(poly, y);
            if (m == 0) continue;
            d.add(CurvePoint::affine(x0, y), m);
            affine_zeros += m;
        }
    }
    d.add(CurvePoint::at_infinity(), -affine_zeros);
    return d;
}

/// Product of powers of lines. Each factor carries its own divisor,
/// computed from the line when the factor is created.
struct FunctionRep {
    struct Factor {
        Line line;
        std::int64_t exponent = 0;
        Divisor divisor;  // of the line itself
    };
    std::vector<Factor> factors;

    void multiply_line(const WeierstrassCurve& E, const Line& l, std::int64_t exponent) {
        if (exponent == 0 || l.is_constant()) return;
        factors.push_back({l, exponent, line_divisor(E, l)});
    }

    FunctionRep& operator*=(const FunctionRep& o) {
        factors.insert(factors.end(), o.factors.begin(), o.factors.end());
        return *this;
    }

    FunctionRep pow(std::int64_t k) const {
        FunctionRep r;
        if (k == 0) return r;
        for (auto fct : factors) {
            fct.exponent *= k;
            r.factors.push_back(std::move(fct));
        }
        return r;
    }

    /// Equal lines merged and zero exponents dropped, in first-occurrence order.
    FunctionRep simplified() const {
        FunctionRep r;
        for (const auto& fct : factors) {
            auto it = std::find_if(r.factors.begin(), r.factors.end(),
                                   [&](const Factor& g) { return g.line == fct.line; });
            if (it == r.factors.end()) r.factors.push_back(fct);
            else it->exponent += fct.exponent;
        }
        std::erase_if(r.factors, [](const Factor& g) { return g.exponent == 0; });
        return r;
    }

    /// Sum of exponent * div(line) over the factors.
    Divisor divisor() const {
        Divisor d;
        for (const auto& fct : factors) d += fct.divisor * fct.exponent;
        return d;
    }

    /// Value at an affine point where no factor vanishes.
    std::optional<std::int64_t> evaluate(const WeierstrassCurve& E, const CurvePoint& P) const {
        if (P.infinity) return std::nullopt;
        const auto& f = E.field();
        std::int64_t v = 1;
        for (const auto& fct : factors) {
            std::int64_t l = fct.line.evaluate(f, P.x, P.y);
            if (l == 0) return std::nullopt;
            v = f.mul(v, fct.exponent >= 0 ? f.pow(l, fct.exponent) : f.pow(f.inv(l), -fct.exponent));
        }
        return v;
    }
};

namespace detail {

/// The line through P and Q (tangent if equal): div = (P) + (Q) + (-(P+Q)) - 3(O),
/// degenerating to a vertical or the constant 1 when O is involved.
inline Line chord(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    const auto& f = E.field();
    if (P.infinity && Q.infinity) return {};
    if (P.infinity || Q.infinity) {
        const auto& R = P.infinity ? Q : P;
        return {f.neg(R.x), 1, 0};
    }
    if (P.x == Q.x && f.add(P.y, Q.y) == 0) return {f.neg(P.x), 1, 0};
    std::int64_t lambda = P.x == Q.x ? f.div(f.add(f.mul(3, f.mul(P.x, P.x)), E.a()), f.mul(2, P.y))
                                     : f.div(f.sub(Q.y, P.y), f.sub(Q.x, P.x));
    // y - y_P - lambda (x - x_P)
    return {f.add(f.neg(P.y), f.mul(lambda, P.x)), f.neg(lambda), 1};
}

/// Vertical line through P (the constant 1 for P = O): div = (P) + (-P) - 2(O).
inline Line vertical(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return {};
    return {E.field().neg(P.x), 1, 0};
}

/// Function with divisor n(P) - ([n]P) - (n-1)(O), n >= 1, by double-and-add.
inline FunctionRep miller(const WeierstrassCurve& E, std::int64_t n, const CurvePoint& P) {
    FunctionRep f;
    CurvePoint T = P;
    int top = 63;
    while (top > 0 && !((n >> top) & 1)) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        // f <- f^2 * l_{T,T} / v_{2T}
        f = f.pow(2);
        CurvePoint T2 = E.add(T, T);
        f.multiply_line(E, chord(E, T, T), 1);
        f.multiply_line(E, vertical(E, T2), -1);
        T = T2;
        if ((n >> bit) & 1) {
            CurvePoint TP = E.add(T, P);
            f.multiply_line(E, chord(E, T, P), 1);
            f.multiply_line(E, vertical(E, TP), -1);
            T = TP;
        }
    }
    return f;
}

}  // namespace detail

/// A function whose divisor is exactly D. D must have degree 0 and sum O.
inline FunctionRep function_with_divisor(const WeierstrassCurve& E, const Divisor& D) {
    for (const auto& [P, n] : D.terms()) E.require(P);
    if (D.degree() != 0)
        throw GeometryError("divisor " + D.str() + " is not principal: degree " + std::to_string(D.degree()) +
                            " != 0");
    CurvePoint s = D.sum(E);
    if (!s.infinity) throw GeometryError("divisor " + D.str() + " is not principal: sum " + s.str() + " != O");

    // D = sum n_i ((P_i) - (O)). Each term becomes a function times (R_i) - (O).
    FunctionRep f;
    std::vector<CurvePoint> residual;
    for (const auto& [P, n] : D.terms()) {
        if (P.infinity) continue;
        const std::int64_t m = n < 0 ? -n : n;
        FunctionRep g = detail::miller(E, m, P);  // div = m(P) - ([m]P) - (m-1)(O)
        CurvePoint R = E.multiply(m, P);
        if (n > 0) {
            f *= g;
            residual.push_back(R);
        } else {
            // -(m(P) - m(O)) = -div g - ((R) - (O)) and -((R) - (O)) = (-R) - (O) - div v_R
            f *= g.pow(-1);
            f.multiply_line(E, detail::vertical(E, R), -1);
            residual.push_back(E.negate(R));
        }
    }
    // (A) - (O) + (B) - (O) = div(l_{A,B} / v_{A+B}) + (A+B) - (O)
    CurvePoint acc = CurvePoint::at_infinity();
    for (const auto& B : residual) {
        CurvePoint sum = E.add(acc, B);
        f.multiply_line(E, detail::chord(E, acc, B), 1);
        f.multiply_line(E, detail::vertical(E, sum), -1);
        acc = sum;
    }
    f = f.simplified();
    if (!(f.divisor() == D))
        throw InconsistencyError("divisor bookkeeping mismatch: built " + f.divisor().str() + ", wanted " + D.str());
    return f;
}

// ---- torus-map witnesses ----

struct TorusMapWitness {
    WeierstrassCurve curve;
    CurvePoint p1, p2, p3, p4;
    FunctionRep phi_m1;  // m1 = e^1 + 2e^2, div 4p1 - 4p3
    FunctionRep phi_m2;  // m2 = e^2, div p1 + p2 - p3 - p4
    std::int64_t order_tag = 0;

    /// phi(e^1) = phi_m1 * phi_m2^{-2}.
    FunctionRep phi_e1() const {
        FunctionRep f = phi_m1;
        f *= phi_m2.pow(-2);
        return f;
    }
    const FunctionRep& phi_e2() const { return phi_m2; }

    /// phi(m) for m = a e^1 + b e^2.
    FunctionRep phi(const LatticeVector& m) const {
        FunctionRep f = phi_e1().pow(m.a);
        f *= phi_e2().pow(m.b);
        return f;
    }

    std::array<CurvePoint, 4> marked() const { return {p1, p2, p3, p4}; }
};

/// The fan rays n1..n4 attached to p1..p4.
inline std::array<LatticeVector, 4> witness_rays() { return {{{2, 1}, {-2, 1}, {-2, -1}, {2, -1}}}; }

/// sum_i <m, n_i> p_i.
inline Divisor expected_divisor(const TorusMapWitness& w, const LatticeVector& m) {
    Divisor d;
    auto rays = witness_rays();
    auto pts = w.marked();
    for (std::size_t i = 0; i < 4; ++i) d.add(pts[i], pairing(m, rays[i]));
    return d;
}

/// p1 = O, p4 = q, p2 = p3 + q.
inline TorusMapWitness build_witness(const WeierstrassCurve& E, const CurvePoint& p3, const CurvePoint& q) {
    E.require(p3);
    E.require(q);
    const std::int64_t k = E.order(p3);
    if (k != 2 && k != 4) throw GeometryError("[p] must have order 2 or 4, found " + std::to_string(k));
    if (q.infinity) throw GeometryError("[q] = 0 is excluded");
    if (q == p3) throw GeometryError("[q] = [p] is excluded");
    if (q == E.negate(p3)) throw GeometryError("[q] = -[p] is excluded");
    const CurvePoint p1 = CurvePoint::at_infinity();
    const CurvePoint p2 = E.add(p3, q);
    Divisor d1{{p1, 4}, {p3, -4}};
    Divisor d2{{p1, 1}, {p2, 1}, {p3, -1}, {q, -1}};
    return {E, p1, p2, p3, q, function_with_divisor(E, d1), function_with_divisor(E, d2), k};
}

/// Affine points avoiding the marked points and every zero or pole of the
/// factors of phi(e^1) and phi(e^2).
inline std::vector<CurvePoint> usable_samples(const TorusMapWitness& w) {
    std::vector<CurvePoint> out;
    const FunctionRep e1 = w.phi_e1();
    for (const auto& P : w.curve.points()) {
        if (P.infinity) continue;
        auto marked = w.marked();
        if (std::find(marked.begin(), marked.end(), P) != marked.end()) continue;
        if (!e1.evaluate(w.curve, P) || !w.phi_e2().evaluate(w.curve, P)) continue;
        out.push_back(P);
    }
    return out;
}

/// Rank of a matrix over F_p by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, const PrimeField& f) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && f.norm(m[pivot][c]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = f.inv(m[rank][c]);
        for (auto& v : m[rank]) v = f.mul(v, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || f.norm(m[r][c]) == 0) continue;
            const std::int64_t k = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/// The seven characters of conv{+-e^1, +-2e^2} in lexicographic order.
inline std::vector<LatticeVector> delta_characters() {
    return {{-1, 0}, {0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 2}, {1, 0}};
}

/// Rank of the matrix of character values (x^m(f(P)))_m at the samples.
inline std::size_t verify_linear_system(const TorusMapWitness& w, const std::vector<CurvePoint>& samples) {
    if (samples.size() < 8)
        throw GeometryError("need at least 8 usable sample points, have " + std::to_string(samples.size()) +
                            "; use a larger field");
    const auto& f = w.curve.field();
    const FunctionRep e1 = w.phi_e1();
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& P : samples) {
        auto u = e1.evaluate(w.curve, P), v = w.phi_e2().evaluate(w.curve, P);
        if (!u || !v) throw GeometryError("sample " + P.str() + " meets a zero or pole of the witness functions");
        std::vector<std::int64_t> row;
        for (const auto& m : delta_characters()) {
            std::int64_t a = m.a >= 0 ? f.pow(*u, m.a) : f.pow(f.inv(*u), -m.a);
            std::int64_t b = m.b >= 0 ? f.pow(*v, m.b) : f.pow(f.inv(*v), -m.b);
            row.push_back(f.mul(a, b));
        }
        rows.push_back(std::move(row));
    }
    return rank_mod_p(std::move(rows), f);
}

/// Two disjoint sample sets of the given size, taken in point order.
inline std::pair<std::vector<CurvePoint>, std::vector<CurvePoint>> disjoint_sample_sets(const TorusMapWitness& w,
                                                                                        std::size_t count) {
    auto all = usable_samples(w);
    if (all.size() < 2 * count)
        throw GeometryError("only " + std::to_string(all.size()) + " usable sample points, " +
                            std::to_string(2 * count) + " needed; use a larger field");
    return {{all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)},
            {all.begin() + static_cast<std::ptrdiff_t>(count), all.begin() + static_cast<std::ptrdiff_t>(2 * count)}};
}

struct WitnessSearchResult {
    TorusMapWitness witness;
    std::size_t rank_first = 0;
    std::size_t rank_second = 0;
};

/// Deterministic search: primes 5..max_prime, then (a, b) lexicographically,
/// p3 the first point of order k, q the first admissible point; accepts the
/// first witness with 2 * sample_count usable samples.
inline std::optional<WitnessSearchResult> find_witness(std::int64_t k, std::size_t sample_count = 10,
                                                       std::int64_t max_prime = 50) {
    for (std::int64_t p = 5; p <= max_prime; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b) {
                std::optional<WeierstrassCurve> E;
                try {
                    E.emplace(p, a, b);
                } catch (const GeometryError&) {
                    continue;  // singular
                }
                auto p3 = find_point_of_order(*E, k);
                if (!p3) continue;
                for (const auto& q : E->points()) {
                    if (q.infinity || q == *p3 || q == E->negate(*p3)) continue;
                    TorusMapWitness w = build_witness(*E, *p3, q);
                    if (usable_samples(w).size() < 2 * sample_count) continue;
                    auto [s1, s2] = disjoint_sample_sets(w, sample_count);
                    return WitnessSearchResult{w, verify_linear_system(w, s1), verify_linear_system(w, s2)};
                }
            }
    }
    return std::nullopt;
}

// ---- export ----

inline nlohmann::json point_to_json(const CurvePoint& P) {
    if (P.infinity) return "O";
    return nlohmann::json::array({P.x, P.y});
}

inline nlohmann::json function_to_json(const FunctionRep& f) {
    auto out = nlohmann::json::array();
    for (const auto& fct : f.factors)
        out.push_back({{"line", {fct.line.c0, fct.line.cx, fct.line.cy}}, {"exponent", fct.exponent}});
    return out;
}

inline nlohmann::json divisor_to_json(const Divisor& d) {
    auto out = nlohmann::json::array();
    for (const auto& [P, n] : d.terms()) out.push_back({{"point", point_to_json(P)}, {"coefficient", n}});
    return out;
}

inline nlohmann::json witness_export(const WitnessSearchResult& r) {
    const auto& w = r.witness;
    return {{"prime", w.curve.prime()},
            {"curve", {{"a", w.curve.a()}, {"b", w.curve.b()}}},
            {"points",
             {{"p1", point_to_json(w.p1)},
              {"p2", point_to_json(w.p2)},
              {"p3", point_to_json(w.p3)},
              {"p4", point_to_json(w.p4)}}},
            {"phi_m1", {{"factors", function_to_json(w.phi_m1)}, {"divisor", divisor_to_json(w.phi_m1.divisor())}}},
            {"phi_m2", {{"factors", function_to_json(w.phi_m2)}, {"divisor", divisor_to_json(w.phi_m2.divisor())}}},
            {"order_tag", w.order_tag},
            {"rank_certificate", {{"rank_first", r.rank_first}, {"rank_second", r.rank_second}, {"expected", 6}}}};
}

}  // namespace severi
