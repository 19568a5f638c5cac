#pragma once

// Sparse multivariate polynomials with integer coefficients over a named
// list of variables, with the text format "c*x^a*y^b*z^c + ...".

#include "severi/exact.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace severi {

class SparsePoly {
public:
    using Exponents = std::vector<std::int64_t>;

    explicit SparsePoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static SparsePoly constant(std::vector<std::string> variables, const BigInt& c) {
        SparsePoly p(std::move(variables));
        p.add_term(Exponents(p.vars_.size(), 0), c);
        return p;
    }

    static SparsePoly monomial(std::vector<std::string> variables, Exponents e, const BigInt& c = 1) {
        SparsePoly p(std::move(variables));
        if (e.size() != p.vars_.size()) throw GeometryError("monomial exponent vector has the wrong length");
        p.add_term(std::move(e), c);
        return p;
    }

    static SparsePoly variable(std::vector<std::string> variables, std::size_t index) {
        Exponents e(variables.size(), 0);
        e.at(index) = 1;
        return monomial(std::move(variables), std::move(e));
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Exponents e, const BigInt& c) {
        if (c == 0) return;
        for (auto v : e)
            if (v < 0) throw GeometryError("negative exponent in a polynomial");
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    SparsePoly operator+(const SparsePoly& o) const { return SparsePoly(*this) += o; }
    SparsePoly operator-(const SparsePoly& o) const { return SparsePoly(*this) -= o; }
    SparsePoly operator-() const { return SparsePoly(vars_) - *this; }

    SparsePoly operator*(const SparsePoly& o) const {
        same_ring(o);
        SparsePoly r(vars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly pow(std::int64_t k) const {
        if (k < 0) throw GeometryError("negative power of a polynomial");
        SparsePoly r = constant(vars_, 1), base = *this;
        for (; k > 0; k >>= 1, base = base * base)
            if (k & 1) r *= base;
        return r;
    }

    bool operator==(const SparsePoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    /// Total degree of every term, or -1 if the terms disagree or there are none.
    std::int64_t homogeneous_degree() const {
        std::int64_t deg = -1;
        for (const auto& [e, c] : terms_) {
            std::int64_t d = 0;
            for (auto v : e) d += v;
            if (deg != -1 && d != deg) return -1;
            deg = d;
        }
        return deg;
    }

    /// Value at an integer point, one entry per variable.
    BigInt evaluate(const std::vector<BigInt>& point) const {
        if (point.size() != vars_.size()) throw GeometryError("evaluation point has the wrong dimension");
        BigInt total = 0;
        for (const auto& [e, c] : terms_) {
            BigInt t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::int64_t k = 0; k < e[i]; ++k) t *= point[i];
            total += t;
        }
        return total;
    }

    /// Image under the ring map sending variable i to images[i].
    SparsePoly substitute(const std::vector<SparsePoly>& images) const {
        if (images.size() != vars_.size()) throw GeometryError("substitution needs one image per variable");
        if (images.empty()) throw GeometryError("substitution into a polynomial without variables");
        const auto& target = images.front().variables();
        for (const auto& im : images)
            if (im.variables() != target) throw GeometryError("substitution images live in different rings");
        SparsePoly r(target);
        for (const auto& [e, c] : terms_) {
            SparsePoly t = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= images[i].pow(e[i]);
            r += t;
        }
        return r;
    }

    /// Terms in decreasing lexicographic exponent order, e.g. "x*y^2*z^7 - x^2*y^2*z^6".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += mag.str();
            else if (mag == 1) out += mono;
            else out += mag.str() + "*" + mono;
        }
        return out;
    }

    /// Parses sums of terms "c*v^k*..." in the given variables; throws
    /// ParseError with the character offset on malformed input.
    static SparsePoly parse(const std::string& text, std::vector<std::string> variables) {
        SparsePoly p(variables);
        std::size_t pos = 0;
        auto fail = [&](const std::string& why) {
            return ParseError("polynomial '" + text + "', column " + std::to_string(pos + 1) + ": " + why);
        };
        auto skip = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto read_int = [&]() -> std::string {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return text.substr(start, pos - start);
        };
        skip();
        if (pos == text.size()) throw fail("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos == text.size()) break;
            int sgn = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sgn = text[pos] == '-' ? -1 : 1;
                ++pos;
                skip();
            } else if (!first) {
                throw fail("expected '+' or '-'");
            }
            first = false;
            BigInt coeff = sgn;
            Exponents e(variables.size(), 0);
            bool factor_expected = true;
            while (factor_expected) {
                skip();
                if (pos == text.size()) throw fail("expected a factor");
                if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    coeff *= BigInt(read_int());
                } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
                    std::size_t start = pos;
                    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
                    std::string name = text.substr(start, pos - start);
                    std::size_t idx = 0;
                    while (idx < variables.size() && variables[idx] != name) ++idx;
                    if (idx == variables.size()) {
                        pos = start;
                        throw fail("unknown variable '" + name + "'");
                    }
                    skip();
                    std::int64_t k = 1;
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        skip();
                        std::string digits = read_int();
                        if (digits.empty()) throw fail("expected an exponent");
                        k = std::stoll(digits);
                    }
                    e[idx] += k;
                } else {
                    throw fail(std::string("unexpected character '") + text[pos] + "'");
                }
                skip();
                factor_expected = pos < text.size() && text[pos] == '*';
                if (factor_expected) ++pos;
            }
            p.add_term(std::move(e), coeff);
        }
        return p;
    }

private:
    void same_ring(const SparsePoly& o) const {
        if (vars_ != o.vars_) throw GeometryError("polynomials over different variable lists");
    }

    std::vector<std::string> vars_;
    std::map<Exponents, BigInt> terms_;
};

}  // namespace severi
