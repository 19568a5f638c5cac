#pragma once

// Exact number types and the error hierarchy shared by every module.

#ifdef SEVERI_USE_GMP
#include <boost/multiprecision/gmp.hpp>
#else
#include <boost/multiprecision/cpp_int.hpp>
#endif

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace severi {

#ifdef SEVERI_USE_GMP
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
#else
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
#endif

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data that cannot be parsed or is structurally malformed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A point or polygon is not integral with respect to the requested lattice.
class IntegralityError : public Error {
public:
    using Error::Error;
};

/// A geometric precondition failed (degenerate polygon, parallel directions, ...).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not. Always signals a bug or a
/// non-generic input, never a recoverable state.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw ParseError("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) throw IntegralityError("value " + q.str() + " is not an integer");
    return boost::multiprecision::numerator(q);
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw Error("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t to_int64(const Rational& q) { return to_int64(to_integer(q)); }

/// Floor of an exact rational.
inline BigInt floor(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
}

inline BigInt ceil(const Rational& q) { return -floor(-q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const BigInt& v) { return v.sign(); }

/// Canonical "num/den" text (just "num" for integers).
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace severi
