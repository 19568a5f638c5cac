#pragma once

// Polygon files:
//   {"vertices": [[x, y], ...] or [[xnum, xden, ynum, yden], ...],
//    "lattice": [[a, b], [c, d]]}
// "lattice" is optional and holds a cocharacter basis (columns (a,c), (b,d));
// the polygon's lattice is its dual. Coordinates may be integers or strings
// such as "1/2".

#include "severi/exact.hpp"
#include "severi/lattice.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace severi {

struct PolygonInput {
    LatticePolygon polygon;
    std::array<std::int64_t, 4> cocharacter_basis{1, 0, 0, 1};
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline Rational json_rational(const nlohmann::json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(where + ": expected an integer or a rational string");
}

inline std::int64_t json_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace detail

/// Four integers "a,b,c,d".
inline std::array<std::int64_t, 4> parse_int4(const std::string& text, const std::string& what) {
    std::array<std::int64_t, 4> out{};
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) throw ParseError(what + " '" + text + "': expected four comma-separated integers");
        try {
            std::size_t used = 0;
            out[n] = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(what + " '" + text + "': '" + item + "' is not an integer");
        }
        ++n;
    }
    if (n != 4) throw ParseError(what + " '" + text + "': expected four comma-separated integers");
    return out;
}

/// Two integers "a,b".
inline LatticeVector parse_int2(const std::string& text, const std::string& what) {
    std::stringstream ss(text);
    std::string a, b, rest;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || std::getline(ss, rest, ','))
        throw ParseError(what + " '" + text + "': expected two comma-separated integers");
    try {
        std::size_t ua = 0, ub = 0;
        LatticeVector v{std::stoll(a, &ua), std::stoll(b, &ub)};
        if (ua != a.size() || ub != b.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(what + " '" + text + "': expected two comma-separated integers");
    }
}

inline PolygonInput parse_polygon_json(const std::string& text, const std::string& source = "<input>") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(source + ": top level must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError(source + ": missing array field \"vertices\"");
    std::vector<RationalPoint> vertices;
    std::size_t index = 0;
    for (const auto& v : j["vertices"]) {
        const std::string where = source + ": vertices[" + std::to_string(index++) + "]";
        if (!v.is_array()) throw ParseError(where + ": expected an array");
        if (v.size() == 2) {
            vertices.push_back({detail::json_rational(v[0], where), detail::json_rational(v[1], where)});
        } else if (v.size() == 4) {
            std::int64_t xn = detail::json_int(v[0], where), xd = detail::json_int(v[1], where);
            std::int64_t yn = detail::json_int(v[2], where), yd = detail::json_int(v[3], where);
            if (xd == 0 || yd == 0) throw ParseError(where + ": zero denominator");
            vertices.push_back({make_rational(xn, xd), make_rational(yn, yd)});
        } else {
            throw ParseError(where + ": expected [x, y] or [xnum, xden, ynum, yden]");
        }
    }
    if (vertices.empty()) throw ParseError(source + ": \"vertices\" is empty");
    PolygonInput out{LatticePolygon(vertices), {1, 0, 0, 1}};
    if (j.contains("lattice")) {
        const auto& l = j["lattice"];
        const std::string where = source + ": lattice";
        if (!l.is_array() || l.size() != 2 || !l[0].is_array() || !l[1].is_array() || l[0].size() != 2 ||
            l[1].size() != 2)
            throw ParseError(where + ": expected [[a, b], [c, d]]");
        out.cocharacter_basis = {detail::json_int(l[0][0], where), detail::json_int(l[0][1], where),
                                 detail::json_int(l[1][0], where), detail::json_int(l[1][1], where)};
        const auto& [a, b, c, d] = out.cocharacter_basis;
        if (a * d - b * c == 0) throw ParseError(where + ": singular basis");
        out.polygon = LatticePolygon(vertices, Sublattice::dual_of_cocharacters(a, b, c, d));
    }
    return out;
}

inline PolygonInput read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polygon file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_polygon_json(ss.str(), path);
}

inline nlohmann::json polygon_to_json(const LatticePolygon& poly, const std::array<std::int64_t, 4>& basis) {
    auto verts = nlohmann::json::array();
    for (const auto& v : poly.vertices()) {
        if (v.is_integral()) verts.push_back({to_int64(v.x), to_int64(v.y)});
        else verts.push_back({to_string(v.x), to_string(v.y)});
    }
    return {{"vertices", verts}, {"lattice", {{basis[0], basis[1]}, {basis[2], basis[3]}}}};
}

}  // namespace severi
