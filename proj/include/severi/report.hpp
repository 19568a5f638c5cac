#pragma once

// Command implementations behind the command-line tool. Every command
// produces a RunReport whose JSON and text renderings carry the same numbers.

#include "severi/components.hpp"
#include "severi/degeneration.hpp"
#include "severi/ec_witness.hpp"
#include "severi/embedding.hpp"
#include "severi/exact.hpp"
#include "severi/lattice.hpp"
#include "severi/polygon_io.hpp"
#include "severi/severi_degree.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace severi {

inline const char* arithmetic_backend() {
#ifdef SEVERI_USE_GMP
    return "gmp";
#else
    return "boost-cpp_int";
#endif
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

struct RunReport {
    std::string command;
    std::string inputs;  // canonical description of the inputs
    nlohmann::json results = nlohmann::json::object();
    std::string provenance;  // which backend produced the numbers
    bool ok = true;          // every internal assertion held

    nlohmann::json to_json() const {
        return {{"command", command},
                {"inputs_digest", fnv1a_hex(inputs)},
                {"provenance", provenance},
                {"exact_arithmetic", arithmetic_backend()},
                {"ok", ok},
                {"results", results}};
    }
};

namespace detail {

inline void render_value(std::ostringstream& out, const nlohmann::json& v, int indent);

inline bool is_scalar_array(const nlohmann::json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || (e.is_array() && !is_scalar_array(e))) return false;
    return true;
}

inline std::string scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return s + "]";
    }
    return v.dump();
}

inline void render_value(std::ostringstream& out, const nlohmann::json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
                out << pad << key << ":\n";
                render_value(out, value, indent + 2);
            } else {
                out << pad << key << ": " << scalar_text(value) << "\n";
            }
        }
    } else if (v.is_array() && !is_scalar_array(v)) {
        for (const auto& e : v) {
            if (e.is_object()) {
                std::ostringstream inner;
                render_value(inner, e, indent + 2);
                std::string text = inner.str();
                if (text.size() > static_cast<std::size_t>(indent) + 2)
                    text.replace(static_cast<std::size_t>(indent), 2, "- ");
                out << text;
            } else {
                out << pad << "- " << scalar_text(e) << "\n";
            }
        }
    } else {
        out << pad << scalar_text(v) << "\n";
    }
}

}  // namespace detail

/// Indented "key: value" text of the whole report.
inline std::string render_text(const RunReport& r) {
    std::ostringstream out;
    out << r.command << " [" << (r.ok ? "ok" : "FAILED") << "]\n";
    out << "  inputs digest: " << fnv1a_hex(r.inputs) << "\n";
    out << "  provenance: " << r.provenance << "\n";
    out << "  exact arithmetic: " << arithmetic_backend() << "\n";
    detail::render_value(out, r.results, 2);
    return out.str();
}

// ---- genus ----

inline nlohmann::json polygon_counts(const LatticePolygon& poly, const std::array<std::int64_t, 4>& basis) {
    const Sublattice& lat = poly.lattice();
    const auto interior = static_cast<std::int64_t>(interior_count(poly, lat));
    nlohmann::json j = {{"polygon", polygon_to_json(poly, basis)},
                        {"interior", interior},
                        {"boundary", boundary_count(poly, lat)},
                        {"normalized_volume", normalized_volume(poly, lat)}};
    auto fan = nlohmann::json::array();
    for (const auto& r : normal_fan(poly))
        fan.push_back({{"ray", {r.primitive_direction.a, r.primitive_direction.b}},
                       {"edge_length", r.edge_lattice_length}});
    j["normal_fan"] = fan;
    auto points = nlohmann::json::array();
    for (std::int64_t g = 0; g <= interior; ++g)
        points.push_back({{"genus", g}, {"points", expected_point_count(poly, lat, g)}});
    j["expected_points"] = points;
    return j;
}

inline RunReport genus_report(const std::vector<PolygonInput>& inputs) {
    RunReport r{"genus", "", nlohmann::json::object(), "lattice-geom", true};
    auto list = nlohmann::json::array();
    for (const auto& in : inputs) {
        r.inputs += polygon_to_json(in.polygon, in.cocharacter_basis).dump() + "\n";
        list.push_back(polygon_counts(in.polygon, in.cocharacter_basis));
    }
    if (list.size() == 1) r.results = list[0];
    else r.results["instances"] = list;
    return r;
}

// ---- count ----

struct CountOptions {
    std::int64_t genus = 0;
    Backend backend = Backend::paths;
};

/// Throws BackendMismatchError when the backends disagree.
inline RunReport count_report(const PolygonInput& in, const CountOptions& opt, SeveriResult* raw = nullptr) {
    RunReport r{"count", "", nlohmann::json::object(), to_string(opt.backend), true};
    r.inputs = polygon_to_json(in.polygon, in.cocharacter_basis).dump() + " genus=" + std::to_string(opt.genus) +
               " backend=" + to_string(opt.backend);
    SeveriResult s = severi_degree(in.polygon, in.polygon.lattice(), opt.genus, opt.backend);
    r.results = {{"polygon", polygon_to_json(in.polygon, in.cocharacter_basis)},
                 {"genus", opt.genus},
                 {"point_count", s.point_count},
                 {"degree", s.degree}};
    r.results["paths_count"] = s.paths_count ? nlohmann::json(*s.paths_count) : nlohmann::json(nullptr);
    r.results["direct_count"] = s.direct_count ? nlohmann::json(*s.direct_count) : nlohmann::json(nullptr);
    if (s.direct_count) {
        r.results["witness_count"] = s.witnesses.size();
        auto pts = nlohmann::json::array();
        for (const auto& p : s.config->points) pts.push_back({to_string(p.x), to_string(p.y)});
        r.results["configuration"] = pts;
    }
    if (!s.warnings.empty()) r.results["warnings"] = s.warnings;
    if (raw) *raw = std::move(s);
    return r;
}

// ---- split ----

/// The k with rebase(polygon) = k * rebase(base) in `lat`, if one exists.
inline std::int64_t deduce_scale(const LatticePolygon& polygon, const LatticePolygon& base, const Sublattice& lat) {
    auto p = rebase(polygon, lat).vertices(), b = rebase(base, lat).vertices();
    if (p.size() != b.size()) throw GeometryError("polygon and base have different vertex counts");
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (const auto& [num, den] : {std::pair{p[i].x, b[i].x}, std::pair{p[i].y, b[i].y}}) {
            if (den == 0) continue;
            Rational k = num / den;
            if (!is_integer(k) || k < 1)
                throw GeometryError("polygon is not a positive integer multiple of the base in the cover lattice");
            return to_int64(k);
        }
    }
    throw GeometryError("base polygon is the origin");
}

struct SplitOptions {
    std::int64_t genus = 1;
    Backend backend = Backend::paths;
    std::optional<std::vector<WitnessRecord>> witnesses;
    bool tropical = false;  // enumerate the witnesses in-process
};

inline RunReport split_command(const CoverData& cover, const SplitOptions& opt) {
    RunReport r{"split", "", nlohmann::json::object(), to_string(opt.backend), true};
    const auto& cb = cover.cocharacter_basis;
    r.inputs = polygon_to_json(cover.polygon, {1, 0, 0, 1}).dump() + " base=" +
               polygon_to_json(cover.base, cb).dump() + " genus=" + std::to_string(opt.genus);
    ComponentSplit s = split_degrees(cover, opt.genus, opt.backend);
    std::optional<TropicalSplit> t;
    if (opt.witnesses) {
        t = tropical_split(*opt.witnesses, cover);
        r.inputs += " witnesses=" + std::to_string(opt.witnesses->size());
    } else if (opt.tropical) {
        auto [config, ws] = direct_with_schedule(IntegralPolygon(rebase(cover.polygon, cover.polygon_lattice)),
                                                 opt.genus);
        t = tropical_split(ws, cover);
        r.provenance += "+direct";
    }
    r.results = split_report(s, t);
    r.results["cover"] = {{"cocharacter_basis", {{cb[0], cb[1]}, {cb[2], cb[3]}}},
                          {"deck_order", cover.deck_order},
                          {"scale", cover.scale}};
    r.results["genus"] = opt.genus;
    r.results["base_degree"] = severi_degree(cover.base, cover.base_lattice, opt.genus, Backend::paths).degree;
    r.results["point_count"] = expected_point_count(cover.base, cover.base_lattice, opt.genus);
    if (t) {
        if (t->doubled + t->other != s.total) {
            r.ok = false;
            r.results["error"] = "tropical parts do not sum to the total";
        }
        r.results["doubled_vs_lifted"] = {{"doubled", t->doubled}, {"lifted", s.lifted},
                                          {"equal", t->doubled == s.lifted}};
    }
    return r;
}

// ---- degenerate ----

inline RunReport degenerate_report(const LatticeVector& n1, const LatticeVector& n2) {
    RunReport r{"degenerate", "n1=" + n1.str() + " n2=" + n2.str(), nlohmann::json::object(), "smith-normal-form",
                true};
    NodalUnionModel model = compute_nodes(CocharCurve(n1), CocharCurve(n2));
    SmithForm snf = smith_normal_form({{n1.a, -n2.a}, {n1.b, -n2.b}});
    auto nodes = nlohmann::json::array();
    for (const auto& n : model.nodes) nodes.push_back({{"t1", n.t1.str()}, {"t2", n.t2.str()}});
    auto pairs = nlohmann::json::array();
    const auto classified = classify_pairs(model);
    for (const auto& p : classified)
        pairs.push_back({{"first", p.first},
                         {"second", p.second},
                         {"ratio", (model.nodes[p.second].t1 * model.nodes[p.first].t1.inverse()).str()},
                         {"order", p.order}});
    auto hist = nlohmann::json::object();
    for (const auto& [order, count] : order_histogram(classified)) hist[std::to_string(order)] = count;
    r.results = {{"n1", {n1.a, n1.b}},
                 {"n2", {n2.a, n2.b}},
                 {"smith_invariants", snf.invariants()},
                 {"node_count", model.nodes.size()},
                 {"nodes", nodes},
                 {"pairs", pairs},
                 {"order_histogram", hist},
                 {"genus_keeping_two_nodes", partial_normalization_genus(2)}};
    return r;
}

// ---- witness ----

/// Checks div(phi(m)) = sum <m, n_i> p_i on the generators and on `extra`.
inline bool divisor_identity_holds(const TorusMapWitness& w, const std::vector<LatticeVector>& extra) {
    std::vector<LatticeVector> ms{{1, 0}, {0, 1}};
    ms.insert(ms.end(), extra.begin(), extra.end());
    for (const auto& m : ms)
        if (!(w.phi(m).divisor() == expected_divisor(w, m))) return false;
    return true;
}

inline RunReport witness_report(std::int64_t order, std::int64_t prime_max, std::size_t samples) {
    RunReport r{"witness",
                "order=" + std::to_string(order) + " prime_max=" + std::to_string(prime_max) +
                    " samples=" + std::to_string(samples),
                nlohmann::json::object(), "deterministic-search", true};
    if (order != 2 && order != 4) throw GeometryError("witness order must be 2 or 4");
    auto found = find_witness(order, samples, prime_max);
    if (!found) throw GeometryError("no witness of order " + std::to_string(order) + " over F_p with p <= " +
                                    std::to_string(prime_max));
    r.results = witness_export(*found);
    r.results["curve_points"] = found->witness.curve.points().size();
    const bool divisors = divisor_identity_holds(found->witness, delta_characters());
    r.results["divisor_identity"] = divisors;
    r.ok = divisors && found->rank_first == 6 && found->rank_second == 6;
    return r;
}

// ---- embed-verify ----

inline RunReport embed_report() {
    RunReport r{"embed-verify", "standard", nlohmann::json::object(), "sparse-poly", true};
    const MonomialMap map = MonomialMap::standard();
    auto monomials = nlohmann::json::array();
    for (std::size_t i = 0; i < map.images.size(); ++i)
        monomials.push_back({{"w", "w" + std::to_string(i)},
                             {"lattice_point", {map.points[i].a, map.points[i].b}},
                             {"form", map.images[i].str()}});
    auto relations = nlohmann::json::array();
    std::vector<SparsePoly> polys;
    std::size_t vanishing = 0;
    for (const auto& rel : embedding_relations()) {
        SparsePoly image = map.apply(rel.poly);
        vanishing += image.is_zero();
        relations.push_back({{"name", rel.name}, {"relation", rel.poly.str()}, {"image", image.str()}});
        polys.push_back(rel.poly);
    }
    auto points = nlohmann::json::array();
    std::size_t on_variety = 0;
    for (const auto& pt : fixed_points()) {
        bool on = check_point(pt, polys);
        on_variety += on;
        auto coords = nlohmann::json::array();
        for (const auto& c : pt) coords.push_back(to_int64(c));
        points.push_back({{"point", coords}, {"on_variety", on}});
    }
    const NamedRelation control = negative_control();
    const SparsePoly control_image = map.apply(control.poly);
    r.results = {{"monomials", monomials},
                 {"relations", relations},
                 {"vanishing_relations", vanishing},
                 {"points", points},
                 {"points_on_variety", on_variety},
                 {"negative_control", {{"relation", control.name}, {"image", control_image.str()}}},
                 {"degree", normalized_volume(presets::delta(), Sublattice::identity())}};
    r.ok = vanishing == polys.size() && on_variety == 4 && !control_image.is_zero();
    return r;
}

}  // namespace severi
