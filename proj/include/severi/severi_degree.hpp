#pragma once

// Severi degrees N(P, g) through either tropical backend, with the stretched
// point-configuration schedule and the witness dump format.

#include "severi/direct_enumeration.hpp"
#include "severi/exact.hpp"
#include "severi/integral_polygon.hpp"
#include "severi/lattice.hpp"
#include "severi/lattice_paths.hpp"
#include "severi/tropical_curve.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace severi {

enum class Backend { paths, direct, both };

inline std::string to_string(Backend b) {
    switch (b) {
        case Backend::paths: return "paths";
        case Backend::direct: return "direct";
        case Backend::both: return "both";
    }
    return "?";
}

inline Backend parse_backend(const std::string& s) {
    if (s == "paths") return Backend::paths;
    if (s == "direct") return Backend::direct;
    if (s == "both") return Backend::both;
    throw ParseError("unknown backend '" + s + "' (expected paths, direct or both)");
}

/// The two backends returned different numbers.
class BackendMismatchError : public InconsistencyError {
public:
    BackendMismatchError(std::int64_t paths, std::int64_t direct, std::vector<TropicalWitness> witnesses)
        : InconsistencyError("backend disagreement: paths = " + std::to_string(paths) +
                             ", direct = " + std::to_string(direct)),
          paths_count(paths),
          direct_count(direct),
          direct_witnesses(std::move(witnesses)) {}

    std::int64_t paths_count;
    std::int64_t direct_count;
    std::vector<TropicalWitness> direct_witnesses;
};

struct SeveriResult {
    std::int64_t degree = 0;
    Backend backend = Backend::paths;
    std::int64_t point_count = 0;
    std::optional<std::int64_t> paths_count;
    std::optional<std::int64_t> direct_count;
    std::vector<TropicalWitness> witnesses;  // direct backend only
    std::optional<PointConfig> config;       // direct backend only
    std::vector<std::string> warnings;
};

/// Number of stretch squarings tried after the first configuration.
inline constexpr int max_stretch_retries = 5;

/// All lambda-increasing paths with `steps` steps (i.e. steps + 1 points).
inline std::vector<LatticePath> enumerate_paths(const LatticePolygon& poly, const Sublattice& lat, std::int64_t steps,
                                                LinearFunctional lambda = LinearFunctional::standard()) {
    return PathCounter(rebase(poly, lat), lambda).enumerate(steps);
}

/// Witnesses of genus-g curves through `config`, in rebased coordinates.
inline std::vector<TropicalWitness> direct_enumerate(const LatticePolygon& poly, const Sublattice& lat,
                                                     std::int64_t genus, const PointConfig& config) {
    IntegralPolygon ip(rebase(poly, lat));
    return DirectEnumerator(ip, genus).run(config);
}

namespace detail {

inline std::int64_t witness_total(const std::vector<TropicalWitness>& ws) {
    std::int64_t t = 0;
    for (const auto& w : ws) t += w.multiplicity;
    return t;
}

}  // namespace detail

/// Runs the direct backend on the stretched configurations K = 2^20,
/// K^2, K^4, ... until one is generic.
inline std::pair<PointConfig, std::vector<TropicalWitness>> direct_with_schedule(const IntegralPolygon& poly,
                                                                                 std::int64_t genus) {
    DirectEnumerator enumerator(poly, genus);
    const auto n = static_cast<std::size_t>(enumerator.required_points());
    BigInt k = PointConfig::default_stretch();
    for (int attempt = 0;; ++attempt) {
        PointConfig config = PointConfig::stretched(n, k);
        try {
            return {config, enumerator.run(config)};
        } catch (const GenericityError& e) {
            if (attempt == max_stretch_retries)
                throw GenericityError(std::string("no generic stretched configuration after ") +
                                      std::to_string(max_stretch_retries) + " retries: " + e.what());
            k *= k;
        }
    }
}

inline SeveriResult severi_degree(const LatticePolygon& poly, const Sublattice& lat, std::int64_t genus,
                                  Backend backend = Backend::paths,
                                  LinearFunctional lambda = LinearFunctional::standard()) {
    SeveriResult r;
    r.backend = backend;
    if (genus < 0) throw GeometryError("genus must be non-negative");
    const LatticePolygon coords = rebase(poly, lat);
    IntegralPolygon ip(coords);
    r.point_count = static_cast<std::int64_t>(ip.boundary_points().size()) + genus - 1;
    if (ip.is_degenerate()) {
        r.warnings.push_back("polygon " + poly.str() + " has no interior; degree 0");
        return r;
    }
    if (genus > static_cast<std::int64_t>(ip.interior_points().size())) {
        r.warnings.push_back("genus " + std::to_string(genus) + " exceeds the " +
                             std::to_string(ip.interior_points().size()) + " interior lattice points; degree 0");
        return r;
    }
    if (backend != Backend::direct) r.paths_count = PathCounter(coords, lambda).count(r.point_count);
    if (backend != Backend::paths) {
        auto [config, witnesses] = direct_with_schedule(ip, genus);
        r.direct_count = detail::witness_total(witnesses);
        r.config = std::move(config);
        r.witnesses = std::move(witnesses);
    }
    if (r.paths_count && r.direct_count && *r.paths_count != *r.direct_count)
        throw BackendMismatchError(*r.paths_count, *r.direct_count, r.witnesses);
    r.degree = r.paths_count ? *r.paths_count : *r.direct_count;
    return r;
}

inline SeveriResult severi_degree(const LatticePolygon& poly, std::int64_t genus, Backend backend = Backend::paths) {
    return severi_degree(poly, poly.lattice(), genus, backend);
}

// ---- witness dump (JSON lines) ----

inline nlohmann::json cells_to_json(const DualSubdivision& s) {
    auto cells = nlohmann::json::array();
    for (const auto& c : s.cells) {
        auto cell = nlohmann::json::array();
        for (const auto& v : c.vertices) cell.push_back({v.a, v.b});
        cells.push_back(cell);
    }
    return cells;
}

inline nlohmann::json witness_to_json(const TropicalWitness& w) {
    auto positions = nlohmann::json::array();
    for (const auto& p : w.vertex_positions) positions.push_back({to_string(p.x), to_string(p.y)});
    return {{"type_id", w.type_id},
            {"multiplicity", w.multiplicity},
            {"dual_cells", cells_to_json(w.dual)},
            {"positions", positions}};
}

/// One JSON object per line.
inline std::string witnesses_to_jsonl(const std::vector<TropicalWitness>& ws) {
    std::string out;
    for (const auto& w : ws) out += witness_to_json(w).dump() + "\n";
    return out;
}

/// The subset of a witness that the dump preserves.
struct WitnessRecord {
    std::string type_id;
    std::int64_t multiplicity = 0;
    DualSubdivision dual;
    std::vector<RationalPoint> positions;
};

inline WitnessRecord record_of(const TropicalWitness& w) {
    return {w.type_id, w.multiplicity, w.dual, w.vertex_positions};
}

inline std::vector<WitnessRecord> parse_witness_jsonl(const std::string& text) {
    std::vector<WitnessRecord> out;
    std::size_t line_no = 0, start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fail = [&](const std::string& why) {
            return ParseError("witness dump line " + std::to_string(line_no) + ": " + why);
        };
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw fail(e.what());
        }
        try {
            WitnessRecord r;
            r.type_id = j.at("type_id").get<std::string>();
            r.multiplicity = j.at("multiplicity").get<std::int64_t>();
            if (r.multiplicity < 1) throw fail("multiplicity must be positive");
            std::vector<Cell> cells;
            for (const auto& c : j.at("dual_cells")) {
                std::vector<LatticeVector> vs;
                for (const auto& v : c) vs.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
                if (vs.size() < 3) throw fail("cell with fewer than three vertices");
                cells.push_back(Cell::make(std::move(vs)));
            }
            r.dual = DualSubdivision(std::move(cells));
            for (const auto& p : j.at("positions"))
                r.positions.push_back({parse_rational(p.at(0).get<std::string>()),
                                       parse_rational(p.at(1).get<std::string>())});
            out.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw fail(e.what());
        }
    }
    return out;
}

}  // namespace severi
