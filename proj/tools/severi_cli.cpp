// severi: command-line front end.
// Exit codes: 0 success, 1 invalid geometry or search failure, 2 parse or
// usage error, 3 mathematical inconsistency.

#include "severi/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace severi;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_parse = 2;
constexpr int exit_inconsistent = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PolygonInput with_lattice(PolygonInput in, const std::string& lattice) {
    if (lattice.empty()) return in;
    auto basis = parse_int4(lattice, "--lattice");
    const auto& [a, b, c, d] = basis;
    if (a * d - b * c == 0) throw ParseError("--lattice '" + lattice + "' is singular");
    return {LatticePolygon(in.polygon.vertices(), Sublattice::dual_of_cocharacters(a, b, c, d)), basis};
}

int emit(const RunReport& r, bool json) {
    if (json) std::cout << r.to_json().dump(2) << "\n";
    else std::cout << render_text(r);
    return r.ok ? exit_ok : exit_inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Severi degrees, component splits and witnesses for toric surfaces"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    std::string polygon_file, lattice;
    bool paper = false;

    auto* genus = app.add_subcommand("genus", "Lattice point counts and expected point counts per genus");
    genus->add_option("polygon", polygon_file, "Polygon JSON file");
    genus->add_option("--lattice", lattice, "Cocharacter basis a,b,c,d; the polygon lattice is its dual");
    genus->add_flag("--paper", paper, "Delta in Z^2, Delta and Delta_0 in the refined lattice");

    std::int64_t g = 0;
    std::string backend = "paths", dump;
    auto* count = app.add_subcommand("count", "Severi degree N(P, g)");
    count->add_option("polygon", polygon_file, "Polygon JSON file");
    count->add_option("--lattice", lattice, "Cocharacter basis a,b,c,d");
    count->add_option("--genus", g, "Geometric genus")->required();
    count->add_option("--backend", backend, "paths, direct or both");
    count->add_option("--dump", dump, "Write direct-backend witnesses as JSON lines");
    count->add_flag("--paper", paper, "Use Delta = conv{+-e1, +-2e2}");

    std::string cover_text, base_file, witnesses_file;
    bool tropical = false;
    std::int64_t split_genus = 1;
    auto* split = app.add_subcommand("split", "Split N(P, g) into the lifted part and the residual");
    split->add_option("polygon", polygon_file, "Total polygon JSON file");
    split->add_option("--cover", cover_text, "Cocharacter sublattice basis a,b,c,d");
    split->add_option("--base", base_file, "Base polygon JSON file");
    split->add_option("--genus", split_genus, "Geometric genus");
    split->add_option("--backend", backend, "paths, direct or both");
    split->add_option("--witnesses", witnesses_file, "Witness dump from 'count --dump'");
    split->add_flag("--tropical", tropical, "Enumerate witnesses in-process and classify them");
    split->add_flag("--paper", paper, "Cover <2e1, e2>, base Delta_0, total Delta");

    std::string n1_text = "2,1", n2_text = "-2,1";
    auto* degenerate = app.add_subcommand("degenerate", "Nodes of two cocharacter curves and Jacobian orders");
    degenerate->add_option("--n1", n1_text, "First cocharacter");
    degenerate->add_option("--n2", n2_text, "Second cocharacter");

    std::int64_t order = 4, prime_max = 50;
    std::size_t samples = 10;
    auto* witness = app.add_subcommand("witness", "Elliptic-curve witness over a small prime field");
    witness->add_option("--order", order, "Order of p3: 2 or 4");
    witness->add_option("--prime-max", prime_max, "Largest prime searched");
    witness->add_option("--samples", samples, "Points per sample set in the rank check");

    auto* embed = app.add_subcommand("embed-verify", "Relations of the degree-8 embedding");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        auto polygon_input = [&]() -> PolygonInput {
            if (paper) return {presets::delta(), {1, 0, 0, 1}};
            if (polygon_file.empty()) throw ParseError("a polygon file (or --paper) is required");
            return with_lattice(read_polygon_file(polygon_file), lattice);
        };

        if (*genus) {
            std::vector<PolygonInput> inputs;
            if (paper) {
                inputs = {{presets::delta(), {1, 0, 0, 1}},
                          {LatticePolygon(presets::delta().vertices(), presets::refined_lattice()), {2, 0, 0, 1}},
                          {presets::delta0(), {2, 0, 0, 1}}};
            } else {
                inputs.push_back(polygon_input());
            }
            return emit(genus_report(inputs), json);
        }

        if (*count) {
            CountOptions opt{g, parse_backend(backend)};
            if (!dump.empty() && opt.backend == Backend::paths)
                throw ParseError("--dump needs --backend direct or both");
            PolygonInput in = polygon_input();
            SeveriResult raw;
            try {
                RunReport r = count_report(in, opt, &raw);
                if (!dump.empty()) {
                    std::ofstream out(dump);
                    if (!out) throw ParseError("cannot write '" + dump + "'");
                    out << witnesses_to_jsonl(raw.witnesses);
                }
                return emit(r, json);
            } catch (const BackendMismatchError& e) {
                if (!dump.empty()) {
                    std::ofstream out(dump);
                    out << witnesses_to_jsonl(e.direct_witnesses);
                }
                RunReport r{"count", "", {{"paths_count", e.paths_count}, {"direct_count", e.direct_count},
                                          {"error", "backend disagreement"}},
                            "both", false};
                emit(r, json);
                return exit_inconsistent;
            }
        }

        if (*split) {
            SplitOptions opt;
            opt.genus = split_genus;
            opt.backend = parse_backend(backend);
            opt.tropical = tropical;
            if (!witnesses_file.empty()) opt.witnesses = parse_witness_jsonl(read_file(witnesses_file));
            CoverData cover = presets::cover();
            if (!paper) {
                if (cover_text.empty() || base_file.empty() || polygon_file.empty())
                    throw ParseError("split needs a polygon file, --cover and --base (or --paper)");
                auto cb = parse_int4(cover_text, "--cover");
                PolygonInput total = with_lattice(read_polygon_file(polygon_file), lattice);
                PolygonInput base = read_polygon_file(base_file);
                Sublattice m_prime = Sublattice::dual_of_cocharacters(cb[0], cb[1], cb[2], cb[3]);
                LatticePolygon base_poly(base.polygon.vertices(), m_prime);
                std::int64_t scale = deduce_scale(total.polygon, base_poly, m_prime);
                cover = CoverData::make(cb[0], cb[1], cb[2], cb[3], base_poly, total.polygon,
                                        total.polygon.lattice(), scale);
            }
            return emit(split_command(cover, opt), json);
        }

        if (*degenerate)
            return emit(degenerate_report(parse_int2(n1_text, "--n1"), parse_int2(n2_text, "--n2")), json);

        if (*witness) return emit(witness_report(order, prime_max, samples), json);

        if (*embed) return emit(embed_report(), json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_ok;
}
