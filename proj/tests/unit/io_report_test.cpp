#include "severi/polygon_io.hpp"
#include "severi/report.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace severi;

namespace {

const std::string data_dir = SEVERI_DATA_DIR;

}  // namespace

TEST(PolygonIo, IntegerAndFractionForms) {
    auto a = parse_polygon_json(R"({"vertices": [[1, 0], [0, 2], [-1, 0], [0, -2]]})");
    EXPECT_EQ(a.polygon, presets::delta());
    auto b = parse_polygon_json(R"({"vertices": [[1,2,0,1],[0,1,1,1],[-1,2,0,1],[0,1,-1,1]], "lattice": [[2,0],[0,1]]})");
    EXPECT_EQ(b.polygon, presets::delta0());
    auto c = parse_polygon_json(R"({"vertices": [["1/2", 0], [0, 1], ["-1/2", 0], [0, -1]], "lattice": [[2,0],[0,1]]})");
    EXPECT_EQ(c.polygon, presets::delta0());
}

TEST(PolygonIo, ErrorsCarryPositions) {
    try {
        parse_polygon_json("{\n  \"vertices\": [[0, 0],\n  [1, 0] [0, 1]]\n}", "poly.json");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("poly.json:3:"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_polygon_json(""), ParseError);
    EXPECT_THROW(parse_polygon_json("[]"), ParseError);
    EXPECT_THROW(parse_polygon_json(R"({"vertices": []})"), ParseError);
    EXPECT_THROW(parse_polygon_json(R"({"vertices": [[1, 0, 2]]})"), ParseError);
    EXPECT_THROW(parse_polygon_json(R"({"vertices": [[1, 0, 2, 0]]})"), ParseError);
    EXPECT_THROW(parse_polygon_json(R"({"vertices": [[0, 0], [1, 0], [0, 1]], "lattice": [[1, 2], [2, 4]]})"),
                 ParseError);
    EXPECT_THROW(read_polygon_file(data_dir + "/polygons/does_not_exist.json"), ParseError);
}

TEST(PolygonIo, DataFilesLoad) {
    EXPECT_EQ(read_polygon_file(data_dir + "/polygons/delta.json").polygon, presets::delta());
    EXPECT_EQ(read_polygon_file(data_dir + "/polygons/delta0.json").polygon, presets::delta0());
    EXPECT_THROW(read_polygon_file(data_dir + "/polygons/malformed.json"), ParseError);
}

TEST(PolygonIo, IntegerLists) {
    EXPECT_EQ(parse_int4("2,0,0,1", "x"), (std::array<std::int64_t, 4>{2, 0, 0, 1}));
    EXPECT_THROW(parse_int4("2,0,0", "x"), ParseError);
    EXPECT_THROW(parse_int4("2,0,0,1,5", "x"), ParseError);
    EXPECT_THROW(parse_int4("2,a,0,1", "x"), ParseError);
    EXPECT_EQ(parse_int2("-2,1", "x"), (LatticeVector{-2, 1}));
    EXPECT_THROW(parse_int2("1", "x"), ParseError);
}

TEST(Report, GenusOfDelta) {
    RunReport r = genus_report({{presets::delta(), {1, 0, 0, 1}}});
    EXPECT_EQ(r.results["interior"], 3);
    EXPECT_EQ(r.results["boundary"], 4);
    EXPECT_EQ(r.results["normalized_volume"], 8);
    EXPECT_EQ(r.results["expected_points"].size(), 4u);
}

TEST(Report, TextCarriesEveryNumber) {
    RunReport r = degenerate_report({2, 1}, {-2, 1});
    const std::string text = render_text(r);
    const std::string json = r.to_json().dump();
    EXPECT_NE(text.find("node_count: 4"), std::string::npos);
    EXPECT_NE(text.find(fnv1a_hex(r.inputs)), std::string::npos);
    // Every number in the JSON output also appears in the text.
    std::string token;
    for (char c : json + " ") {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            token += c;
        } else if (!token.empty()) {
            EXPECT_NE(text.find(token), std::string::npos) << token;
            token.clear();
        }
    }
}

TEST(Report, Deterministic) {
    EXPECT_EQ(render_text(embed_report()), render_text(embed_report()));
    EXPECT_EQ(witness_report(2, 50, 10).to_json().dump(), witness_report(2, 50, 10).to_json().dump());
}

TEST(Report, CountAndSplit) {
    RunReport c = count_report({presets::delta(), {1, 0, 0, 1}}, {1, Backend::both});
    EXPECT_EQ(c.results["degree"], 34);
    EXPECT_EQ(c.results["paths_count"], 34);
    EXPECT_EQ(c.results["direct_count"], 34);
    SplitOptions opt;
    opt.tropical = true;
    RunReport s = split_command(presets::cover(), opt);
    EXPECT_TRUE(s.ok);
    EXPECT_EQ(s.results["residual"], 26);
    EXPECT_EQ(s.results["tropical_doubled"].get<std::int64_t>() + s.results["tropical_other"].get<std::int64_t>(),
              34);
}

TEST(Report, ScaleDeduction) {
    EXPECT_EQ(deduce_scale(presets::delta(), presets::delta0(), presets::refined_lattice()), 2);
    EXPECT_THROW(deduce_scale(presets::triangle(3), presets::triangle(2), Sublattice::identity()), GeometryError);
}

TEST(Report, EmbedAndWitnessOk) {
    EXPECT_TRUE(embed_report().ok);
    RunReport w = witness_report(4, 50, 10);
    EXPECT_TRUE(w.ok);
    EXPECT_EQ(w.results["order_tag"], 4);
    EXPECT_THROW(witness_report(3, 50, 10), GeometryError);
    EXPECT_THROW(witness_report(4, 7, 10), GeometryError);
}
