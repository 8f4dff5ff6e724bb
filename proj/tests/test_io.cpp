#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;
using namespace testing;

TEST_SUITE("io") {

TEST_CASE("JSON instances")
{
    const auto inst = parse_instance_text(
        R"({"name": "tetra", "facets": [["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]], "classes": [["a"],["b"],["c","d"]]})");
    CHECK(inst.name == "tetra");
    CHECK(inst.complex == tetra_boundary());
    REQUIRE(inst.coloring);
    CHECK(inst.coloring->num_classes() == 3);
    CHECK(inst.warnings.empty());
}

TEST_CASE("integer labels are read as strings")
{
    const auto inst = parse_instance_text(R"({"facets": [[1, 2], [2, 3]]})");
    CHECK(inst.complex == make({{"1", "2"}, {"2", "3"}}));
    CHECK(!inst.coloring);
}

TEST_CASE("coloring violations are rejected with a message")
{
    try {
        parse_instance_text(R"({"facets": [["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]], "classes": [["a"],["b"],["c"]]})");
        FAIL("expected a coloring error");
    } catch (const ColoringError& e) {
        CHECK(std::string(e.what()).find("d") != std::string::npos);
    }
    const auto warn = parse_instance_text(R"({"facets": [["a","b"]], "classes": [["a"],[],["b"]]})");
    CHECK(warn.warnings.size() == 1);
}

TEST_CASE("malformed instances are parse errors")
{
    CHECK_THROWS_AS(parse_instance_text(R"({"facets": [["a","a","b"]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"facets": [[]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"facets": [["a"], "b"]})"), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"facets": [["a", 1.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"classes": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"facets": [["a"]], "name": 3})"), ParseError);
    try {
        parse_instance_text("{\"facets\": [[\"a\", \"b\"],\n ]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    std::istringstream none;
    CHECK_THROWS_AS(parse_instance("/nonexistent/file.json", none), ParseError);
}

TEST_CASE("facet-list text")
{
    const auto inst = parse_instance_text("# triangle boundary\na b\nb,c\n\nc a  # closing edge\n");
    CHECK(inst.complex == make({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
    CHECK_THROWS_AS(parse_instance_text("a b a\n"), ParseError);
    const auto empty = parse_instance_text("# nothing\n");
    CHECK(empty.complex.empty());
    CHECK(!empty.warnings.empty());
}

TEST_CASE("stdin is read for '-'")
{
    std::istringstream in(R"({"facets": [["x","y"]]})");
    CHECK(parse_instance("-", in).complex == make({{"x", "y"}}));
}

TEST_CASE("instance writer is deterministic and round-trips")
{
    const auto K = gen("torus7");
    const Coloring C({{"3", "0"}, {"1", "4"}, {"2", "5", "6"}});
    const auto text = instance_to_json(K, C, std::string("torus7"));
    CHECK(text == instance_to_json(K, C, std::string("torus7")));
    const auto back = parse_instance_text(text);
    CHECK(back.complex == K);
    CHECK(back.name == "torus7");
    REQUIRE(back.coloring);
    CHECK((*back.coloring)[0] == std::vector<std::string>{"0", "3"});
    CHECK(instance_to_json(back.complex, back.coloring, back.name) == text);
    CHECK(instance_to_json(SimplicialComplex(), std::nullopt, std::nullopt) == "{\n  \"facets\": []\n}\n");
}

TEST_CASE("check reports round-trip through JSON")
{
    const auto K = tetra_boundary();
    const Coloring C({{"a"}, {"b"}, {"c", "d"}});
    for (auto id : {TheoremId::meshulam, TheoremId::surface, TheoremId::sphere, TheoremId::n}) {
        const auto report = check_theorem(K, C, id, {Q(), GF(2)});
        const auto j = report_to_json(report, 1.5);
        CHECK(j["schema_version"] == k_report_schema_version);
        CHECK(j["timing_ms"] == 1.5);
        const auto back = report_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == report);
        CHECK(report_to_json(back).dump() == report_to_json(report).dump());
    }
    const auto mismatch = check_meshulam(K, Coloring({{"a"}, {"b", "c", "d"}}), Q());
    CHECK(report_from_json(nlohmann::json::parse(report_to_json(mismatch).dump())) == mismatch);

    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema": "other"})")), ParseError);
    auto j = nlohmann::json::parse(report_to_json(mismatch).dump());
    j["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(j), ParseError);
    j = nlohmann::json::parse(report_to_json(mismatch).dump());
    j.erase("verdicts");
    CHECK_THROWS_AS(report_from_json(j), ParseError);
}

} // TEST_SUITE
