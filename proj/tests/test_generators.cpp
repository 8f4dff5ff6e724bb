#include "doctest.h"

#include <set>

#include "helpers.hpp"

using namespace rainbow;
using namespace testing;

TEST_SUITE("generators") {

TEST_CASE("catalog complexes")
{
    const auto s2 = gen("simplex_boundary:2");
    CHECK(s2.num_vertices() == 4);
    CHECK(euler_characteristic(s2) == 2);
    CHECK(gen("simplex_boundary(2)") == s2);

    const auto T = gen("torus7");
    CHECK(T.num_faces(0) == 7);
    CHECK(T.num_faces(1) == 21);
    CHECK(T.num_faces(2) == 14);
    CHECK(euler_characteristic(T) == 0);

    const auto P = gen("rp2_6");
    CHECK(P.num_faces(0) == 6);
    CHECK(P.num_faces(1) == 15);
    CHECK(P.num_faces(2) == 10);
    CHECK(euler_characteristic(P) == 1);

    CHECK(gen("simplex:3").facets().size() == 1);
    CHECK(gen("simplex:0").dim() == 0);
    CHECK(gen("simplex_boundary:0").num_vertices() == 2);
    CHECK(gen("disjoint:3").facets().size() == 3);
    CHECK(connected_components(gen("disjoint:3")).size() == 3);
    CHECK(gen("cycle:12").num_faces(1) == 12);
    // zero-padded labels sort numerically
    const auto C = gen("cycle:12");
    CHECK(C.label(0) == "00");
    CHECK(C.label(11) == "11");
    CHECK(catalog_names().size() == 6);
}

TEST_CASE("catalog rejects bad names and parameters")
{
    CHECK_THROWS_AS(generate("klein"), std::invalid_argument);
    CHECK_THROWS_AS(generate("simplex"), std::invalid_argument);
    CHECK_THROWS_AS(generate("simplex:7"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle:x"), std::invalid_argument);
    CHECK_THROWS_AS(generate("torus7:3"), std::invalid_argument);
    CHECK_THROWS_AS(generate("disjoint:0"), std::invalid_argument);
}

TEST_CASE("Sperner instances")
{
    const auto one = sperner_instance(1, 1);
    CHECK(one.complex.facets().size() == 2);
    CHECK(one.complex.num_vertices() == 3);
    CHECK(rainbow_simplices(one.complex, one.coloring).size() == 1);

    const auto two = sperner_instance(2, 1);
    CHECK(two.complex.num_vertices() == 7);
    CHECK(two.complex.facets().size() == 6);
    CHECK(rainbow_simplices(two.complex, two.coloring).size() % 2 == 1);
    CHECK(rainbow_simplices(sperner_instance(2, 2).complex, sperner_instance(2, 2).coloring).size() % 2 == 1);

    // every vertex is colored by a vertex of its carrier
    for (const auto& inst : {two, sperner_instance(3, 1)}) {
        CHECK(validate_coloring(inst.complex, inst.coloring).empty());
        const auto& vs = inst.complex.vertices();
        REQUIRE(inst.carrier.size() == vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto color = *inst.coloring.class_of(inst.complex.label(vs[i]));
            CHECK(std::find(inst.carrier[i].begin(), inst.carrier[i].end(), std::to_string(color)) !=
                  inst.carrier[i].end());
        }
    }
    CHECK_THROWS_AS(sperner_instance(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sperner_instance(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(sperner_instance(4, 3), std::invalid_argument);
}

TEST_CASE("random colorings")
{
    const auto K = tetra_boundary();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto C = random_coloring(K, 3, seed);
        CHECK(C.num_classes() == 3);
        CHECK(validate_coloring(K, C).empty());
        CHECK(C.classes() == random_coloring(K, 3, seed).classes());
    }
    std::set<std::vector<std::vector<std::string>>> distinct;
    for (std::uint64_t seed = 0; seed < 50; ++seed) distinct.insert(random_coloring(K, 3, seed).classes());
    CHECK(distinct.size() > 10);
    CHECK_THROWS_AS(random_coloring(make({{"a"}}), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_coloring(K, 0, 1), std::invalid_argument);
}

TEST_CASE("random bipartitions")
{
    const auto K = gen("torus7");
    const auto [U, W] = random_bipartition(K, 7);
    CHECK(!U.empty());
    CHECK(!W.empty());
    CHECK(U.size() + W.size() == 7);
    const auto again = random_bipartition(K, 7);
    CHECK(again.first == U);
}

} // TEST_SUITE
