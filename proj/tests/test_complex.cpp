#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "helpers.hpp"
#include "rainbow/manifold.hpp"
#include "rainbow/subdivision.hpp"

using namespace rainbow;
using namespace testing;

TEST_SUITE("complex") {

TEST_CASE("from_facets builds the tetrahedron boundary")
{
    const auto K = tetra_boundary();
    CHECK(K.dim() == 2);
    CHECK(K.facets().size() == 4);
    CHECK(K.num_vertices() == 4);
}

TEST_CASE("from_facets absorbs faces of other facets")
{
    const auto K = make({{"a", "b"}, {"a", "b", "c"}});
    REQUIRE(K.facets().size() == 1);
    CHECK(K.labels_of(K.facets()[0]) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("from_facets normalizes order and duplicates")
{
    const auto K = make({{"c", "b", "a"}, {"a", "b", "c"}, {"d"}});
    CHECK(K.facets().size() == 2);
    CHECK(K == make({{"d"}, {"a", "c", "b"}}));
    CHECK(!is_pure(K));
}

TEST_CASE("a single vertex is a 0-dimensional complex")
{
    const auto K = make({{"a"}});
    CHECK(K.dim() == 0);
    CHECK(K.num_vertices() == 1);
    REQUIRE(K.faces(0).size() == 1);
    CHECK(K.labels_of(K.faces(0)[0]) == std::vector<std::string>{"a"});
}

TEST_CASE("from_facets rejects empty facets and repeated vertices")
{
    CHECK_THROWS_AS(make({{"a", "b"}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(make({{"a", "a", "b"}}), std::invalid_argument);
}

TEST_CASE("the empty complex")
{
    const auto K = make({});
    CHECK(K.empty());
    CHECK(K.dim() == -1);
    CHECK(K.faces(-1).size() == 1);
    CHECK_THROWS_AS(K.faces(0), std::out_of_range);
    CHECK(euler_characteristic(K) == 0);
    CHECK(connected_components(K).empty());
    CHECK(K == SimplicialComplex());
}

TEST_CASE("faces by dimension")
{
    const auto K = tetra_boundary();
    CHECK(K.faces(-1).size() == 1);
    CHECK(K.faces(0).size() == 4);
    CHECK(K.faces(1).size() == 6);
    CHECK(K.faces(2).size() == 4);
    CHECK_THROWS_AS(K.faces(3), std::out_of_range);
    CHECK_THROWS_AS(K.faces(-2), std::out_of_range);
    CHECK(std::is_sorted(K.faces(1).begin(), K.faces(1).end()));
    CHECK(K.contains(vtxs(K, {"a", "c"})));
    CHECK(!K.contains(vtxs(K, {"a", "b", "c", "d"})));
    CHECK(to_string(K, vtxs(K, {"a", "c"})) == "{a,c}");
}

TEST_CASE("faces are memoized safely across threads")
{
    const auto K = iterated_subdivision(gen("simplex_boundary:3"), 1);
    std::atomic<int> mismatches{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&] {
            for (int k = 0; k <= K.dim(); ++k)
                if (K.faces(k).size() != K.faces(k).size() || K.faces(k).empty()) ++mismatches;
        });
    for (auto& th : pool) th.join();
    CHECK(mismatches == 0);
    // f-vector of sd(boundary of the 4-simplex): 30 vertices, 150 edges, 240 triangles, 120 tetrahedra
    CHECK(K.num_faces(0) == 30);
    CHECK(K.num_faces(1) == 150);
    CHECK(K.num_faces(2) == 240);
    CHECK(K.num_faces(3) == 120);
}

TEST_CASE("induced subcomplexes")
{
    const auto K = tetra_boundary();
    const auto cd = induced_subcomplex(K, std::vector<std::string>{"c", "d"});
    CHECK(cd == make({{"c", "d"}}));
    const auto abc = induced_subcomplex(K, std::vector<std::string>{"a", "b", "c"});
    CHECK(abc == make({{"a", "b", "c"}}));
    CHECK(abc.facets().size() == 1);
    CHECK(induced_subcomplex(K, std::vector<Vertex>{}).empty());
    CHECK_THROWS_AS(induced_subcomplex(K, std::vector<std::string>{"z"}), std::invalid_argument);
    // shared label table
    CHECK(cd.label_table_ptr() == K.label_table_ptr());
}

TEST_CASE("induced subcomplex keeps faces, not only facets")
{
    // the square with a diagonal: induced on a,c keeps the diagonal
    const auto K = make({{"a", "b", "c"}, {"a", "c", "d"}});
    CHECK(induced_subcomplex(K, std::vector<std::string>{"a", "c"}) == make({{"a", "c"}}));
    CHECK(induced_subcomplex(K, std::vector<std::string>{"b", "d"}) == make({{"b"}, {"d"}}));
}

TEST_CASE("boundary complexes")
{
    CHECK(boundary_complex(gen("simplex:2")) == gen("simplex_boundary:1"));
    CHECK(boundary_complex(tetra_boundary()).empty());
    const auto two = make({{"a", "b", "c"}, {"b", "c", "d"}});
    CHECK(boundary_complex(two) == make({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}));
    CHECK_THROWS_AS(boundary_complex(make({{"a", "b", "c"}, {"c", "d"}})), std::invalid_argument);
}

TEST_CASE("Euler characteristic")
{
    CHECK(euler_characteristic(tetra_boundary()) == 2);
    CHECK(euler_characteristic(gen("torus7")) == 0);
    CHECK(euler_characteristic(gen("rp2_6")) == 1);
    CHECK(euler_characteristic(make({{"a"}})) == 1);
}

TEST_CASE("connected components")
{
    const auto two = make({{"a", "b"}, {"c", "d"}});
    const auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == vtxs(two, {"a", "b"}));
    CHECK(comps[1] == vtxs(two, {"c", "d"}));
    CHECK(connected_components(tetra_boundary()).size() == 1);
    CHECK(connected_components(make({{"a"}, {"b"}, {"c"}})).size() == 3);
}

TEST_CASE("links")
{
    const auto K = tetra_boundary();
    CHECK(link(K, vtx(K, "a")) == make({{"b", "c"}, {"b", "d"}, {"c", "d"}}));
    const auto bowtie = make({{"a", "b", "c"}, {"c", "d", "e"}});
    CHECK(link(bowtie, vtx(bowtie, "c")) == make({{"a", "b"}, {"d", "e"}}));
    CHECK(link(make({{"a"}}), 0).empty());
}

TEST_CASE("subcomplex tests, rebasing, unions and intersections")
{
    const auto K = tetra_boundary();
    const auto L = make({{"a", "b"}, {"c"}});
    CHECK(is_subcomplex(L, K));
    CHECK(!is_subcomplex(make({{"a", "z"}}), K));
    CHECK(!is_subcomplex(make({{"a", "b", "c", "d"}}), K));
    const auto R = rebase(L, K);
    CHECK(R == L);
    CHECK(R.label_table_ptr() == K.label_table_ptr());
    CHECK_THROWS_AS(rebase(make({{"z"}}), K), std::invalid_argument);

    const auto A = induced_subcomplex(K, std::vector<std::string>{"a", "b", "c"});
    const auto B = induced_subcomplex(K, std::vector<std::string>{"b", "c", "d"});
    CHECK(complex_union(A, B) == make({{"a", "b", "c"}, {"b", "c", "d"}}));
    CHECK(complex_intersection(A, B) == make({{"b", "c"}}));
}

TEST_CASE("equality compares by label")
{
    CHECK(make({{"x", "y"}}) == make({{"y", "x"}}));
    CHECK(!(make({{"x", "y"}}) == make({{"x", "z"}})));
}

TEST_CASE("pseudomanifold reports")
{
    const auto s2 = pseudomanifold_report(tetra_boundary());
    CHECK(s2.is_pure);
    CHECK(s2.ridge_degrees_ok);
    CHECK(s2.is_closed);
    CHECK(s2.link_betti_ok);
    CHECK(s2.strongly_connected);

    const auto disk = pseudomanifold_report(gen("simplex:2"));
    CHECK(disk.is_pure);
    CHECK(disk.ridge_degrees_ok);
    CHECK(!disk.is_closed);
    CHECK(disk.link_betti_ok);

    const auto bowtie = pseudomanifold_report(make({{"a", "b", "c"}, {"c", "d", "e"}}));
    CHECK(!bowtie.link_betti_ok);
    CHECK(!bowtie.strongly_connected);

    const auto book = pseudomanifold_report(make({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}));
    CHECK(!book.ridge_degrees_ok);

    const auto empty = pseudomanifold_report(SimplicialComplex());
    CHECK(!empty.is_pure);
    CHECK(!empty.strongly_connected);

    CHECK(pseudomanifold_report(gen("torus7")).is_closed);
    CHECK(pseudomanifold_report(gen("rp2_6")).link_betti_ok);
}

} // TEST_SUITE
