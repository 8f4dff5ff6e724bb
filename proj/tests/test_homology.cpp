#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace rainbow;
using namespace testing;

using V = std::vector<std::size_t>;

TEST_SUITE("homology") {

TEST_CASE("field specs")
{
    CHECK(FieldSpec::parse("q") == Q());
    CHECK(FieldSpec::parse("Q") == Q());
    CHECK(FieldSpec::parse("2") == GF(2));
    CHECK(FieldSpec::parse("p:7") == GF(7));
    CHECK(FieldSpec::parse("GF(11)") == GF(11));
    CHECK(GF(3).name() == "GF(3)");
    CHECK(Q().name() == "Q");
    for (const auto& F : FieldSpec::default_menu()) CHECK(FieldSpec::parse(F.name()) == F);
    CHECK_THROWS_AS(FieldSpec::parse("4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("p:1"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("r"), std::invalid_argument);
    CHECK_THROWS_AS(GF(0), std::invalid_argument);
    CHECK(is_prime(2147483647));
    CHECK(!is_prime(2147483649ull));
}

TEST_CASE("sparse matrices validate their entries")
{
    CHECK_THROWS_AS(SparseMatrix::from_entries(2, 2, {{2, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseMatrix::from_entries(2, 2, {{0, 0, 1}, {0, 0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseMatrix::from_entries(2, 2, {{0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseMatrix::from_entries(2, 2, {{0, 0, 1, 0}}), std::invalid_argument);
    const auto M = SparseMatrix::from_entries(2, 3, {{1, 2, 5}, {0, 0, 1}});
    CHECK(M.entries()[0].col == 0);
    CHECK(M.transposed().transposed() == M);
}

TEST_CASE("field ranks")
{
    const auto I = SparseMatrix::from_entries(2, 2, {{0, 0, 1}, {1, 1, 1}});
    CHECK(field_rank(I, GF(2)) == 2);
    CHECK(field_rank(SparseMatrix(3, 4), Q()) == 0);
    // d_1 of the 3-cycle
    const auto d1 = SparseMatrix::from_entries(3, 3, {{0, 0, -1}, {1, 0, 1}, {0, 1, -1}, {2, 1, 1}, {1, 2, -1}, {2, 2, 1}});
    CHECK(field_rank(d1, Q()) == 2);
    CHECK(field_rank(d1, GF(2)) == 2);
    // [[2]] vanishes mod 2
    const auto two = SparseMatrix::from_entries(1, 1, {{0, 0, 2}});
    CHECK(field_rank(two, Q()) == 1);
    CHECK(field_rank(two, GF(2)) == 0);
    CHECK(field_rank(two, GF(3)) == 1);
    // rational entries
    const auto half = SparseMatrix::from_entries(2, 2, {{0, 0, 1, 2}, {0, 1, 1, 3}, {1, 0, 3, 1}, {1, 1, 2, 1}});
    CHECK(field_rank(half, Q()) == 1);
    CHECK_THROWS_AS(field_rank(half, GF(2)), std::domain_error);
    CHECK(field_rank(half, GF(5)) == 1);
}

TEST_CASE("ranks survive int64 overflow")
{
    // Hilbert-like matrix with large entries forces the big-integer path.
    std::vector<MatrixEntry> e;
    const std::int64_t big = 3037000493;  // prime near sqrt(2^63)
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::int64_t v = static_cast<std::int64_t>((i + 1) * (j + 2) % 7 + 1) * big + static_cast<std::int64_t>(i * j);
            e.push_back({i, j, v});
        }
    const auto M = SparseMatrix::from_entries(6, 6, e);
    std::vector<std::vector<long long>> dense(6, std::vector<long long>(6));
    for (const auto& x : M.entries()) dense[x.row][x.col] = x.num;
    CHECK(field_rank(M, Q()) == oracle::dense_rank(dense, 0));
    CHECK(field_rank(M, GF(101)) == oracle::dense_rank(dense, 101));
}

TEST_CASE("boundary matrices follow the alternating sign convention")
{
    const auto K = make({{"a", "b", "c"}});
    const auto cc = boundary_matrices(K, Q());
    CHECK(cc.dims == std::vector<std::size_t>{1, 3, 3, 1});
    REQUIRE(cc.boundaries.size() == 3);
    CHECK(cc.boundaries[0].nonzeros() == 3);
    // d_2 {a,b,c} = {b,c} - {a,c} + {a,b}; edges sorted ab, ac, bc
    const auto& d2 = cc.boundaries[2];
    REQUIRE(d2.nonzeros() == 3);
    std::vector<std::int64_t> col(3);
    for (const auto& x : d2.entries()) col[x.row] = x.num;
    CHECK(col == std::vector<std::int64_t>{1, -1, 1});
    for (std::size_t k = 1; k < cc.boundaries.size(); ++k)
        CHECK(multiply(cc.boundaries[k - 1], cc.boundaries[k], Q()).nonzeros() == 0);
}

TEST_CASE("reduced Betti numbers of standard complexes")
{
    CHECK(betti(tetra_boundary(), Q()) == V{0, 0, 0, 1});
    CHECK(betti_text(tetra_boundary(), Q()) == "(0, 0, 1)");
    CHECK(betti_text(gen("torus7"), Q()) == "(0, 2, 1)");
    CHECK(betti_text(gen("rp2_6"), GF(2)) == "(0, 1, 1)");
    CHECK(betti_text(gen("rp2_6"), Q()) == "(0, 0, 0)");
    CHECK(betti_text(gen("rp2_6"), GF(3)) == "(0, 0, 0)");
    CHECK(betti_text(SimplicialComplex(), Q()) == "(b_-1 = 1)");
    CHECK(betti(SimplicialComplex(), GF(2)) == V{1});
    CHECK(betti(make({{"a"}}), Q()) == V{0});
    CHECK(betti(make({{"a"}, {"b"}, {"c"}}), GF(5)) == V{0, 2});
    CHECK(betti(gen("disjoint:3"), Q()) == V{0, 2});
    CHECK(betti(gen("cycle:5"), Q()) == V{0, 0, 1});
}

TEST_CASE("spheres have one Betti number in the top degree")
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& F : FieldSpec::default_menu())
            CHECK(reduced_betti(gen("simplex_boundary:" + std::to_string(n)), F) == sphere_betti(n));
    for (int n = 0; n <= 4; ++n) CHECK(reduced_betti(gen("simplex:" + std::to_string(n)), Q()).all_zero());
}

TEST_CASE("Betti vector helpers")
{
    const BettiVector b({0, 0, 2, 1});
    CHECK(b[-1] == 0);
    CHECK(b[1] == 2);
    CHECK(b[7] == 0);
    CHECK(b.max_degree() == 2);
    CHECK(b.vanishes_from(3));
    CHECK(!b.vanishes_from(2));
    CHECK(b.alternating_sum() == -1);
    CHECK(b == BettiVector({0, 0, 2, 1, 0, 0}));
    CHECK(!(b == BettiVector({0, 0, 2})));
    CHECK(sphere_betti(2) == BettiVector({0, 0, 0, 1}));
}

TEST_CASE("relative Betti numbers")
{
    const auto edge = gen("simplex:1");
    CHECK(relative_betti(edge, boundary_complex(edge), Q()) == BettiVector({0, 0, 1}));
    const auto tri = gen("simplex:2");
    CHECK(relative_betti(tri, boundary_complex(tri), Q()) == BettiVector({0, 0, 0, 1}));

    // (K, empty) is unreduced homology: reduced with b_0 incremented.
    for (const auto* name : {"torus7", "rp2_6", "cycle:4", "disjoint:2"}) {
        const auto K = gen(name);
        const auto rel = relative_betti(K, SimplicialComplex::from_faces(K.label_table_ptr(), {}), GF(2));
        auto red = reduced_betti(K, GF(2)).values();
        red[1] += 1;
        CHECK(rel == BettiVector(red));
    }
    CHECK_THROWS_AS(relative_betti(tetra_boundary(), make({{"a", "z"}}), Q()), std::invalid_argument);
}

TEST_CASE("relative homology of the Moebius band rel boundary")
{
    // 5-vertex Moebius band: triangles {i, i+1, i+2} mod 5
    Labels facets;
    for (int i = 0; i < 5; ++i)
        facets.push_back({std::to_string(i), std::to_string((i + 1) % 5), std::to_string((i + 2) % 5)});
    const auto M = make(facets);
    const auto bd = boundary_complex(M);
    CHECK(betti(bd, Q()) == V{0, 0, 1});  // the boundary is a single circle
    CHECK(relative_betti(M, bd, Q()) == BettiVector({0, 0, 0, 0}));
    CHECK(relative_betti(M, bd, GF(2)) == BettiVector({0, 0, 1, 1}));
}

TEST_CASE("acyclicity")
{
    CHECK(is_acyclic(make({{"a"}}), Q()));
    CHECK(!is_acyclic(cycle4(), Q()));
    CHECK(is_acyclic(gen("rp2_6"), GF(3)));
    CHECK(!is_acyclic(gen("rp2_6"), GF(2)));
    CHECK(!is_acyclic(SimplicialComplex(), Q()));
    CHECK(is_acyclic(gen("simplex:4"), GF(5)));
}

TEST_CASE("library agrees with the dense oracle on random complexes")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        Labels facets;
        const int count = 3 + static_cast<int>(rng() % 10);
        for (int f = 0; f < count; ++f) {
            std::vector<std::string> facet;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) facet.push_back("v" + std::to_string(v));
            if (!facet.empty()) facets.push_back(facet);
        }
        const auto K = make(facets);
        for (unsigned p : {0u, 2u, 3u}) {
            const auto F = p == 0 ? Q() : GF(p);
            auto expected = oracle::reduced_betti(facets, p);
            CHECK(reduced_betti(K, F) == BettiVector(expected));
        }
    }
}

} // TEST_SUITE
