#pragma once

// Built-in triangulations, Sperner instances and seeded colorings.

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/chromatic.hpp"
#include "rainbow/complex.hpp"

namespace rainbow {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

/// Catalog names (parameter after ':' or in parentheses):
///   simplex:n            the n-simplex, 0 <= n <= 6
///   simplex_boundary:n   boundary of the (n+1)-simplex (an n-sphere), 0 <= n <= 6
///   torus7               7-vertex torus, 14 triangles
///   rp2_6                6-vertex projective plane, 10 triangles
///   disjoint:k           k disjoint edges, 1 <= k <= 64
///   cycle:k              k-gon, 3 <= k <= 4096
/// Vertex labels are decimal indices, zero-padded to a common width.
/// Throws std::invalid_argument on unknown names or parameters.
NamedComplex generate(const std::string& name);

/// Names accepted by generate(), with placeholder parameters.
std::vector<std::string> catalog_names();

struct SpernerInstance {
    SimplicialComplex complex;
    Coloring coloring;
    /// Face of the original simplex carrying each vertex, as original labels
    /// (indexed like complex.vertices()).
    std::vector<std::vector<std::string>> carrier;
};

/// sd^depth(Delta^n) colored by the least original vertex of each carrier.
/// Requires 1 <= n <= 4 and depth >= 1; throws std::invalid_argument when
/// the subdivision would exceed 500000 facets.
SpernerInstance sperner_instance(int n, int depth);

/// Each vertex, in label order, gets class (x mod classes) for successive
/// outputs x of std::mt19937_64 seeded with `seed`; the whole assignment is
/// redrawn until every class is used. Throws std::invalid_argument when
/// classes is 0 or exceeds the vertex count.
Coloring random_coloring(const SimplicialComplex& K, std::size_t classes, std::uint64_t seed);

/// Seeded random 2-partition {U, complement} of the vertices of K, both parts
/// nonempty when K has at least two vertices. Same PRNG recipe as random_coloring.
std::pair<std::vector<Vertex>, std::vector<Vertex>> random_bipartition(const SimplicialComplex& K,
                                                                        std::uint64_t seed);

} // namespace rainbow
