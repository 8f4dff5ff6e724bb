#pragma once

#include <string>
#include <vector>

#include "rainbow/chromatic.hpp"
#include "rainbow/complex.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/homology.hpp"

namespace testing {

using Labels = std::vector<std::vector<std::string>>;

inline rainbow::SimplicialComplex make(const Labels& facets)
{
    return rainbow::SimplicialComplex::from_facets(facets);
}

inline rainbow::SimplicialComplex tetra_boundary() { return make({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}}); }
inline rainbow::SimplicialComplex cycle4() { return make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}); }

inline rainbow::FieldSpec Q() { return rainbow::FieldSpec::rationals(); }
inline rainbow::FieldSpec GF(unsigned p) { return rainbow::FieldSpec::prime_field(p); }

inline std::vector<std::size_t> betti(const rainbow::SimplicialComplex& K, const rainbow::FieldSpec& F)
{
    auto v = rainbow::reduced_betti(K, F).values();
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
}

/// Betti vector (degrees -1..) as printed by BettiVector::to_string.
inline std::string betti_text(const rainbow::SimplicialComplex& K, const rainbow::FieldSpec& F)
{
    return rainbow::reduced_betti(K, F).to_string();
}

inline rainbow::Vertex vtx(const rainbow::SimplicialComplex& K, const std::string& label)
{
    return *K.find_vertex(label);
}

inline std::vector<rainbow::Vertex> vtxs(const rainbow::SimplicialComplex& K, const std::vector<std::string>& labels)
{
    std::vector<rainbow::Vertex> out;
    for (const auto& l : labels) out.push_back(vtx(K, l));
    return out;
}

/// Facets as label lists, for comparisons and for feeding the oracle.
inline Labels facet_labels(const rainbow::SimplicialComplex& K)
{
    Labels out;
    for (const auto& f : K.facets()) out.push_back(K.labels_of(f));
    return out;
}

inline rainbow::SimplicialComplex gen(const std::string& name) { return rainbow::generate(name).complex; }

} // namespace testing
