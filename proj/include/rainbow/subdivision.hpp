#pragma once

// First barycentric subdivision, derived neighborhoods and supplement complexes.

#include <string>
#include <vector>

#include "rainbow/complex.hpp"

namespace rainbow {

/// K' together with the carrier (the face of K whose barycenter it is) of
/// each K' vertex. K' vertex labels encode their carrier, e.g. "{a,b}".
struct SubdivisionMap {
    SimplicialComplex original;
    SimplicialComplex subdivided;
    std::vector<Simplex> carrier;  ///< indexed by K' vertex; entries are faces of the original K
};

/// Label of the barycenter of `face`, e.g. "{a,b,c}".
std::string barycenter_label(const SimplicialComplex& K, const Simplex& face);

/// Order complex of the face poset of K. Throws std::invalid_argument on the empty complex.
SubdivisionMap barycentric_subdivision(const SimplicialComplex& K);

/// Applies barycentric_subdivision `times` times.
SimplicialComplex iterated_subdivision(const SimplicialComplex& K, int times);

/// Closed star in K' of the barycenters of faces of the induced subcomplex <U>.
/// Throws std::invalid_argument for vertices outside K.
SimplicialComplex derived_neighborhood(const std::vector<Vertex>& U, const SubdivisionMap& sd);
SimplicialComplex derived_neighborhood(const std::vector<Vertex>& U, const SimplicialComplex& K);

/// Full subcomplex of K' on barycenters of faces with a vertex outside U.
SimplicialComplex supplement_complex(const std::vector<Vertex>& U, const SubdivisionMap& sd);
SimplicialComplex supplement_complex(const std::vector<Vertex>& U, const SimplicialComplex& K);

} // namespace rainbow
