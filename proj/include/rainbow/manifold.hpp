#pragma once

#include <string>

#include "rainbow/complex.hpp"

namespace rainbow {

/// Necessary conditions for K to triangulate a manifold. Passing all of them
/// does not certify a manifold.
struct PseudomanifoldReport {
    bool is_pure = false;
    bool ridge_degrees_ok = false;  ///< every (n-1)-face lies in at most two facets
    bool is_closed = false;         ///< every (n-1)-face lies in exactly two facets
    bool link_betti_ok = false;     ///< vertex links have the GF(2) Betti numbers of S^{n-1} or B^{n-1}
    bool strongly_connected = false;

    std::string summary() const;
};

/// The empty complex reports every field false.
PseudomanifoldReport pseudomanifold_report(const SimplicialComplex& K);

} // namespace rainbow
