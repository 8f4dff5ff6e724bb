#include "rainbow/manifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rainbow/homology.hpp"

namespace rainbow {

std::string PseudomanifoldReport::summary() const
{
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    return std::string("pure=") + yn(is_pure) + " ridge-degrees<=2=" + yn(ridge_degrees_ok) +
           " closed=" + yn(is_closed) + " links-ok=" + yn(link_betti_ok) +
           " strongly-connected=" + yn(strongly_connected);
}

PseudomanifoldReport pseudomanifold_report(const SimplicialComplex& K)
{
    PseudomanifoldReport r;
    if (K.empty()) return r;
    const int n = K.dim();
    r.is_pure = is_pure(K);

    // Facet incidences of each (n-1)-face.
    std::vector<std::vector<std::size_t>> incident(n >= 1 ? K.num_faces(n - 1) : 1);
    const auto& facets = K.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        if (dimension(facets[f]) != n) continue;
        if (n == 0) {
            incident[0].push_back(f);
            continue;
        }
        for (std::size_t i = 0; i < facets[f].size(); ++i) {
            Simplex ridge = facets[f];
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
            incident[*K.face_index(ridge)].push_back(f);
        }
    }
    r.ridge_degrees_ok = std::all_of(incident.begin(), incident.end(),
                                     [](const auto& v) { return v.size() <= 2; });
    r.is_closed = std::all_of(incident.begin(), incident.end(), [](const auto& v) { return v.size() == 2; });

    const FieldSpec gf2 = FieldSpec::prime_field(2);
    const BettiVector sphere = sphere_betti(n - 1);
    const BettiVector ball({0});
    r.link_betti_ok = std::all_of(K.vertices().begin(), K.vertices().end(), [&](Vertex v) {
        const SimplicialComplex lk = link(K, v);
        const BettiVector b = reduced_betti(lk, gf2);
        if (b == sphere) return true;
        return !lk.empty() && lk.dim() == n - 1 && b == ball;
    });

    // Facet adjacency through shared ridges.
    if (r.is_pure) {
        std::vector<std::size_t> parent(facets.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        if (n >= 1)
            for (const auto& inc : incident)
                for (std::size_t i = 1; i < inc.size(); ++i) parent[find(inc[i])] = find(inc[0]);
        std::size_t roots = 0;
        for (std::size_t f = 0; f < facets.size(); ++f) roots += find(f) == f;
        r.strongly_connected = roots == 1;
    }
    return r;
}

} // namespace rainbow
