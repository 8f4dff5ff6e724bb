#include "rainbow/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rainbow {

std::string barycenter_label(const SimplicialComplex& K, const Simplex& face)
{
    return to_string(K, face);
}

SubdivisionMap barycentric_subdivision(const SimplicialComplex& K)
{
    if (K.empty()) throw std::invalid_argument("barycentric_subdivision: empty complex");

    // Faces of K in dimension-major order; offset[k] is the first k-face.
    std::vector<std::size_t> offset;
    std::vector<Simplex> all_faces;
    for (int k = 0; k <= K.dim(); ++k) {
        offset.push_back(all_faces.size());
        const auto& fk = K.faces(k);
        all_faces.insert(all_faces.end(), fk.begin(), fk.end());
    }

    std::vector<std::string> labels;
    labels.reserve(all_faces.size());
    for (const auto& f : all_faces) labels.push_back(barycenter_label(K, f));
    std::vector<std::size_t> order(all_faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    std::vector<Vertex> vertex_of(all_faces.size());
    std::vector<std::string> sorted_labels;
    SubdivisionMap sd;
    sd.original = K;
    for (std::size_t i = 0; i < order.size(); ++i) {
        vertex_of[order[i]] = static_cast<Vertex>(i);
        sorted_labels.push_back(labels[order[i]]);
        sd.carrier.push_back(all_faces[order[i]]);
    }
    auto table = std::make_shared<const LabelTable>(std::move(sorted_labels));

    // Maximal chains: one per facet and ordering of its vertices.
    std::vector<Simplex> chains;
    Simplex perm, prefix;
    for (const auto& f : K.facets()) {
        perm = f;
        do {
            Simplex chain;
            prefix.clear();
            for (Vertex v : perm) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                const auto k = static_cast<std::size_t>(dimension(prefix));
                chain.push_back(vertex_of[offset[k] + *K.face_index(prefix)]);
            }
            chains.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.subdivided = SimplicialComplex::from_faces(std::move(table), std::move(chains));
    return sd;
}

SimplicialComplex iterated_subdivision(const SimplicialComplex& K, int times)
{
    if (times < 0) throw std::invalid_argument("iterated_subdivision: negative count");
    SimplicialComplex out = K;
    for (int i = 0; i < times; ++i) out = barycentric_subdivision(out).subdivided;
    return out;
}

namespace {

// in_u[v] for vertices of the original complex; validates membership.
std::vector<char> membership(const std::vector<Vertex>& U, const SimplicialComplex& K)
{
    std::vector<char> in_u(K.label_table().size(), 0);
    for (Vertex v : U) {
        if (!K.has_vertex(v)) throw std::invalid_argument("vertex set contains a vertex outside the complex");
        in_u[v] = 1;
    }
    return in_u;
}

bool carrier_inside(const Simplex& carrier, const std::vector<char>& in_u)
{
    return std::all_of(carrier.begin(), carrier.end(), [&](Vertex v) { return in_u[v] != 0; });
}

} // namespace

SimplicialComplex derived_neighborhood(const std::vector<Vertex>& U, const SubdivisionMap& sd)
{
    const auto in_u = membership(U, sd.original);
    std::vector<char> core(sd.carrier.size(), 0);
    for (std::size_t w = 0; w < sd.carrier.size(); ++w) core[w] = carrier_inside(sd.carrier[w], in_u);

    std::vector<Simplex> kept;
    for (const auto& f : sd.subdivided.facets())
        if (std::any_of(f.begin(), f.end(), [&](Vertex w) { return core[w] != 0; })) kept.push_back(f);
    return SimplicialComplex::from_faces(sd.subdivided.label_table_ptr(), std::move(kept));
}

SimplicialComplex derived_neighborhood(const std::vector<Vertex>& U, const SimplicialComplex& K)
{
    return derived_neighborhood(U, barycentric_subdivision(K));
}

SimplicialComplex supplement_complex(const std::vector<Vertex>& U, const SubdivisionMap& sd)
{
    const auto in_u = membership(U, sd.original);
    std::vector<Vertex> W;
    for (Vertex w : sd.subdivided.vertices())
        if (!carrier_inside(sd.carrier[w], in_u)) W.push_back(w);
    return induced_subcomplex(sd.subdivided, W);
}

SimplicialComplex supplement_complex(const std::vector<Vertex>& U, const SimplicialComplex& K)
{
    return supplement_complex(U, barycentric_subdivision(K));
}

} // namespace rainbow
