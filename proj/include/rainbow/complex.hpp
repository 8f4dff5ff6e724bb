#pragma once

// Finite abstract simplicial complexes stored by their facets.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

/// Index of a vertex in a complex's label table. Index order is label order.
using Vertex = std::uint32_t;

/// Strictly increasing list of vertex indices.
using Simplex = std::vector<Vertex>;

inline int dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Sorted, duplicate-free table of vertex labels. Complexes derived from one
/// another (induced subcomplexes, boundaries, links) share a single table so
/// their vertex indices are directly comparable.
class LabelTable {
public:
    explicit LabelTable(std::vector<std::string> sorted_labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& operator[](Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;

private:
    std::vector<std::string> labels_;
};

class SimplicialComplex {
public:
    /// The empty complex (no vertices, no faces).
    SimplicialComplex();

    /// Builds a complex from facet lists given as labels. Faces contained in
    /// other input faces are absorbed. Throws std::invalid_argument on an empty
    /// facet list or a repeated vertex inside one facet. An empty outer list
    /// yields the empty complex.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    /// Builds a complex over an existing label table; `faces` need not be an
    /// antichain and each face may be unsorted.
    static SimplicialComplex from_faces(std::shared_ptr<const LabelTable> labels,
                                        std::vector<Simplex> faces);

    bool empty() const { return facets_.empty(); }
    int dim() const { return dim_; }

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }

    const LabelTable& label_table() const { return *labels_; }
    const std::shared_ptr<const LabelTable>& label_table_ptr() const { return labels_; }
    const std::string& label(Vertex v) const { return (*labels_)[v]; }
    std::vector<std::string> labels_of(const Simplex& s) const;
    /// Looks a label up in the shared table; the vertex need not belong to this complex.
    std::optional<Vertex> find_vertex(std::string_view label) const { return labels_->find(label); }

    bool has_vertex(Vertex v) const;

    /// All k-faces in lexicographic order; k == -1 yields the single empty simplex.
    /// Throws std::out_of_range unless -1 <= k <= dim(). Memoized and thread-safe.
    const std::vector<Simplex>& faces(int k) const;
    std::size_t num_faces(int k) const { return faces(k).size(); }

    /// Position of `s` in faces(dimension(s)), if it is a face.
    std::optional<std::size_t> face_index(const Simplex& s) const;
    bool contains(const Simplex& s) const { return face_index(s).has_value(); }

    /// Same faces, compared through labels (tables may differ).
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    struct FaceCache;

    std::shared_ptr<const LabelTable> labels_;
    std::vector<Simplex> facets_;
    std::vector<Vertex> vertices_;
    int dim_ = -1;
    std::shared_ptr<FaceCache> cache_;

    void init();
    const FaceCache& cache() const;
};

/// Free-function spelling of SimplicialComplex::faces.
inline const std::vector<Simplex>& faces(const SimplicialComplex& K, int k) { return K.faces(k); }

/// Full subcomplex on `W`. Throws std::invalid_argument for vertices outside K.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<Vertex>& W);
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<std::string>& W);

/// Complex generated by the (n-1)-faces lying in exactly one facet.
/// Throws std::invalid_argument if K is not pure.
SimplicialComplex boundary_complex(const SimplicialComplex& K);

std::int64_t euler_characteristic(const SimplicialComplex& K);

/// Vertex classes under the edge relation, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& K);

/// Closed-star complement: { s : v not in s, s + v in K }.
SimplicialComplex link(const SimplicialComplex& K, Vertex v);

bool is_pure(const SimplicialComplex& K);

/// True iff every facet of L (matched by label) is a face of K.
bool is_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K);

/// Re-expresses L over K's label table. Throws std::invalid_argument if L
/// uses a label K does not know.
SimplicialComplex rebase(const SimplicialComplex& L, const SimplicialComplex& K);

/// Complex generated by the union of the facets of A and B (same label table).
SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B);

/// Faces common to A and B (same label table).
SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B);

std::string to_string(const SimplicialComplex& K, const Simplex& s);

} // namespace rainbow
