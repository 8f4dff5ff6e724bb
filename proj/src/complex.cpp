#include "rainbow/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rainbow {

LabelTable::LabelTable(std::vector<std::string> sorted_labels) : labels_(std::move(sorted_labels))
{
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("label table must be sorted and duplicate-free");
}

std::optional<Vertex> LabelTable::find(std::string_view label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

struct SimplicialComplex::FaceCache {
    std::once_flag once;
    std::vector<std::vector<Simplex>> by_dim; // by_dim[k + 1] = k-faces
};

namespace {

// Sorted, deduplicated, with every face contained in a larger one removed.
std::vector<Simplex> maximalize(std::vector<Simplex> faces)
{
    for (auto& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    // Only a strictly larger face can absorb another.
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return faces[a].size() > faces[b].size(); });

    std::vector<char> keep(faces.size(), 1);
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        const Simplex& f = faces[idx];
        for (std::size_t k : kept) {
            const Simplex& g = faces[k];
            if (g.size() <= f.size()) break;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                keep[idx] = 0;
                break;
            }
        }
        if (keep[idx]) kept.push_back(idx);
    }

    std::vector<Simplex> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (keep[i]) out.push_back(std::move(faces[i]));
    return out;
}

void for_each_subset(const Simplex& s, std::size_t size, Simplex& scratch, std::size_t start,
                     std::vector<Simplex>& out)
{
    if (scratch.size() == size) {
        out.push_back(scratch);
        return;
    }
    for (std::size_t i = start; i + (size - scratch.size()) <= s.size(); ++i) {
        scratch.push_back(s[i]);
        for_each_subset(s, size, scratch, i + 1, out);
        scratch.pop_back();
    }
}

} // namespace

SimplicialComplex::SimplicialComplex()
    : labels_(std::make_shared<LabelTable>(std::vector<std::string>{})),
      cache_(std::make_shared<FaceCache>())
{
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets)
{
    std::set<std::string> all;
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("facet list contains an empty facet");
        std::set<std::string> seen;
        for (const auto& label : f) {
            if (!seen.insert(label).second)
                throw std::invalid_argument("duplicate vertex '" + label + "' inside one facet");
            all.insert(label);
        }
    }
    auto table = std::make_shared<const LabelTable>(std::vector<std::string>(all.begin(), all.end()));
    std::vector<Simplex> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        s.reserve(f.size());
        for (const auto& label : f) s.push_back(*table->find(label));
        faces.push_back(std::move(s));
    }
    return from_faces(std::move(table), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::shared_ptr<const LabelTable> labels,
                                                std::vector<Simplex> faces)
{
    if (!labels) throw std::invalid_argument("null label table");
    std::erase_if(faces, [](const Simplex& s) { return s.empty(); });
    for (const auto& f : faces)
        for (Vertex v : f)
            if (v >= labels->size()) throw std::invalid_argument("vertex index outside label table");

    SimplicialComplex K;
    K.labels_ = std::move(labels);
    K.facets_ = maximalize(std::move(faces));
    for (const auto& f : K.facets_)
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("duplicate vertex inside one face");
    K.init();
    return K;
}

void SimplicialComplex::init()
{
    std::vector<char> seen(labels_->size(), 0);
    dim_ = -1;
    for (const auto& f : facets_) {
        dim_ = std::max(dim_, dimension(f));
        for (Vertex v : f) seen[v] = 1;
    }
    vertices_.clear();
    for (Vertex v = 0; v < seen.size(); ++v)
        if (seen[v]) vertices_.push_back(v);
    cache_ = std::make_shared<FaceCache>();
}

bool SimplicialComplex::has_vertex(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(label(v));
    return out;
}

const SimplicialComplex::FaceCache& SimplicialComplex::cache() const
{
    std::call_once(cache_->once, [this] {
        auto& by_dim = cache_->by_dim;
        by_dim.assign(static_cast<std::size_t>(dim_ + 2), {});
        by_dim[0].push_back(Simplex{});
        Simplex scratch;
        for (int k = 0; k <= dim_; ++k) {
            auto& level = by_dim[k + 1];
            for (const auto& f : facets_)
                if (dimension(f) >= k) for_each_subset(f, k + 1, scratch, 0, level);
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
        }
    });
    return *cache_;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const
{
    if (k < -1 || k > dim_)
        throw std::out_of_range("face dimension " + std::to_string(k) + " outside [-1, " +
                                std::to_string(dim_) + "]");
    return cache().by_dim[k + 1];
}

std::optional<std::size_t> SimplicialComplex::face_index(const Simplex& s) const
{
    const int k = dimension(s);
    if (k > dim_) return std::nullopt;
    const auto& level = faces(k);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.facets_.size() != b.facets_.size() || a.dim_ != b.dim_) return false;
    if (a.labels_ == b.labels_) return a.facets_ == b.facets_;
    auto as_labels = [](const SimplicialComplex& K) {
        std::vector<std::vector<std::string>> out;
        for (const auto& f : K.facets_) out.push_back(K.labels_of(f));
        std::sort(out.begin(), out.end());
        return out;
    };
    return as_labels(a) == as_labels(b);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<Vertex>& W)
{
    std::vector<char> in(K.label_table().size(), 0);
    for (Vertex v : W) {
        if (!K.has_vertex(v)) throw std::invalid_argument("induced_subcomplex: vertex not in complex");
        in[v] = 1;
    }
    std::vector<Simplex> kept;
    for (const auto& f : K.facets()) {
        Simplex g;
        for (Vertex v : f)
            if (in[v]) g.push_back(v);
        if (!g.empty()) kept.push_back(std::move(g));
    }
    return SimplicialComplex::from_faces(K.label_table_ptr(), std::move(kept));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<std::string>& W)
{
    std::vector<Vertex> ids;
    ids.reserve(W.size());
    for (const auto& label : W) {
        auto v = K.find_vertex(label);
        if (!v || !K.has_vertex(*v))
            throw std::invalid_argument("induced_subcomplex: unknown vertex '" + label + "'");
        ids.push_back(*v);
    }
    return induced_subcomplex(K, ids);
}

bool is_pure(const SimplicialComplex& K)
{
    return std::all_of(K.facets().begin(), K.facets().end(),
                       [&](const Simplex& f) { return dimension(f) == K.dim(); });
}

namespace {

// Number of top-dimensional facets containing each (n-1)-face, indexed like faces(n-1).
std::vector<int> ridge_degrees(const SimplicialComplex& K)
{
    const int n = K.dim();
    std::vector<int> degree(K.num_faces(n - 1), 0);
    for (const auto& f : K.facets()) {
        if (dimension(f) != n) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Simplex ridge = f;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
            ++degree[*K.face_index(ridge)];
        }
    }
    return degree;
}

} // namespace

SimplicialComplex boundary_complex(const SimplicialComplex& K)
{
    if (!is_pure(K)) throw std::invalid_argument("boundary_complex: complex is not pure");
    if (K.dim() <= 0) return SimplicialComplex::from_faces(K.label_table_ptr(), {});
    const auto degree = ridge_degrees(K);
    const auto& ridges = K.faces(K.dim() - 1);
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < ridges.size(); ++i)
        if (degree[i] == 1) out.push_back(ridges[i]);
    return SimplicialComplex::from_faces(K.label_table_ptr(), std::move(out));
}

std::int64_t euler_characteristic(const SimplicialComplex& K)
{
    std::int64_t chi = 0;
    for (int k = 0; k <= K.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(K.num_faces(k));
    return chi;
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& K)
{
    std::vector<Vertex> parent(K.label_table().size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& f : K.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            Vertex a = find(f[0]), b = find(f[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<Vertex, std::vector<Vertex>> groups;
    for (Vertex v : K.vertices()) groups[find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

SimplicialComplex link(const SimplicialComplex& K, Vertex v)
{
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        Simplex g;
        for (Vertex w : f)
            if (w != v) g.push_back(w);
        out.push_back(std::move(g));
    }
    return SimplicialComplex::from_faces(K.label_table_ptr(), std::move(out));
}

SimplicialComplex rebase(const SimplicialComplex& L, const SimplicialComplex& K)
{
    if (L.label_table_ptr() == K.label_table_ptr()) return L;
    std::vector<Simplex> faces;
    for (const auto& f : L.facets()) {
        Simplex g;
        for (Vertex v : f) {
            auto w = K.find_vertex(L.label(v));
            if (!w) throw std::invalid_argument("unknown vertex '" + L.label(v) + "'");
            g.push_back(*w);
        }
        faces.push_back(std::move(g));
    }
    return SimplicialComplex::from_faces(K.label_table_ptr(), std::move(faces));
}

bool is_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K)
{
    SimplicialComplex mapped;
    try {
        mapped = rebase(L, K);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return std::all_of(mapped.facets().begin(), mapped.facets().end(),
                       [&](const Simplex& f) { return K.contains(f); });
}

SimplicialComplex complex_union(const SimplicialComplex& A, const SimplicialComplex& B)
{
    if (A.label_table_ptr() != B.label_table_ptr())
        throw std::invalid_argument("complex_union: label tables differ");
    std::vector<Simplex> faces = A.facets();
    faces.insert(faces.end(), B.facets().begin(), B.facets().end());
    return SimplicialComplex::from_faces(A.label_table_ptr(), std::move(faces));
}

SimplicialComplex complex_intersection(const SimplicialComplex& A, const SimplicialComplex& B)
{
    if (A.label_table_ptr() != B.label_table_ptr())
        throw std::invalid_argument("complex_intersection: label tables differ");
    std::vector<Simplex> faces;
    for (const auto& a : A.facets())
        for (const auto& b : B.facets()) {
            Simplex c;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
            if (!c.empty()) faces.push_back(std::move(c));
        }
    return SimplicialComplex::from_faces(A.label_table_ptr(), std::move(faces));
}

std::string to_string(const SimplicialComplex& K, const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += K.label(s[i]);
    }
    return out + "}";
}

} // namespace rainbow
