#include "rainbow/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

#include "rainbow/subdivision.hpp"

namespace rainbow {
namespace {

std::string padded(std::size_t i, std::size_t count)
{
    const std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
    std::string s = std::to_string(i);
    return std::string(width - std::min(width, s.size()), '0') + s;
}

SimplicialComplex from_index_facets(const std::vector<std::vector<std::size_t>>& facets, std::size_t num_vertices)
{
    std::vector<std::vector<std::string>> labelled;
    for (const auto& f : facets) {
        std::vector<std::string> g;
        for (auto v : f) g.push_back(padded(v, num_vertices));
        labelled.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(labelled);
}

// Splits "name:k" or "name(k)"; param is -1 when absent.
std::pair<std::string, long> split_name(const std::string& text)
{
    std::string base = text;
    std::string arg;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        base = text.substr(0, colon);
        arg = text.substr(colon + 1);
    } else if (auto open = text.find('('); open != std::string::npos && text.back() == ')') {
        base = text.substr(0, open);
        arg = text.substr(open + 1, text.size() - open - 2);
    }
    if (arg.empty()) return {base, -1};
    if (arg.size() > 6 || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad parameter in '" + text + "'");
    return {base, std::stol(arg)};
}

long need(long param, long lo, long hi, const std::string& name)
{
    if (param < 0) throw std::invalid_argument(name + " needs a parameter, e.g. " + name + ":2");
    if (param < lo || param > hi)
        throw std::invalid_argument(name + ": parameter " + std::to_string(param) + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return param;
}

} // namespace

NamedComplex generate(const std::string& name)
{
    const auto [base, param] = split_name(name);
    std::vector<std::vector<std::size_t>> facets;
    std::size_t count = 0;

    if (base == "simplex") {
        const long n = need(param, 0, 6, base);
        count = static_cast<std::size_t>(n) + 1;
        facets.emplace_back();
        for (std::size_t i = 0; i < count; ++i) facets.back().push_back(i);
    } else if (base == "simplex_boundary") {
        const long n = need(param, 0, 6, base);
        count = static_cast<std::size_t>(n) + 2;
        for (std::size_t skip = 0; skip < count; ++skip) {
            facets.emplace_back();
            for (std::size_t i = 0; i < count; ++i)
                if (i != skip) facets.back().push_back(i);
        }
    } else if (base == "torus7") {
        if (param >= 0) throw std::invalid_argument("torus7 takes no parameter");
        count = 7;
        for (std::size_t i = 0; i < 7; ++i) {
            facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
            facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
    } else if (base == "rp2_6") {
        if (param >= 0) throw std::invalid_argument("rp2_6 takes no parameter");
        count = 6;
        facets = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                  {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    } else if (base == "disjoint") {
        const long k = need(param, 1, 64, base);
        count = 2 * static_cast<std::size_t>(k);
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) facets.push_back({2 * i, 2 * i + 1});
    } else if (base == "cycle") {
        const long k = need(param, 3, 4096, base);
        count = static_cast<std::size_t>(k);
        for (std::size_t i = 0; i < count; ++i) facets.push_back({i, (i + 1) % count});
    } else {
        throw std::invalid_argument("unknown complex '" + name + "'");
    }
    return {name, from_index_facets(facets, count)};
}

std::vector<std::string> catalog_names()
{
    return {"simplex:n", "simplex_boundary:n", "torus7", "rp2_6", "disjoint:k", "cycle:k"};
}

SpernerInstance sperner_instance(int n, int depth)
{
    if (n < 1 || n > 4) throw std::invalid_argument("sperner_instance: dimension must be in [1, 4]");
    if (depth < 1) throw std::invalid_argument("sperner_instance: depth must be >= 1");
    double facets = 1;
    for (int i = 0; i < depth; ++i)
        for (int j = 2; j <= n + 1; ++j) facets *= j;
    if (facets > 500000)
        throw std::invalid_argument("sperner_instance: sd^" + std::to_string(depth) + "(simplex " +
                                    std::to_string(n) + ") exceeds the 500000-facet size guard");

    const SimplicialComplex base = generate("simplex:" + std::to_string(n)).complex;
    SimplicialComplex current = base;
    // Original carrier (vertices of base) of every vertex of `current`.
    std::vector<Simplex> original(current.label_table().size());
    for (Vertex v : current.vertices()) original[v] = {v};

    for (int step = 0; step < depth; ++step) {
        const SubdivisionMap sd = barycentric_subdivision(current);
        std::vector<Simplex> next(sd.carrier.size());
        for (std::size_t w = 0; w < sd.carrier.size(); ++w) {
            Simplex u;
            for (Vertex v : sd.carrier[w]) u.insert(u.end(), original[v].begin(), original[v].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            next[w] = std::move(u);
        }
        current = sd.subdivided;
        original = std::move(next);
    }

    SpernerInstance inst;
    inst.complex = current;
    std::vector<std::vector<std::string>> classes(static_cast<std::size_t>(n) + 1);
    for (Vertex w : current.vertices()) {
        classes[original[w].front()].push_back(current.label(w));
        inst.carrier.push_back(base.labels_of(original[w]));
    }
    inst.coloring = Coloring(std::move(classes));
    return inst;
}

Coloring random_coloring(const SimplicialComplex& K, std::size_t classes, std::uint64_t seed)
{
    const auto& vs = K.vertices();
    if (classes == 0) throw std::invalid_argument("random_coloring: need at least one class");
    if (classes > vs.size())
        throw std::invalid_argument("random_coloring: " + std::to_string(classes) + " nonempty classes on " +
                                    std::to_string(vs.size()) + " vertices is impossible");
    std::mt19937_64 gen(seed);
    std::vector<std::size_t> assignment(vs.size());
    std::vector<std::size_t> used(classes);
    for (;;) {
        std::fill(used.begin(), used.end(), 0);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            assignment[i] = static_cast<std::size_t>(gen() % classes);
            ++used[assignment[i]];
        }
        if (std::all_of(used.begin(), used.end(), [](std::size_t u) { return u > 0; })) break;
    }
    std::vector<std::vector<std::string>> out(classes);
    for (std::size_t i = 0; i < vs.size(); ++i) out[assignment[i]].push_back(K.label(vs[i]));
    return Coloring(std::move(out));
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> random_bipartition(const SimplicialComplex& K,
                                                                        std::uint64_t seed)
{
    std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
    if (K.num_vertices() < 2) {
        parts.first = K.vertices();
        return parts;
    }
    const Coloring c = random_coloring(K, 2, seed);
    for (const auto& label : c[0]) parts.first.push_back(*K.find_vertex(label));
    for (const auto& label : c[1]) parts.second.push_back(*K.find_vertex(label));
    return parts;
}

} // namespace rainbow
