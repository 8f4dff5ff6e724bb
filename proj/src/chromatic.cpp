#include "rainbow/chromatic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rainbow {

// ---------------------------------------------------------------- Coloring

Coloring::Coloring(std::vector<std::vector<std::string>> classes) : classes_(std::move(classes)) {}

std::optional<std::size_t> Coloring::class_of(const std::string& label) const
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (std::find(classes_[i].begin(), classes_[i].end(), label) != classes_[i].end()) return i;
    return std::nullopt;
}

std::vector<int> Coloring::color_map(const SimplicialComplex& K) const
{
    const auto violations = validate_coloring(K, *this);
    if (has_errors(violations)) {
        for (const auto& v : violations)
            if (!v.is_warning()) throw std::invalid_argument("invalid coloring: " + v.message);
    }
    std::vector<int> color(K.label_table().size(), -1);
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (const auto& label : classes_[i]) color[*K.find_vertex(label)] = static_cast<int>(i);
    return color;
}

std::vector<ColoringViolation> validate_coloring(const SimplicialComplex& K, const Coloring& C)
{
    using Kind = ColoringViolation::Kind;
    std::vector<ColoringViolation> out;
    std::map<std::string, std::size_t> first_class;
    for (std::size_t i = 0; i < C.num_classes(); ++i) {
        if (C[i].empty())
            out.push_back({Kind::empty_class, "", i, "class " + std::to_string(i) + " is empty"});
        for (const auto& label : C[i]) {
            const auto v = K.find_vertex(label);
            if (!v || !K.has_vertex(*v)) {
                out.push_back({Kind::unknown_vertex, label, i,
                               "class " + std::to_string(i) + " names unknown vertex " + label});
                continue;
            }
            auto [it, inserted] = first_class.emplace(label, i);
            if (!inserted)
                out.push_back({Kind::duplicated, label, i,
                               "vertex " + label + " appears in class " + std::to_string(it->second) +
                                   " and again in class " + std::to_string(i)});
        }
    }
    for (Vertex v : K.vertices())
        if (!first_class.count(K.label(v)))
            out.push_back({Kind::uncolored, K.label(v), 0, "vertex " + K.label(v) + " is uncolored"});
    return out;
}

bool has_errors(const std::vector<ColoringViolation>& violations)
{
    return std::any_of(violations.begin(), violations.end(), [](const auto& v) { return !v.is_warning(); });
}

SimplicialComplex chromatic_subcomplex(const SimplicialComplex& K, const Coloring& C,
                                       const std::vector<std::size_t>& S)
{
    for (std::size_t i : S)
        if (i >= C.num_classes())
            throw std::out_of_range("color index " + std::to_string(i) + " out of range (" +
                                    std::to_string(C.num_classes()) + " classes)");
    const auto color = C.color_map(K);
    std::vector<char> wanted(C.num_classes(), 0);
    for (std::size_t i : S) wanted[i] = 1;
    std::vector<Vertex> W;
    for (Vertex v : K.vertices())
        if (color[v] >= 0 && wanted[static_cast<std::size_t>(color[v])]) W.push_back(v);
    return induced_subcomplex(K, W);
}

std::vector<Simplex> rainbow_simplices(const SimplicialComplex& K, const Coloring& C)
{
    std::vector<Simplex> out;
    if (K.empty() || C.num_classes() != static_cast<std::size_t>(K.dim()) + 1) return out;
    const auto color = C.color_map(K);
    std::vector<char> seen(C.num_classes());
    for (const auto& f : K.facets()) {
        if (dimension(f) != K.dim()) continue;
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (Vertex v : f) {
            const int c = color[v];
            if (c < 0 || seen[static_cast<std::size_t>(c)]) {
                ok = false;
                break;
            }
            seen[static_cast<std::size_t>(c)] = 1;
        }
        if (ok) out.push_back(f);
    }
    return out;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t num_classes)
{
    if (num_classes >= 8 * sizeof(unsigned long long)) throw std::invalid_argument("too many color classes");
    std::vector<std::vector<std::size_t>> out;
    for (unsigned long long mask = 1; mask < (1ull << num_classes); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < num_classes; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- names

std::string to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::meshulam: return "meshulam";
    case TheoremId::surface: return "surface";
    case TheoremId::three: return "three";
    case TheoremId::four: return "four";
    case TheoremId::n: return "n";
    case TheoremId::sphere: return "sphere";
    }
    return "?";
}

TheoremId parse_theorem(const std::string& name)
{
    for (auto id : {TheoremId::meshulam, TheoremId::surface, TheoremId::three, TheoremId::four, TheoremId::n,
                    TheoremId::sphere})
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown theorem '" + name + "'");
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::proxy_pass: return "proxy-pass";
    case Status::proxy_fail: return "proxy-fail";
    case Status::assumed: return "assumed";
    }
    return "?";
}

Status parse_status(const std::string& name)
{
    for (auto s : {Status::pass, Status::fail, Status::proxy_pass, Status::proxy_fail, Status::assumed})
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown status '" + name + "'");
}

bool operator==(const CheckReport& a, const CheckReport& b)
{
    auto same_manifold = [](const std::optional<PseudomanifoldReport>& x, const std::optional<PseudomanifoldReport>& y) {
        if (x.has_value() != y.has_value()) return false;
        if (!x) return true;
        return x->is_pure == y->is_pure && x->ridge_degrees_ok == y->ridge_degrees_ok &&
               x->is_closed == y->is_closed && x->link_betti_ok == y->link_betti_ok &&
               x->strongly_connected == y->strongly_connected;
    };
    return a.theorem == b.theorem && a.fields == b.fields && a.verdicts == b.verdicts && a.all_hold == b.all_hold &&
           a.holding_fields == b.holding_fields && a.rainbow_witnesses == b.rainbow_witnesses &&
           a.consistent == b.consistent && a.warnings == b.warnings && same_manifold(a.manifold, b.manifold);
}

// ---------------------------------------------------------------- checkers

namespace {

std::string subset_string(const std::vector<std::size_t>& S)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < S.size(); ++i) os << (i ? "," : "") << S[i];
    os << "}";
    return os.str();
}

// Shared state for one check: the complex, its coloring, and memoized
// Betti vectors of chromatic subcomplexes.
class Checker {
public:
    Checker(const SimplicialComplex& K, const Coloring& C, std::vector<FieldSpec> fields)
        : K_(K), C_(C), color_(C.color_map(K)), fields_(std::move(fields))
    {
        if (fields_.empty()) throw std::invalid_argument("at least one coefficient field is required");
    }

    const std::vector<FieldSpec>& fields() const { return fields_; }
    const SimplicialComplex& complex() const { return K_; }

    const SimplicialComplex& sub(const std::vector<std::size_t>& S)
    {
        auto it = subs_.find(S);
        if (it == subs_.end()) it = subs_.emplace(S, chromatic_subcomplex(K_, C_, S)).first;
        return it->second;
    }

    const BettiVector& betti(const std::vector<std::size_t>& S, const FieldSpec& F)
    {
        auto key = std::make_pair(S, F.name());
        auto it = betti_.find(key);
        if (it == betti_.end()) it = betti_.emplace(key, reduced_betti(sub(S), F)).first;
        return it->second;
    }

    const BettiVector& betti_of_complex(const FieldSpec& F)
    {
        auto it = whole_.find(F.name());
        if (it == whole_.end()) it = whole_.emplace(F.name(), reduced_betti(K_, F)).first;
        return it->second;
    }

    const SimplicialComplex& boundary()
    {
        if (!boundary_) boundary_ = is_pure(K_) ? boundary_complex(K_) : SimplicialComplex::from_faces(K_.label_table_ptr(), {});
        return *boundary_;
    }

    /// K_S ∩ ∂K, which is the subcomplex of ∂K induced on the colors in S.
    SimplicialComplex boundary_part(const std::vector<std::size_t>& S)
    {
        const auto& bd = boundary();
        std::vector<Vertex> W;
        for (Vertex v : bd.vertices())
            if (color_[v] >= 0 && std::find(S.begin(), S.end(), static_cast<std::size_t>(color_[v])) != S.end())
                W.push_back(v);
        return induced_subcomplex(bd, W);
    }

    std::size_t color_edges(std::size_t i, std::size_t j)
    {
        std::size_t count = 0;
        if (K_.dim() < 1) return 0;
        for (const auto& e : K_.faces(1)) {
            const int a = color_[e[0]], b = color_[e[1]];
            if ((a == static_cast<int>(i) && b == static_cast<int>(j)) ||
                (a == static_cast<int>(j) && b == static_cast<int>(i)))
                ++count;
        }
        return count;
    }

private:
    const SimplicialComplex& K_;
    const Coloring& C_;
    std::vector<int> color_;
    std::vector<FieldSpec> fields_;
    std::map<std::vector<std::size_t>, SimplicialComplex> subs_;
    std::map<std::pair<std::vector<std::size_t>, std::string>, BettiVector> betti_;
    std::map<std::string, BettiVector> whole_;
    std::optional<SimplicialComplex> boundary_;
};

Evidence first_nonzero(const BettiVector& b, int from, const std::vector<std::size_t>& S, const FieldSpec& F,
                       const std::string& what)
{
    for (int d = std::max(from, BettiVector::min_degree()); d <= b.max_degree(); ++d)
        if (b[d] != 0) return {S, d, F.name(), static_cast<long long>(b[d]), what};
    return {S, std::max(from, BettiVector::min_degree()), F.name(), 0, what + " vanishes from this degree"};
}

HypothesisVerdict class_count_verdict(const SimplicialComplex& K, const Coloring& C)
{
    HypothesisVerdict v;
    v.id = "class-count";
    v.description = "number of color classes equals dim(K) + 1";
    const bool ok = !K.empty() && C.num_classes() == static_cast<std::size_t>(K.dim()) + 1;
    v.status = ok ? Status::pass : Status::fail;
    v.evidence.push_back({{}, K.dim(), "", static_cast<long long>(C.num_classes()), "classes vs dim(K)"});
    return v;
}

HypothesisVerdict nonempty_classes_verdict(const Coloring& C)
{
    HypothesisVerdict v;
    v.id = "classes-nonempty";
    v.description = "every color class is nonempty";
    v.status = Status::pass;
    for (std::size_t i = 0; i < C.num_classes(); ++i)
        if (C[i].empty()) {
            v.status = Status::fail;
            v.evidence.push_back({{i}, 0, "", 0, "empty class"});
        }
    return v;
}

HypothesisVerdict manifold_verdict(const PseudomanifoldReport& r, std::size_t components, int n, bool closed)
{
    HypothesisVerdict v;
    v.id = "manifold";
    v.description = std::string("K triangulates a connected ") + (closed ? "closed " : "") + std::to_string(n) +
                    "-manifold (assumed; necessary conditions checked)";
    const bool ok = r.is_pure && r.ridge_degrees_ok && r.link_betti_ok && components == 1 && (!closed || r.is_closed);
    v.status = ok ? Status::assumed : Status::fail;
    v.evidence.push_back({{}, n, "", static_cast<long long>(components), "connected components; " + r.summary()});
    return v;
}

std::vector<HypothesisVerdict> meshulam_verdicts(Checker& ck, const FieldSpec& F, std::size_t num_classes)
{
    std::vector<HypothesisVerdict> out;
    for (const auto& S : nonempty_subsets(num_classes)) {
        const int degree = static_cast<int>(S.size()) - 2;
        const auto b = ck.betti(S, F)[degree];
        HypothesisVerdict v;
        v.id = "acyclic-chromatic S=" + subset_string(S);
        v.description = "b~_{|S|-2}(K_S) = 0";
        v.field = F.name();
        v.status = b == 0 ? Status::pass : Status::fail;
        v.evidence.push_back({S, degree, F.name(), static_cast<long long>(b), "K_S"});
        out.push_back(std::move(v));
    }
    return out;
}

void require_arity(const SimplicialComplex& K, const Coloring& C, TheoremId id, int dim)
{
    if (K.dim() != dim || C.num_classes() != static_cast<std::size_t>(dim) + 1) {
        std::ostringstream os;
        os << to_string(id) << ": expects a " << dim << "-dimensional complex with " << dim + 1
           << " color classes, got dimension " << K.dim() << " with " << C.num_classes() << " classes";
        throw std::invalid_argument(os.str());
    }
}

// Homology of K itself vanishing in [lo, hi], one verdict per field.
void add_whole_complex_verdicts(Checker& ck, std::vector<HypothesisVerdict>& out, int lo, int hi)
{
    for (const auto& F : ck.fields()) {
        HypothesisVerdict v;
        v.id = "homology-of-K";
        v.field = F.name();
        v.description = "b~_k(K) = 0 for " + std::to_string(lo) + " <= k <= " + std::to_string(hi);
        v.status = Status::pass;
        const auto& b = ck.betti_of_complex(F);
        for (int d = lo; d <= hi; ++d) {
            v.evidence.push_back({{}, d, F.name(), static_cast<long long>(b[d]), "K"});
            if (b[d] != 0) v.status = Status::fail;
        }
        if (lo > hi) v.evidence.push_back({{}, lo, F.name(), 0, "no degrees to check"});
        out.push_back(std::move(v));
    }
}

void add_edge_verdicts(Checker& ck, std::vector<HypothesisVerdict>& out, std::size_t num_classes)
{
    for (std::size_t i = 0; i < num_classes; ++i)
        for (std::size_t j = i + 1; j < num_classes; ++j) {
            HypothesisVerdict v;
            v.id = "color-edge " + subset_string({i, j});
            v.description = "some edge joins V_i and V_j";
            const auto count = ck.color_edges(i, j);
            v.status = count > 0 ? Status::pass : Status::fail;
            v.evidence.push_back({{i, j}, 1, "", static_cast<long long>(count), "edges"});
            out.push_back(std::move(v));
        }
}

// Proxy: b~_k(K_S) = 0 for all k >= from, over every requested field.
HypothesisVerdict vanishing_proxy(Checker& ck, const std::vector<std::size_t>& S, int from, std::string id,
                                  std::string description)
{
    HypothesisVerdict v;
    v.id = std::move(id);
    v.description = std::move(description);
    v.status = Status::proxy_pass;
    for (const auto& F : ck.fields()) {
        const auto& b = ck.betti(S, F);
        v.evidence.push_back(first_nonzero(b, from, S, F, "K_S"));
        if (!b.vanishes_from(from)) v.status = Status::proxy_fail;
    }
    return v;
}

// Proxy for "K_{i} is contractible (and meets the boundary in the empty set or
// a contractible set)": acyclicity over every requested field.
HypothesisVerdict contractible_proxy(Checker& ck, std::size_t i, bool with_boundary, std::string id,
                                     std::string description)
{
    HypothesisVerdict v;
    v.id = std::move(id);
    v.description = std::move(description);
    v.status = Status::proxy_pass;
    const std::vector<std::size_t> S{i};
    const SimplicialComplex bd = with_boundary ? ck.boundary_part(S) : SimplicialComplex();
    for (const auto& F : ck.fields()) {
        const auto& b = ck.betti(S, F);
        v.evidence.push_back(first_nonzero(b, -1, S, F, "K_S"));
        if (!is_acyclic(ck.sub(S), F)) v.status = Status::proxy_fail;
        if (with_boundary && !bd.empty()) {
            const auto bb = reduced_betti(bd, F);
            v.evidence.push_back(first_nonzero(bb, -1, S, F, "K_S meet boundary"));
            if (!bb.all_zero()) v.status = Status::proxy_fail;
        }
    }
    return v;
}

void finalize(CheckReport& report, const SimplicialComplex& K, const Coloring& C)
{
    bool agnostic_ok = true;
    for (const auto& v : report.verdicts)
        if (v.field.empty() && !holds(v.status)) agnostic_ok = false;
    report.holding_fields.clear();
    for (const auto& f : report.fields) {
        const bool ok = std::all_of(report.verdicts.begin(), report.verdicts.end(), [&](const HypothesisVerdict& v) {
            return v.field != f || holds(v.status);
        });
        if (ok) report.holding_fields.push_back(f);
    }
    report.all_hold = agnostic_ok && !report.holding_fields.empty();
    if (!agnostic_ok) report.holding_fields.clear();

    report.rainbow_witnesses.clear();
    for (const auto& s : rainbow_simplices(K, C)) report.rainbow_witnesses.push_back(K.labels_of(s));
    if (K.empty() || C.num_classes() != static_cast<std::size_t>(K.dim()) + 1)
        report.warnings.push_back("class count " + std::to_string(C.num_classes()) + " != dim(K) + 1 = " +
                                  std::to_string(K.dim() + 1) + "; rainbow enumeration skipped");
    report.consistent = !report.all_hold || !report.rainbow_witnesses.empty();
}

std::vector<std::string> field_names(const std::vector<FieldSpec>& fields)
{
    std::vector<std::string> out;
    for (const auto& F : fields) out.push_back(F.name());
    return out;
}

} // namespace

CheckReport check_meshulam(const SimplicialComplex& K, const Coloring& C, const FieldSpec& F)
{
    return check_theorem(K, C, TheoremId::meshulam, {F});
}

CheckReport check_theorem(const SimplicialComplex& K, const Coloring& C, TheoremId theorem,
                          const std::vector<FieldSpec>& fields)
{
    Checker ck(K, C, fields);
    CheckReport report;
    report.theorem = theorem;
    report.fields = field_names(fields);
    auto& out = report.verdicts;
    const std::size_t m = C.num_classes();

    for (const auto& v : validate_coloring(K, C))
        if (v.is_warning()) report.warnings.push_back(v.message);

    if (theorem == TheoremId::meshulam) {
        out.push_back(class_count_verdict(K, C));
        for (const auto& F : fields) {
            auto vs = meshulam_verdicts(ck, F, m);
            out.insert(out.end(), vs.begin(), vs.end());
        }
        finalize(report, K, C);
        return report;
    }

    const int n = K.dim();
    switch (theorem) {
    case TheoremId::surface: require_arity(K, C, theorem, 2); break;
    case TheoremId::three: require_arity(K, C, theorem, 3); break;
    case TheoremId::four: require_arity(K, C, theorem, 4); break;
    case TheoremId::n:
    case TheoremId::sphere:
        if (n < 1) throw std::invalid_argument(to_string(theorem) + ": needs a complex of dimension >= 1");
        require_arity(K, C, theorem, n);
        break;
    default: break;
    }

    const bool closed = theorem == TheoremId::four || theorem == TheoremId::n || theorem == TheoremId::sphere;
    report.manifold = pseudomanifold_report(K);
    out.push_back(manifold_verdict(*report.manifold, connected_components(K).size(), n, closed));
    out.push_back(nonempty_classes_verdict(C));
    if (!is_pure(K)) report.warnings.push_back("complex is not pure; boundary taken to be empty");

    switch (theorem) {
    case TheoremId::surface:
        for (std::size_t i = 0; i < m; ++i) {
            const std::vector<std::size_t> S{i};
            const SimplicialComplex part = ck.boundary_part(S);
            for (const auto& F : fields) {
                const auto b = relative_betti(ck.sub(S), part, F);
                HypothesisVerdict v;
                v.id = "relative-H1 " + subset_string(S);
                v.description = "H_1(K_{i}, K_{i} meet boundary) = 0";
                v.field = F.name();
                v.status = b[1] == 0 ? Status::pass : Status::fail;
                v.evidence.push_back({S, 1, F.name(), static_cast<long long>(b[1]), "relative to boundary part"});
                out.push_back(std::move(v));
            }
        }
        break;

    case TheoremId::three:
        add_whole_complex_verdicts(ck, out, 2, 2);
        for (std::size_t i = 0; i < m; ++i)
            out.push_back(contractible_proxy(ck, i, true, "contractible " + subset_string({i}),
                                             "K_{i} contractible, K_{i} meet boundary empty or contractible "
                                             "(proxy: acyclic over every field)"));
        add_edge_verdicts(ck, out, m);
        break;

    case TheoremId::four:
        add_whole_complex_verdicts(ck, out, 2, 3);
        add_edge_verdicts(ck, out, m);
        for (std::size_t i = 0; i < m; ++i)
            out.push_back(contractible_proxy(ck, i, false, "ball-neighborhood " + subset_string({i}),
                                             "K_{i} contractible with a 4-ball regular neighborhood "
                                             "(proxy: acyclic over every field)"));
        for (const auto& S : nonempty_subsets(m))
            if (S.size() == 2)
                out.push_back(vanishing_proxy(ck, S, 2, "handlebody " + subset_string(S),
                                              "K_S has a handlebody regular neighborhood "
                                              "(proxy: b~_k(K_S) = 0 for k >= 2)"));
        break;

    case TheoremId::n:
        add_whole_complex_verdicts(ck, out, 2, n - 1);
        for (const auto& S : nonempty_subsets(m))
            if (static_cast<int>(S.size()) <= n - 1)
                out.push_back(vanishing_proxy(ck, S, static_cast<int>(S.size()), "spine " + subset_string(S),
                                              "neighborhood of K_S retracts to a (|S|-1)-complex "
                                              "(proxy: b~_k(K_S) = 0 for k >= |S|)"));
        break;

    case TheoremId::sphere: {
        HypothesisVerdict v;
        v.id = "homology-sphere";
        v.description = "K triangulates the n-sphere (proxy: reduced Betti numbers of S^n over every field)";
        v.status = Status::proxy_pass;
        const auto expected = sphere_betti(n);
        for (const auto& F : fields) {
            const auto& b = ck.betti_of_complex(F);
            v.evidence.push_back({{}, n, F.name(), static_cast<long long>(b[n]), "K = " + b.to_string()});
            if (!(b == expected)) v.status = Status::proxy_fail;
        }
        out.push_back(std::move(v));
        for (const auto& F : fields)
            for (const auto& S : nonempty_subsets(m)) {
                const int k = static_cast<int>(S.size());
                if (k > n - 1) continue;
                const auto b = ck.betti(S, F)[k];
                HypothesisVerdict w;
                w.id = "sphere-chromatic S=" + subset_string(S);
                w.description = "b~_{|S|}(K_S) = 0";
                w.field = F.name();
                w.status = b == 0 ? Status::pass : Status::fail;
                w.evidence.push_back({S, k, F.name(), static_cast<long long>(b), "K_S"});
                out.push_back(std::move(w));
            }
        break;
    }
    default: break;
    }

    finalize(report, K, C);
    return report;
}

DualityAudit alexander_duality_audit(const SimplicialComplex& K, const Coloring& C, const FieldSpec& F)
{
    const int n = K.dim();
    if (n < 0) throw std::invalid_argument("duality audit: empty complex");
    if (C.num_classes() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("duality audit: need " + std::to_string(n + 1) + " color classes, got " +
                                    std::to_string(C.num_classes()));
    const auto b = reduced_betti(K, F);
    if (!(b == sphere_betti(n)))
        throw std::invalid_argument("duality audit: K is not a homology " + std::to_string(n) + "-sphere over " +
                                    F.name() + " (b~ = " + b.to_string() + ")");

    Checker ck(K, C, {F});
    DualityAudit audit;
    audit.field = F.name();
    audit.n = n;
    audit.pass = true;
    for (const auto& S : nonempty_subsets(C.num_classes())) {
        if (static_cast<int>(S.size()) > n) continue;
        DualityEntry e;
        e.subset = S;
        for (std::size_t i = 0; i < C.num_classes(); ++i)
            if (!std::binary_search(S.begin(), S.end(), i)) e.complement.push_back(i);
        e.degree = static_cast<int>(S.size()) - 2;
        e.dual_degree = n + 1 - static_cast<int>(S.size());
        e.betti = ck.betti(S, F)[e.degree];
        e.dual_betti = ck.betti(e.complement, F)[e.dual_degree];
        e.equal = e.betti == e.dual_betti;
        audit.pass = audit.pass && e.equal;
        audit.entries.push_back(std::move(e));
    }
    return audit;
}

} // namespace rainbow
