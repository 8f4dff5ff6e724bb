#pragma once

// Vertex colorings, chromatic subcomplexes K_S, rainbow simplices and the
// homological rainbow-simplex criteria.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/complex.hpp"
#include "rainbow/homology.hpp"
#include "rainbow/manifold.hpp"

namespace rainbow {

/// Color classes V_0..V_m given by vertex labels. Construction accepts any
/// lists; validate_coloring() says whether they partition a complex.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<std::vector<std::string>> classes);

    std::size_t num_classes() const { return classes_.size(); }
    const std::vector<std::vector<std::string>>& classes() const { return classes_; }
    const std::vector<std::string>& operator[](std::size_t i) const { return classes_[i]; }

    /// First class containing `label`.
    std::optional<std::size_t> class_of(const std::string& label) const;

    /// Class index per vertex of K's label table (-1 when uncolored).
    /// Throws std::invalid_argument if the coloring has errors for K.
    std::vector<int> color_map(const SimplicialComplex& K) const;

private:
    std::vector<std::vector<std::string>> classes_;
};

struct ColoringViolation {
    enum class Kind { uncolored, duplicated, unknown_vertex, empty_class };
    Kind kind;
    std::string vertex;       ///< empty for empty_class
    std::size_t class_index;  ///< offending class (uncolored: unused)
    std::string message;

    /// Empty classes are legal but reported; every other kind is an error.
    bool is_warning() const { return kind == Kind::empty_class; }
};

/// Empty iff the classes partition vertex_set(K) with no empty class.
std::vector<ColoringViolation> validate_coloring(const SimplicialComplex& K, const Coloring& C);
bool has_errors(const std::vector<ColoringViolation>& violations);

/// Induced subcomplex on the union of the classes in S.
/// Throws std::out_of_range for an index >= num_classes().
SimplicialComplex chromatic_subcomplex(const SimplicialComplex& K, const Coloring& C,
                                       const std::vector<std::size_t>& S);

/// Top-dimensional facets whose colors are a bijection onto 0..dim(K), in
/// facet order. Empty when num_classes() != dim(K) + 1.
std::vector<Simplex> rainbow_simplices(const SimplicialComplex& K, const Coloring& C);

/// Nonempty subsets of {0..m} in lexicographic order of their sorted index lists.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t num_classes);

enum class TheoremId { meshulam, surface, three, four, n, sphere };
std::string to_string(TheoremId id);
/// Throws std::invalid_argument for an unknown name.
TheoremId parse_theorem(const std::string& name);

enum class Status { pass, fail, proxy_pass, proxy_fail, assumed };
std::string to_string(Status s);
Status parse_status(const std::string& name);
inline bool holds(Status s) { return s == Status::pass || s == Status::proxy_pass || s == Status::assumed; }

/// One homology (or combinatorial) fact behind a verdict.
struct Evidence {
    std::vector<std::size_t> subset;  ///< color classes S; empty when the fact concerns K itself
    int degree = 0;
    std::string field;                ///< empty for field-independent facts
    long long value = 0;              ///< Betti number, or count for combinatorial facts
    std::string note;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct HypothesisVerdict {
    std::string id;
    std::string description;
    Status status = Status::fail;
    std::string field;  ///< set when the verdict is specific to one coefficient field
    std::vector<Evidence> evidence;

    friend bool operator==(const HypothesisVerdict&, const HypothesisVerdict&) = default;
};

struct CheckReport {
    TheoremId theorem = TheoremId::meshulam;
    std::vector<std::string> fields;
    std::vector<HypothesisVerdict> verdicts;
    /// Field-independent verdicts hold and, for some requested field, every
    /// verdict specific to that field holds.
    bool all_hold = false;
    std::vector<std::string> holding_fields;
    std::vector<std::vector<std::string>> rainbow_witnesses;
    /// !all_hold || !rainbow_witnesses.empty(); computed, never assumed.
    bool consistent = true;
    std::vector<std::string> warnings;
    std::optional<PseudomanifoldReport> manifold;

    friend bool operator==(const CheckReport&, const CheckReport&);
};

/// Meshulam condition: b~_{|S|-2}(K_S) = 0 over F for every nonempty S.
/// A class-count mismatch is reported as a failing verdict, not thrown.
CheckReport check_meshulam(const SimplicialComplex& K, const Coloring& C, const FieldSpec& F);

/// Hypotheses of the named criterion, one verdict per numbered condition
/// (per field where the condition is a homology statement). Throws
/// std::invalid_argument on arity mismatch (dimension or class count).
CheckReport check_theorem(const SimplicialComplex& K, const Coloring& C, TheoremId theorem,
                          const std::vector<FieldSpec>& fields);

struct DualityEntry {
    std::vector<std::size_t> subset;
    std::vector<std::size_t> complement;
    int degree = 0;             ///< |S| - 2
    std::size_t betti = 0;      ///< b~_{|S|-2}(K_S)
    int dual_degree = 0;        ///< n + 1 - |S|
    std::size_t dual_betti = 0; ///< b~_{n+1-|S|}(K_{complement})
    bool equal = false;
};

struct DualityAudit {
    std::string field;
    int n = 0;
    std::vector<DualityEntry> entries;
    bool pass = false;
};

/// Compares b~_{|S|-2}(K_S) with b~_{n+1-|S|}(K_{S^c}) for 1 <= |S| <= n.
/// Throws std::invalid_argument unless K is a homology n-sphere over F with
/// n + 1 classes partitioning its vertices.
DualityAudit alexander_duality_audit(const SimplicialComplex& K, const Coloring& C, const FieldSpec& F);

} // namespace rainbow
