#pragma once

// Exact reduced and relative simplicial homology over GF(p) and Q.
//
// Reduced homology uses the augmented chain complex: the empty simplex spans
// degree -1 and the augmentation d_0 sends every vertex to it. Relative
// homology H_*(K, L) is *unreduced* and its degree -1 entry is always 0.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/complex.hpp"

namespace rainbow {

class FieldSpec {
public:
    enum class Kind { prime, rationals };

    /// GF(p). Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime_field(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

    /// Accepts "q", "Q", "2", "3", "5", "p:N" (N prime), "GF(N)".
    static FieldSpec parse(const std::string& text);

    /// The fields tried when a caller asks for "any field".
    static std::vector<FieldSpec> default_menu();

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint32_t characteristic() const { return p_; }

    /// "Q" or "GF(p)"; parse(name()) == *this.
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// One nonzero rational entry num/den (den > 0).
struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t num;
    std::int64_t den = 1;
};

/// Column-major sparse matrix with rational entries, interpreted over a field
/// by the operations that consume it.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    /// Sorts into canonical (col, row) order. Throws std::invalid_argument on
    /// out-of-range indices, duplicate positions, zero entries or den <= 0.
    static SparseMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<MatrixEntry>& entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }

    SparseMatrix transposed() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

/// Exact rank over F. Throws std::domain_error if a denominator vanishes in F.
std::size_t field_rank(const SparseMatrix& M, const FieldSpec& F);

/// A * B over F with entries reduced into F (GF(p) entries lie in [1, p)).
SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B, const FieldSpec& F);

struct ChainComplexMatrices {
    FieldSpec field = FieldSpec::rationals();
    /// dims[k + 1] = number of k-faces, k = -1..n (dims[0] == 1 for the augmentation).
    std::vector<std::size_t> dims;
    /// boundaries[k] = d_k : C_k -> C_{k-1}, k = 0..n; d_0 is the all-ones row.
    std::vector<SparseMatrix> boundaries;
};

/// Columns indexed by sorted k-faces, rows by sorted (k-1)-faces; deleting the
/// i-th vertex contributes (-1)^i.
ChainComplexMatrices boundary_matrices(const SimplicialComplex& K, const FieldSpec& F);

class BettiVector {
public:
    BettiVector() = default;
    /// values[i] is the Betti number in degree i - 1.
    explicit BettiVector(std::vector<std::size_t> values) : values_(std::move(values)) {}

    static constexpr int min_degree() { return -1; }
    int max_degree() const { return static_cast<int>(values_.size()) - 2; }

    /// Zero outside the stored range.
    std::size_t operator[](int degree) const;
    const std::vector<std::size_t>& values() const { return values_; }

    /// True iff every stored degree from `from` upward is zero.
    bool vanishes_from(int from) const;
    bool all_zero() const { return vanishes_from(min_degree()); }

    /// Sum over k >= 0 of (-1)^k b_k.
    std::int64_t alternating_sum() const;

    /// "(b_0, b_1, ...)", or "(b_-1 = 1)" style for the empty complex.
    std::string to_string() const;

    /// Equality ignoring trailing zeros.
    friend bool operator==(const BettiVector& a, const BettiVector& b);

private:
    std::vector<std::size_t> values_;
};

/// Reduced Betti vector of the n-sphere (single 1 in degree n), degrees -1..n.
BettiVector sphere_betti(int n);

BettiVector reduced_betti(const SimplicialComplex& K, const FieldSpec& F);

/// Betti numbers of H_*(K, L; F). Throws std::invalid_argument unless L is a subcomplex of K.
BettiVector relative_betti(const SimplicialComplex& K, const SimplicialComplex& L, const FieldSpec& F);

/// Nonempty with every reduced Betti number zero over F.
bool is_acyclic(const SimplicialComplex& K, const FieldSpec& F);

} // namespace rainbow
