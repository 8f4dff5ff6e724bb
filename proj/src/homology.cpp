#include "rainbow/homology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "reduction.hpp"

namespace rainbow {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p)
{
    if (p >= (1u << 31) || !rainbow::is_prime(p))
        throw std::invalid_argument("GF(" + std::to_string(p) + "): characteristic must be a prime below 2^31");
    return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "q" || t == "rationals") return rationals();
    std::string digits = t;
    if (t.rfind("p:", 0) == 0) {
        digits = t.substr(2);
    } else if (t.rfind("gf(", 0) == 0 && t.back() == ')') {
        digits = t.substr(3, t.size() - 4);
    }
    if (digits.empty() || digits.size() > 10 || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw std::invalid_argument("unrecognised field '" + text + "' (expected q, 2, 3, 5 or p:N)");
    const std::uint64_t p = std::stoull(digits);
    if (p >= (1ull << 31)) throw std::invalid_argument("field characteristic too large: " + digits);
    return prime_field(static_cast<std::uint32_t>(p));
}

std::vector<FieldSpec> FieldSpec::default_menu()
{
    return {prime_field(2), prime_field(3), prime_field(5), rationals()};
}

std::string FieldSpec::name() const
{
    return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
{
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols) throw std::invalid_argument("matrix entry out of range");
        if (e.num == 0) throw std::invalid_argument("explicit zero entry");
        if (e.den <= 0) throw std::invalid_argument("denominator must be positive");
    }
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col)
            throw std::invalid_argument("duplicate matrix position");
    SparseMatrix M(rows, cols);
    M.entries_ = std::move(entries);
    return M;
}

SparseMatrix SparseMatrix::transposed() const
{
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.num, e.den});
    return from_entries(cols_, rows_, std::move(t));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        const auto &x = a.entries_[i], &y = b.entries_[i];
        if (x.row != y.row || x.col != y.col) return false;
        // compare as rationals
        if (boost::multiprecision::cpp_int(x.num) * y.den != boost::multiprecision::cpp_int(y.num) * x.den)
            return false;
    }
    return true;
}

namespace {

std::int64_t mod_p(std::int64_t v, std::uint32_t p)
{
    const std::int64_t sp = p;
    return ((v % sp) + sp) % sp;
}

std::int64_t inverse_mod_p(std::int64_t a, std::uint32_t p)
{
    std::int64_t result = 1, base = mod_p(a, p);
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

// Integral columns with the same rank as M over F: entries mapped into
// [0, p) for GF(p), columns scaled by the lcm of their denominators for Q.
std::vector<detail::IntColumn> integral_columns(const SparseMatrix& M, const FieldSpec& F)
{
    std::vector<detail::IntColumn> cols(M.cols());
    const auto& entries = M.entries();
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].col == entries[i].col) ++j;
        auto& col = cols[entries[i].col];
        if (F.is_prime()) {
            const auto p = F.characteristic();
            for (std::size_t e = i; e < j; ++e) {
                if (mod_p(entries[e].den, p) == 0)
                    throw std::domain_error("entry " + std::to_string(entries[e].num) + "/" +
                                            std::to_string(entries[e].den) + " is not defined in " + F.name());
                const std::int64_t v = mod_p(entries[e].num, p) * inverse_mod_p(entries[e].den, p) % p;
                if (v) {
                    col.rows.push_back(static_cast<std::uint32_t>(entries[e].row));
                    col.vals.push_back(v);
                }
            }
        } else {
            std::int64_t l = 1;
            for (std::size_t e = i; e < j; ++e) {
                const std::int64_t d = entries[e].den;
                if (__builtin_mul_overflow(l / std::gcd(l, d), d, &l))
                    throw std::domain_error("denominators too large for exact scaling");
            }
            for (std::size_t e = i; e < j; ++e) {
                std::int64_t v;
                if (__builtin_mul_overflow(entries[e].num, l / entries[e].den, &v))
                    throw std::domain_error("entry too large for exact scaling");
                col.rows.push_back(static_cast<std::uint32_t>(entries[e].row));
                col.vals.push_back(v);
            }
        }
        i = j;
    }
    return cols;
}

} // namespace

std::size_t field_rank(const SparseMatrix& M, const FieldSpec& F)
{
    return detail::reduce(integral_columns(M, F), M.rows(), F).rank;
}

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B, const FieldSpec& F)
{
    if (A.cols() != B.rows()) throw std::invalid_argument("multiply: shape mismatch");
    using boost::multiprecision::cpp_rational;

    // A by columns: col -> list of (row, value)
    std::vector<std::vector<std::pair<std::size_t, cpp_rational>>> a_cols(A.cols());
    for (const auto& e : A.entries()) a_cols[e.col].emplace_back(e.row, cpp_rational(e.num, e.den));

    std::vector<MatrixEntry> out;
    const auto& be = B.entries();
    for (std::size_t i = 0; i < be.size();) {
        std::size_t j = i;
        std::map<std::size_t, cpp_rational> acc;
        for (; j < be.size() && be[j].col == be[i].col; ++j) {
            const cpp_rational b(be[j].num, be[j].den);
            for (const auto& [row, a] : a_cols[be[j].row]) acc[row] += a * b;
        }
        for (auto& [row, v] : acc) {
            if (F.is_prime()) {
                const auto p = F.characteristic();
                const auto num = numerator(v), den = denominator(v);
                const std::int64_t n = static_cast<std::int64_t>(num % p);
                const std::int64_t d = static_cast<std::int64_t>(den % p);
                if (d == 0) throw std::domain_error("product entry not defined in " + F.name());
                const std::int64_t r = mod_p(n, p) * inverse_mod_p(d, p) % p;
                if (r) out.push_back({row, be[i].col, r, 1});
            } else if (v != 0) {
                out.push_back({row, be[i].col, static_cast<std::int64_t>(numerator(v)),
                               static_cast<std::int64_t>(denominator(v))});
            }
        }
        i = j;
    }
    return SparseMatrix::from_entries(A.rows(), B.cols(), std::move(out));
}

// ---------------------------------------------------------------- chain complexes

namespace {

// Columns of d_k for k >= 1 over the faces of K; rows index faces(k - 1).
std::vector<detail::IntColumn> boundary_columns(const SimplicialComplex& K, int k)
{
    const auto& cols = K.faces(k);
    std::vector<detail::IntColumn> out(cols.size());
    Simplex facet;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& s = cols[j];
        auto& col = out[j];
        col.rows.reserve(s.size());
        col.vals.reserve(s.size());
        // Deleting a later vertex gives a lexicographically smaller face, so
        // walking i downward yields increasing row indices.
        for (std::size_t i = s.size(); i-- > 0;) {
            facet = s;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
            col.rows.push_back(static_cast<std::uint32_t>(*K.face_index(facet)));
            col.vals.push_back(i % 2 == 0 ? 1 : -1);
        }
    }
    return out;
}

BettiVector betti_from_ranks(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks)
{
    // dims[k + 1], ranks[k + 1] refer to degree k; ranks of d_{-1} and d_{n+1} are zero.
    std::vector<std::size_t> b(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const std::size_t out_rank = ranks[i];
        const std::size_t in_rank = i + 1 < ranks.size() ? ranks[i + 1] : 0;
        b[i] = dims[i] - out_rank - in_rank;
    }
    return BettiVector(std::move(b));
}

} // namespace

ChainComplexMatrices boundary_matrices(const SimplicialComplex& K, const FieldSpec& F)
{
    ChainComplexMatrices C;
    C.field = F;
    C.dims.push_back(1);
    for (int k = 0; k <= K.dim(); ++k) C.dims.push_back(K.num_faces(k));
    for (int k = 0; k <= K.dim(); ++k) {
        std::vector<MatrixEntry> entries;
        if (k == 0) {
            for (std::size_t j = 0; j < K.num_faces(0); ++j) entries.push_back({0, j, 1, 1});
        } else {
            const auto cols = boundary_columns(K, k);
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < cols[j].rows.size(); ++i)
                    entries.push_back({cols[j].rows[i], j, cols[j].vals[i], 1});
        }
        C.boundaries.push_back(
            SparseMatrix::from_entries(C.dims[static_cast<std::size_t>(k)], C.dims[static_cast<std::size_t>(k) + 1],
                                       std::move(entries)));
    }
    return C;
}

BettiVector reduced_betti(const SimplicialComplex& K, const FieldSpec& F)
{
    if (K.empty()) return BettiVector({1});
    const int n = K.dim();
    std::vector<std::size_t> dims{1};
    for (int k = 0; k <= n; ++k) dims.push_back(K.num_faces(k));

    // boundaries[k] for k = 1..n, over C_k with C_0 at index 0.
    std::vector<std::vector<detail::IntColumn>> bd(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) bd[static_cast<std::size_t>(k)] = boundary_columns(K, k);
    std::vector<std::size_t> face_dims(dims.begin() + 1, dims.end());
    const auto r = detail::chain_ranks(bd, face_dims, F);

    // ranks indexed by degree + 1: d_{-1} = 0, d_0 = augmentation (rank 1).
    std::vector<std::size_t> ranks{0, 1};
    for (int k = 1; k <= n; ++k) ranks.push_back(r[static_cast<std::size_t>(k)]);
    return betti_from_ranks(dims, ranks);
}

BettiVector relative_betti(const SimplicialComplex& K, const SimplicialComplex& L, const FieldSpec& F)
{
    if (!is_subcomplex(L, K)) throw std::invalid_argument("relative_betti: L is not a subcomplex of K");
    const SimplicialComplex sub = rebase(L, K);
    const int n = K.dim();
    if (n < 0) return BettiVector({0});

    // Relative basis in degree k: faces of K outside L, in K's order.
    std::vector<std::vector<std::int64_t>> rel_index(static_cast<std::size_t>(n) + 1);
    std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        const auto& fk = K.faces(k);
        auto& idx = rel_index[static_cast<std::size_t>(k)];
        idx.assign(fk.size(), -1);
        for (std::size_t i = 0; i < fk.size(); ++i)
            if (!sub.contains(fk[i])) idx[i] = static_cast<std::int64_t>(dims[static_cast<std::size_t>(k)]++);
    }

    std::vector<std::vector<detail::IntColumn>> bd(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        const auto full = boundary_columns(K, k);
        const auto& col_idx = rel_index[static_cast<std::size_t>(k)];
        const auto& row_idx = rel_index[static_cast<std::size_t>(k) - 1];
        auto& cols = bd[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < full.size(); ++j) {
            if (col_idx[j] < 0) continue;
            detail::IntColumn c;
            for (std::size_t i = 0; i < full[j].rows.size(); ++i) {
                const auto r = row_idx[full[j].rows[i]];
                if (r < 0) continue;
                c.rows.push_back(static_cast<std::uint32_t>(r));
                c.vals.push_back(full[j].vals[i]);
            }
            cols.push_back(std::move(c));
        }
    }
    const auto r = detail::chain_ranks(bd, dims, F);

    std::vector<std::size_t> all_dims{0};
    all_dims.insert(all_dims.end(), dims.begin(), dims.end());
    std::vector<std::size_t> ranks{0, 0};
    for (int k = 1; k <= n; ++k) ranks.push_back(r[static_cast<std::size_t>(k)]);
    return betti_from_ranks(all_dims, ranks);
}

bool is_acyclic(const SimplicialComplex& K, const FieldSpec& F)
{
    return !K.empty() && reduced_betti(K, F).all_zero();
}

// ---------------------------------------------------------------- BettiVector

std::size_t BettiVector::operator[](int degree) const
{
    const int i = degree + 1;
    if (i < 0 || i >= static_cast<int>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(i)];
}

bool BettiVector::vanishes_from(int from) const
{
    for (int d = std::max(from, min_degree()); d <= max_degree(); ++d)
        if ((*this)[d] != 0) return false;
    return true;
}

std::int64_t BettiVector::alternating_sum() const
{
    std::int64_t s = 0;
    for (int d = 0; d <= max_degree(); ++d) s += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>((*this)[d]);
    return s;
}

std::string BettiVector::to_string() const
{
    std::ostringstream os;
    if ((*this)[-1] != 0 || max_degree() < 0) {
        os << "(b_-1 = " << (*this)[-1] << ")";
        return os.str();
    }
    os << "(";
    for (int d = 0; d <= max_degree(); ++d) os << (d ? ", " : "") << (*this)[d];
    os << ")";
    return os.str();
}

bool operator==(const BettiVector& a, const BettiVector& b)
{
    const int top = std::max(a.max_degree(), b.max_degree());
    for (int d = BettiVector::min_degree(); d <= top; ++d)
        if (a[d] != b[d]) return false;
    return true;
}

BettiVector sphere_betti(int n)
{
    std::vector<std::size_t> v(static_cast<std::size_t>(n) + 2, 0);
    v[static_cast<std::size_t>(n) + 1] = 1;
    return BettiVector(std::move(v));
}

} // namespace rainbow
