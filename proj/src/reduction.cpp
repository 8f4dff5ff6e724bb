#include "reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow::detail {
namespace {

constexpr std::size_t k_no_pivot = std::numeric_limits<std::size_t>::max();

// ---------------------------------------------------------------- GF(p)

using ModEntry = std::pair<std::uint32_t, std::uint32_t>;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

ReductionResult reduce_mod_p(const std::vector<IntColumn>& columns, std::size_t num_rows, std::uint32_t p,
                             const std::vector<char>& cleared)
{
    ReductionResult out;
    out.pivot_row.assign(num_rows, 0);
    std::vector<std::size_t> pivot_of(num_rows, k_no_pivot);
    std::vector<std::vector<ModEntry>> reduced(columns.size());
    std::vector<ModEntry> work, merged;
    const std::int64_t sp = p;

    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (!cleared.empty() && cleared[j]) continue;
        work.clear();
        const auto& c = columns[j];
        for (std::size_t i = 0; i < c.rows.size(); ++i) {
            std::int64_t v = ((c.vals[i] % sp) + sp) % sp;
            if (v) work.emplace_back(c.rows[i], static_cast<std::uint32_t>(v));
        }
        while (!work.empty()) {
            const auto [low, low_val] = work.back();
            const std::size_t piv = pivot_of[low];
            if (piv == k_no_pivot) break;
            const auto& other = reduced[piv];
            // work -= factor * other, where factor cancels the low entry
            const std::uint64_t factor =
                static_cast<std::uint64_t>(low_val) * mod_inverse(other.back().second, p) % p;
            const std::uint64_t neg = (p - factor) % p;
            merged.clear();
            std::size_t a = 0, b = 0;
            while (a < work.size() || b < other.size()) {
                if (b == other.size() || (a < work.size() && work[a].first < other[b].first)) {
                    merged.push_back(work[a++]);
                } else if (a == work.size() || other[b].first < work[a].first) {
                    merged.emplace_back(other[b].first, static_cast<std::uint32_t>(neg * other[b].second % p));
                    ++b;
                } else {
                    const std::uint64_t v = (work[a].second + neg * other[b].second) % p;
                    if (v) merged.emplace_back(work[a].first, static_cast<std::uint32_t>(v));
                    ++a;
                    ++b;
                }
            }
            std::swap(work, merged);
        }
        if (!work.empty()) {
            pivot_of[work.back().first] = j;
            out.pivot_row[work.back().first] = 1;
            reduced[j] = work;
            ++out.rank;
        }
    }
    return out;
}

// ---------------------------------------------------------------- Q
//
// Fraction-free elimination: a column is replaced by a*col - b*pivot_col with
// a, b chosen to cancel the low entry, then divided by the gcd of its entries.
// Runs on int64 with overflow detection first and restarts on big integers
// when an intermediate value does not fit.

struct CheckedI64 {
    using value_type = std::int64_t;
    static bool mul(value_type a, value_type b, value_type& r) { return !__builtin_mul_overflow(a, b, &r); }
    static bool sub(value_type a, value_type b, value_type& r) { return !__builtin_sub_overflow(a, b, &r); }
    static bool fits(value_type a) { return a != std::numeric_limits<value_type>::min(); }
    static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
    static bool is_zero(value_type a) { return a == 0; }
};

struct BigInt {
    using value_type = boost::multiprecision::cpp_int;
    static bool mul(const value_type& a, const value_type& b, value_type& r)
    {
        r = a * b;
        return true;
    }
    static bool sub(const value_type& a, const value_type& b, value_type& r)
    {
        r = a - b;
        return true;
    }
    static bool fits(const value_type&) { return true; }
    static value_type gcd(const value_type& a, const value_type& b) { return boost::multiprecision::gcd(a, b); }
    static bool is_zero(const value_type& a) { return a.is_zero(); }
};

template <class Ops>
std::optional<ReductionResult> reduce_integral(const std::vector<IntColumn>& columns, std::size_t num_rows,
                                               const std::vector<char>& cleared)
{
    using T = typename Ops::value_type;
    using Entry = std::pair<std::uint32_t, T>;

    ReductionResult out;
    out.pivot_row.assign(num_rows, 0);
    std::vector<std::size_t> pivot_of(num_rows, k_no_pivot);
    std::vector<std::vector<Entry>> reduced(columns.size());
    std::vector<Entry> work, merged;

    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (!cleared.empty() && cleared[j]) continue;
        work.clear();
        const auto& c = columns[j];
        for (std::size_t i = 0; i < c.rows.size(); ++i) {
            if (!Ops::fits(T(c.vals[i]))) return std::nullopt;
            work.emplace_back(c.rows[i], T(c.vals[i]));
        }
        while (!work.empty()) {
            const std::uint32_t low = work.back().first;
            const std::size_t piv = pivot_of[low];
            if (piv == k_no_pivot) break;
            const auto& other = reduced[piv];
            // work <- a * work - b * other
            T a = other.back().second;
            T b = work.back().second;
            const T g = Ops::gcd(a, b);
            a /= g;
            b /= g;
            merged.clear();
            std::size_t x = 0, y = 0;
            T p, q, r;
            while (x < work.size() || y < other.size()) {
                if (y == other.size() || (x < work.size() && work[x].first < other[y].first)) {
                    if (!Ops::mul(a, work[x].second, r)) return std::nullopt;
                    merged.emplace_back(work[x].first, r);
                    ++x;
                } else if (x == work.size() || other[y].first < work[x].first) {
                    if (!Ops::mul(b, other[y].second, q) || !Ops::sub(T(0), q, r)) return std::nullopt;
                    merged.emplace_back(other[y].first, r);
                    ++y;
                } else {
                    if (!Ops::mul(a, work[x].second, p) || !Ops::mul(b, other[y].second, q) ||
                        !Ops::sub(p, q, r))
                        return std::nullopt;
                    if (!Ops::is_zero(r)) merged.emplace_back(work[x].first, r);
                    ++x;
                    ++y;
                }
            }
            for (const auto& e : merged)
                if (!Ops::fits(e.second)) return std::nullopt;
            std::swap(work, merged);
            if (!work.empty()) {
                T content = 0;
                for (const auto& e : work) content = Ops::gcd(content, e.second);
                if (content != 1)
                    for (auto& e : work) e.second /= content;
            }
        }
        if (!work.empty()) {
            pivot_of[work.back().first] = j;
            out.pivot_row[work.back().first] = 1;
            reduced[j] = std::move(work);
            work = {};
            ++out.rank;
        }
    }
    return out;
}

} // namespace

ReductionResult reduce(const std::vector<IntColumn>& columns, std::size_t num_rows, const FieldSpec& F,
                       const std::vector<char>& cleared)
{
    if (F.is_prime()) return reduce_mod_p(columns, num_rows, F.characteristic(), cleared);
    if (auto small = reduce_integral<CheckedI64>(columns, num_rows, cleared)) return *std::move(small);
    return *reduce_integral<BigInt>(columns, num_rows, cleared);
}

std::vector<std::size_t> chain_ranks(const std::vector<std::vector<IntColumn>>& boundaries,
                                     const std::vector<std::size_t>& dims, const FieldSpec& F)
{
    // boundaries[k] = columns of d_k (k >= 1); dims[k] = size of C_k.
    const std::size_t n = boundaries.empty() ? 0 : boundaries.size() - 1;
    std::vector<std::size_t> ranks(n + 1, 0);
    std::vector<char> cleared;
    for (std::size_t k = n; k >= 1; --k) {
        auto result = reduce(boundaries[k], dims[k - 1], F, cleared);
        ranks[k] = result.rank;
        cleared = std::move(result.pivot_row);
    }
    return ranks;
}

} // namespace rainbow::detail
