#pragma once

// Column reduction of integral matrices over GF(p) and Q (internal).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rainbow/homology.hpp"

namespace rainbow::detail {

/// Sparse integral column; rows strictly increasing, no zero values.
struct IntColumn {
    std::vector<std::uint32_t> rows;
    std::vector<std::int64_t> vals;
};

struct ReductionResult {
    std::size_t rank = 0;
    /// pivot_row[r] != 0 iff row r is the lowest entry of some reduced column.
    std::vector<char> pivot_row;
};

/// Left-to-right column reduction (pivot = lowest row). Columns flagged in
/// `cleared` are known to reduce to zero and are skipped; pass an empty vector
/// to reduce everything.
ReductionResult reduce(const std::vector<IntColumn>& columns, std::size_t num_rows, const FieldSpec& F,
                       const std::vector<char>& cleared = {});

/// Ranks of d_1..d_n of a chain complex given top-down; ranks[k] for k = 1..n
/// (index 0 unused). Uses the clearing optimisation between adjacent degrees,
/// so columns must be listed in an order compatible with a filtration.
std::vector<std::size_t> chain_ranks(const std::vector<std::vector<IntColumn>>& boundaries,
                                     const std::vector<std::size_t>& dims, const FieldSpec& F);

} // namespace rainbow::detail
