/**
 * Rank computations over GF(2).
 *
 * Two independent routes: dense Gaussian elimination on bitset rows, and
 * sparse column reduction by pivot ("low") lookup as used for boundary
 * matrices. Tests cross-check the two.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "omtk/poset.hpp"

namespace omtk::gf2 {

/// Rank of a dense matrix whose rows are bitsets of equal length.
std::size_t dense_rank(std::vector<Bits> rows);

/// Column of a sparse GF(2) matrix: strictly increasing row indices.
using SparseColumn = std::vector<std::uint32_t>;

struct ReductionResult {
    std::size_t rank = 0;
    /// Row indices that became pivots; these index the lower-dimensional simplices.
    std::vector<std::uint32_t> pivot_rows;
};

/**
 * Reduces columns left to right, adding earlier reduced columns with the
 * same lowest row until the lowest row is unique or the column vanishes.
 *
 * Columns whose index is marked in `skip` are assumed to reduce to zero
 * and are not processed (clearing).
 */
ReductionResult reduce_columns(std::vector<SparseColumn> columns, std::size_t row_count,
                               const std::vector<bool>* skip = nullptr);

}  // namespace omtk::gf2
