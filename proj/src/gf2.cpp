#include "omtk/gf2.hpp"

#include <algorithm>
#include <iterator>

namespace omtk::gf2 {

std::size_t dense_rank(std::vector<Bits> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(col))
                rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

namespace {

void add_into(SparseColumn& target, const SparseColumn& source, SparseColumn& scratch)
{
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

}  // namespace

ReductionResult reduce_columns(std::vector<SparseColumn> columns, std::size_t row_count,
                               const std::vector<bool>* skip)
{
    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> owner(row_count, kNone);
    ReductionResult result;
    SparseColumn scratch;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (skip && (*skip)[j]) {
            columns[j].clear();
            continue;
        }
        SparseColumn& col = columns[j];
        while (!col.empty() && owner[col.back()] != kNone)
            add_into(col, columns[owner[col.back()]], scratch);
        if (!col.empty()) {
            owner[col.back()] = static_cast<std::uint32_t>(j);
            result.pivot_rows.push_back(col.back());
            ++result.rank;
        }
    }
    std::sort(result.pivot_rows.begin(), result.pivot_rows.end());
    return result;
}

}  // namespace omtk::gf2
