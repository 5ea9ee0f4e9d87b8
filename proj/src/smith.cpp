#include "omtk/smith.hpp"

#include <algorithm>
#include <map>

#include "omtk/errors.hpp"

namespace omtk {

namespace {

// target -= factor * source, both sorted by row.
void subtract_multiple(IntegerColumn& target, const IntegerColumn& source, std::int64_t factor,
                       IntegerColumn& scratch, std::vector<std::uint32_t>& new_rows)
{
    scratch.clear();
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->first < s->first)) {
            scratch.push_back(*t++);
        }
        else if (t == target.end() || s->first < t->first) {
            std::int64_t v = detail::checked_sub_mul<std::int64_t>(0, factor, s->second);
            scratch.emplace_back(s->first, v);
            new_rows.push_back(s->first);
            ++s;
        }
        else {
            std::int64_t v = detail::checked_sub_mul(t->second, factor, s->second);
            if (v != 0)
                scratch.emplace_back(t->first, v);
            ++t;
            ++s;
        }
    }
    target.swap(scratch);
}

const std::int64_t* find_row(const IntegerColumn& col, std::uint32_t row)
{
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const auto& entry, std::uint32_t r) { return entry.first < r; });
    return (it != col.end() && it->first == row) ? &it->second : nullptr;
}

}  // namespace

SmithSummary smith_sparse(std::size_t row_count, std::vector<IntegerColumn> columns,
                          std::size_t dense_limit)
{
    std::vector<std::vector<std::uint32_t>> row_columns(row_count);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c]) {
            if (r >= row_count)
                throw DimensionError("sparse column entry outside the row range");
            row_columns[r].push_back(static_cast<std::uint32_t>(c));
        }

    std::vector<bool> dead(columns.size(), false);
    std::size_t unit_rank = 0;
    IntegerColumn scratch;
    std::vector<std::uint32_t> new_rows;

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (dead[c])
                continue;
            IntegerColumn& col = columns[c];
            if (col.empty()) {
                dead[c] = true;
                continue;
            }
            std::uint32_t pivot_row = 0;
            std::int64_t pivot_value = 0;
            std::size_t best = ~std::size_t{0};
            for (const auto& [r, v] : col)
                if ((v == 1 || v == -1) && row_columns[r].size() < best) {
                    best = row_columns[r].size();
                    pivot_row = r;
                    pivot_value = v;
                }
            if (pivot_value == 0)
                continue;

            const IntegerColumn pivot = std::move(col);
            col.clear();
            dead[c] = true;
            for (std::uint32_t other : row_columns[pivot_row]) {
                if (dead[other])
                    continue;
                const std::int64_t* entry = find_row(columns[other], pivot_row);
                if (!entry)
                    continue;
                new_rows.clear();
                subtract_multiple(columns[other], pivot, *entry * pivot_value, scratch, new_rows);
                for (auto r : new_rows)
                    row_columns[r].push_back(other);
            }
            row_columns[pivot_row].clear();
            row_columns[pivot_row].shrink_to_fit();
            ++unit_rank;
            progress = true;
        }
    }

    std::map<std::uint32_t, Eigen::Index> residual_rows;
    std::vector<std::size_t> residual_cols;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (dead[c] || columns[c].empty())
            continue;
        residual_cols.push_back(c);
        for (const auto& entry : columns[c])
            residual_rows.emplace(entry.first, 0);
    }
    if (residual_cols.empty())
        return {unit_rank, {}};
    if (residual_rows.size() * residual_cols.size() > dense_limit)
        throw BudgetExceeded("residual Smith block of " + std::to_string(residual_rows.size()) + "x" +
                             std::to_string(residual_cols.size()) + " exceeds the dense limit");
    Eigen::Index next = 0;
    for (auto& [row, index] : residual_rows)
        index = next++;
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> block =
        Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(
            next, static_cast<Eigen::Index>(residual_cols.size()));
    for (std::size_t k = 0; k < residual_cols.size(); ++k)
        for (const auto& [r, v] : columns[residual_cols[k]])
            block(residual_rows.at(r), static_cast<Eigen::Index>(k)) = v;

    SmithSummary out = smith_dense(block);
    out.rank += unit_rank;
    return out;
}

}  // namespace omtk
