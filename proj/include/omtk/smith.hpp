/**
 * Smith normal form summaries of integer matrices: rank and the invariant
 * factors greater than one.
 *
 * `smith_dense` works on any Eigen integer matrix expression. `smith_sparse`
 * first eliminates unit pivots on sparse columns (boundary matrices of order
 * complexes are dominated by them) and hands the residual block to
 * `smith_dense`.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace omtk {

struct SmithSummary {
    std::size_t rank = 0;
    /// Invariant factors d > 1 in divisibility order (d_1 | d_2 | ...).
    std::vector<std::int64_t> torsion;
};

namespace detail {

template <typename Scalar>
Scalar checked_sub_mul(Scalar a, Scalar q, Scalar b)
{
    Scalar prod{};
    Scalar out{};
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
        throw std::overflow_error("integer overflow during Smith normal form reduction");
    return out;
}

template <typename Scalar>
Scalar checked_add(Scalar a, Scalar b)
{
    Scalar out{};
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow during Smith normal form reduction");
    return out;
}

template <typename Scalar>
Scalar abs_value(Scalar x)
{
    if (x == std::numeric_limits<Scalar>::min())
        throw std::overflow_error("integer overflow during Smith normal form reduction");
    return x < 0 ? -x : x;
}

}  // namespace detail

/**
 * Smith normal form of a dense integer matrix by pivoted row and column
 * elimination. Arithmetic is overflow-checked; std::overflow_error is
 * thrown rather than returning a wrong factor.
 */
template <typename Derived>
SmithSummary smith_dense(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    static_assert(std::numeric_limits<Scalar>::is_integer, "Smith normal form needs an integer scalar");
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Index = Eigen::Index;

    Matrix a = input;
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<Scalar> diagonal;

    for (Index t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block goes to (t, t).
        Index pr = -1;
        Index pc = -1;
        for (Index j = t; j < cols; ++j)
            for (Index i = t; i < rows; ++i)
                if (a(i, j) != 0 &&
                    (pr < 0 || detail::abs_value(a(i, j)) < detail::abs_value(a(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0)
            break;
        a.row(t).swap(a.row(pr));
        a.col(t).swap(a.col(pc));

        for (;;) {
            bool clean = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                const Scalar q = a(i, t) / a(t, t);
                for (Index j = t; j < cols; ++j)
                    a(i, j) = detail::checked_sub_mul(a(i, j), q, a(t, j));
                if (a(i, t) != 0) {
                    a.row(t).swap(a.row(i));
                    clean = false;
                }
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                const Scalar q = a(t, j) / a(t, t);
                for (Index i = t; i < rows; ++i)
                    a(i, j) = detail::checked_sub_mul(a(i, j), q, a(i, t));
                if (a(t, j) != 0) {
                    a.col(t).swap(a.col(j));
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility: fold any row with an entry not divisible by the pivot.
            Index offender = -1;
            for (Index i = t + 1; i < rows && offender < 0; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        offender = i;
                        break;
                    }
            if (offender < 0)
                break;
            for (Index j = t; j < cols; ++j)
                a(t, j) = detail::checked_add(a(t, j), a(offender, j));
        }
        diagonal.push_back(detail::abs_value(a(t, t)));
    }

    SmithSummary out;
    out.rank = diagonal.size();
    for (Scalar d : diagonal)
        if (d > 1)
            out.torsion.push_back(static_cast<std::int64_t>(d));
    return out;
}

/// Sparse integer column: strictly increasing row indices with nonzero values.
using IntegerColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/**
 * Smith normal form summary of a sparse integer matrix.
 *
 * @param dense_limit Maximum entry count of the residual dense block;
 *        exceeding it throws BudgetExceeded.
 */
SmithSummary smith_sparse(std::size_t row_count, std::vector<IntegerColumn> columns,
                          std::size_t dense_limit = std::size_t{1} << 24);

}  // namespace omtk
