/**
 * Realizable chirotopes from integer vector configurations in R^3.
 *
 * Everything here is exact integer arithmetic. Coordinates are bounded by
 * kMaxCoordinate = 2^15, so 3x3 determinants and cross/dot products stay
 * well inside 64 bits.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "omtk/chirotope.hpp"
#include "omtk/sign.hpp"

namespace omtk {

using IntVector3 = Eigen::Matrix<std::int64_t, 3, 1>;
/// One column per element of the ground set.
using IntConfiguration = Eigen::Matrix<std::int64_t, 3, Eigen::Dynamic>;

inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 15;

/// sign det(a, b, c), computed exactly as a · (b × c).
template <typename DerivedA, typename DerivedB, typename DerivedC>
Sign determinant_sign(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                      const Eigen::MatrixBase<DerivedC>& c)
{
    static_assert(std::is_integral_v<typename DerivedA::Scalar>, "exact signs need integer coordinates");
    return sign_of(a.dot(b.cross(c)));
}

/**
 * Order type of the columns of a 3 x n integer matrix: χ(i,j,k) is the
 * sign of det(v_i, v_j, v_k).
 *
 * @throws RankError if the columns do not span R^3.
 */
template <typename Derived>
Chirotope order_type(const Eigen::MatrixBase<Derived>& columns)
{
    static_assert(Derived::RowsAtCompileTime == 3, "vector configurations live in R^3");
    const int n = static_cast<int>(columns.cols());
    if (n < 3)
        throw RankError("fewer than 3 vectors cannot span R^3");
    std::vector<Sign> values;
    values.reserve(choose3(static_cast<std::size_t>(n)));
    bool spans = false;
    for (const auto& [i, j, k] : sorted_triples(n)) {
        const Sign s = determinant_sign(columns.col(i), columns.col(j), columns.col(k));
        spans = spans || s != Sign::Zero;
        values.push_back(s);
    }
    if (!spans)
        throw RankError("vector configuration does not span R^3");
    return Chirotope(n, std::move(values));
}

class VectorConfig {
public:
    /// @throws RankError if the columns do not span; DimensionError on out-of-bound coordinates.
    explicit VectorConfig(IntConfiguration vectors);

    /// Parses `n=<n>;v=<x1,y1,z1;...>`.
    static VectorConfig parse(std::string_view text);

    int n() const noexcept { return static_cast<int>(vectors_.cols()); }
    const IntConfiguration& vectors() const noexcept { return vectors_; }
    auto vector(int i) const { return vectors_.col(i); }

    std::string str() const;

    friend bool operator==(const VectorConfig& a, const VectorConfig& b) { return a.vectors_ == b.vectors_; }

private:
    IntConfiguration vectors_;
};

inline Chirotope order_type(const VectorConfig& config) { return order_type(config.vectors()); }

/**
 * Cocircuits read off the geometry: for each independent pair {i,j} the
 * normal x = v_i × v_j gives ±(sign⟨v_k, x⟩)_k.
 */
std::vector<SignVector> geometric_cocircuits(const VectorConfig& config);

enum class Degeneracy { None, Duplicates, Negated, Zero, Coplanar, Mixed };

Degeneracy parse_degeneracy(std::string_view name);
std::string to_string(Degeneracy mix);

/**
 * PCG-XSH-RR 32-bit generator (64-bit LCG state, permuted output).
 * Streams are fully determined by (seed, stream).
 */
class Pcg32 {
public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0xDA3E39CB94B95BDBULL);

    std::uint32_t operator()();

    /// Uniform in [0, bound) without modulo bias.
    std::uint32_t bounded(std::uint32_t bound);

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_ = 0;
    std::uint64_t increment_ = 0;
};

/// Independent per-sample seed, so batches can be split across workers.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/**
 * Integer vectors drawn uniformly from [-bound, bound]^3, with optional
 * injected degeneracies (duplicate, negated or zero vectors, coplanar
 * combinations v_k = a v_i + b v_j with 1 <= |a|,|b| <= 2). Redraws until
 * the configuration spans. For n = 3 every degeneracy destroys spanning, so
 * none is injected.
 *
 * @throws PreconditionError if n < 3 or bound is outside [1, 2^13].
 * @throws RankError if no spanning configuration appears within 10^6 draws.
 */
VectorConfig sample_config(int n, std::uint64_t seed, std::int64_t bound, Degeneracy mix = Degeneracy::None);

}  // namespace omtk
