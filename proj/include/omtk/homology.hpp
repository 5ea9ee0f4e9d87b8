/**
 * Simplicial complexes, order complexes of posets, and their homology.
 *
 * Simplices are sorted tuples of vertex ids; a poset's order complex uses
 * node indices as vertex ids, so runs over the same poset file are
 * reproducible simplex by simplex.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "omtk/poset.hpp"

namespace omtk {

using Simplex = std::vector<std::uint32_t>;

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /**
     * Takes an arbitrary list of simplices, sorts and deduplicates them.
     *
     * @throws StructuralError if some face of a listed simplex is missing.
     */
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    /// All faces of the given simplices.
    static SimplicialComplex closure(const std::vector<Simplex>& facets);

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }

    std::vector<std::size_t> f_vector() const;
    std::size_t total_simplices() const noexcept;

    std::size_t count(int p) const;
    /// Vertices of the i-th p-simplex in sorted order.
    std::span<const std::uint32_t> simplex(int p, std::size_t i) const;

    /// Position of a sorted p-simplex, or npos.
    std::size_t index_of(std::span<const std::uint32_t> simplex) const;

    static constexpr std::size_t npos = ~std::size_t{0};

private:
    friend SimplicialComplex order_complex(const Poset& poset);

    // faces_[p] holds the p-simplices flattened with stride p + 1, sorted lexicographically.
    std::vector<std::vector<std::uint32_t>> faces_;
};

/// k-simplices are the chains with k + 1 elements.
SimplicialComplex order_complex(const Poset& poset);

struct BettiVector {
    std::vector<std::size_t> betti;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

struct IntegralHomology {
    std::vector<std::size_t> betti;
    /// torsion[p]: invariant factors > 1 of H_p.
    std::vector<std::vector<std::int64_t>> torsion;
};

/// Boundary matrix ∂_p over GF(2): columns are p-simplices, rows (p-1)-simplices.
std::vector<std::vector<std::uint32_t>> boundary_gf2(const SimplicialComplex& complex, int p);

/**
 * GF(2) Betti numbers β_p = f_p - rank ∂_p - rank ∂_{p+1} for 0 <= p <= dim.
 *
 * With `threads` > 1 the boundary matrices are reduced concurrently;
 * otherwise dimensions are processed top-down with clearing.
 */
BettiVector betti_gf2(const SimplicialComplex& complex, unsigned threads = 1);

/// Same numbers via dense bitset elimination; intended for small complexes.
BettiVector betti_gf2_dense(const SimplicialComplex& complex);

inline constexpr std::size_t kDefaultIntegerBudget = 200000;

/**
 * Integral homology by Smith normal form of the boundary matrices.
 *
 * @throws BudgetExceeded if the complex has more than `budget` simplices.
 */
IntegralHomology betti_integer(const SimplicialComplex& complex,
                               std::size_t budget = kDefaultIntegerBudget);

long long euler_characteristic(const SimplicialComplex& complex);
long long euler_characteristic(const BettiVector& betti);

/// Mod-2 Betti numbers of G(k,n): partitions of d inside a k x (n-k) box.
BettiVector grassmann_betti_mod2(int k, int n);

/// Number of connected components of the 1-skeleton, by union-find.
std::size_t connected_components(const SimplicialComplex& complex);

}  // namespace omtk
