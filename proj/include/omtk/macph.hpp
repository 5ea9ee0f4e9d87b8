/**
 * Enumeration of rank-3 chirotopes and oriented matroids on [n], and the
 * (oriented) MacPhersonian posets under the weak order.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "omtk/chirotope.hpp"
#include "omtk/poset.hpp"

namespace omtk {

inline constexpr int kMinEnumerationSize = 3;
inline constexpr int kMaxEnumerationSize = 6;

struct EnumerationOptions {
    /// Only sign maps without zero entries.
    bool uniform_only = false;
    /// Drop chirotopes that have loops.
    bool loop_free = false;
    /// Worker count for the backtracking search; 0 picks hardware concurrency.
    unsigned threads = 1;
};

/**
 * Every rank-3 chirotope on [n], sorted by encoding (ASCII '+' < '-' < '0')
 * and duplicate free. Output is independent of the worker count.
 *
 * n <= 4 scans all 3^C(n,3) sign maps; larger n uses depth-first
 * assignment in triple order with Grassmann-Plucker pruning.
 *
 * @throws PreconditionError unless 3 <= n <= 6.
 */
std::vector<Chirotope> enumerate_chirotopes(int n, const EnumerationOptions& options = {});

/// Number of chirotopes, without materializing them.
std::size_t count_chirotopes(int n, const EnumerationOptions& options = {});

/// Scans all 3^C(n,3) sign maps with is_chirotope; an oracle for small n.
std::vector<Chirotope> enumerate_chirotopes_by_scan(int n);

/// Canonical oriented matroids, sorted and duplicate free.
std::vector<OrientedMatroid> enumerate_oms(int n, const EnumerationOptions& options = {});

/// Generic poset constructor: node i carries `labels[i]`.
inline Poset build_poset(std::vector<std::string> labels, const Poset::LeqPredicate& leq)
{
    return Poset::build(std::move(labels), leq);
}

/// MacP(3,n) over the given oriented matroids.
Poset macphersonian(const std::vector<OrientedMatroid>& oms);

/// OMacP(3,n) over the given chirotopes.
Poset oriented_macphersonian(const std::vector<Chirotope>& chirotopes);

}  // namespace omtk
