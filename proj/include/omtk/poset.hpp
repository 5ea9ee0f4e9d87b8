/**
 * Finite posets with a materialized comparability bit matrix and Hasse
 * diagram, plus chain enumeration.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace omtk {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Chain = std::vector<std::uint32_t>;

class Poset {
public:
    using LeqPredicate = std::function<bool(std::size_t, std::size_t)>;

    Poset() = default;

    /**
     * Materializes `leq` over all ordered pairs of nodes and computes the
     * Hasse diagram by transitive reduction.
     *
     * @throws StructuralError if `leq` is not reflexive, antisymmetric and
     *         transitive on the given nodes.
     */
    static Poset build(std::vector<std::string> labels, const LeqPredicate& leq);

    /// Reconstructs a poset from its covering pairs (reflexive-transitive closure).
    static Poset from_hasse(std::vector<std::string> labels,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& hasse);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool leq(std::size_t a, std::size_t b) const { return a == b || above_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return above_[a].test(b); }

    /// Strict up-set of `a`.
    const Bits& above(std::size_t a) const { return above_[a]; }
    /// Strict down-set of `a`.
    const Bits& below(std::size_t a) const { return below_[a]; }

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& hasse() const noexcept { return hasse_; }

    std::vector<std::uint32_t> minimal() const;
    std::vector<std::uint32_t> maximal() const;

    std::size_t comparable_pairs() const;

private:
    void finish();

    std::vector<std::string> labels_;
    std::vector<Bits> above_;
    std::vector<Bits> below_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_;
};

/**
 * Visits every nonempty chain once, listed in increasing order.
 *
 * Chains are produced depth first: starting nodes in index order, each
 * extended by strictly greater nodes in index order.
 */
void for_each_chain(const Poset& poset, const std::function<void(const Chain&)>& visit);

std::vector<Chain> chains(const Poset& poset);

/// Number of chains by size (entry k counts chains with k + 1 elements), without listing them.
std::vector<std::size_t> chain_counts(const Poset& poset);

}  // namespace omtk
