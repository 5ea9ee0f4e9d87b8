/**
 * Covector spheres of rank-3 oriented matroids.
 *
 * The sphere csph(M) is generated from the cocircuits by pairwise joins in
 * the topped lattice, dropping ⊤. It must come out graded with ranks
 * 0 (cocircuits / vertex covectors), 1 (edge covectors) and 2 (topes).
 * cov(M) adds the zero vector.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omtk/chirotope.hpp"
#include "omtk/homology.hpp"
#include "omtk/poset.hpp"
#include "omtk/sign.hpp"

namespace omtk {

/// Sorted, deduplicated nonzero sign vectors {±χ(i,j,·)}.
std::vector<SignVector> cocircuits(const Chirotope& chi);

class CovectorSphere {
public:
    /**
     * Join closure of the cocircuits of `m`, graded by longest chain.
     *
     * @throws StructuralError if the closure is not a graded poset with
     *         exactly three ranks whose minimal elements are the cocircuits.
     */
    static CovectorSphere build(const OrientedMatroid& m);

    /// Grades an explicitly given element set (no closure, no owner).
    static CovectorSphere from_elements(int n, std::vector<SignVector> elements);

    int n() const noexcept { return n_; }
    const std::optional<OrientedMatroid>& owner() const noexcept { return owner_; }

    /// csph elements in sorted order.
    const std::vector<SignVector>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    int rank(std::size_t index) const { return ranks_[index]; }
    int rank_of(const SignVector& v) const;
    bool contains(const SignVector& v) const { return index_.contains(v); }
    std::optional<std::size_t> index_of(const SignVector& v) const;

    std::vector<SignVector> of_rank(int r) const;
    std::vector<SignVector> cocircuits() const { return of_rank(0); }
    std::vector<SignVector> edges() const { return of_rank(1); }
    std::vector<SignVector> topes() const { return of_rank(2); }

    /// rank_counts()[r] = number of elements of rank r.
    std::vector<std::size_t> rank_counts() const;

    /// The ≤_v order restricted to csph; node i is elements()[i].
    const Poset& poset() const noexcept { return poset_; }

    /// cov(M) = csph(M) ∪ {0}, sorted.
    std::vector<SignVector> covectors() const;

private:
    void grade();

    int n_ = 0;
    std::optional<OrientedMatroid> owner_;
    std::vector<SignVector> elements_;
    std::vector<int> ranks_;
    std::unordered_map<SignVector, std::size_t> index_;
    Poset poset_;
};

inline std::vector<SignVector> topes(const OrientedMatroid& m) { return CovectorSphere::build(m).topes(); }

/// cov(M) = csph(M) ∪ {0}.
inline std::vector<SignVector> covectors(const OrientedMatroid& m) { return CovectorSphere::build(m).covectors(); }

struct SphereReport {
    long long euler = 0;
    bool euler_ok = false;
    bool diamond_ok = false;
    bool symmetric = false;
    bool topes_span_support = false;
    BettiVector order_complex_betti;
    bool homology_ok = false;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/**
 * Checks that csph is a 2-sphere in the combinatorial sense: Euler
 * characteristic 2, every height-2 interval of cov ∪ {⊤} is a diamond,
 * negation symmetry, and GF(2) Betti numbers (1,0,1) of its order complex.
 * When the sphere has an owner, topes must have support exactly supp(M).
 */
SphereReport verify_sphere(const CovectorSphere& sphere);

class MaxcovMap {
public:
    const OrientedMatroid& lower() const noexcept { return lower_; }
    const OrientedMatroid& upper() const noexcept { return upper_; }

    /// Pairs (σ1, maxcov(σ1)) sorted by σ1, over all of cov(upper).
    const std::vector<std::pair<SignVector, SignVector>>& table() const noexcept { return table_; }

    const SignVector& operator()(const SignVector& upper_covector) const;

    bool is_surjective() const noexcept { return surjective_; }

private:
    friend MaxcovMap maxcov(const OrientedMatroid&, const OrientedMatroid&);
    MaxcovMap(OrientedMatroid lower, OrientedMatroid upper) : lower_(std::move(lower)), upper_(std::move(upper)) {}

    OrientedMatroid lower_;
    OrientedMatroid upper_;
    std::vector<std::pair<SignVector, SignVector>> table_;
    bool surjective_ = false;
};

/**
 * maxcov(σ1) = max{σ0 ∈ cov(M0) : σ0 ≤_v σ1} for every σ1 ∈ cov(M1).
 *
 * @throws PreconditionError unless M0 ≤_w M1.
 * @throws StructuralError if some down-set lacks a unique maximum.
 */
MaxcovMap maxcov(const OrientedMatroid& lower, const OrientedMatroid& upper);

struct CovectorAxiomReport {
    bool has_zero = false;
    bool symmetric = false;
    bool composition = false;
    bool elimination = false;
    std::vector<std::string> violations;

    bool ok() const noexcept { return has_zero && symmetric && composition && elimination; }
};

/// Vector axioms: zero, symmetry, composition, elimination.
CovectorAxiomReport covector_axioms_check(std::span<const SignVector> set);

}  // namespace omtk
