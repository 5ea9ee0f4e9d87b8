#include "omtk/covector.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

namespace omtk {

std::vector<SignVector> cocircuits(const Chirotope& chi)
{
    const int n = chi.n();
    std::set<SignVector> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SignVector sigma(n);
            for (int x = 0; x < n; ++x)
                sigma.set(x, chi(i, j, x));
            if (sigma.is_zero())
                continue;
            out.insert(sigma);
            out.insert(-sigma);
        }
    return {out.begin(), out.end()};
}

CovectorSphere CovectorSphere::build(const OrientedMatroid& m)
{
    const auto generators = omtk::cocircuits(m.canonical());
    std::unordered_set<SignVector> seen(generators.begin(), generators.end());
    std::vector<SignVector> elements(generators.begin(), generators.end());
    // Each newly found element is joined against everything found so far.
    for (std::size_t next = 0; next < elements.size(); ++next)
        for (std::size_t other = 0; other < next; ++other)
            if (auto joined = join(elements[next], elements[other]); joined && seen.insert(*joined).second)
                elements.push_back(*joined);

    CovectorSphere sphere = from_elements(m.n(), std::move(elements));
    sphere.owner_ = m;

    std::vector<SignVector> minimal;
    for (auto idx : sphere.poset_.minimal())
        minimal.push_back(sphere.elements_[idx]);
    if (minimal != generators)
        throw StructuralError("minimal covectors differ from the cocircuits of " + m.str());
    return sphere;
}

CovectorSphere CovectorSphere::from_elements(int n, std::vector<SignVector> elements)
{
    CovectorSphere sphere;
    sphere.n_ = n;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& e : elements) {
        if (e.size() != n)
            throw DimensionError("covector length differs from the ground set");
        if (e.is_zero())
            throw PreconditionError("the zero vector is not an element of the covector sphere");
    }
    sphere.elements_ = std::move(elements);
    for (std::size_t i = 0; i < sphere.elements_.size(); ++i)
        sphere.index_.emplace(sphere.elements_[i], i);
    std::vector<std::string> labels;
    labels.reserve(sphere.elements_.size());
    for (const auto& e : sphere.elements_)
        labels.push_back(e.str());
    const auto& el = sphere.elements_;
    sphere.poset_ = Poset::build(std::move(labels),
                                 [&el](std::size_t a, std::size_t b) { return vector_leq_v(el[a], el[b]); });
    sphere.grade();
    return sphere;
}

void CovectorSphere::grade()
{
    // Strict ≤_v strictly grows the support, so support size is a linear extension.
    std::vector<std::size_t> order(elements_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(elements_[a].support()) < std::popcount(elements_[b].support());
    });
    ranks_.assign(elements_.size(), 0);
    for (std::size_t x : order) {
        const Bits& down = poset_.below(x);
        for (std::size_t y = down.find_first(); y != Bits::npos; y = down.find_next(y))
            ranks_[x] = std::max(ranks_[x], ranks_[y] + 1);
    }
    if (elements_.empty())
        throw StructuralError("empty covector sphere");
    const int top = *std::max_element(ranks_.begin(), ranks_.end());
    if (top != 2)
        throw StructuralError("covector sphere has " + std::to_string(top + 1) + " ranks, expected 3");
    for (auto idx : poset_.maximal())
        if (ranks_[idx] != 2)
            throw StructuralError("covector sphere is not graded: maximal element " + elements_[idx].str() +
                                  " has rank " + std::to_string(ranks_[idx]));
    for (auto [lo, hi] : poset_.hasse())
        if (ranks_[hi] != ranks_[lo] + 1)
            throw StructuralError("covector sphere is not graded at " + elements_[lo].str() + " < " +
                                  elements_[hi].str());
}

int CovectorSphere::rank_of(const SignVector& v) const
{
    auto it = index_.find(v);
    if (it == index_.end())
        throw PreconditionError("sign vector " + v.str() + " is not in the covector sphere");
    return ranks_[it->second];
}

std::optional<std::size_t> CovectorSphere::index_of(const SignVector& v) const
{
    auto it = index_.find(v);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<SignVector> CovectorSphere::of_rank(int r) const
{
    std::vector<SignVector> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (ranks_[i] == r)
            out.push_back(elements_[i]);
    return out;
}

std::vector<std::size_t> CovectorSphere::rank_counts() const
{
    std::vector<std::size_t> counts(3, 0);
    for (int r : ranks_)
        counts[static_cast<std::size_t>(r)] += 1;
    return counts;
}

std::vector<SignVector> CovectorSphere::covectors() const
{
    std::vector<SignVector> out = elements_;
    out.emplace_back(n_);
    std::sort(out.begin(), out.end());
    return out;
}

SphereReport verify_sphere(const CovectorSphere& sphere)
{
    SphereReport report;
    const auto counts = sphere.rank_counts();
    report.euler = static_cast<long long>(counts[0]) - static_cast<long long>(counts[1]) +
                   static_cast<long long>(counts[2]);
    report.euler_ok = report.euler == 2;
    if (!report.euler_ok)
        report.violations.push_back("euler characteristic is " + std::to_string(report.euler) + ", expected 2");

    // Height-2 intervals of cov ∪ {⊤}: [0, edge], [vertex, tope] and [edge, ⊤].
    const Poset& order = sphere.poset();
    bool diamond = true;
    for (std::size_t x = 0; x < sphere.size(); ++x) {
        const Bits& down = order.below(x);
        const Bits& up = order.above(x);
        if (sphere.rank(x) == 1) {
            std::size_t vertices = 0;
            for (std::size_t y = down.find_first(); y != Bits::npos; y = down.find_next(y))
                vertices += sphere.rank(y) == 0;
            std::size_t facets = 0;
            for (std::size_t y = up.find_first(); y != Bits::npos; y = up.find_next(y))
                facets += sphere.rank(y) == 2;
            if (vertices != 2 || facets != 2) {
                diamond = false;
                report.violations.push_back("edge covector " + sphere.elements()[x].str() + " lies above " +
                                            std::to_string(vertices) + " cocircuits and below " +
                                            std::to_string(facets) + " topes");
            }
        }
        if (sphere.rank(x) == 0) {
            for (std::size_t f = up.find_first(); f != Bits::npos; f = up.find_next(f)) {
                if (sphere.rank(f) != 2)
                    continue;
                const std::size_t between = (up & order.below(f)).count();
                if (between != 2) {
                    diamond = false;
                    report.violations.push_back("interval [" + sphere.elements()[x].str() + ", " +
                                                sphere.elements()[f].str() + "] has " +
                                                std::to_string(between + 2) + " elements");
                }
            }
        }
    }
    report.diamond_ok = diamond;

    report.symmetric = std::all_of(sphere.elements().begin(), sphere.elements().end(),
                                   [&](const SignVector& v) { return sphere.contains(-v); });
    if (!report.symmetric)
        report.violations.push_back("covector sphere is not closed under negation");

    report.topes_span_support = true;
    if (const auto& owner = sphere.owner()) {
        std::uint64_t supp = 0;
        for (int i : support(*owner))
            supp |= std::uint64_t{1} << i;
        for (const auto& t : sphere.topes())
            if (t.support() != supp) {
                report.topes_span_support = false;
                report.violations.push_back("tope " + t.str() + " does not have support supp(M)");
                break;
            }
    }

    report.order_complex_betti = betti_gf2(order_complex(sphere.poset()));
    report.homology_ok = report.order_complex_betti == BettiVector{{1, 0, 1}};
    if (!report.homology_ok) {
        std::string betti;
        for (auto b : report.order_complex_betti.betti)
            betti += (betti.empty() ? "" : ",") + std::to_string(b);
        report.violations.push_back("order complex has GF(2) Betti numbers (" + betti + "), expected (1,0,1)");
    }
    return report;
}

const SignVector& MaxcovMap::operator()(const SignVector& upper_covector) const
{
    auto it = std::lower_bound(table_.begin(), table_.end(), upper_covector,
                               [](const auto& entry, const SignVector& v) { return entry.first < v; });
    if (it == table_.end() || it->first != upper_covector)
        throw PreconditionError(upper_covector.str() + " is not a covector of the upper oriented matroid");
    return it->second;
}

MaxcovMap maxcov(const OrientedMatroid& lower, const OrientedMatroid& upper)
{
    if (!weak_leq(lower, upper))
        throw PreconditionError("maxcov needs M0 <=_w M1; got " + lower.str() + " and " + upper.str());
    const auto lower_cov = CovectorSphere::build(lower).covectors();
    const auto upper_cov = CovectorSphere::build(upper).covectors();

    MaxcovMap map(lower, upper);
    std::unordered_set<SignVector> image;
    std::vector<const SignVector*> down;
    for (const auto& sigma1 : upper_cov) {
        down.clear();
        for (const auto& sigma0 : lower_cov)
            if (vector_leq_v(sigma0, sigma1))
                down.push_back(&sigma0);
        const SignVector* maximum = nullptr;
        for (const SignVector* candidate : down)
            if (std::all_of(down.begin(), down.end(),
                            [&](const SignVector* d) { return vector_leq_v(*d, *candidate); })) {
                maximum = candidate;
                break;
            }
        if (!maximum)
            throw StructuralError("no unique maximum below " + sigma1.str() + " in cov(" + lower.str() + ")");
        map.table_.emplace_back(sigma1, *maximum);
        image.insert(*maximum);
    }
    map.surjective_ = image.size() == lower_cov.size();
    return map;
}

CovectorAxiomReport covector_axioms_check(std::span<const SignVector> set)
{
    CovectorAxiomReport report;
    if (set.empty()) {
        report.violations.push_back("empty set has no zero vector");
        return report;
    }
    const int n = set.front().size();
    for (const auto& v : set)
        if (v.size() != n)
            throw DimensionError("covector set mixes sign vector lengths");
    const std::unordered_set<SignVector> members(set.begin(), set.end());
    const std::vector<SignVector> list(members.begin(), members.end());
    constexpr std::size_t kMaxReported = 8;
    auto note = [&](std::string message) {
        if (report.violations.size() < kMaxReported)
            report.violations.push_back(std::move(message));
    };

    report.has_zero = members.contains(SignVector(n));
    if (!report.has_zero)
        note("zero vector missing");

    report.symmetric = true;
    for (const auto& v : list)
        if (!members.contains(-v)) {
            report.symmetric = false;
            note("negation of " + v.str() + " missing");
        }

    report.composition = true;
    report.elimination = true;
    for (const auto& sigma : list) {
        for (const auto& tau : list) {
            const SignVector composed = compose(sigma, tau);
            if (!members.contains(composed)) {
                report.composition = false;
                note("composition " + sigma.str() + " o " + tau.str() + " = " + composed.str() + " missing");
            }
            const std::uint64_t separation = (sigma.plus() & tau.minus()) | (sigma.minus() & tau.plus());
            const std::uint64_t agree = SignVector::full_mask(n) & ~separation;
            for (std::uint64_t bits = separation; bits != 0; bits &= bits - 1) {
                const std::uint64_t e = bits & (~bits + 1);
                const bool found = std::any_of(list.begin(), list.end(), [&](const SignVector& u) {
                    return (u.support() & e) == 0 && (u.plus() & agree) == (composed.plus() & agree) &&
                           (u.minus() & agree) == (composed.minus() & agree);
                });
                if (!found) {
                    report.elimination = false;
                    note("elimination of " + sigma.str() + ", " + tau.str() + " at element " +
                         std::to_string(std::countr_zero(e) + 1) + " fails");
                }
            }
        }
    }
    return report;
}

}  // namespace omtk
