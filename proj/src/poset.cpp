#include "omtk/poset.hpp"

#include <algorithm>
#include <numeric>

#include "omtk/errors.hpp"

namespace omtk {

Poset Poset::build(std::vector<std::string> labels, const LeqPredicate& leq)
{
    Poset p;
    p.labels_ = std::move(labels);
    const std::size_t n = p.labels_.size();
    p.above_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq(a, a))
            throw StructuralError("order relation is not reflexive at node " + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && leq(a, b))
                p.above_[a].set(b);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = p.above_[a].find_first(); b != Bits::npos; b = p.above_[a].find_next(b)) {
            if (p.above_[b].test(a))
                throw StructuralError("antisymmetry violated between nodes " + std::to_string(a) +
                                      " and " + std::to_string(b));
            if (!p.above_[b].is_subset_of(p.above_[a]))
                throw StructuralError("order relation is not transitive through node " +
                                      std::to_string(b));
        }
    p.finish();
    return p;
}

Poset Poset::from_hasse(std::vector<std::string> labels,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& hasse)
{
    const std::size_t n = labels.size();
    std::vector<std::vector<std::uint32_t>> up(n);
    for (auto [lo, hi] : hasse) {
        if (lo >= n || hi >= n || lo == hi)
            throw StructuralError("Hasse edge out of range or a self loop");
        up[lo].push_back(hi);
    }
    // Closure by memoized DFS; a cycle shows up as a node reaching itself.
    std::vector<Bits> reach(n, Bits(n));
    std::vector<int> state(n, 0);
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        state[v] = 1;
        for (auto w : up[v]) {
            if (state[w] == 1)
                throw StructuralError("Hasse diagram contains a cycle");
            if (state[w] == 0)
                visit(w);
            reach[v].set(w);
            reach[v] |= reach[w];
        }
        state[v] = 2;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0)
            visit(v);
    return build(std::move(labels), [&](std::size_t a, std::size_t b) { return a == b || reach[a].test(b); });
}

void Poset::finish()
{
    const std::size_t n = size();
    below_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = above_[a].find_first(); b != Bits::npos; b = above_[a].find_next(b))
            below_[b].set(a);
    hasse_.clear();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = above_[a].find_first(); c != Bits::npos; c = above_[a].find_next(c))
            if (!above_[a].intersects(below_[c]))
                hasse_.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c));
}

std::vector<std::uint32_t> Poset::minimal() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (below_[a].none())
            out.push_back(static_cast<std::uint32_t>(a));
    return out;
}

std::vector<std::uint32_t> Poset::maximal() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (above_[a].none())
            out.push_back(static_cast<std::uint32_t>(a));
    return out;
}

std::size_t Poset::comparable_pairs() const
{
    std::size_t total = 0;
    for (const auto& row : above_)
        total += row.count();
    return total;
}

namespace {

void extend(const Poset& poset, Chain& chain, const std::function<void(const Chain&)>& visit)
{
    visit(chain);
    const Bits& up = poset.above(chain.back());
    for (std::size_t b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
        chain.push_back(static_cast<std::uint32_t>(b));
        extend(poset, chain, visit);
        chain.pop_back();
    }
}

}  // namespace

void for_each_chain(const Poset& poset, const std::function<void(const Chain&)>& visit)
{
    Chain chain;
    for (std::size_t a = 0; a < poset.size(); ++a) {
        chain.assign(1, static_cast<std::uint32_t>(a));
        extend(poset, chain, visit);
    }
}

std::vector<Chain> chains(const Poset& poset)
{
    std::vector<Chain> out;
    for_each_chain(poset, [&](const Chain& c) { out.push_back(c); });
    return out;
}

std::vector<std::size_t> chain_counts(const Poset& poset)
{
    // starting[x][k]: chains with least element x and k + 1 elements.
    const std::size_t n = poset.size();
    std::vector<std::vector<std::size_t>> starting(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return poset.above(a).count() < poset.above(b).count(); });
    std::vector<std::size_t> total;
    for (std::size_t x : order) {
        auto& mine = starting[x];
        mine.assign(1, 1);
        const Bits& up = poset.above(x);
        for (std::size_t y = up.find_first(); y != Bits::npos; y = up.find_next(y)) {
            const auto& theirs = starting[y];
            if (mine.size() < theirs.size() + 1)
                mine.resize(theirs.size() + 1, 0);
            for (std::size_t k = 0; k < theirs.size(); ++k)
                mine[k + 1] += theirs[k];
        }
        if (total.size() < mine.size())
            total.resize(mine.size(), 0);
        for (std::size_t k = 0; k < mine.size(); ++k)
            total[k] += mine[k];
    }
    return total;
}

}  // namespace omtk
