#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "omtk/errors.hpp"
#include "omtk/macph.hpp"
#include "omtk/realizable.hpp"

using namespace omtk;

namespace {

std::vector<std::vector<bool>> strict_order(const Poset& p)
{
    std::vector<std::vector<bool>> less(p.size(), std::vector<bool>(p.size()));
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            less[a][b] = p.less(a, b);
    return less;
}

Poset total_order(std::size_t k)
{
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i)
        labels[i] = std::to_string(i);
    return Poset::build(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

}  // namespace

TEST_CASE("enumeration counts at n = 3 and n = 4")
{
    const auto c3 = enumerate_chirotopes(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].encoding() == "+");
    CHECK(c3[1].encoding() == "-");
    CHECK(enumerate_oms(3).size() == 1);

    const auto c4 = enumerate_chirotopes(4);
    CHECK(enumerate_oms(4).size() * 2 == c4.size());
    EnumerationOptions uniform;
    uniform.uniform_only = true;
    const auto u4 = enumerate_chirotopes(4, uniform);
    CHECK(u4.size() == 16);
    std::set<std::string> all;
    for (const auto& c : c4)
        all.insert(c.encoding());
    for (const auto& c : u4)
        CHECK(all.contains(c.encoding()));

    CHECK_THROWS_AS(enumerate_chirotopes(2), PreconditionError);
    CHECK_THROWS_AS(enumerate_chirotopes(7), PreconditionError);
}

TEST_CASE("every uniform map on four elements is realized")
{
    // (e1, e2, e3, v) for v in each open octant, and the global negation.
    std::set<std::string> realized;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) {
                IntConfiguration v(3, 4);
                v << 1, 0, 0, x, 0, 1, 0, y, 0, 0, 1, z;
                const auto chi = order_type(v);
                realized.insert(chi.encoding());
                realized.insert((-chi).encoding());
            }
    CHECK(realized.size() == 16);
}

TEST_CASE("output is sorted, duplicate free and independent of worker count")
{
    for (int n : {3, 4, 5}) {
        const auto one = enumerate_chirotopes(n);
        CHECK(std::is_sorted(one.begin(), one.end()));
        CHECK(std::adjacent_find(one.begin(), one.end()) == one.end());
        EnumerationOptions many;
        many.threads = 4;
        CHECK(enumerate_chirotopes(n, many) == one);
    }
}

TEST_CASE("backtracking search agrees with the exhaustive scan at n = 5")
{
    const auto scan = enumerate_chirotopes_by_scan(5);
    const auto search = enumerate_chirotopes(5);
    CHECK(scan.size() == 3604);
    CHECK(scan == search);
    CHECK(count_chirotopes(5) == 3604);
    CHECK(enumerate_oms(5).size() == 1802);
}

TEST_CASE("enumeration filters")
{
    EnumerationOptions loop_free;
    loop_free.loop_free = true;
    for (const auto& c : enumerate_chirotopes(5, loop_free))
        CHECK(loops(c).empty());
    EnumerationOptions uniform;
    uniform.uniform_only = true;
    for (const auto& c : enumerate_chirotopes(5, uniform))
        CHECK(c.is_uniform());
}

TEST_CASE("enumeration is closed under relabeling and negation")
{
    const auto c4 = enumerate_chirotopes(4);
    const std::set<Chirotope> all(c4.begin(), c4.end());
    std::vector<int> p{0, 1, 2, 3};
    do
        for (const auto& c : c4)
            CHECK(all.contains(relabel(c, p)));
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& c : c4)
        CHECK(all.contains(-c));

    const auto c5 = enumerate_chirotopes(5);
    const std::set<Chirotope> all5(c5.begin(), c5.end());
    for (const auto& c : c5)
        CHECK(all5.contains(-c));
}

TEST_CASE("realizable samples appear in the enumeration")
{
    for (int n : {3, 4, 5}) {
        const auto all = enumerate_chirotopes(n);
        const std::set<Chirotope> set(all.begin(), all.end());
        for (std::uint64_t i = 0; i < 200; ++i) {
            const auto config = sample_config(n, derive_seed(5, i), 3, i % 2 ? Degeneracy::Mixed : Degeneracy::None);
            CHECK(set.contains(order_type(config)));
        }
    }
}

TEST_CASE("MacPhersonian posets")
{
    const auto p3 = macphersonian(enumerate_oms(3));
    CHECK(p3.size() == 1);
    CHECK(p3.hasse().empty());
    const auto o3 = oriented_macphersonian(enumerate_chirotopes(3));
    CHECK(o3.size() == 2);
    CHECK(o3.hasse().empty());

    const auto oms = enumerate_oms(4);
    const auto p4 = macphersonian(oms);
    std::vector<std::string> maximal;
    for (auto i : p4.maximal())
        maximal.push_back(p4.labels()[i]);
    std::vector<std::string> uniform;
    for (const auto& m : oms)
        if (m.canonical().is_uniform())
            uniform.push_back(m.str());
    CHECK(maximal.size() == 8);
    CHECK(maximal == uniform);
}

TEST_CASE("strict weak maps lose bases")
{
    const auto oms = enumerate_oms(4);
    for (const auto& lo : oms)
        for (const auto& hi : oms) {
            if (lo == hi || !weak_leq(lo, hi))
                continue;
            const auto b0 = bases(lo.canonical());
            const auto b1 = bases(hi.canonical());
            CHECK(std::includes(b1.begin(), b1.end(), b0.begin(), b0.end()));
            CHECK(b0.size() < b1.size());
        }
}

TEST_CASE("Hasse diagram equals an independent transitive reduction")
{
    for (int n : {3, 4, 5}) {
        const auto p = macphersonian(enumerate_oms(n));
        auto edges = p.hasse();
        std::sort(edges.begin(), edges.end());
        CHECK(edges == oracle::transitive_reduction(strict_order(p)));
    }
    const auto o4 = oriented_macphersonian(enumerate_chirotopes(4));
    auto edges = o4.hasse();
    std::sort(edges.begin(), edges.end());
    CHECK(edges == oracle::transitive_reduction(strict_order(o4)));
}

TEST_CASE("build_poset rejects non-orders")
{
    const std::vector<std::string> labels{"a", "b"};
    CHECK_THROWS_AS(build_poset(labels, [](std::size_t, std::size_t) { return true; }), StructuralError);
    CHECK_THROWS_AS(build_poset(labels, [](std::size_t a, std::size_t b) { return a != b; }), StructuralError);
    const std::vector<std::string> three{"a", "b", "c"};
    // 0 < 1 < 2 without 0 < 2.
    CHECK_THROWS_AS(build_poset(three,
                                [](std::size_t a, std::size_t b) { return a == b || (a == 0 && b == 1) || (a == 1 && b == 2); }),
                    StructuralError);
    CHECK_THROWS_AS(Poset::from_hasse(three, {{0, 1}, {1, 2}, {2, 0}}), StructuralError);
}

TEST_CASE("chains")
{
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    const auto antichain = build_poset(labels, [](std::size_t a, std::size_t b) { return a == b; });
    CHECK(chains(antichain).size() == 4);
    CHECK(chains(total_order(3)).size() == 7);
    CHECK(chain_counts(total_order(3)) == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("chain counts equal brute-force subset filtering")
{
    Pcg32 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        // Random order: a random DAG over 0..k-1 closed transitively.
        const std::size_t k = 4 + rng.bounded(9);
        std::vector<std::vector<bool>> less(k, std::vector<bool>(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                less[a][b] = rng.bounded(3) == 0;
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    if (less[a][m] && less[m][b])
                        less[a][b] = true;
        std::vector<std::string> labels(k);
        const auto p = build_poset(labels, [&](std::size_t a, std::size_t b) { return a == b || less[a][b]; });
        const auto expected = oracle::chain_counts(k, less);
        CHECK(chain_counts(p) == expected);
        std::vector<std::size_t> listed;
        for (const auto& c : chains(p)) {
            if (listed.size() < c.size())
                listed.resize(c.size(), 0);
            ++listed[c.size() - 1];
            for (std::size_t i = 0; i + 1 < c.size(); ++i)
                CHECK(p.less(c[i], c[i + 1]));
        }
        CHECK(listed == expected);
        auto edges = p.hasse();
        std::sort(edges.begin(), edges.end());
        CHECK(edges == oracle::transitive_reduction(less));
    }
}
