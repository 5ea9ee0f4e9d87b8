// Independent reference implementations used only by the tests. They share
// no code with the library beyond the plain value types and are written for
// clarity, not speed.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "omtk/sign.hpp"

namespace oracle {

using omtk::Sign;

inline int sgn(long long x) { return (x > 0) - (x < 0); }

/// Raw sign map on sorted triples, tabulated at every ordered 0-based triple.
struct SignMap {
    int n;
    std::vector<int> table;

    SignMap(int size, const std::string& encoding) : n(size), table(static_cast<std::size_t>(size * size * size), 0)
    {
        std::size_t t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const char c = encoding.at(t++);
                    const int s = c == '+' ? 1 : (c == '-' ? -1 : 0);
                    // Even permutations keep the sign, odd ones flip it.
                    at(i, j, k) = at(j, k, i) = at(k, i, j) = s;
                    at(j, i, k) = at(i, k, j) = at(k, j, i) = -s;
                }
    }

    int& at(int a, int b, int c) { return table[static_cast<std::size_t>((a * n + b) * n + c)]; }
    int operator()(int a, int b, int c) const { return table[static_cast<std::size_t>((a * n + b) * n + c)]; }
};

/// Ordered 5-tuples of distinct elements of [n].
inline const std::vector<std::array<int, 5>>& distinct_five_tuples(int n)
{
    static std::map<int, std::vector<std::array<int, 5>>> cache;
    auto& out = cache[n];
    if (out.empty())
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int e = 0; e < n; ++e)
                            if (std::set<int>{a, b, c, d, e}.size() == 5)
                                out.push_back({a, b, c, d, e});
    return out;
}

/**
 * Chirotope predicate straight from the definition: nonzero, basis exchange
 * over all pairs of bases, and the three-term sign condition over every
 * ordered 5-tuple of distinct elements.
 */
inline bool is_chirotope(int n, const std::string& encoding)
{
    const SignMap chi(n, encoding);
    std::vector<std::set<int>> bases;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (chi(i, j, k) != 0)
                    bases.push_back({i, j, k});
    if (bases.empty())
        return false;
    auto is_basis = [&](const std::set<int>& b) {
        std::vector<int> v(b.begin(), b.end());
        return chi(v[0], v[1], v[2]) != 0;
    };
    for (const auto& b1 : bases)
        for (const auto& b2 : bases)
            for (int x : b1) {
                if (b2.contains(x))
                    continue;
                bool found = false;
                for (int y : b2) {
                    if (b1.contains(y))
                        continue;
                    auto swapped = b1;
                    swapped.erase(x);
                    swapped.insert(y);
                    found = found || is_basis(swapped);
                }
                if (!found)
                    return false;
            }
    for (const auto& [a, b, c, d, e] : distinct_five_tuples(n)) {
        const int terms[3] = {chi(a, b, c) * chi(a, d, e), -chi(a, b, d) * chi(a, c, e), chi(a, b, e) * chi(a, c, d)};
        const bool has_plus = std::count(terms, terms + 3, 1) > 0;
        const bool has_minus = std::count(terms, terms + 3, -1) > 0;
        const bool all_zero = std::count(terms, terms + 3, 0) == 3;
        if (!all_zero && !(has_plus && has_minus))
            return false;
    }
    return true;
}

inline std::string vector_string(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += x > 0 ? '+' : (x < 0 ? '-' : '0');
    return s;
}

/// Cocircuits σ(x) = χ(i,j,x) over all ordered pairs, as strings.
inline std::set<std::string> cocircuits(int n, const std::string& encoding)
{
    const SignMap chi(n, encoding);
    std::set<std::string> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> v(n);
            for (int x = 0; x < n; ++x)
                v[x] = chi(i, j, x);
            if (std::any_of(v.begin(), v.end(), [](int s) { return s != 0; }))
                out.insert(vector_string(v));
        }
    return out;
}

inline std::string compose(const std::string& a, const std::string& b)
{
    std::string out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == '0')
            out[i] = b[i];
    return out;
}

/// Covectors as the closure of {0} ∪ cocircuits under composition.
inline std::set<std::string> covectors(int n, const std::string& encoding)
{
    std::set<std::string> out = cocircuits(n, encoding);
    out.insert(std::string(n, '0'));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::string> current(out.begin(), out.end());
        for (const auto& a : current)
            for (const auto& b : current)
                grew = out.insert(compose(a, b)).second || grew;
    }
    return out;
}

inline bool leq_v(const std::string& a, const std::string& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != '0' && a[i] != b[i])
            return false;
    return true;
}

/// Brute-force count of chains by size over all subsets (at most ~16 elements).
inline std::vector<std::size_t> chain_counts(std::size_t size, const std::vector<std::vector<bool>>& less)
{
    std::vector<std::size_t> counts;
    for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < size; ++i)
            if (mask >> i & 1)
                members.push_back(i);
        bool chain = true;
        for (std::size_t x = 0; x < members.size() && chain; ++x)
            for (std::size_t y = x + 1; y < members.size() && chain; ++y)
                chain = less[members[x]][members[y]] || less[members[y]][members[x]];
        if (chain) {
            if (counts.size() < members.size())
                counts.resize(members.size(), 0);
            ++counts[members.size() - 1];
        }
    }
    return counts;
}

/// Covering pairs: a < c with no b strictly between.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> transitive_reduction(
    const std::vector<std::vector<bool>>& less)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const std::size_t n = less.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            if (!less[a][c])
                continue;
            bool covered = true;
            for (std::size_t b = 0; b < n && covered; ++b)
                covered = !(less[a][b] && less[b][c]);
            if (covered)
                out.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Rank over GF(2) by textbook row reduction on a 0/1 matrix.
inline std::size_t rank_gf2(std::vector<std::vector<int>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] % 2 == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c] % 2 != 0)
                for (std::size_t k = 0; k < cols; ++k)
                    m[r][k] = (m[r][k] + m[rank][k]) % 2;
        ++rank;
    }
    return rank;
}

inline long long det3(const std::array<long long, 3>& a, const std::array<long long, 3>& b,
                      const std::array<long long, 3>& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Partitions of d inside a k x m box, by recursion on the largest part.
inline std::size_t partitions_in_box(int d, int parts, int largest)
{
    if (d == 0)
        return 1;
    if (parts == 0 || largest == 0)
        return 0;
    std::size_t total = 0;
    for (int first = 1; first <= std::min(d, largest); ++first)
        total += partitions_in_box(d - first, parts - 1, first);
    return total;
}

inline std::size_t binomial(int n, int k)
{
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

}  // namespace oracle
