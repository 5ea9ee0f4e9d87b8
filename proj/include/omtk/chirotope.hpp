/**
 * Rank-3 chirotopes on [n] and the oriented matroids they represent.
 *
 * A chirotope stores one sign per lexicographically ordered triple
 * i < j < k; evaluation on unsorted triples applies alternation. An
 * oriented matroid is identified with its canonical representative, the
 * member of {χ, -χ} whose text encoding is smaller in ASCII order.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omtk/sign.hpp"

namespace omtk {

/// A sign map that does not satisfy the rank-3 chirotope axioms.
class InvalidChirotope : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Triple = std::array<int, 3>;

constexpr std::size_t choose3(std::size_t n) noexcept
{
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

constexpr std::size_t choose2(std::size_t n) noexcept
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

/// Lexicographic rank of the sorted triple i < j < k among the triples of [n].
constexpr std::size_t triple_index(int n, int i, int j, int k) noexcept
{
    const auto un = static_cast<std::size_t>(n);
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    return choose3(un) - choose3(un - ui) + choose2(un - ui - 1) - choose2(un - uj) +
           static_cast<std::size_t>(k - j - 1);
}

/// All sorted triples of [n] in lexicographic order.
std::vector<Triple> sorted_triples(int n);

enum class ChirotopeViolation { None, AllZero, BasisExchange, GrassmannPlucker };

struct ChirotopeReport {
    bool valid = false;
    ChirotopeViolation violation = ChirotopeViolation::None;
    std::string detail;

    explicit operator bool() const noexcept { return valid; }
};

/**
 * Checks the rank-3 chirotope axioms on a sign map given over sorted triples.
 *
 * The map must be nonzero, its nonzero triples must satisfy basis exchange,
 * and for every 5-tuple of distinct elements (a,b,c,d,e) the signs
 * {χ(abc)χ(ade), -χ(abd)χ(ace), χ(abe)χ(acd)} must be all zero or contain
 * both + and -.
 *
 * @throws DimensionError if `values.size() != C(n,3)` or n < 3.
 */
ChirotopeReport is_chirotope(int n, std::span<const Sign> values);

class Chirotope {
public:
    /// Validating constructor; throws InvalidChirotope on failure.
    Chirotope(int n, std::vector<Sign> values);

    /// Builds without running the axiom check. Shape is still validated.
    static Chirotope unchecked(int n, std::vector<Sign> values);

    /// Parses the bare sign string of length C(n,3).
    static Chirotope from_string(int n, std::string_view signs);

    /// Parses `n=<n>;chi=<signs>`.
    static Chirotope parse(std::string_view text);

    int n() const noexcept { return n_; }
    std::span<const Sign> values() const noexcept { return values_; }
    Sign value(std::size_t triple) const noexcept { return values_[triple]; }

    /// Alternating evaluation, 0-based indices; zero on repeated indices.
    Sign operator()(int i, int j, int k) const noexcept;

    /// Checked evaluation.
    Sign evaluate(int i, int j, int k) const;

    Chirotope operator-() const;

    /// Sign string in lexicographic triple order.
    std::string encoding() const;

    /// `n=<n>;chi=<signs>`.
    std::string str() const;

    bool is_uniform() const noexcept;

    friend bool operator==(const Chirotope&, const Chirotope&) = default;
    friend bool operator<(const Chirotope& a, const Chirotope& b) { return a.key() < b.key(); }

private:
    Chirotope() = default;
    std::pair<int, std::string> key() const { return {n_, encoding()}; }

    int n_ = 0;
    std::vector<Sign> values_;
};

/// Pointwise ≤_v over all triples.
bool weak_leq(const Chirotope& lower, const Chirotope& upper);

/// Indices of the triples with nonzero sign.
std::vector<Triple> bases(const Chirotope& chi);

/// 0-based loops: elements contained in no basis.
std::vector<int> loops(const Chirotope& chi);

/// 0-based complement of loops().
std::vector<int> support(const Chirotope& chi);

/**
 * Restriction to the elements of `kept` (0-based, strictly increasing),
 * reindexed to 0..|kept|-1.
 *
 * @throws RankError if no triple inside `kept` is a basis.
 */
Chirotope restriction(const Chirotope& chi, std::span<const int> kept);

/// result(i,j,k) = χ(π(i),π(j),π(k)); `perm` is a 0-based bijection.
Chirotope relabel(const Chirotope& chi, std::span<const int> perm);

class OrientedMatroid {
public:
    /// Takes either member of {χ, -χ}.
    explicit OrientedMatroid(const Chirotope& chi);

    static OrientedMatroid parse(std::string_view text) { return OrientedMatroid(Chirotope::parse(text)); }

    const Chirotope& canonical() const noexcept { return canonical_; }
    int n() const noexcept { return canonical_.n(); }
    std::string str() const { return canonical_.str(); }

    friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;
    friend bool operator<(const OrientedMatroid& a, const OrientedMatroid& b)
    {
        return a.canonical_ < b.canonical_;
    }

private:
    Chirotope canonical_;
};

/// The lexicographically smaller encoding among {χ, -χ}.
Chirotope canonicalize(const Chirotope& chi);

/// M0 ≤_w M1 iff some representative of M0 is ≤_w some representative of M1.
bool weak_leq(const OrientedMatroid& lower, const OrientedMatroid& upper);

inline std::vector<int> loops(const OrientedMatroid& m) { return loops(m.canonical()); }
inline std::vector<int> support(const OrientedMatroid& m) { return support(m.canonical()); }

OrientedMatroid restriction(const OrientedMatroid& m, std::span<const int> kept);

}  // namespace omtk
