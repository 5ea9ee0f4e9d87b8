#include "omtk/chirotope.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <utility>

namespace omtk {

namespace {

void check_shape(int n, std::size_t count)
{
    if (n < 3)
        throw DimensionError("rank-3 chirotopes need n >= 3, got " + std::to_string(n));
    if (n > SignVector::kMaxElements)
        throw DimensionError("ground set larger than 64 elements");
    if (count != choose3(static_cast<std::size_t>(n)))
        throw DimensionError("sign map has " + std::to_string(count) + " entries, expected C(" +
                             std::to_string(n) + ",3) = " +
                             std::to_string(choose3(static_cast<std::size_t>(n))));
}

// Alternating lookup without bounds checks; i, j, k in [0, n).
Sign alternating(int n, std::span<const Sign> values, int i, int j, int k) noexcept
{
    if (i == j || j == k || i == k)
        return Sign::Zero;
    bool odd = false;
    if (i > j) {
        std::swap(i, j);
        odd = !odd;
    }
    if (j > k) {
        std::swap(j, k);
        odd = !odd;
    }
    if (i > j) {
        std::swap(i, j);
        odd = !odd;
    }
    const Sign s = values[triple_index(n, i, j, k)];
    return odd ? negate(s) : s;
}

std::uint64_t element_mask(const Triple& t) noexcept
{
    return (std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) | (std::uint64_t{1} << t[2]);
}

std::string label(std::initializer_list<int> elements)
{
    std::string out = "(";
    bool first = true;
    for (int e : elements) {
        if (!first)
            out += ',';
        out += std::to_string(e + 1);
        first = false;
    }
    return out + ")";
}

}  // namespace

std::vector<Triple> sorted_triples(int n)
{
    std::vector<Triple> out;
    out.reserve(choose3(static_cast<std::size_t>(std::max(n, 0))));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                out.push_back({i, j, k});
    return out;
}

ChirotopeReport is_chirotope(int n, std::span<const Sign> values)
{
    check_shape(n, values.size());
    ChirotopeReport report;

    const auto triples = sorted_triples(n);
    std::vector<std::uint64_t> basis_masks;
    for (std::size_t t = 0; t < triples.size(); ++t)
        if (values[t] != Sign::Zero)
            basis_masks.push_back(element_mask(triples[t]));

    if (basis_masks.empty()) {
        report.violation = ChirotopeViolation::AllZero;
        report.detail = "all triples have sign 0";
        return report;
    }

    // Basis exchange: for bases B1, B2 and x in B1 \ B2 there is y in B2 \ B1
    // with B1 - x + y a basis.
    const std::unordered_set<std::uint64_t> basis_set(basis_masks.begin(), basis_masks.end());
    for (std::uint64_t b1 : basis_masks) {
        for (std::uint64_t b2 : basis_masks) {
            for (std::uint64_t out_bits = b1 & ~b2; out_bits != 0; out_bits &= out_bits - 1) {
                const std::uint64_t x = out_bits & (~out_bits + 1);
                bool found = false;
                for (std::uint64_t in_bits = b2 & ~b1; in_bits != 0 && !found; in_bits &= in_bits - 1) {
                    const std::uint64_t y = in_bits & (~in_bits + 1);
                    found = basis_set.contains((b1 & ~x) | y);
                }
                if (!found) {
                    report.violation = ChirotopeViolation::BasisExchange;
                    report.detail = "basis exchange fails for bases with masks " +
                                    std::to_string(b1) + ", " + std::to_string(b2);
                    return report;
                }
            }
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b == a)
                continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b)
                    continue;
                for (int d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c)
                        continue;
                    for (int e = 0; e < n; ++e) {
                        if (e == a || e == b || e == c || e == d)
                            continue;
                        const Sign p1 = alternating(n, values, a, b, c) * alternating(n, values, a, d, e);
                        const Sign p2 = alternating(n, values, a, b, d) * alternating(n, values, a, c, e);
                        const Sign p3 = alternating(n, values, a, b, e) * alternating(n, values, a, c, d);
                        const Sign terms[3] = {p1, negate(p2), p3};
                        const bool has_plus = std::find(terms, terms + 3, Sign::Plus) != terms + 3;
                        const bool has_minus = std::find(terms, terms + 3, Sign::Minus) != terms + 3;
                        if (has_plus != has_minus) {
                            report.violation = ChirotopeViolation::GrassmannPlucker;
                            report.detail = "three-term Grassmann-Plucker sign condition fails at " +
                                            label({a, b, c, d, e});
                            return report;
                        }
                    }
                }
            }
        }
    }

    report.valid = true;
    return report;
}

Chirotope::Chirotope(int n, std::vector<Sign> values) : n_(n), values_(std::move(values))
{
    const auto report = is_chirotope(n_, values_);
    if (!report)
        throw InvalidChirotope("not a rank-3 chirotope: " + report.detail);
}

Chirotope Chirotope::unchecked(int n, std::vector<Sign> values)
{
    check_shape(n, values.size());
    Chirotope chi;
    chi.n_ = n;
    chi.values_ = std::move(values);
    return chi;
}

Chirotope Chirotope::from_string(int n, std::string_view signs)
{
    std::vector<Sign> values;
    values.reserve(signs.size());
    for (char c : signs)
        values.push_back(sign_from_char(c));
    if (n < 3)
        throw DimensionError("rank-3 chirotopes need n >= 3, got n=" + std::to_string(n));
    if (values.size() != choose3(static_cast<std::size_t>(n)))
        throw ParseError("chirotope string of length " + std::to_string(signs.size()) +
                         " does not match n=" + std::to_string(n));
    return Chirotope(n, std::move(values));
}

Chirotope Chirotope::parse(std::string_view text)
{
    constexpr std::string_view n_tag = "n=";
    constexpr std::string_view chi_tag = ";chi=";
    const auto sep = text.find(chi_tag);
    if (!text.starts_with(n_tag) || sep == std::string_view::npos)
        throw ParseError("expected 'n=<n>;chi=<signs>', got '" + std::string(text) + "'");
    int n = 0;
    const auto digits = text.substr(n_tag.size(), sep - n_tag.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError("invalid ground-set size '" + std::string(digits) + "'");
    return from_string(n, text.substr(sep + chi_tag.size()));
}

Sign Chirotope::operator()(int i, int j, int k) const noexcept
{
    return alternating(n_, values_, i, j, k);
}

Sign Chirotope::evaluate(int i, int j, int k) const
{
    for (int x : {i, j, k})
        if (x < 0 || x >= n_)
            throw IndexError("element index " + std::to_string(x) + " outside [0, " +
                             std::to_string(n_) + ")");
    return (*this)(i, j, k);
}

Chirotope Chirotope::operator-() const
{
    Chirotope out = *this;
    for (auto& s : out.values_)
        s = negate(s);
    return out;
}

std::string Chirotope::encoding() const
{
    std::string out;
    out.reserve(values_.size());
    for (Sign s : values_)
        out.push_back(to_char(s));
    return out;
}

std::string Chirotope::str() const
{
    return "n=" + std::to_string(n_) + ";chi=" + encoding();
}

bool Chirotope::is_uniform() const noexcept
{
    return std::none_of(values_.begin(), values_.end(), [](Sign s) { return s == Sign::Zero; });
}

bool weak_leq(const Chirotope& lower, const Chirotope& upper)
{
    if (lower.n() != upper.n())
        throw DimensionError("weak order compares chirotopes on different ground sets");
    const auto a = lower.values();
    const auto b = upper.values();
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!sign_leq_v(a[t], b[t]))
            return false;
    return true;
}

std::vector<Triple> bases(const Chirotope& chi)
{
    std::vector<Triple> out;
    const auto triples = sorted_triples(chi.n());
    for (std::size_t t = 0; t < triples.size(); ++t)
        if (chi.value(t) != Sign::Zero)
            out.push_back(triples[t]);
    return out;
}

std::vector<int> loops(const Chirotope& chi)
{
    std::uint64_t covered = 0;
    for (const auto& b : bases(chi))
        covered |= element_mask(b);
    std::vector<int> out;
    for (int i = 0; i < chi.n(); ++i)
        if (!(covered & (std::uint64_t{1} << i)))
            out.push_back(i);
    return out;
}

std::vector<int> support(const Chirotope& chi)
{
    const auto l = loops(chi);
    std::vector<int> out;
    for (int i = 0; i < chi.n(); ++i)
        if (!std::binary_search(l.begin(), l.end(), i))
            out.push_back(i);
    return out;
}

Chirotope restriction(const Chirotope& chi, std::span<const int> kept)
{
    int previous = -1;
    for (int i : kept) {
        if (i < 0 || i >= chi.n())
            throw IndexError("restriction element " + std::to_string(i) + " out of range");
        if (i <= previous)
            throw IndexError("restriction elements must be strictly increasing");
        previous = i;
    }
    const int m = static_cast<int>(kept.size());
    if (m < 3)
        throw RankError("restriction to fewer than 3 elements has rank below 3");
    std::vector<Sign> values;
    values.reserve(choose3(static_cast<std::size_t>(m)));
    for (const auto& [i, j, k] : sorted_triples(m))
        values.push_back(chi(kept[static_cast<std::size_t>(i)], kept[static_cast<std::size_t>(j)],
                             kept[static_cast<std::size_t>(k)]));
    if (std::all_of(values.begin(), values.end(), [](Sign s) { return s == Sign::Zero; }))
        throw RankError("no basis inside the restriction set; rank drops below 3");
    return Chirotope(m, std::move(values));
}

Chirotope relabel(const Chirotope& chi, std::span<const int> perm)
{
    const int n = chi.n();
    if (static_cast<int>(perm.size()) != n)
        throw DimensionError("permutation length differs from the ground set");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw PreconditionError("relabeling map is not a bijection of the ground set");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<Sign> values;
    values.reserve(chi.values().size());
    for (const auto& [i, j, k] : sorted_triples(n))
        values.push_back(chi(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)],
                             perm[static_cast<std::size_t>(k)]));
    return Chirotope::unchecked(n, std::move(values));
}

Chirotope canonicalize(const Chirotope& chi)
{
    Chirotope neg = -chi;
    return neg.encoding() < chi.encoding() ? neg : chi;
}

OrientedMatroid::OrientedMatroid(const Chirotope& chi) : canonical_(canonicalize(chi)) {}

bool weak_leq(const OrientedMatroid& lower, const OrientedMatroid& upper)
{
    return weak_leq(lower.canonical(), upper.canonical()) ||
           weak_leq(lower.canonical(), -upper.canonical());
}

OrientedMatroid restriction(const OrientedMatroid& m, std::span<const int> kept)
{
    return OrientedMatroid(restriction(m.canonical(), kept));
}

}  // namespace omtk
