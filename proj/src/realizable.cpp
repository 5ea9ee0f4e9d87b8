#include "omtk/realizable.hpp"

#include <charconv>
#include <set>

namespace omtk {

namespace {

bool spans(const IntConfiguration& v)
{
    const int n = static_cast<int>(v.cols());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const IntVector3 normal = v.col(i).cross(v.col(j));
            if (normal.isZero())
                continue;
            for (int k = j + 1; k < n; ++k)
                if (v.col(k).dot(normal) != 0)
                    return true;
        }
    return false;
}

std::int64_t parse_int(std::string_view text)
{
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("invalid integer '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

}  // namespace

VectorConfig::VectorConfig(IntConfiguration vectors) : vectors_(std::move(vectors))
{
    if ((vectors_.array().abs() > kMaxCoordinate).any())
        throw DimensionError("vector coordinates must lie in [-2^15, 2^15]");
    if (vectors_.cols() > SignVector::kMaxElements)
        throw DimensionError("configurations are limited to 64 vectors");
    if (!spans(vectors_))
        throw RankError("vector configuration does not span R^3");
}

VectorConfig VectorConfig::parse(std::string_view text)
{
    const auto sep = text.find(";v=");
    if (!text.starts_with("n=") || sep == std::string_view::npos)
        throw ParseError("expected 'n=<n>;v=<x,y,z;...>'");
    const auto n = parse_int(text.substr(2, sep - 2));
    const auto rows = split(text.substr(sep + 3), ';');
    if (n < 0 || static_cast<std::size_t>(n) != rows.size())
        throw ParseError("vector count does not match n=" + std::to_string(n));
    IntConfiguration v(3, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto coords = split(rows[static_cast<std::size_t>(i)], ',');
        if (coords.size() != 3)
            throw ParseError("each vector needs three coordinates");
        for (Eigen::Index r = 0; r < 3; ++r)
            v(r, i) = parse_int(coords[static_cast<std::size_t>(r)]);
    }
    return VectorConfig(std::move(v));
}

std::string VectorConfig::str() const
{
    std::string out = "n=" + std::to_string(n()) + ";v=";
    for (int i = 0; i < n(); ++i) {
        if (i > 0)
            out += ';';
        out += std::to_string(vectors_(0, i)) + ',' + std::to_string(vectors_(1, i)) + ',' +
               std::to_string(vectors_(2, i));
    }
    return out;
}

std::vector<SignVector> geometric_cocircuits(const VectorConfig& config)
{
    const auto& v = config.vectors();
    const int n = config.n();
    std::set<SignVector> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const IntVector3 normal = v.col(i).cross(v.col(j));
            if (normal.isZero())
                continue;
            SignVector sigma(n);
            for (int k = 0; k < n; ++k)
                sigma.set(k, sign_of(v.col(k).dot(normal)));
            out.insert(sigma);
            out.insert(-sigma);
        }
    return {out.begin(), out.end()};
}

Degeneracy parse_degeneracy(std::string_view name)
{
    if (name == "none")
        return Degeneracy::None;
    if (name == "duplicates")
        return Degeneracy::Duplicates;
    if (name == "negated")
        return Degeneracy::Negated;
    if (name == "zero")
        return Degeneracy::Zero;
    if (name == "coplanar")
        return Degeneracy::Coplanar;
    if (name == "mixed")
        return Degeneracy::Mixed;
    throw ParseError("unknown degeneracy mix '" + std::string(name) + "'");
}

std::string to_string(Degeneracy mix)
{
    switch (mix) {
    case Degeneracy::None: return "none";
    case Degeneracy::Duplicates: return "duplicates";
    case Degeneracy::Negated: return "negated";
    case Degeneracy::Zero: return "zero";
    case Degeneracy::Coplanar: return "coplanar";
    case Degeneracy::Mixed: return "mixed";
    }
    return "none";
}

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream) : increment_((stream << 1u) | 1u)
{
    (*this)();
    state_ += seed;
    (*this)();
}

std::uint32_t Pcg32::operator()()
{
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + increment_;
    const auto shifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (shifted >> rot) | (shifted << ((-rot) & 31u));
}

std::uint32_t Pcg32::bounded(std::uint32_t bound)
{
    const std::uint32_t threshold = (0u - bound) % bound;
    for (;;) {
        const std::uint32_t r = (*this)();
        if (r >= threshold)
            return r % bound;
    }
}

std::int64_t Pcg32::uniform(std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint32_t>(hi - lo + 1)));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finalizer over the combined words.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

void inject(IntConfiguration& v, Degeneracy mix, Pcg32& rng)
{
    const auto n = static_cast<std::uint32_t>(v.cols());
    const auto i = static_cast<Eigen::Index>(rng.bounded(n));
    auto j = static_cast<Eigen::Index>(rng.bounded(n - 1));
    if (j >= i)
        ++j;
    switch (mix) {
    case Degeneracy::None:
    case Degeneracy::Mixed:
        break;
    case Degeneracy::Duplicates:
        v.col(j) = v.col(i);
        break;
    case Degeneracy::Negated:
        v.col(j) = -v.col(i);
        break;
    case Degeneracy::Zero:
        v.col(j).setZero();
        break;
    case Degeneracy::Coplanar: {
        auto k = static_cast<Eigen::Index>(rng.bounded(n - 2));
        for (Eigen::Index taken : {std::min(i, j), std::max(i, j)})
            if (k >= taken)
                ++k;
        auto coefficient = [&rng]() {
            const std::int64_t c = rng.uniform(1, 2);
            return rng.bounded(2) ? c : -c;
        };
        const std::int64_t a = coefficient();
        const std::int64_t b = coefficient();
        v.col(k) = a * v.col(i) + b * v.col(j);
        break;
    }
    }
}

}  // namespace

VectorConfig sample_config(int n, std::uint64_t seed, std::int64_t bound, Degeneracy mix)
{
    if (n < 3 || n > SignVector::kMaxElements)
        throw PreconditionError("sample_config needs 3 <= n <= 64");
    if (bound < 1 || bound > (kMaxCoordinate >> 2))
        throw PreconditionError("coordinate bound must lie in [1, 2^13]");
    Pcg32 rng(seed);
    constexpr int kMaxDraws = 1000000;
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        IntConfiguration v(3, n);
        for (Eigen::Index c = 0; c < n; ++c)
            for (Eigen::Index r = 0; r < 3; ++r)
                v(r, c) = rng.uniform(-bound, bound);
        // With three vectors any degeneracy kills spanning, so none is injected.
        if (n >= 4 && mix == Degeneracy::Mixed) {
            // One to three injections drawn from the four kinds.
            const auto rounds = rng.uniform(1, 3);
            for (std::int64_t r = 0; r < rounds; ++r)
                inject(v, static_cast<Degeneracy>(rng.uniform(1, 4)), rng);
        }
        else if (n >= 4) {
            inject(v, mix, rng);
        }
        if (spans(v))
            return VectorConfig(std::move(v));
    }
    throw RankError("no spanning configuration found within 10^6 draws");
}

}  // namespace omtk
