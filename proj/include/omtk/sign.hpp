/**
 * The sign algebra {0,+,-}, sign vectors over a finite ground set, and the
 * topped lattice {0,+,-}^n ∪ {⊤} used to generate covector spheres.
 *
 * Indexing convention: every C++ API takes 0-based element indices. Text,
 * JSON and command-line surfaces use 1-based element labels [n] = {1..n};
 * the conversion happens in io.hpp and the CLI, nowhere else.
 */
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omtk/errors.hpp"

namespace omtk {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign negate(Sign s) noexcept
{
    return static_cast<Sign>(-static_cast<int>(s));
}

constexpr Sign operator-(Sign s) noexcept { return negate(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept
{
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// 0 <_v (+), 0 <_v (-), and (+), (-) are incomparable.
constexpr bool sign_leq_v(Sign a, Sign b) noexcept
{
    return a == Sign::Zero || a == b;
}

template <typename Integer>
constexpr Sign sign_of(Integer value) noexcept
{
    return value > 0 ? Sign::Plus : (value < 0 ? Sign::Minus : Sign::Zero);
}

char to_char(Sign s) noexcept;
Sign sign_from_char(char c);

/**
 * An element of {0,+,-}^n stored as two disjoint bitmasks.
 *
 * Bit i of `plus()` (resp. `minus()`) is set iff entry i is + (resp. -).
 * Ground sets are limited to kMaxElements elements.
 */
class SignVector {
public:
    static constexpr int kMaxElements = 64;

    SignVector() = default;
    explicit SignVector(int n);
    SignVector(int n, std::uint64_t plus, std::uint64_t minus);
    explicit SignVector(std::span<const Sign> entries);

    /// Parses the n-character form over {0,+,-}.
    static SignVector parse(std::string_view text);

    int size() const noexcept { return n_; }
    std::uint64_t plus() const noexcept { return plus_; }
    std::uint64_t minus() const noexcept { return minus_; }
    std::uint64_t support() const noexcept { return plus_ | minus_; }
    std::uint64_t zeros() const noexcept { return full_mask(n_) & ~support(); }
    bool is_zero() const noexcept { return support() == 0; }

    Sign operator[](int i) const noexcept
    {
        const std::uint64_t bit = std::uint64_t{1} << i;
        return (plus_ & bit) ? Sign::Plus : ((minus_ & bit) ? Sign::Minus : Sign::Zero);
    }

    Sign at(int i) const;
    void set(int i, Sign s);

    SignVector operator-() const noexcept { return SignVector(n_, minus_, plus_, Unchecked{}); }

    std::string str() const;
    std::vector<Sign> entries() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

    /// Lexicographic order of the text forms under ASCII ('+' < '-' < '0').
    friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept;

    static constexpr std::uint64_t full_mask(int n) noexcept
    {
        return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

private:
    struct Unchecked {};
    SignVector(int n, std::uint64_t plus, std::uint64_t minus, Unchecked) noexcept
        : n_(n), plus_(plus), minus_(minus) {}

    int n_ = 0;
    std::uint64_t plus_ = 0;
    std::uint64_t minus_ = 0;
};

/// Pointwise ≤_v.
bool vector_leq_v(const SignVector& sigma, const SignVector& tau);

/// Composition σ∘τ: σ(i) where nonzero, τ(i) elsewhere.
SignVector compose(const SignVector& sigma, const SignVector& tau);

/// True iff no coordinate carries opposite nonzero signs.
bool conformal(const SignVector& sigma, const SignVector& tau);

/// Keeps the entries indexed by `indices` (0-based, strictly increasing).
SignVector restrict(const SignVector& sigma, std::span<const int> indices);

/// Either a sign vector or the distinguished maximum ⊤.
class ToppedSignVector {
public:
    ToppedSignVector(const SignVector& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static ToppedSignVector top() { return ToppedSignVector(); }

    bool is_top() const noexcept { return !value_.has_value(); }
    const SignVector& vector() const;

    std::string str() const { return is_top() ? std::string("T") : value_->str(); }

    friend bool operator==(const ToppedSignVector&, const ToppedSignVector&) = default;

private:
    ToppedSignVector() = default;
    std::optional<SignVector> value_;
};

/// Join in ({0,+,-}^n ∪ {⊤}, ≤_v); conflicting coordinates yield ⊤.
ToppedSignVector join_topped(const ToppedSignVector& sigma, const ToppedSignVector& tau);

/// Join of two plain sign vectors, std::nullopt standing for ⊤.
std::optional<SignVector> join(const SignVector& sigma, const SignVector& tau);

}  // namespace omtk

template <>
struct std::hash<omtk::SignVector> {
    std::size_t operator()(const omtk::SignVector& v) const noexcept
    {
        std::uint64_t h = v.plus() * 0x9E3779B97F4A7C15ULL;
        h ^= (v.minus() + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        h ^= static_cast<std::uint64_t>(v.size()) << 57;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};
