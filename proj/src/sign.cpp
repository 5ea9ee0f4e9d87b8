#include "omtk/sign.hpp"

#include <string>

namespace omtk {

char to_char(Sign s) noexcept
{
    switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: break;
    }
    return '0';
}

Sign sign_from_char(char c)
{
    switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: break;
    }
    throw ParseError(std::string("invalid sign character '") + c + "'");
}

namespace {

void check_size(int n)
{
    if (n < 0 || n > SignVector::kMaxElements)
        throw DimensionError("sign vector length " + std::to_string(n) + " outside [0, 64]");
}

void check_same_size(const SignVector& a, const SignVector& b)
{
    if (a.size() != b.size())
        throw DimensionError("sign vector lengths differ: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
}

// Position of the character in the ASCII order '+' < '-' < '0'.
int ascii_rank(Sign s) noexcept
{
    return s == Sign::Plus ? 0 : (s == Sign::Minus ? 1 : 2);
}

}  // namespace

SignVector::SignVector(int n) : n_(n)
{
    check_size(n);
}

SignVector::SignVector(int n, std::uint64_t plus, std::uint64_t minus)
    : n_(n), plus_(plus), minus_(minus)
{
    check_size(n);
    if ((plus & minus) != 0 || ((plus | minus) & ~full_mask(n)) != 0)
        throw DimensionError("sign vector masks overlap or exceed the ground set");
}

SignVector::SignVector(std::span<const Sign> entries) : SignVector(static_cast<int>(entries.size()))
{
    for (int i = 0; i < n_; ++i)
        set(i, entries[static_cast<std::size_t>(i)]);
}

SignVector SignVector::parse(std::string_view text)
{
    if (text.size() > static_cast<std::size_t>(kMaxElements))
        throw ParseError("sign vector text longer than 64 characters");
    SignVector v(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i)
        v.set(static_cast<int>(i), sign_from_char(text[i]));
    return v;
}

Sign SignVector::at(int i) const
{
    if (i < 0 || i >= n_)
        throw IndexError("sign vector index " + std::to_string(i) + " out of range");
    return (*this)[i];
}

void SignVector::set(int i, Sign s)
{
    if (i < 0 || i >= n_)
        throw IndexError("sign vector index " + std::to_string(i) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    plus_ &= ~bit;
    minus_ &= ~bit;
    if (s == Sign::Plus)
        plus_ |= bit;
    else if (s == Sign::Minus)
        minus_ |= bit;
}

std::string SignVector::str() const
{
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        out[static_cast<std::size_t>(i)] = to_char((*this)[i]);
    return out;
}

std::vector<Sign> SignVector::entries() const
{
    std::vector<Sign> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        out[static_cast<std::size_t>(i)] = (*this)[i];
    return out;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept
{
    const std::uint64_t diff = (a.plus_ ^ b.plus_) | (a.minus_ ^ b.minus_);
    if (diff != 0) {
        const int first = std::countr_zero(diff);
        if (first < a.n_ && first < b.n_)
            return ascii_rank(a[first]) <=> ascii_rank(b[first]);
    }
    return a.n_ <=> b.n_;
}

bool vector_leq_v(const SignVector& sigma, const SignVector& tau)
{
    check_same_size(sigma, tau);
    return (sigma.plus() & ~tau.plus()) == 0 && (sigma.minus() & ~tau.minus()) == 0;
}

SignVector compose(const SignVector& sigma, const SignVector& tau)
{
    check_same_size(sigma, tau);
    const std::uint64_t free = ~sigma.support();
    return SignVector(sigma.size(), sigma.plus() | (tau.plus() & free),
                      sigma.minus() | (tau.minus() & free));
}

bool conformal(const SignVector& sigma, const SignVector& tau)
{
    check_same_size(sigma, tau);
    return ((sigma.plus() & tau.minus()) | (sigma.minus() & tau.plus())) == 0;
}

SignVector restrict(const SignVector& sigma, std::span<const int> indices)
{
    SignVector out(static_cast<int>(indices.size()));
    int previous = -1;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const int i = indices[k];
        if (i < 0 || i >= sigma.size())
            throw IndexError("restriction index " + std::to_string(i) + " out of range");
        if (i <= previous)
            throw IndexError("restriction indices must be strictly increasing");
        previous = i;
        out.set(static_cast<int>(k), sigma[i]);
    }
    return out;
}

const SignVector& ToppedSignVector::vector() const
{
    if (!value_)
        throw PreconditionError("the top element has no sign vector");
    return *value_;
}

std::optional<SignVector> join(const SignVector& sigma, const SignVector& tau)
{
    if (!conformal(sigma, tau))
        return std::nullopt;
    return SignVector(sigma.size(), sigma.plus() | tau.plus(), sigma.minus() | tau.minus());
}

ToppedSignVector join_topped(const ToppedSignVector& sigma, const ToppedSignVector& tau)
{
    if (!sigma.is_top() && !tau.is_top())
        check_same_size(sigma.vector(), tau.vector());
    if (sigma.is_top() || tau.is_top())
        return ToppedSignVector::top();
    auto joined = join(sigma.vector(), tau.vector());
    return joined ? ToppedSignVector(*joined) : ToppedSignVector::top();
}

}  // namespace omtk
