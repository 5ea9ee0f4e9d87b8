#include "omtk/macph.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace omtk {

namespace {

void check_range(int n)
{
    if (n < kMinEnumerationSize || n > kMaxEnumerationSize)
        throw PreconditionError("enumeration supports 3 <= n <= 6, got n=" + std::to_string(n));
}

struct Term {
    std::uint32_t triple;
    std::int8_t parity;
};

// Three-term relation {t0*t1, -(t2*t3), t4*t5}.
struct Relation {
    Term terms[6];
};

Term make_term(int n, int i, int j, int k)
{
    std::int8_t parity = 1;
    if (i > j) {
        std::swap(i, j);
        parity = static_cast<std::int8_t>(-parity);
    }
    if (j > k) {
        std::swap(j, k);
        parity = static_cast<std::int8_t>(-parity);
    }
    if (i > j) {
        std::swap(i, j);
        parity = static_cast<std::int8_t>(-parity);
    }
    return {static_cast<std::uint32_t>(triple_index(n, i, j, k)), parity};
}

class Search {
public:
    Search(int n, const EnumerationOptions& options)
        : n_(n), triples_(choose3(static_cast<std::size_t>(n))), options_(options), by_last_(triples_)
    {
        // Permuting b, c, d, e maps the relation to ± itself, so sorted
        // b < c < d < e suffices for each a.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d)
                        for (int e = d + 1; e < n; ++e) {
                            if (a == b || a == c || a == d || a == e)
                                continue;
                            Relation r{{make_term(n, a, b, c), make_term(n, a, d, e), make_term(n, a, b, d),
                                        make_term(n, a, c, e), make_term(n, a, b, e), make_term(n, a, c, d)}};
                            std::uint32_t last = 0;
                            for (const auto& t : r.terms)
                                last = std::max(last, t.triple);
                            by_last_[last].push_back(r);
                        }
        for (const auto& [i, j, k] : sorted_triples(n))
            masks_.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j) | (std::uint64_t{1} << k));
        choices_ = options.uniform_only ? std::vector<std::int8_t>{1, -1} : std::vector<std::int8_t>{1, -1, 0};
    }

    std::size_t triples() const noexcept { return triples_; }
    const std::vector<std::int8_t>& choices() const noexcept { return choices_; }

    bool consistent(const std::vector<std::int8_t>& values, std::size_t pos) const
    {
        for (const auto& r : by_last_[pos]) {
            int p[3];
            for (int t = 0; t < 3; ++t) {
                const Term& x = r.terms[2 * t];
                const Term& y = r.terms[2 * t + 1];
                p[t] = values[x.triple] * x.parity * values[y.triple] * y.parity;
            }
            p[1] = -p[1];
            const bool has_plus = p[0] > 0 || p[1] > 0 || p[2] > 0;
            const bool has_minus = p[0] < 0 || p[1] < 0 || p[2] < 0;
            if (has_plus != has_minus)
                return false;
        }
        return true;
    }

    bool accept_leaf(const std::vector<std::int8_t>& values) const
    {
        std::vector<std::uint64_t> bases;
        std::uint64_t covered = 0;
        for (std::size_t t = 0; t < triples_; ++t)
            if (values[t] != 0) {
                bases.push_back(masks_[t]);
                covered |= masks_[t];
            }
        if (bases.empty())
            return false;
        if (options_.loop_free && covered != SignVector::full_mask(n_))
            return false;
        const std::unordered_set<std::uint64_t> basis_set(bases.begin(), bases.end());
        for (std::uint64_t b1 : bases)
            for (std::uint64_t b2 : bases)
                for (std::uint64_t out = b1 & ~b2; out != 0; out &= out - 1) {
                    const std::uint64_t x = out & (~out + 1);
                    bool found = false;
                    for (std::uint64_t in = b2 & ~b1; in != 0 && !found; in &= in - 1)
                        found = basis_set.contains((b1 & ~x) | (in & (~in + 1)));
                    if (!found)
                        return false;
                }
        return true;
    }

    template <typename Visit>
    void run(std::vector<std::int8_t>& values, std::size_t pos, Visit& visit) const
    {
        if (pos == triples_) {
            if (accept_leaf(values))
                visit(values);
            return;
        }
        for (std::int8_t c : choices_) {
            values[pos] = c;
            if (consistent(values, pos))
                run(values, pos + 1, visit);
        }
        values[pos] = 0;
    }

    Chirotope to_chirotope(const std::vector<std::int8_t>& values) const
    {
        std::vector<Sign> signs(values.size());
        for (std::size_t t = 0; t < values.size(); ++t)
            signs[t] = static_cast<Sign>(values[t]);
        return Chirotope::unchecked(n_, std::move(signs));
    }

private:
    int n_;
    std::size_t triples_;
    EnumerationOptions options_;
    std::vector<std::vector<Relation>> by_last_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::int8_t> choices_;
};

// Runs the search over all prefixes of length `depth`, one result slot per
// prefix, so merged output does not depend on scheduling.
template <typename Slot, typename Make>
std::vector<Slot> search_by_prefix(const Search& search, unsigned threads, Make make_visitor)
{
    const std::size_t depth = std::min<std::size_t>(3, search.triples());
    std::vector<std::vector<std::int8_t>> prefixes{{}};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<std::vector<std::int8_t>> longer;
        for (const auto& p : prefixes)
            for (std::int8_t c : search.choices()) {
                auto q = p;
                q.push_back(c);
                longer.push_back(std::move(q));
            }
        prefixes.swap(longer);
    }
    std::vector<Slot> slots(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            std::vector<std::int8_t> values(search.triples(), 0);
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                values[d] = prefixes[i][d];
                ok = search.consistent(values, d);
            }
            if (!ok)
                continue;
            auto visit = make_visitor(slots[i]);
            search.run(values, depth, visit);
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, prefixes.size()));
    if (threads <= 1) {
        worker();
    }
    else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    return slots;
}

bool passes_filters(const Chirotope& chi, const EnumerationOptions& options)
{
    if (options.uniform_only && !chi.is_uniform())
        return false;
    if (options.loop_free && !loops(chi).empty())
        return false;
    return true;
}

}  // namespace

std::vector<Chirotope> enumerate_chirotopes_by_scan(int n)
{
    if (n < 3 || n > 5)
        throw PreconditionError("exhaustive scan supports 3 <= n <= 5");
    const std::size_t t = choose3(static_cast<std::size_t>(n));
    std::size_t total = 1;
    for (std::size_t i = 0; i < t; ++i)
        total *= 3;
    // Digit order 0 -> '+', 1 -> '-', 2 -> '0', most significant digit first,
    // so counting upward visits encodings in ASCII order.
    constexpr Sign digit_sign[3] = {Sign::Plus, Sign::Minus, Sign::Zero};
    std::vector<Chirotope> out;
    std::vector<Sign> values(t);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = t; i-- > 0;) {
            values[i] = digit_sign[rest % 3];
            rest /= 3;
        }
        if (is_chirotope(n, values))
            out.push_back(Chirotope::unchecked(n, values));
    }
    return out;
}

std::vector<Chirotope> enumerate_chirotopes(int n, const EnumerationOptions& options)
{
    check_range(n);
    if (n <= 4) {
        auto all = enumerate_chirotopes_by_scan(n);
        std::erase_if(all, [&](const Chirotope& chi) { return !passes_filters(chi, options); });
        return all;
    }
    const Search search(n, options);
    auto slots = search_by_prefix<std::vector<Chirotope>>(search, options.threads, [&search](auto& slot) {
        return [&search, &slot](const std::vector<std::int8_t>& values) {
            slot.push_back(search.to_chirotope(values));
        };
    });
    std::vector<Chirotope> out;
    for (auto& slot : slots)
        std::move(slot.begin(), slot.end(), std::back_inserter(out));
    return out;
}

std::size_t count_chirotopes(int n, const EnumerationOptions& options)
{
    check_range(n);
    if (n <= 4)
        return enumerate_chirotopes(n, options).size();
    const Search search(n, options);
    auto slots = search_by_prefix<std::size_t>(search, options.threads, [](std::size_t& slot) {
        return [&slot](const std::vector<std::int8_t>&) { ++slot; };
    });
    std::size_t total = 0;
    for (auto c : slots)
        total += c;
    return total;
}

std::vector<OrientedMatroid> enumerate_oms(int n, const EnumerationOptions& options)
{
    std::vector<OrientedMatroid> out;
    for (const auto& chi : enumerate_chirotopes(n, options))
        if (canonicalize(chi) == chi)
            out.emplace_back(chi);
    return out;
}

Poset macphersonian(const std::vector<OrientedMatroid>& oms)
{
    std::vector<std::string> labels;
    labels.reserve(oms.size());
    for (const auto& m : oms)
        labels.push_back(m.str());
    return build_poset(std::move(labels), [&oms](std::size_t a, std::size_t b) { return weak_leq(oms[a], oms[b]); });
}

Poset oriented_macphersonian(const std::vector<Chirotope>& chirotopes)
{
    std::vector<std::string> labels;
    labels.reserve(chirotopes.size());
    for (const auto& chi : chirotopes)
        labels.push_back(chi.str());
    return build_poset(std::move(labels), [&chirotopes](std::size_t a, std::size_t b) {
        return weak_leq(chirotopes[a], chirotopes[b]);
    });
}

}  // namespace omtk
