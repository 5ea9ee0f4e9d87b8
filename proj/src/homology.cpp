#include "omtk/homology.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "omtk/errors.hpp"
#include "omtk/gf2.hpp"
#include "omtk/smith.hpp"

namespace omtk {

namespace {

// Sorts a flattened array of fixed-stride records lexicographically and drops duplicates.
void sort_records(std::vector<std::uint32_t>& flat, std::size_t stride)
{
    const std::size_t count = flat.size() / stride;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto record = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * stride); };
    auto less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(record(a), record(a) + static_cast<std::ptrdiff_t>(stride),
                                            record(b), record(b) + static_cast<std::ptrdiff_t>(stride));
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<std::uint32_t> sorted;
    sorted.reserve(flat.size());
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0 && std::equal(record(order[k]), record(order[k]) + static_cast<std::ptrdiff_t>(stride),
                                record(order[k - 1])))
            continue;
        sorted.insert(sorted.end(), record(order[k]), record(order[k]) + static_cast<std::ptrdiff_t>(stride));
    }
    flat.swap(sorted);
}

void append_simplex(std::vector<std::vector<std::uint32_t>>& faces, Simplex s)
{
    if (s.empty())
        return;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw StructuralError("simplex has a repeated vertex");
    const std::size_t p = s.size() - 1;
    if (faces.size() <= p)
        faces.resize(p + 1);
    faces[p].insert(faces[p].end(), s.begin(), s.end());
}

// Vertex positions of the codimension-one face that omits position `skip`.
Simplex face_without(std::span<const std::uint32_t> s, std::size_t skip)
{
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip)
            face.push_back(s[i]);
    return face;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices)
{
    SimplicialComplex k;
    for (auto& s : simplices)
        append_simplex(k.faces_, std::move(s));
    for (std::size_t p = 0; p < k.faces_.size(); ++p)
        sort_records(k.faces_[p], p + 1);
    while (!k.faces_.empty() && k.faces_.back().empty())
        k.faces_.pop_back();
    for (int p = 1; p <= k.dimension(); ++p)
        for (std::size_t i = 0; i < k.count(p); ++i) {
            const auto s = k.simplex(p, i);
            for (std::size_t skip = 0; skip < s.size(); ++skip)
                if (k.index_of(face_without(s, skip)) == npos)
                    throw StructuralError("complex is not closed under taking faces");
        }
    return k;
}

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& facets)
{
    std::vector<Simplex> all;
    for (const auto& facet : facets) {
        if (facet.size() > 20)
            throw BudgetExceeded("facet too large for face enumeration");
        const std::uint32_t subsets = std::uint32_t{1} << facet.size();
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if (mask & (std::uint32_t{1} << i))
                    face.push_back(facet[i]);
            all.push_back(std::move(face));
        }
    }
    return from_simplices(std::move(all));
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (int p = 0; p <= dimension(); ++p)
        f.push_back(count(p));
    return f;
}

std::size_t SimplicialComplex::total_simplices() const noexcept
{
    std::size_t total = 0;
    for (std::size_t p = 0; p < faces_.size(); ++p)
        total += faces_[p].size() / (p + 1);
    return total;
}

std::size_t SimplicialComplex::count(int p) const
{
    if (p < 0 || p > dimension())
        return 0;
    return faces_[static_cast<std::size_t>(p)].size() / static_cast<std::size_t>(p + 1);
}

std::span<const std::uint32_t> SimplicialComplex::simplex(int p, std::size_t i) const
{
    const auto stride = static_cast<std::size_t>(p + 1);
    return std::span<const std::uint32_t>(faces_[static_cast<std::size_t>(p)]).subspan(i * stride, stride);
}

std::size_t SimplicialComplex::index_of(std::span<const std::uint32_t> s) const
{
    if (s.empty() || s.size() > faces_.size())
        return npos;
    const int p = static_cast<int>(s.size()) - 1;
    std::size_t lo = 0;
    std::size_t hi = count(p);
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto m = simplex(p, mid);
        if (std::lexicographical_compare(m.begin(), m.end(), s.begin(), s.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count(p)) {
        const auto m = simplex(p, lo);
        if (std::equal(m.begin(), m.end(), s.begin(), s.end()))
            return lo;
    }
    return npos;
}

SimplicialComplex order_complex(const Poset& poset)
{
    // Chains are closed under subsets, so no face check is needed.
    SimplicialComplex k;
    Simplex sorted;
    for_each_chain(poset, [&](const Chain& chain) {
        sorted.assign(chain.begin(), chain.end());
        std::sort(sorted.begin(), sorted.end());
        const std::size_t p = sorted.size() - 1;
        if (k.faces_.size() <= p)
            k.faces_.resize(p + 1);
        k.faces_[p].insert(k.faces_[p].end(), sorted.begin(), sorted.end());
    });
    for (std::size_t p = 0; p < k.faces_.size(); ++p)
        sort_records(k.faces_[p], p + 1);
    return k;
}

std::vector<std::vector<std::uint32_t>> boundary_gf2(const SimplicialComplex& complex, int p)
{
    std::vector<std::vector<std::uint32_t>> columns(complex.count(p));
    if (p < 1)
        return columns;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto s = complex.simplex(p, i);
        auto& col = columns[i];
        for (std::size_t skip = 0; skip < s.size(); ++skip)
            col.push_back(static_cast<std::uint32_t>(complex.index_of(face_without(s, skip))));
        std::sort(col.begin(), col.end());
    }
    return columns;
}

namespace {

BettiVector assemble(const SimplicialComplex& complex, const std::vector<std::size_t>& ranks)
{
    // ranks[p] = rank of ∂_p, with ranks[0] = ranks[dim + 1] = 0.
    BettiVector out;
    for (int p = 0; p <= complex.dimension(); ++p) {
        const auto up = static_cast<std::size_t>(p);
        out.betti.push_back(complex.count(p) - ranks[up] - ranks[up + 1]);
    }
    return out;
}

}  // namespace

BettiVector betti_gf2(const SimplicialComplex& complex, unsigned threads)
{
    const int dim = complex.dimension();
    if (dim < 0)
        return {};
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);

    if (threads > 1) {
        std::vector<std::thread> workers;
        auto run_batch = [&]() {
            for (auto& w : workers)
                w.join();
            workers.clear();
        };
        for (int p = 1; p <= dim; ++p) {
            workers.emplace_back([&complex, &ranks, p]() {
                ranks[static_cast<std::size_t>(p)] =
                    gf2::reduce_columns(boundary_gf2(complex, p), complex.count(p - 1)).rank;
            });
            if (workers.size() >= threads)
                run_batch();
        }
        run_batch();
        return assemble(complex, ranks);
    }

    std::vector<bool> cleared;
    for (int p = dim; p >= 1; --p) {
        auto result = gf2::reduce_columns(boundary_gf2(complex, p), complex.count(p - 1),
                                          cleared.empty() ? nullptr : &cleared);
        ranks[static_cast<std::size_t>(p)] = result.rank;
        cleared.assign(complex.count(p - 1), false);
        for (auto row : result.pivot_rows)
            cleared[row] = true;
    }
    return assemble(complex, ranks);
}

BettiVector betti_gf2_dense(const SimplicialComplex& complex)
{
    const int dim = complex.dimension();
    if (dim < 0)
        return {};
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
    for (int p = 1; p <= dim; ++p) {
        std::vector<Bits> rows;
        for (const auto& col : boundary_gf2(complex, p)) {
            Bits row(complex.count(p - 1));
            for (auto r : col)
                row.set(r);
            rows.push_back(std::move(row));
        }
        ranks[static_cast<std::size_t>(p)] = gf2::dense_rank(std::move(rows));
    }
    return assemble(complex, ranks);
}

IntegralHomology betti_integer(const SimplicialComplex& complex, std::size_t budget)
{
    if (complex.total_simplices() > budget)
        throw BudgetExceeded("complex has " + std::to_string(complex.total_simplices()) +
                             " simplices, over the integral homology budget of " + std::to_string(budget));
    const int dim = complex.dimension();
    IntegralHomology out;
    if (dim < 0)
        return out;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
    out.torsion.assign(static_cast<std::size_t>(dim) + 1, {});
    for (int p = 1; p <= dim; ++p) {
        std::vector<IntegerColumn> columns(complex.count(p));
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto s = complex.simplex(p, i);
            auto& col = columns[i];
            for (std::size_t skip = 0; skip < s.size(); ++skip)
                col.emplace_back(static_cast<std::uint32_t>(complex.index_of(face_without(s, skip))),
                                 skip % 2 == 0 ? 1 : -1);
            std::sort(col.begin(), col.end());
        }
        SmithSummary snf = smith_sparse(complex.count(p - 1), std::move(columns));
        ranks[static_cast<std::size_t>(p)] = snf.rank;
        out.torsion[static_cast<std::size_t>(p - 1)] = std::move(snf.torsion);
    }
    out.betti = assemble(complex, ranks).betti;
    return out;
}

long long euler_characteristic(const SimplicialComplex& complex)
{
    long long chi = 0;
    for (int p = 0; p <= complex.dimension(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.count(p));
    return chi;
}

long long euler_characteristic(const BettiVector& betti)
{
    long long chi = 0;
    for (std::size_t p = 0; p < betti.betti.size(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(betti.betti[p]);
    return chi;
}

namespace {

// Counts partitions with at most `parts` parts, each at most `largest`, by size.
void count_partitions(int parts, int largest, int size, std::vector<std::size_t>& by_size)
{
    by_size[static_cast<std::size_t>(size)] += 1;
    if (parts == 0)
        return;
    for (int next = 1; next <= largest; ++next)
        count_partitions(parts - 1, next, size + next, by_size);
}

}  // namespace

BettiVector grassmann_betti_mod2(int k, int n)
{
    if (k < 0 || n < k)
        throw PreconditionError("Grassmannian G(k,n) needs 0 <= k <= n");
    const int width = n - k;
    std::vector<std::size_t> by_size(static_cast<std::size_t>(k * width) + 1, 0);
    count_partitions(k, width, 0, by_size);
    return {by_size};
}

std::size_t connected_components(const SimplicialComplex& complex)
{
    const std::size_t v = complex.count(0);
    std::vector<std::size_t> parent(v);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = v;
    for (std::size_t e = 0; e < complex.count(1); ++e) {
        const auto edge = complex.simplex(1, e);
        const std::size_t a = find(complex.index_of(edge.subspan(0, 1)));
        const std::size_t b = find(complex.index_of(edge.subspan(1, 1)));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

}  // namespace omtk
