#include "omtk/suites.hpp"

#include <algorithm>
#include <numeric>

#include "omtk/covector.hpp"
#include "omtk/macph.hpp"

namespace omtk {

void SuiteResult::fail(std::string message)
{
    passed = false;
    if (failures.size() < 10)
        failures.push_back(std::move(message));
}

std::vector<OrientedMatroid> suite_oms(const SuiteOptions& options)
{
    EnumerationOptions enumeration;
    enumeration.threads = options.threads;
    auto all = enumerate_oms(options.n, enumeration);
    if (options.n <= options.exhaustive_limit || options.sample == 0 || options.sample >= all.size())
        return all;
    // Partial Fisher-Yates, then restore enumeration order.
    Pcg32 rng(options.seed);
    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < options.sample; ++i) {
        const auto j = i + rng.bounded(static_cast<std::uint32_t>(order.size() - i));
        std::swap(order[i], order[j]);
    }
    order.resize(options.sample);
    std::sort(order.begin(), order.end());
    std::vector<OrientedMatroid> out;
    for (auto i : order)
        out.push_back(all[i]);
    return out;
}

SuiteResult axioms_suite(const SuiteOptions& options)
{
    SuiteResult result{"axioms"};
    for (const auto& m : suite_oms(options)) {
        const auto cov = covectors(m);
        const auto report = covector_axioms_check(cov);
        ++result.checked;
        if (!report.ok())
            result.fail(m.str() + ": " + (report.violations.empty() ? "" : report.violations.front()));
    }
    result.summary = std::to_string(result.checked) + " oriented matroids satisfy the covector axioms";
    return result;
}

SuiteResult sphere_suite(const SuiteOptions& options)
{
    SuiteResult result{"sphere"};
    std::size_t euler_two = 0;
    for (const auto& m : suite_oms(options)) {
        ++result.checked;
        try {
            const auto report = verify_sphere(CovectorSphere::build(m));
            euler_two += report.euler == 2;
            if (!report.ok())
                result.fail(m.str() + ": " + report.violations.front());
        }
        catch (const StructuralError& e) {
            result.fail(m.str() + ": " + e.what());
        }
    }
    result.summary = std::to_string(euler_two) + "/" + std::to_string(result.checked) +
                     " covector spheres with Euler characteristic 2, diamond property and Betti (1,0,1)";
    return result;
}

namespace {

template <typename Check>
std::size_t for_comparable_pairs(const std::vector<OrientedMatroid>& oms, Check check)
{
    std::size_t pairs = 0;
    for (const auto& lower : oms)
        for (const auto& upper : oms)
            if (weak_leq(lower, upper)) {
                ++pairs;
                check(lower, upper);
            }
    return pairs;
}

}  // namespace

SuiteResult maxcov_suite(const SuiteOptions& options)
{
    SuiteResult result{"maxcov"};
    result.checked = for_comparable_pairs(suite_oms(options), [&](const auto& lower, const auto& upper) {
        try {
            const auto map = maxcov(lower, upper);
            if (!map.is_surjective())
                result.fail("maxcov(" + lower.str() + ", " + upper.str() + ") is not surjective");
        }
        catch (const StructuralError& e) {
            result.fail(e.what());
        }
    });
    result.summary = std::to_string(result.checked) +
                     " comparable pairs with a well-defined, surjective maxcov";
    return result;
}

SuiteResult weaktope_suite(const SuiteOptions& options)
{
    SuiteResult result{"weaktope"};
    const auto oms = suite_oms(options);
    std::vector<std::vector<SignVector>> tope_sets;
    tope_sets.reserve(oms.size());
    for (const auto& m : oms)
        tope_sets.push_back(topes(m));
    for (std::size_t a = 0; a < oms.size(); ++a)
        for (std::size_t b = 0; b < oms.size(); ++b) {
            if (!weak_leq(oms[a], oms[b]) || loops(oms[a]) != loops(oms[b]))
                continue;
            ++result.checked;
            if (!std::includes(tope_sets[b].begin(), tope_sets[b].end(), tope_sets[a].begin(), tope_sets[a].end()))
                result.fail("a tope of " + oms[a].str() + " is not a tope of " + oms[b].str());
        }
    result.summary = std::to_string(result.checked) +
                     " comparable pairs with equal loops: lower topes are upper topes";
    return result;
}

SuiteResult realizable_suite(const RealizableOptions& options)
{
    SuiteResult result{"realizable"};
    for (std::size_t i = 0; i < options.count; ++i) {
        const Degeneracy mix =
            options.include_degeneracies && i % 2 == 1 ? Degeneracy::Mixed : Degeneracy::None;
        const auto config = sample_config(options.n, derive_seed(options.seed, i), options.bound, mix);
        ++result.checked;
        try {
            const Chirotope chi = order_type(config);
            if (cocircuits(chi) != geometric_cocircuits(config))
                result.fail(config.str() + ": combinatorial and geometric cocircuits differ");
        }
        catch (const InvalidChirotope& e) {
            result.fail(config.str() + ": " + e.what());
        }
    }
    result.summary = std::to_string(result.checked) + " configurations on n=" + std::to_string(options.n) +
                     " give valid chirotopes with matching cocircuits";
    return result;
}

}  // namespace omtk
