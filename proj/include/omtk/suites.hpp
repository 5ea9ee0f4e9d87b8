/**
 * Verification suites shared by the `verify` command and the acceptance
 * runner. Each returns a pass/fail record with the number of objects
 * checked and the first few failures.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omtk/chirotope.hpp"
#include "omtk/realizable.hpp"

namespace omtk {

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    std::string summary;

    void fail(std::string message);
};

struct SuiteOptions {
    int n = 4;
    std::uint64_t seed = 1;
    /// Objects to sample when n exceeds the exhaustive limit (0 = all).
    std::size_t sample = 100;
    /// Largest n checked exhaustively.
    int exhaustive_limit = 4;
    unsigned threads = 1;
};

/// All canonical OMs for n <= exhaustive_limit, otherwise a seeded sample.
std::vector<OrientedMatroid> suite_oms(const SuiteOptions& options);

/// covector_axioms_check on cov(M).
SuiteResult axioms_suite(const SuiteOptions& options);

/// verify_sphere on csph(M).
SuiteResult sphere_suite(const SuiteOptions& options);

/// maxcov well-defined and surjective for every comparable pair M0 ≤_w M1.
SuiteResult maxcov_suite(const SuiteOptions& options);

/// Comparable pairs with equal loop sets: topes of M0 are topes of M1.
SuiteResult weaktope_suite(const SuiteOptions& options);

struct RealizableOptions {
    int n = 4;
    std::uint64_t seed = 42;
    std::size_t count = 1000;
    std::int64_t bound = 8;
    /// Every other sample injects mixed degeneracies.
    bool include_degeneracies = true;
};

/// order_type(V) is a chirotope and cocircuits(ot(V)) = geometric_cocircuits(V).
SuiteResult realizable_suite(const RealizableOptions& options);

}  // namespace omtk
