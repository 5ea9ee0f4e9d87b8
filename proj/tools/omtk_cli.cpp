// omtk: enumeration, poset and homology pipelines, verification suites and
// the Grassmannian oracle. Exit codes: 0 ok, 1 I/O, 2 usage, 3 input,
// 4 resource, 5 verification failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "omtk/errors.hpp"
#include "omtk/homology.hpp"
#include "omtk/io.hpp"
#include "omtk/macph.hpp"
#include "omtk/manifest.hpp"
#include "omtk/suites.hpp"

using nlohmann::json;
using namespace omtk;

namespace {

enum Exit : int { kOk = 0, kIo = 1, kUsage = 2, kInput = 3, kResource = 4, kVerification = 5 };

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    unsigned threads = 0;
    bool json_summary = false;
    bool no_cache = false;
};

unsigned worker_count(const Globals& g)
{
    if (g.threads != 0)
        return g.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

void progress(const std::string& message)
{
    std::cerr << "[omtk] " << message << '\n';
}

/**
 * Produces an output through the cache, writes it to `out` (or stdout when
 * `out` is empty) and, for files, writes `<out>.manifest.json` next to it.
 * Returns the output text so callers can summarize it.
 */
std::string emit(const Globals& g, RunManifest manifest, const std::string& out,
                 const std::function<std::string()>& produce)
{
    const auto start = std::chrono::steady_clock::now();
    const auto cache = ResultCache::from_environment();
    const auto key = ResultCache::key(manifest);
    std::string output;
    if (auto hit = g.no_cache ? std::nullopt : cache.lookup(key)) {
        progress("cache hit " + key.substr(0, 12) + " in " + cache.directory().string());
        output = std::move(*hit);
    }
    else {
        output = produce();
        manifest.output_digest = sha256_hex(output);
        if (!g.no_cache) {
            try {
                cache.store(key, output, manifest);
            }
            catch (const std::exception& e) {
                progress(std::string("cache not written: ") + e.what());
            }
        }
    }
    manifest.output_digest = sha256_hex(output);
    manifest.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.empty()) {
        std::cout << output;
    }
    else {
        write_file(out, output);
        write_file(out + ".manifest.json", manifest.to_json().dump(2) + "\n");
        progress("wrote " + out);
    }
    return output;
}

std::string read_input(const std::string& path, RunManifest& manifest)
{
    std::string text = read_file(path);
    manifest.input_digests["in"] = sha256_hex(text);
    return text;
}

void print_summary(const Globals& g, const json& summary, const std::string& text, bool to_stderr)
{
    std::ostream& os = to_stderr ? std::cerr : std::cout;
    if (g.json_summary)
        os << summary.dump() << '\n';
    else
        os << text << '\n';
}

std::string join_numbers(const std::vector<std::size_t>& values, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? sep : "") + std::to_string(values[i]);
    return s;
}

std::vector<std::size_t> parse_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0)
                throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        }
        catch (const std::exception&) {
            throw UsageFailure("expected a comma separated list of nonnegative integers, got '" + text + "'");
        }
    }
    if (out.empty())
        throw UsageFailure("empty list");
    return out;
}

// enumerate ---------------------------------------------------------------

struct EnumerateArgs {
    int n = 0;
    bool oriented = false;
    bool uniform_only = false;
    bool no_loops = false;
    bool force = false;
    std::string out;
};

int cmd_enumerate(const Globals& g, const EnumerateArgs& a)
{
    EnumerationOptions options;
    options.uniform_only = a.uniform_only;
    options.loop_free = a.no_loops;
    options.threads = worker_count(g);

    if (a.n == kMaxEnumerationSize && !a.force) {
        progress("n=6: counting only (pass --force to write records)");
        const auto count = count_chirotopes(a.n, options);
        print_summary(g, {{"n", a.n}, {"chirotopes", count}},
                      "n=" + std::to_string(a.n) + " chirotopes: " + std::to_string(count), false);
        return kOk;
    }

    RunManifest manifest;
    manifest.command = "enumerate";
    manifest.parameters = {{"n", a.n},
                           {"oriented", a.oriented},
                           {"uniform_only", a.uniform_only},
                           {"no_loops", a.no_loops}};
    const auto output = emit(g, manifest, a.out, [&] {
        progress("enumerating rank-3 chirotopes on n=" + std::to_string(a.n));
        const auto chis = enumerate_chirotopes(a.n, options);
        std::string text;
        if (a.oriented) {
            for (const auto& chi : chis)
                text += io::chirotope_record(chi).dump() + "\n";
        }
        else {
            std::vector<OrientedMatroid> oms;
            for (const auto& chi : chis)
                oms.emplace_back(chi);
            std::sort(oms.begin(), oms.end());
            oms.erase(std::unique(oms.begin(), oms.end()), oms.end());
            for (const auto& om : oms)
                text += io::chirotope_record(om.canonical()).dump() + "\n";
        }
        return text;
    });
    const auto count = static_cast<std::size_t>(std::count(output.begin(), output.end(), '\n'));
    const std::string kind = a.oriented ? "chirotopes" : "oriented matroids";
    print_summary(g, {{"n", a.n}, {a.oriented ? "chirotopes" : "oriented_matroids", count}},
                  "n=" + std::to_string(a.n) + " " + kind + ": " + std::to_string(count), a.out.empty());
    return kOk;
}

// poset -------------------------------------------------------------------

struct PosetArgs {
    std::string in;
    std::string out;
    bool oriented = false;
    bool no_loops = false;
};

int cmd_poset(const Globals& g, const PosetArgs& a)
{
    RunManifest manifest;
    manifest.command = "poset";
    manifest.parameters = {{"oriented", a.oriented}, {"no_loops", a.no_loops}};
    const std::string text = read_input(a.in, manifest);

    const auto output = emit(g, manifest, a.out, [&] {
        std::istringstream in(text);
        auto chis = io::read_records(in);
        if (a.no_loops)
            std::erase_if(chis, [](const Chirotope& c) { return !loops(c).empty(); });
        Poset poset;
        if (a.oriented) {
            std::sort(chis.begin(), chis.end());
            chis.erase(std::unique(chis.begin(), chis.end()), chis.end());
            progress("building oriented poset on " + std::to_string(chis.size()) + " chirotopes");
            poset = oriented_macphersonian(chis);
        }
        else {
            std::vector<OrientedMatroid> oms;
            for (const auto& chi : chis)
                oms.emplace_back(chi);
            std::sort(oms.begin(), oms.end());
            oms.erase(std::unique(oms.begin(), oms.end()), oms.end());
            progress("building weak-order poset on " + std::to_string(oms.size()) + " oriented matroids");
            poset = macphersonian(oms);
        }
        return io::poset_json(poset).dump() + "\n";
    });
    const auto doc = json::parse(output);
    const auto nodes = doc.at("nodes").size();
    const auto edges = doc.at("hasse").size();
    print_summary(g, {{"nodes", nodes}, {"hasse_edges", edges}},
                  "nodes: " + std::to_string(nodes) + ", Hasse edges: " + std::to_string(edges), a.out.empty());
    return kOk;
}

// homology ----------------------------------------------------------------

struct HomologyArgs {
    std::string in;
    std::string out;
    std::string field = "gf2";
    std::string expect;
    std::string expect_betti;
    std::size_t budget = kDefaultIntegerBudget;
    std::size_t max_simplices = 50'000'000;
};

/// Mod-2 Betti numbers from integral homology (universal coefficients).
std::vector<std::size_t> mod2_from_integral(const json& integral)
{
    std::vector<std::size_t> betti = integral.at("betti").get<std::vector<std::size_t>>();
    std::vector<std::size_t> out = betti;
    for (const auto& entry : integral.at("torsion")) {
        const auto p = entry.at(0).get<std::size_t>();
        std::size_t even = 0;
        for (const auto& factor : entry.at(1))
            even += factor.get<std::int64_t>() % 2 == 0;
        if (p < out.size())
            out[p] += even;
        if (p + 1 < out.size())
            out[p + 1] += even;
    }
    return out;
}

int cmd_homology(const Globals& g, const HomologyArgs& a)
{
    if (a.field != "gf2" && a.field != "z")
        throw UsageFailure("--field must be gf2 or z");
    std::optional<std::vector<std::size_t>> expected_mod2, expected_betti;
    if (!a.expect.empty()) {
        const auto kn = parse_list(a.expect);
        if (kn.size() != 2 || kn[0] > kn[1])
            throw UsageFailure("--expect takes k,n with k <= n");
        expected_mod2 = grassmann_betti_mod2(static_cast<int>(kn[0]), static_cast<int>(kn[1])).betti;
    }
    if (!a.expect_betti.empty())
        expected_betti = parse_list(a.expect_betti);

    RunManifest manifest;
    manifest.command = "homology";
    manifest.parameters = {{"field", a.field}};
    if (a.field == "z")
        manifest.parameters["budget"] = a.budget;
    const std::string text = read_input(a.in, manifest);

    const auto output = emit(g, manifest, a.out, [&] {
        json document;
        try {
            document = json::parse(text);
        }
        catch (const json::exception& e) {
            throw ParseError(std::string("malformed poset file: ") + e.what());
        }
        const Poset poset = io::parse_poset(document);
        const auto f = chain_counts(poset);
        std::size_t total = 0;
        for (auto c : f)
            total += c;
        progress("order complex f-vector (" + join_numbers(f, ",") + "), " + std::to_string(total) +
                 " simplices");
        if (total > a.max_simplices)
            throw BudgetExceeded("order complex has " + std::to_string(total) +
                                 " simplices, above --max-simplices " + std::to_string(a.max_simplices));
        if (a.field == "z" && total > a.budget)
            throw BudgetExceeded("order complex has " + std::to_string(total) +
                                 " simplices, above the integer budget " + std::to_string(a.budget));
        const auto complex = order_complex(poset);
        const auto gf2 = betti_gf2(complex, worker_count(g));
        std::optional<IntegralHomology> integral;
        if (a.field == "z")
            integral = betti_integer(complex, a.budget);
        return io::homology_json(complex, gf2, integral).dump(2) + "\n";
    });

    const auto report = json::parse(output);
    std::vector<std::size_t> betti = report.at("gf2_betti").get<std::vector<std::size_t>>();
    std::vector<std::size_t> mod2 = betti;
    if (a.field == "z") {
        betti = report.at("integral").at("betti").get<std::vector<std::size_t>>();
        mod2 = mod2_from_integral(report.at("integral"));
    }
    json summary{{"field", a.field},
                 {"f_vector", report.at("complex").at("f_vector")},
                 {"betti", betti},
                 {"euler", report.at("euler")}};
    std::string line = "betti (" + a.field + "): " + join_numbers(betti) +
                       "  euler: " + std::to_string(report.at("euler").get<long long>());
    bool ok = true;
    if (expected_mod2) {
        const bool match = mod2 == *expected_mod2;
        ok = ok && match;
        summary["expect_grassmann"] = {{"expected", *expected_mod2}, {"match", match}};
        line += "\nexpected mod-2 (" + join_numbers(*expected_mod2) + "): " + (match ? "match" : "MISMATCH");
    }
    if (expected_betti) {
        const bool match = betti == *expected_betti;
        ok = ok && match;
        summary["expect_betti"] = {{"expected", *expected_betti}, {"match", match}};
        line += "\nexpected betti (" + join_numbers(*expected_betti) + "): " + (match ? "match" : "MISMATCH");
    }
    print_summary(g, summary, line, a.out.empty());
    return ok ? kOk : kVerification;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int n = 4;
    std::uint64_t seed = 42;
    std::size_t count = 1000;
    std::size_t sample = 100;
    std::string out;
};

int cmd_verify(const Globals& g, const VerifyArgs& a)
{
    const bool om_suites = a.suite != "realizable";
    if (om_suites && (a.n < kMinEnumerationSize || a.n > 5))
        throw UsageFailure("suite '" + a.suite + "' supports 3 <= n <= 5 (exhaustive up to 4, sampled at 5)");
    if (!om_suites && (a.n < 3 || a.n > static_cast<int>(SignVector::kMaxElements)))
        throw UsageFailure("realizable suite supports 3 <= n <= 64");

    SuiteOptions options;
    options.n = a.n;
    options.seed = a.seed;
    options.sample = a.sample;
    options.threads = worker_count(g);
    RealizableOptions realizable;
    realizable.n = a.n;
    realizable.seed = a.seed;
    realizable.count = a.count;

    std::vector<SuiteResult> results;
    auto run = [&](const std::string& name, const std::function<SuiteResult()>& suite) {
        if (a.suite == name || a.suite == "all") {
            progress("running " + name + " suite on n=" + std::to_string(a.n));
            results.push_back(suite());
        }
    };
    run("axioms", [&] { return axioms_suite(options); });
    run("sphere", [&] { return sphere_suite(options); });
    run("maxcov", [&] { return maxcov_suite(options); });
    run("weaktope", [&] { return weaktope_suite(options); });
    run("realizable", [&] { return realizable_suite(realizable); });

    bool all = true;
    json report = json::array();
    std::string text;
    for (const auto& r : results) {
        all = all && r.passed;
        report.push_back({{"suite", r.name},
                          {"pass", r.passed},
                          {"checked", r.checked},
                          {"summary", r.summary},
                          {"failures", r.failures}});
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.summary + "\n";
        for (const auto& f : r.failures)
            text += "  " + f + "\n";
    }
    if (!a.out.empty()) {
        RunManifest manifest;
        manifest.command = "verify";
        manifest.parameters = {{"suite", a.suite}, {"n", a.n}, {"count", a.count}, {"sample", a.sample}};
        manifest.seed = a.seed;
        Globals uncached = g;
        uncached.no_cache = true;
        emit(uncached, manifest, a.out, [&] { return json{{"suites", report}, {"pass", all}}.dump(2) + "\n"; });
    }
    if (g.json_summary)
        std::cout << json{{"suites", report}, {"pass", all}}.dump() << '\n';
    else
        std::cout << text;
    return all ? kOk : kVerification;
}

// grassmann ---------------------------------------------------------------

int cmd_grassmann(const Globals& g, int k, int n)
{
    if (k < 0 || n < k)
        throw UsageFailure("grassmann needs 0 <= k <= n");
    const auto betti = grassmann_betti_mod2(k, n).betti;
    std::size_t total = 0;
    for (auto b : betti)
        total += b;
    std::ostringstream table;
    table << "G(" << k << "," << n << ") mod-2 Betti: " << join_numbers(betti) << "\n";
    table << "d  beta_d\n";
    for (std::size_t d = 0; d < betti.size(); ++d)
        table << d << "  " << betti[d] << "\n";
    table << "total " << total << " = C(" << n << "," << k << ")";
    print_summary(g, {{"k", k}, {"n", n}, {"betti", betti}, {"total", total}}, table.str(), false);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"omtk: rank-3 oriented matroid toolkit"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--threads", g.threads, "Worker count (0 = available cores)")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", g.json_summary, "Machine-readable summaries");
    app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate rank-3 chirotopes or oriented matroids on [n]");
    enumerate->add_option("--n", ea.n, "Ground set size")->required()->check(
        CLI::Range(kMinEnumerationSize, kMaxEnumerationSize));
    enumerate->add_flag("--oriented", ea.oriented, "Emit chirotopes instead of canonical oriented matroids");
    enumerate->add_flag("--uniform-only", ea.uniform_only, "Only chirotopes without zero entries");
    enumerate->add_flag("--no-loops", ea.no_loops, "Drop chirotopes with loops");
    enumerate->add_flag("--force", ea.force, "Write records at n=6 instead of counting");
    enumerate->add_option("--out", ea.out, "JSONL output file (default stdout)");

    PosetArgs pa;
    auto* poset = app.add_subcommand("poset", "Weak-order poset of a JSONL file");
    poset->add_option("--in", pa.in, "JSONL input")->required();
    poset->add_option("--out", pa.out, "Poset JSON output (default stdout)");
    poset->add_flag("--oriented", pa.oriented, "Keep chirotopes distinct from their negatives");
    poset->add_flag("--no-loops", pa.no_loops, "Drop records with loops");

    HomologyArgs ha;
    auto* homology = app.add_subcommand("homology", "Homology of the order complex of a poset file");
    homology->add_option("--in", ha.in, "Poset JSON input")->required();
    homology->add_option("--out", ha.out, "Report JSON output (default stdout)");
    homology->add_option("--field", ha.field, "gf2 or z")->check(CLI::IsMember({"gf2", "z"}));
    homology->add_option("--expect", ha.expect, "k,n: compare mod-2 Betti numbers with G(k,n)");
    homology->add_option("--expect-betti", ha.expect_betti, "Comma separated Betti numbers to compare");
    homology->add_option("--budget", ha.budget, "Simplex budget for integral homology");
    homology->add_option("--max-simplices", ha.max_simplices, "Refuse larger order complexes");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", va.suite, "axioms|sphere|maxcov|weaktope|realizable|all")
        ->check(CLI::IsMember({"axioms", "sphere", "maxcov", "weaktope", "realizable", "all"}));
    verify->add_option("--n", va.n, "Ground set size");
    verify->add_option("--seed", va.seed, "Seed for sampling");
    verify->add_option("--count", va.count, "Configurations for the realizable suite");
    verify->add_option("--sample", va.sample, "Oriented matroids sampled when n = 5");
    verify->add_option("--out", va.out, "JSON report file");

    int gk = 0, gn = 0;
    auto* grassmann = app.add_subcommand("grassmann", "Mod-2 Betti numbers of the real Grassmannian G(k,n)");
    grassmann->add_option("--k", gk)->required();
    grassmann->add_option("--n", gn)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(g, ea);
        if (*poset)
            return cmd_poset(g, pa);
        if (*homology)
            return cmd_homology(g, ha);
        if (*verify)
            return cmd_verify(g, va);
        return cmd_grassmann(g, gk, gn);
    }
    catch (const UsageFailure& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const BudgetExceeded& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    }
    catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    }
    catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    }
    catch (const StructuralError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    }
    catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kResource;
    }
}
