#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "omtk/errors.hpp"
#include "omtk/io.hpp"
#include "omtk/macph.hpp"
#include "omtk/manifest.hpp"

using namespace omtk;

TEST_CASE("JSONL records round trip")
{
    const auto chi = Chirotope::from_string(4, "+000");
    const auto rec = io::chirotope_record(chi);
    CHECK(rec.dump() == R"({"chi":"+000","loops":[4],"n":4,"topes":8})");
    CHECK(io::parse_record(rec) == chi);

    std::stringstream stream;
    for (const auto& c : enumerate_chirotopes(4))
        stream << io::chirotope_record(c).dump() << "\n";
    stream << "\n";
    CHECK(io::read_records(stream) == enumerate_chirotopes(4));

    std::stringstream bad("{\"n\":4,\"chi\":\"++-+\"}\n{\"n\":4}\n");
    CHECK_THROWS_WITH_AS(io::read_records(bad), doctest::Contains("line 2"), ParseError);
    std::stringstream invalid("{\"n\":5,\"chi\":\"++++++++++\",\"x\":1}\n{\"n\":4,\"chi\":\"0000\"}\n");
    CHECK_THROWS_AS(io::read_records(invalid), ParseError);
}

TEST_CASE("poset files round trip")
{
    const auto p = macphersonian(enumerate_oms(4));
    const auto doc = io::poset_json(p);
    const auto q = io::parse_poset(nlohmann::json::parse(doc.dump()));
    CHECK(q.labels() == p.labels());
    CHECK(q.hasse() == p.hasse());
    CHECK(q.comparable_pairs() == p.comparable_pairs());

    CHECK_THROWS_AS(io::parse_poset(nlohmann::json::parse(R"({"nodes":["a"]})")), ParseError);
    CHECK_THROWS_AS(io::parse_poset(nlohmann::json::parse(R"({"nodes":["a","b"],"hasse":[[0,1],[1,0]]})")),
                    ParseError);
    CHECK_THROWS_AS(io::parse_poset(nlohmann::json::parse(R"({"nodes":["a"],"hasse":[[0,3]]})")), ParseError);
}

TEST_CASE("sphere and homology reports")
{
    const auto s = CovectorSphere::build(OrientedMatroid(Chirotope::from_string(3, "+")));
    const auto j = io::sphere_json(s);
    CHECK(j.at("cocircuits").size() == 6);
    CHECK(j.at("edges").size() == 12);
    CHECK(j.at("topes").size() == 8);
    CHECK(j.at("om") == "n=3;chi=+");

    const auto k = SimplicialComplex::closure({{0, 1}, {1, 2}, {0, 2}});
    const auto h = io::homology_json(k, betti_gf2(k), betti_integer(k));
    CHECK(h.at("gf2_betti") == nlohmann::json::array({1, 1}));
    CHECK(h.at("euler") == 0);
    CHECK(h.at("integral").at("betti") == nlohmann::json::array({1, 1}));
    CHECK(h.at("complex").at("f_vector") == nlohmann::json::array({3, 3}));
    CHECK_FALSE(io::homology_json(k, betti_gf2(k), std::nullopt).contains("integral"));
}

TEST_CASE("digests and manifests")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    RunManifest m;
    m.command = "enumerate";
    m.parameters = {{"n", 4}, {"oriented", false}};
    m.seed = 9;
    m.input_digests["in"] = sha256_hex("x");
    m.output_digest = sha256_hex("y");
    const auto back = RunManifest::from_json(m.to_json());
    CHECK(back.to_json() == m.to_json());

    // Key order in the parameters does not matter; values do.
    RunManifest reordered = m;
    reordered.parameters = {{"oriented", false}, {"n", 4}};
    CHECK(ResultCache::key(reordered) == ResultCache::key(m));
    RunManifest other = m;
    other.parameters["n"] = 5;
    CHECK(ResultCache::key(other) != ResultCache::key(m));
    RunManifest other_input = m;
    other_input.input_digests["in"] = sha256_hex("z");
    CHECK(ResultCache::key(other_input) != ResultCache::key(m));
}

TEST_CASE("the cache verifies digests")
{
    const auto dir = std::filesystem::temp_directory_path() / "omtk_cache_test";
    std::filesystem::remove_all(dir);
    const ResultCache cache(dir);
    RunManifest m;
    m.command = "poset";
    const auto key = ResultCache::key(m);
    CHECK_FALSE(cache.lookup(key).has_value());

    m.output_digest = sha256_hex("payload\n");
    cache.store(key, "payload\n", m);
    REQUIRE(cache.lookup(key).has_value());
    CHECK(*cache.lookup(key) == "payload\n");

    // Tampered output is ignored even though the files are newer.
    write_file(dir / (key + ".out"), "tampered\n");
    CHECK_FALSE(cache.lookup(key).has_value());
    std::filesystem::remove_all(dir);
}
