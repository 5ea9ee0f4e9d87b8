#include "omtk/io.hpp"

#include <string>

namespace omtk::io {

json chirotope_record(const Chirotope& chi)
{
    json loop_labels = json::array();
    for (int i : loops(chi))
        loop_labels.push_back(i + 1);
    const auto topes = CovectorSphere::build(OrientedMatroid(chi)).topes();
    return json{{"n", chi.n()}, {"chi", chi.encoding()}, {"loops", loop_labels}, {"topes", topes.size()}};
}

Chirotope parse_record(const json& record)
{
    try {
        if (!record.is_object() || !record.contains("n") || !record.contains("chi"))
            throw ParseError("record needs fields 'n' and 'chi'");
        return Chirotope::from_string(record.at("n").get<int>(), record.at("chi").get<std::string>());
    }
    catch (const json::exception& e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
}

std::vector<Chirotope> read_records(std::istream& in)
{
    std::vector<Chirotope> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_record(json::parse(line)));
        }
        catch (const json::exception& e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what());
        }
        catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

json poset_json(const Poset& poset)
{
    json hasse = json::array();
    for (auto [lo, hi] : poset.hasse())
        hasse.push_back({lo, hi});
    return json{{"nodes", poset.labels()}, {"hasse", hasse}};
}

Poset parse_poset(const json& document)
{
    try {
        auto labels = document.at("nodes").get<std::vector<std::string>>();
        std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse;
        for (const auto& edge : document.at("hasse")) {
            if (!edge.is_array() || edge.size() != 2)
                throw ParseError("Hasse edges must be pairs");
            hasse.emplace_back(edge[0].get<std::uint32_t>(), edge[1].get<std::uint32_t>());
        }
        return Poset::from_hasse(std::move(labels), hasse);
    }
    catch (const json::exception& e) {
        throw ParseError(std::string("malformed poset file: ") + e.what());
    }
    catch (const StructuralError& e) {
        throw ParseError(std::string("malformed poset file: ") + e.what());
    }
}

json sphere_json(const CovectorSphere& sphere)
{
    auto strings = [](const std::vector<SignVector>& vs) {
        json out = json::array();
        for (const auto& v : vs)
            out.push_back(v.str());
        return out;
    };
    json hasse = json::array();
    for (auto [lo, hi] : sphere.poset().hasse())
        hasse.push_back({sphere.elements()[lo].str(), sphere.elements()[hi].str()});
    json om = sphere.owner() ? json(sphere.owner()->str()) : json(nullptr);
    return json{{"om", om},
                {"cocircuits", strings(sphere.cocircuits())},
                {"edges", strings(sphere.edges())},
                {"topes", strings(sphere.topes())},
                {"hasse", hasse}};
}

json homology_json(const SimplicialComplex& complex, const BettiVector& gf2,
                   const std::optional<IntegralHomology>& integral)
{
    json report{{"complex", {{"f_vector", complex.f_vector()}}},
                {"gf2_betti", gf2.betti},
                {"euler", euler_characteristic(complex)}};
    if (integral) {
        json torsion = json::array();
        for (std::size_t p = 0; p < integral->torsion.size(); ++p)
            if (!integral->torsion[p].empty())
                torsion.push_back({p, integral->torsion[p]});
        report["integral"] = {{"betti", integral->betti}, {"torsion", torsion}};
    }
    return report;
}

}  // namespace omtk::io
