/**
 * File formats. Element labels in every record are 1-based.
 *
 *   JSONL record   {"n":4,"chi":"++-+","loops":[],"topes":14}
 *   poset file     {"nodes":["n=4;chi=...",...],"hasse":[[i,j],...]}
 *   sphere export  {"om":..., "cocircuits":[...], "edges":[...], "topes":[...], "hasse":[[lo,hi],...]}
 *   homology       {"complex":{"f_vector":[...]}, "gf2_betti":[...],
 *                   "integral":{"betti":[...],"torsion":[[p,[2,...]],...]}, "euler":e}
 */
#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "omtk/chirotope.hpp"
#include "omtk/covector.hpp"
#include "omtk/homology.hpp"
#include "omtk/poset.hpp"

namespace omtk::io {

using nlohmann::json;

/// One JSONL record; `topes` comes from the covector sphere.
json chirotope_record(const Chirotope& chi);

/// Chirotope from a JSONL record; `n` and `chi` are required.
Chirotope parse_record(const json& record);

/// Reads every nonempty line of a JSONL stream.
std::vector<Chirotope> read_records(std::istream& in);

json poset_json(const Poset& poset);
Poset parse_poset(const json& document);

json sphere_json(const CovectorSphere& sphere);

json homology_json(const SimplicialComplex& complex, const BettiVector& gf2,
                   const std::optional<IntegralHomology>& integral);

}  // namespace omtk::io
