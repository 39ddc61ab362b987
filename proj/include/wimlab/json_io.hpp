#pragma once

#include <string>

#include <json.hpp>

#include "wimlab/benzenoid.hpp"
#include "wimlab/lattice.hpp"
#include "wimlab/wim.hpp"

namespace wimlab {

// Field order is part of the wire format, so all emitters use ordered_json:
//   matrix  {"k":int,"rows":[[int]]}
//   chain   [[x,y],...]
//   v-bars  {"n":int,"r":int,"xs":[int],"ys":[int],"selected":[[[x,y],[x,y]]]}
//   path    {"start":[int,int],"moves":"RU..."}
//   tuple   {"n":int,"k":int,"paths":[path]}
// Canonical text is dump() with no whitespace.
using Json = nlohmann::ordered_json;

std::string canonical_dump(const Json& j);

Json matrix_to_json(const WIMatrix& M);
WIMatrix matrix_from_json(const Json& j);

Json chain_to_json(const PulseChain& chain);

Json path_to_json(const LatticePath& path);
LatticePath path_from_json(const Json& j);

Json tuple_to_json(const PathTuple& tuple);
PathTuple tuple_from_json(const Json& j);

// q = 2 structures carry their v-bar tuple plus the full selected-edge list
// (endpoint planar coordinates, canonically sorted).
Json kekule_to_json(const KekuleStructure& structure);
// Rebuilds the structure from n, r, xs, ys; a "selected" field is ignored.
KekuleStructure kekule_from_json(const Json& j);

// General-q structure document {"p":..,"q":..,"r":..,"selected":[...]}.
Json kekule_generic_to_json(const KekuleStructure& structure);

// Parses text, mapping JSON syntax errors to ValidationError.
Json parse_json_text(const std::string& text);

}  // namespace wimlab
