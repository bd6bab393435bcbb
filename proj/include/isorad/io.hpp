#pragma once

#include <string>

#include "json.hpp"
#include "isorad/flat.hpp"
#include "isorad/planar_map.hpp"

namespace isorad {

using Json = nlohmann::json;

// Graph file: {"vertices":[{"id","color"}], "edges":[{"id","endpoints"}],
// "rotations":{"<vertex id>":[{"edge","end"}]}, "outer_dart":{"edge","end"}}.
Json map_to_json(const CombMap& m);
MapSpec spec_from_json(const Json& j);  // throws Error(BadInput) on malformed documents
CombMap map_from_json(const Json& j);

// Angle file: {"angles":{"<track id>":{"num","den"}}}, values reduced in [0,1).
Json angles_to_json(const AngleMap& a);
AngleMap angles_from_json(const Json& j, int num_tracks);  // every track must be present

// Lift file: {"k":{"<edge id>":int}} with every edge present.
Json lift_to_json(const CombMap& m, const Lift& k);
Lift lift_from_json(const CombMap& m, const Json& j);

// Canonical text form: sorted keys, two-space indent, trailing LF.
std::string dump_canonical(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace isorad
