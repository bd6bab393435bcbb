#pragma once

#include <optional>
#include <string>

#include "isorad/flat.hpp"

namespace isorad {

// SVG of the rhombic immersion: rhombi (embedded gray, folded hatched,
// degenerate as a segment), primal edges, dual points and one polyline per
// track. The geometry depends only on the angles; a lift only adds a text
// layer with k per edge. Coordinates are printed with 6 decimals.
std::string render_svg(const CombMap& m, const TrackContext& tc, const AngleMap& a,
                       const std::optional<Lift>& k = std::nullopt);

}  // namespace isorad
