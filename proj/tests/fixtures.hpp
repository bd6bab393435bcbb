#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isorad/planar_map.hpp"
#include "isorad/tracks.hpp"

namespace isorad::fixtures {

struct Named {
    std::string name;
    CombMap m;
    TrackContext tc;
    bool minimal = false;
};

inline Named named(std::string name, CombMap m) {
    TrackContext tc = track_context(m);
    bool minimal = false;
    if (m.colored()) minimal = classify(m, tc.ts).is_minimal();
    return {std::move(name), std::move(m), std::move(tc), minimal};
}

// Fixtures without closed loops.
inline std::vector<Named> open_fixtures() {
    std::vector<Named> out;
    out.push_back(named("SQ22", square_patch(2, 2)));
    out.push_back(named("SQ33", square_patch(3, 3)));
    out.push_back(named("SQ44", square_patch(4, 4)));
    out.push_back(named("HEX1", hexagon_cycle(6)));
    out.push_back(named("doubled_edge", generate("doubled_edge", {})));
    out.push_back(named("pendant", generate("pendant", {})));
    return out;
}

// Adds uncoloured maps, used where bipartiteness is not needed.
inline std::vector<Named> all_open_fixtures() {
    auto out = open_fixtures();
    out.push_back(named("triangle", triangle()));
    out.push_back(named("pendant_triangle", pendant(triangle(), 0, triangle().outer_face() == 0 ? 1 : 0)));
    out.push_back(named("SQ23", square_patch(2, 3)));
    return out;
}

}  // namespace isorad::fixtures
