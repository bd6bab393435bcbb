#pragma once

#include <vector>

#include "isorad/angles.hpp"

namespace isorad {

// Result of a local move with the tracks of the new map matched to those of
// the old one through the edges both maps share (same edge id).
struct MoveResult {
    CombMap map;
    TrackContext tc;
    std::vector<int> track_map;   // new track -> old track
    std::vector<char> reversed;   // new track runs against its old one
};

// Splits vertex v: `count` consecutive darts starting at position `start`
// of its rotation stay at v, the others move to a new vertex of the same
// colour, and the two are joined through a new 2-valent vertex of the other
// colour. Both corners where the split happens must be bounded, so the new
// vertex is inner. Throws PatternMismatch.
MoveResult expand_vertex(const CombMap& m, int vertex_id, int start, int count);

// Inverse of expand: contracts the inner 2-valent vertex u together with its
// two (distinct, same-coloured) neighbours. Throws PatternMismatch.
MoveResult shrink_vertex(const CombMap& m, int vertex_id);

// Urban renewal of a bounded quadrilateral face whose four distinct corners
// are inner vertices of degree at least 3: the face edges are replaced by a
// new inner square, each corner tied to it by one leg. Throws PatternMismatch.
MoveResult spider_move(const CombMap& m, int face);

// Matches the tracks of `to` with those of `from` through shared edge ids.
// Throws PatternMismatch if some track has no shared edge or the matches
// disagree or are not a bijection.
void identify_tracks(const CombMap& from, const TrackContext& from_tc, MoveResult& r);

// Angles on the new tracks induced by the identification.
AngleMap transfer_angles(const MoveResult& r, const AngleMap& a);

}  // namespace isorad
