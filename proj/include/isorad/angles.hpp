#pragma once

#include <random>
#include <vector>

#include "isorad/rational.hpp"
#include "isorad/tracks.hpp"

namespace isorad {

// One angle per track, in turns, for the orientation stored in the
// TrackSet; the reversed track carries alpha + 1/2.
struct AngleMap {
    std::vector<Turn> alpha;

    Turn at(int track, bool reversed = false) const {
        return reversed ? lift01(alpha[track] + kHalfTurn) : alpha[track];
    }
};

// Lift to [0,1) of a2 - a1, and the dual angle 1/2 - theta.
struct RhombusAngle {
    Turn theta;
    Turn theta_dual;
};
RhombusAngle rhombus_angle(const Turn& a1, const Turn& a2);

// Angle of the track crossing edge e in the given pairing, oriented
// coherently with v1 -> v2 (pairing A from port 0 to 2, B from 1 to 3).
Turn coherent_alpha(const TrackSet& ts, const AngleMap& a, int e, int pairing);

// theta_e from the coherent angles of the two tracks crossing e.
RhombusAngle rhombus_angle(const TrackSet& ts, const AngleMap& a, int e);
std::vector<Turn> edge_thetas(const TrackSet& ts, const AngleMap& a);

// Angle of the strand at corner c, oriented counterclockwise around tail(c).
Turn ccw_alpha(const CombMap& m, const TrackSet& ts, const AngleMap& a, int c);

// Uniform random angles j/den.
AngleMap random_angles(int num_tracks, std::mt19937_64& rng, int den = 48);
// Random angles increasing along the boundary order (random gaps), which
// makes them monotone in that order. Needs open tracks.
AngleMap random_monotone_angles(const CombMap& m, const TrackSet& ts, std::mt19937_64& rng,
                                int den = 96);

}  // namespace isorad
