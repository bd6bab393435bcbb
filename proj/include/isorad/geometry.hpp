#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "isorad/minimal.hpp"

namespace isorad {

using Point = std::complex<double>;

enum class RhombusStatus { Embedded, Folded, Degenerate };
const char* status_name(RhombusStatus s);
RhombusStatus rhombus_status(const Turn& theta);

Point unit(const Turn& t);  // e^{2 pi i t}

// Positions of the vertices and bounded faces of G (the outer face has no
// single position), plus the four corners (v1, f1, v2, f2) of every rhombus.
struct Immersion {
    std::vector<Point> vertex;
    std::vector<Point> face;              // unset for the outer face
    std::vector<std::array<Point, 4>> rhombus;
    std::vector<RhombusStatus> status;
    std::vector<Turn> theta;
    double closure_error = 0;  // worst mismatch between two derivations of a point
    double side_error = 0;     // worst deviation of a rhombus side from length 1
};

// Integrates the unit vectors of the tracks over a spanning tree, starting
// with the first vertex at the origin.
Immersion immerse(const CombMap& m, const TrackContext& tc, const AngleMap& a);

// Winding number of the immersed boundary of bounded face f around the
// image of f (steps are principal angles, so each must be below half a turn).
double face_winding(const CombMap& m, const Immersion& im, int f);

struct FoldState {
    bool positive = true;  // orientation parity
    long long index = 0;   // floor of the lifted angle
    std::string word;      // alternating p/d, empty for an embedded rhombus
};
FoldState fold_state(const Turn& lifted);  // throws DegenerateAngle on multiples of 1/2

// Geometric check read off the immersion: dual points around each inner
// vertex in embedding order, white and black points around each bounded face
// in embedding order, boundary corners not overlapping. Throws NotBipartite,
// HasDegreeOneVertex.
struct MinimalReport {
    bool ok = true;
    std::vector<std::string> failures;
};
MinimalReport check_minimal_immersion(const CombMap& m, const TrackContext& tc, const AngleMap& a);

}  // namespace isorad
