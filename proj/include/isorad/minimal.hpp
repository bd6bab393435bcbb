#pragma once

#include <string>
#include <vector>

#include "isorad/flat.hpp"

namespace isorad {

// Sum of the lifts in [0,1) of consecutive differences of a cyclic
// sequence: 1 iff it is monotone and non-constant, 0 iff constant.
Turn cyclic_lift_sum(const std::vector<Turn>& values);

struct YReport {
    bool ok = true;
    std::vector<std::string> failures;  // one line per failed vertex, face or edge
};

// Angle maps of minimal immersions. Checks: every rhombus angle nonzero;
// around each inner vertex the strand angles are monotone (lift sum 1);
// around each bounded face the black and the white strand angles are both
// monotone and non-constant; at each bounded corner of a boundary vertex the
// two rhombus angles add up to at most one turn. Throws NotBipartite.
YReport in_Y(const CombMap& m, const TrackContext& tc, const AngleMap& a);

// Reference path: k = 0 satisfies the flat system and every theta lies in
// (0,1), together with the boundary-corner clause of in_Y.
bool flat_minimal_reference(const CombMap& m, const TrackContext& tc, const AngleMap& a);

// Monotone along the boundary order and injective on crossing pairs and on
// face anti-parallel pairs. Throws HasClosedLoop.
bool in_X(const CombMap& m, const TrackContext& tc, const AngleMap& a);

// Track j in boundary order gets j / (2N).
AngleMap sample_X(const CombMap& m, const TrackContext& tc);

struct GaussBonnet {
    Turn corner_sum;  // signed lifted corner angles
    Turn curvature;   // sum over enclosed faces of (1 - lifted angle sum)
    Turn residual() const { return corner_sum - 1; }
};

// c must be a simple closed walk in G^T (no G^T vertex visited twice).
// It is read with its enclosed region on the left (the orientation is
// flipped if needed). corner_sum + curvature = 1 holds for every (alpha, k);
// for flat (alpha, k) the curvature vanishes. Throws NotSimpleCycle.
GaussBonnet gauss_bonnet(const CombMap& m, const TrackContext& tc, const ClosedCurve& c,
                         const AngleMap& a, const Lift& k);

// Closed walk around bounded face node x of G^T (1-based), counterclockwise.
ClosedCurve face_boundary_curve(const TrackGraph& tg, int node);

// Boundary of a union of bounded face nodes, if it is a single simple curve.
std::optional<ClosedCurve> region_boundary(const TrackGraph& tg, const std::vector<char>& inside);

}  // namespace isorad
