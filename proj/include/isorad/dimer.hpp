#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isorad/angles.hpp"

namespace isorad {

inline const Turn kDefaultPhaseConstant{1, 4};

// Argument of the phase of edge e, read from white to black:
// C + alpha_1 + theta/2 + 1/4 where alpha_1 is the first coherent angle
// with the white endpoint taken as v1. Throws DegenerateEdge when the two
// tracks crossing e have equal angles, NotBipartite on uncoloured maps.
Turn phase_arg(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e,
               const Turn& c = kDefaultPhaseConstant);
std::complex<double> phase(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e,
                           const Turn& c = kDefaultPhaseConstant);

// The same argument computed in floating point from the chord
// e^{i alpha_2} - e^{i alpha_1} (turns in [0,1)).
double chord_arg(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e,
                 const Turn& c = kDefaultPhaseConstant);

struct FaceDefect {
    std::int64_t cone = 0;  // sum of dual angles around the face, whole turns
    bool pass = false;      // cone is an odd number of turns
};
FaceDefect face_defect(const CombMap& m, const TrackSet& ts, const AngleMap& a, int f);

// Floating cross-check: the alternating product of unit phases around f
// equals -(-1)^{deg(f)/2} within 1e-9.
bool face_phase_product_ok(const CombMap& m, const TrackSet& ts, const AngleMap& a, int f,
                           const Turn& c = kDefaultPhaseConstant);

// Every bounded face passes. Throws DegenerateEdge.
bool in_K(const CombMap& m, const TrackSet& ts, const AngleMap& a);

enum class WeightMode { Unit, Isoradial };
// Isoradial weights 2 sin(pi theta) need every theta in (0,1/2); BadParams otherwise.
std::vector<double> edge_weights(const TrackSet& ts, const AngleMap& a, WeightMode mode);
bool isoradial_defined(const TrackSet& ts, const AngleMap& a);

struct KasteleynMatrix {
    Eigen::MatrixXcd k;
    std::vector<int> white;  // row -> vertex
    std::vector<int> black;  // column -> vertex
};
// Throws UnbalancedColors, NotBipartite, DegenerateEdge.
KasteleynMatrix kasteleyn_matrix(const CombMap& m, const TrackSet& ts, const AngleMap& a,
                                 const std::vector<double>& weights,
                                 const Turn& c = kDefaultPhaseConstant);
double det_partition(const KasteleynMatrix& km);

struct MatchingSum {
    double z = 0;
    std::int64_t count = 0;
};
// Cap from ISORAD_MATCHING_CAP, default 32.
int matching_cap();
// Sum over perfect matchings of the product of weights. Throws TooLarge.
MatchingSum brute_force_Z(const CombMap& m, const std::vector<double>& weights, int cap = -1);

}  // namespace isorad
