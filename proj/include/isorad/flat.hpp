#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isorad/angles.hpp"
#include "isorad/cycles.hpp"

namespace isorad {

using Lift = std::vector<std::int64_t>;  // k per edge index

// One row per bounded face of G^T (row i is face node i+1): an inner vertex
// row has +1 per dart at the vertex, an inner face row -1 per dart on the
// face. rhs is 1 - s_v or 1 - s_f with s_f = sum(1/2 - theta_e).
struct FlatSystem {
    std::vector<std::vector<int>> a;  // rows x edges
    std::vector<std::int64_t> rhs;
    std::vector<Turn> theta;

    int rows() const { return static_cast<int>(a.size()); }
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& k) const;
    bool satisfied_by(const Lift& k) const;
};

// Throws NonIntegerRHS if some angle sum is not a whole number of turns.
FlatSystem flat_system(const CombMap& m, const TrackContext& tc, const AngleMap& a);

struct SolveResult {
    std::optional<Lift> k;
    std::optional<int> closed_loop_track;  // witness when there is no solution
};

// k = 0 on the marked set of the corner basis, each other k_e read off the
// region bounded by its basis curve. Asserts the system holds exactly.
SolveResult solve_flat(const CombMap& m, const TrackContext& tc, const AngleMap& a,
                       TreeOrder order = TreeOrder::BreadthFirst);

// k^t: alternating +1, -1 along the passages of t, starting with +1.
Lift track_shift(const TrackSet& ts, int t, int num_edges);
std::vector<Lift> kernel_basis(const TrackSet& ts, int num_edges);  // throws HasClosedLoop
Lift shift(Lift k, const TrackSet& ts, int t, int sign = +1);

// Representative vanishing on the marked set, reached by shifts along tau
// in tree order. Throws NotFlat if k does not satisfy the system.
Lift normal_form(const Lift& k, const FlatSystem& sys, const TrackSet& ts, const CornerBasis& cb);
bool equivalent(const Lift& k1, const Lift& k2, const FlatSystem& sys, const TrackSet& ts,
                const CornerBasis& cb);

// Alternating sum of edge indicators along the track through corner c,
// from the passage after c to the end of the track. M k = delta_tail - delta_face.
Lift corner_solution(const CombMap& m, const TrackContext& tc, int c);

struct GeometricBasis {
    std::vector<int> rows;    // face node - 1, one per solution
    std::vector<Lift> sols;   // M sols[i] = indicator of rows[i]
};
GeometricBasis geometric_basis(const CombMap& m, const TrackContext& tc);  // throws HasClosedLoop

// Pattern matrix of the system (angles do not enter it).
std::vector<std::vector<int>> flat_matrix(const CombMap& m, const TrackGraph& tg);

}  // namespace isorad
