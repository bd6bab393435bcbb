#pragma once

#include <vector>

#include "isorad/linalg.hpp"
#include "isorad/tracks.hpp"

namespace isorad {

// F2 cycle: a set of G^T edges.
using CycleF2 = BitVec;

// One traversal of a G^T edge; dir = +1 goes from the own slot to the rot slot.
struct DirectedTEdge {
    int edge = -1;
    int dir = +1;
    friend bool operator==(const DirectedTEdge&, const DirectedTEdge&) = default;
};

// Closed walk in G^T. corners lists the G^T vertices at which the walk
// switches pairing, in walk order.
struct ClosedCurve {
    std::vector<DirectedTEdge> edges;
    std::vector<int> corners;
};

// Quad entered when traversing d, and the port of entry.
Slot arrival(const TrackGraph& tg, DirectedTEdge d);
Slot departure(const TrackGraph& tg, DirectedTEdge d);

// Recomputes the corners of a closed walk from its edges. Throws NotACycle
// if consecutive edges do not meet in a quad.
std::vector<int> curve_corners(const TrackGraph& tg, const std::vector<DirectedTEdge>& edges);

CycleF2 cycle_of(const TrackGraph& tg, const ClosedCurve& c);  // odd-multiplicity edges

// Unique decomposition going straight through every degree-4 visit. Each
// curve starts at its lowest edge, traversed own -> rot. Throws NotACycle.
std::vector<ClosedCurve> decompose_cycle(const TrackGraph& tg, const CycleF2& c);

// Auxiliary graph: vertices are tracks, one edge per G^T vertex joining the
// tracks of its two pairings (a loop for a self-intersection).
struct AuxGraph {
    struct Edge {
        int a = -1;  // track of pairing A
        int b = -1;  // track of pairing B
    };
    int num_vertices = 0;
    std::vector<Edge> edges;  // indexed by G^T vertex
};

AuxGraph auxiliary_graph(const TrackGraph& tg, const TrackSet& ts);

// Corners of the decomposition, as a set of G' edges. Throws HasClosedLoop.
BitVec phi(const TrackGraph& tg, const TrackSet& ts, const CycleF2& c);

enum class TreeOrder { BreadthFirst, DepthFirst };

struct CornerBasis {
    std::vector<char> in_m;          // [G^T vertex]
    std::vector<int> tau;            // [G^T vertex] -> child track, -1 if not in M
    std::vector<int> tree_order;     // members of M in discovery order
    std::vector<int> parent_edge;    // [track] -> G^T vertex to its parent, -1 at roots
    std::vector<int> parent;         // [track] -> parent track, -1 at roots
    std::vector<int> roots;
    std::vector<int> non_m;          // G^T vertices outside M, ascending
    std::vector<ClosedCurve> basis;  // parallel to non_m
};

// Spanning forest of G' grown from the lowest-numbered track of each
// component. Throws HasClosedLoop.
CornerBasis corner_basis(const TrackGraph& tg, const TrackSet& ts,
                         TreeOrder order = TreeOrder::BreadthFirst);

// Face multiplicities of G^T for an oriented closed walk, outside = 0.
// Entry i is the multiplicity of face node i (see TrackGraph::face_nodes).
std::vector<int> region_multiplicities(const TrackGraph& tg, const ClosedCurve& c);

// Independent dimension of the cycle space: number of co-tree edges of a
// spanning forest of G^T.
int cycle_space_dim(const TrackGraph& tg);
// Fundamental cycles of that spanning forest.
std::vector<CycleF2> fundamental_cycles(const TrackGraph& tg);

}  // namespace isorad
