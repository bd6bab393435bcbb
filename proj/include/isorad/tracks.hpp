#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "isorad/planar_map.hpp"

namespace isorad {

// Pairing A joins ports 0 and 2, pairing B joins ports 1 and 3.
inline int pairing_of(int port) { return port & 1; }
inline int opposite_port(int port) { return port ^ 2; }

// Graph of train-tracks. Its vertices are the edges of G (quads); its edges
// are the bounded corners of G, each gluing the own slot of the corner to
// its rot slot. Traversing an edge from the own slot to the rot slot turns
// counterclockwise around tail(corner), which is then on the left.
struct TrackGraph {
    struct Edge {
        int corner = -1;
        Slot own;
        Slot rot;
        int left = 0;   // face node on the left when going own -> rot
        int right = 0;
    };
    enum class FaceKind { Outside, InnerVertex, InnerFace };
    struct FaceNode {
        FaceKind kind = FaceKind::Outside;
        int index = -1;  // vertex or face of G
    };

    int num_vertices = 0;
    std::vector<std::array<int, 4>> port_edge;  // [edge of G][port] -> edge index or -1
    std::vector<Edge> edges;
    std::vector<int> corner_edge;               // [dart] -> edge index or -1
    std::vector<FaceNode> face_nodes;           // node 0 is the outside
    std::vector<int> vertex_node;               // [vertex of G] -> node, 0 if not inner
    std::vector<int> face_node;                 // [face of G] -> node, 0 for the outer face

    int degree(int v) const;
    int num_bounded_faces() const { return static_cast<int>(face_nodes.size()) - 1; }
};

TrackGraph build_track_graph(const CombMap& m);
TrackGraph build_track_graph(const CombMap& m, const QuadGraph& quads);

struct Passage {
    int edge = -1;
    int entry = -1;
    int exit = -1;
    int pairing() const { return pairing_of(entry); }
};

// Ports are recorded for every passage; for an open track the entry of the
// first passage and the exit of the last one are unshared sides.
struct TrainTrack {
    int id = -1;
    std::vector<Passage> passages;
    bool closed = false;
};

struct TrackSet {
    std::vector<TrainTrack> tracks;
    std::vector<std::array<int, 2>> track_of;  // [edge][pairing] -> track id
    std::vector<std::array<int, 2>> pos_of;    // [edge][pairing] -> passage index
    bool bipartite_oriented = false;

    const Passage& passage(int e, int pairing) const {
        return tracks[track_of[e][pairing]].passages[pos_of[e][pairing]];
    }
    int size() const { return static_cast<int>(tracks.size()); }
    bool any_closed() const;
};

// Tracks are discovered by scanning edges in index order, pairing A before
// B. Each is traversed coherently with its discovery strand (A: 0 -> 2,
// B: 1 -> 3) and starts at its open end when it has one.
TrackSet extract_tracks(const CombMap& m, const TrackGraph& tg);

// Orients every track so that it turns counterclockwise around white
// vertices and clockwise around black ones. Throws NotBipartite.
TrackSet orient_bipartite(const CombMap& m, TrackSet ts);

// Reverses every track (used to check orientation invariance).
TrackSet reverse_all(TrackSet ts);

struct Crossing {
    int edge = -1;
    int pos_a = -1;  // passage index along the lower-numbered track
    int pos_b = -1;
};

// Crossings between distinct tracks, keyed by (lower id, higher id).
std::map<std::pair<int, int>, std::vector<Crossing>> track_crossings(const TrackSet& ts);

struct ClassificationReport {
    bool has_closed_loop = false;
    std::optional<int> closed_loop_track;
    bool has_self_intersection = false;
    std::optional<std::pair<int, int>> self_intersection;  // (track, edge)
    bool ks_ok = false;
    std::optional<std::pair<int, int>> ks_violation;        // tracks meeting twice
    bool bipartite = false;
    bool has_parallel_bigon = false;                        // only meaningful if bipartite
    std::optional<std::array<int, 4>> parallel_bigon;       // (t, t', edge1, edge2)

    bool is_minimal() const;  // throws NotBipartite on uncolored maps
};

ClassificationReport classify(const CombMap& m, const TrackSet& ts);

// A strand is the piece of a track crossing one bounded corner.
struct Strand {
    int corner = -1;
    int track = -1;
    int ccw = 0;  // +1 if the track turns counterclockwise around tail(corner)
};

// The strand at corner c crosses pairing B of edge(c) and pairing A of
// edge(rot c).
Strand strand_at(const CombMap& m, const TrackSet& ts, int corner);

struct StrandSets {
    std::vector<std::vector<Strand>> at_vertex;  // bounded corners, rotation order
    std::vector<std::vector<Strand>> black;      // per face, corners at black tails
    std::vector<std::vector<Strand>> white;      // per face, corners at white tails
};

StrandSets strand_sets(const CombMap& m, const TrackSet& ts);

// Outgoing endpoints of the tracks, read counterclockwise along the outer
// boundary starting at the outer dart. Throws HasClosedLoop.
std::vector<int> boundary_order(const CombMap& m, const TrackSet& ts);

// Distinct non-crossing tracks that meet a common T-black or T-white set.
std::set<std::pair<int, int>> face_antiparallel_pairs(const CombMap& m, const TrackSet& ts,
                                                      const StrandSets& ss);

// Direction class of each track: the sign pattern of its mean displacement
// across the layout, as an index into the four diagonal directions
// (0: NE, 1: NW, 2: SW, 3: SE). Used to label square-lattice tracks.
std::vector<int> direction_classes(const CombMap& m, const TrackSet& ts,
                                   const std::vector<std::array<double, 2>>& layout);

// Track graph plus tracks in the canonical orientation: the bipartite one
// for colored maps, the discovery one otherwise. Angle maps refer to it.
struct TrackContext {
    TrackGraph tg;
    TrackSet ts;
};

TrackContext track_context(const CombMap& m);

}  // namespace isorad
