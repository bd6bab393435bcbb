#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isorad {

enum class Color : std::int8_t { None, Black, White };

inline Color opposite_color(Color c) {
    return c == Color::Black ? Color::White : c == Color::White ? Color::Black : Color::None;
}

// A dart reference as it appears in map descriptions: the end of an edge
// (end 0 leaves endpoints[0], end 1 leaves endpoints[1]).
struct DartRef {
    int edge = -1;
    int end = 0;
    friend bool operator==(const DartRef&, const DartRef&) = default;
};

struct VertexSpec {
    int id = 0;
    Color color = Color::None;
};

struct EdgeSpec {
    int id = 0;
    int a = 0;
    int b = 0;
};

// External description of an embedded graph. Ids are arbitrary integers.
struct MapSpec {
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
    std::map<int, std::vector<DartRef>> rotations;  // vertex id -> darts, counterclockwise
    DartRef outer_dart;
};

// Rotation-system map. Dart d belongs to edge d/2; d^1 is its opposite;
// dart 2e leaves endpoints[0] of edge e. face_of(d) is the face on the left
// of d, so bounded faces are traced counterclockwise and the outer face
// clockwise. The corner of dart d is the wedge at tail(d) between d and
// rot(d); it lies in face_of(d).
class CombMap {
public:
    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edge_ids_.size()); }
    int num_darts() const { return 2 * num_edges(); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    static int edge_of(int d) { return d >> 1; }
    static int opp(int d) { return d ^ 1; }
    static int end_of(int d) { return d & 1; }
    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return tail_[d ^ 1]; }
    int rot(int d) const { return rot_[d]; }
    int rot_inv(int d) const { return rot_inv_[d]; }
    int next_in_face(int d) const { return rot_inv_[d ^ 1]; }
    int prev_in_face(int d) const { return rot_[d] ^ 1; }

    int face_of(int d) const { return face_of_[d]; }
    const std::vector<int>& face_darts(int f) const { return faces_[f]; }
    int face_degree(int f) const { return static_cast<int>(faces_[f].size()); }
    int outer_face() const { return outer_face_; }
    int outer_dart() const { return outer_dart_; }
    bool is_outer_corner(int d) const { return face_of_[d] == outer_face_; }

    int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
    // Darts leaving v in counterclockwise order, starting from the first
    // dart listed in the description.
    const std::vector<int>& darts_around(int v) const { return vertex_darts_[v]; }
    // No corner of v lies in the outer face.
    bool is_inner_vertex(int v) const;

    Color color(int v) const { return colors_[v]; }
    bool colored() const;

    int vertex_id(int v) const { return vertex_ids_[v]; }
    int edge_id(int e) const { return edge_ids_[e]; }
    std::optional<int> vertex_index(int id) const;
    std::optional<int> edge_index(int id) const;

    MapSpec to_spec() const;

private:
    friend CombMap build_map(const MapSpec& spec);
    std::vector<int> vertex_ids_;
    std::vector<Color> colors_;
    std::vector<int> edge_ids_;
    std::vector<int> tail_;
    std::vector<int> rot_;
    std::vector<int> rot_inv_;
    std::vector<std::vector<int>> vertex_darts_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
    int outer_face_ = -1;
    int outer_dart_ = -1;
};

// Validates and builds. Throws Error with NonPlanarOrInconsistent,
// BadBipartition or DanglingReference.
CombMap build_map(const MapSpec& spec);

struct FaceSet {
    std::vector<std::vector<int>> faces;
    int outer = -1;
    std::vector<int> degree;
};

FaceSet trace_faces(const CombMap& m);

// One dual vertex per face (the outer face included), one dual edge per edge.
// The dual dart of d leaves face_of(d) and crosses d from left to right.
// The outer face of the dual is the primal vertex tail(outer_dart); the
// outer dart is chosen so that the double dual has the original outer face.
CombMap dual_map(const CombMap& m);

// Isomorphism of rotation systems (rot and opp respected), optionally also
// matching the outer face and the colors.
bool isomorphic(const CombMap& a, const CombMap& b, bool match_outer = false,
                bool match_colors = false);

// A slot is one side of one quad: (edge of G, port). Ports are numbered
// counterclockwise around the quad (v1, f1, v2, f2):
//   0 = (v1,f1), 1 = (f1,v2), 2 = (v2,f2), 3 = (f2,v1).
// Opposite ports are p and p+2.
struct Slot {
    int edge = -1;
    int port = -1;
    friend bool operator==(const Slot&, const Slot&) = default;
};

// Dart whose corner is the side at the given port of edge e.
int side_corner(const CombMap& m, int e, int port);
// The two quad sides glued along the corner of dart c.
Slot own_slot(const CombMap& m, int c);
Slot rot_slot(const CombMap& m, int c);

struct Quad {
    int edge = -1;
    int v1 = -1, f1 = -1, v2 = -1, f2 = -1;
    std::array<int, 4> side{};        // corner dart of each port
    std::array<bool, 4> shared{};     // false when the corner is in the outer face
    std::array<Slot, 4> neighbor{};   // slot across the side, {-1,-1} if unshared
};

struct QuadGraph {
    std::vector<Quad> quads;
    int shared_side_count() const;  // glued pairs of sides
};

QuadGraph quad_graph(const CombMap& m);

// Fixture generators.
CombMap square_patch(int rows, int cols);
CombMap hexagon_cycle(int n = 6);
CombMap doubled_edge(const CombMap& base, int edge_id);
// Adds a degree-1 vertex attached to vertex_id inside the given face.
CombMap pendant(const CombMap& base, int vertex_id, int face);
CombMap triangle();
CombMap closed_loop_fixture();
CombMap single_edge();
// Dispatch by family name; params are looked up by key (rows, cols, n,
// edge, vertex, corner). Unknown family -> UnknownFamily.
CombMap generate(const std::string& family, const std::map<std::string, int>& params,
                 const CombMap* base = nullptr);

// Vertex positions for the generated square and hexagon families (used by
// direction classes and by nothing else).
std::vector<std::array<double, 2>> square_layout(int rows, int cols);
std::vector<std::array<double, 2>> hexagon_layout(int n = 6);

}  // namespace isorad
