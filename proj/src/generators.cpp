#include <algorithm>
#include <cmath>
#include <numbers>

#include "isorad/error.hpp"
#include "isorad/planar_map.hpp"

namespace isorad {

namespace {

int max_vertex_id(const MapSpec& s) {
    int mx = -1;
    for (const auto& v : s.vertices) mx = std::max(mx, v.id);
    return mx;
}

int max_edge_id(const MapSpec& s) {
    int mx = -1;
    for (const auto& e : s.edges) mx = std::max(mx, e.id);
    return mx;
}

int param(const std::map<std::string, int>& p, const std::string& key, int fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

}  // namespace

CombMap square_patch(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2)
        throw Error(Errc::BadParams, "square_patch needs at least two vertices");
    MapSpec s;
    auto vid = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            s.vertices.push_back({vid(r, c), (r + c) % 2 == 0 ? Color::White : Color::Black});
    // horizontal edges first, then vertical ones
    const int nh = rows * (cols - 1);
    auto hid = [cols](int r, int c) { return r * (cols - 1) + c; };
    auto vert_id = [nh, cols](int r, int c) { return nh + r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) s.edges.push_back({hid(r, c), vid(r, c), vid(r, c + 1)});
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            s.edges.push_back({vert_id(r, c), vid(r, c), vid(r + 1, c)});
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            auto& rot = s.rotations[vid(r, c)];
            if (c + 1 < cols) rot.push_back({hid(r, c), 0});       // east
            if (r + 1 < rows) rot.push_back({vert_id(r, c), 0});   // north
            if (c > 0) rot.push_back({hid(r, c - 1), 1});          // west
            if (r > 0) rot.push_back({vert_id(r - 1, c), 1});      // south
        }
    }
    // bottom boundary traversed westward has the outside on its left
    if (cols >= 2)
        s.outer_dart = {hid(0, 0), 1};
    else
        s.outer_dart = {vert_id(0, 0), 0};
    return build_map(s);
}

std::vector<std::array<double, 2>> square_layout(int rows, int cols) {
    std::vector<std::array<double, 2>> pos;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) pos.push_back({double(c), double(r)});
    return pos;
}

CombMap hexagon_cycle(int n) {
    if (n < 3) throw Error(Errc::BadParams, "cycle needs at least 3 vertices");
    MapSpec s;
    const bool even = n % 2 == 0;
    for (int i = 0; i < n; ++i)
        s.vertices.push_back({i, even ? (i % 2 == 0 ? Color::White : Color::Black) : Color::None});
    for (int i = 0; i < n; ++i) s.edges.push_back({i, i, (i + 1) % n});
    for (int i = 0; i < n; ++i) s.rotations[i] = {{i, 0}, {(i + n - 1) % n, 1}};
    s.outer_dart = {0, 1};  // clockwise along the cycle
    return build_map(s);
}

std::vector<std::array<double, 2>> hexagon_layout(int n) {
    std::vector<std::array<double, 2>> pos;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * std::numbers::pi * i / n;
        pos.push_back({std::cos(a), std::sin(a)});
    }
    return pos;
}

CombMap triangle() { return hexagon_cycle(3); }

CombMap single_edge() {
    MapSpec s;
    s.vertices = {{0, Color::White}, {1, Color::Black}};
    s.edges = {{0, 0, 1}};
    s.rotations[0] = {{0, 0}};
    s.rotations[1] = {{0, 1}};
    s.outer_dart = {0, 0};
    return build_map(s);
}

CombMap doubled_edge(const CombMap& base, int edge_id) {
    auto ei = base.edge_index(edge_id);
    if (!ei) throw Error(Errc::BadParams, "no edge with id " + std::to_string(edge_id));
    const int d0 = 2 * *ei, d1 = d0 + 1;
    if (base.tail(d0) == base.tail(d1)) throw Error(Errc::BadParams, "cannot double a loop");
    MapSpec s = base.to_spec();
    const int nid = max_edge_id(s) + 1;
    const int a = base.vertex_id(base.tail(d0)), b = base.vertex_id(base.tail(d1));
    s.edges.push_back({nid, a, b});
    auto& ra = s.rotations[a];
    auto ita = std::find(ra.begin(), ra.end(), DartRef{edge_id, 0});
    ra.insert(ita + 1, DartRef{nid, 0});
    auto& rb = s.rotations[b];
    auto itb = std::find(rb.begin(), rb.end(), DartRef{edge_id, 1});
    rb.insert(itb, DartRef{nid, 1});
    return build_map(s);
}

CombMap pendant(const CombMap& base, int vertex_id, int face) {
    auto vi = base.vertex_index(vertex_id);
    if (!vi) throw Error(Errc::BadParams, "no vertex with id " + std::to_string(vertex_id));
    if (face < 0 || face >= base.num_faces()) throw Error(Errc::BadParams, "no such face");
    int corner = -1;
    for (int d : base.darts_around(*vi))
        if (base.face_of(d) == face) {
            corner = d;
            break;
        }
    if (corner < 0) throw Error(Errc::BadParams, "vertex is not on the given face");
    MapSpec s = base.to_spec();
    const int nv = max_vertex_id(s) + 1, ne = max_edge_id(s) + 1;
    s.vertices.push_back({nv, opposite_color(base.color(*vi))});
    s.edges.push_back({ne, vertex_id, nv});
    auto& rot = s.rotations[vertex_id];
    const DartRef after{base.edge_id(CombMap::edge_of(corner)), CombMap::end_of(corner)};
    rot.insert(std::find(rot.begin(), rot.end(), after) + 1, DartRef{ne, 0});
    s.rotations[nv] = {{ne, 1}};
    return build_map(s);
}

CombMap generate(const std::string& family, const std::map<std::string, int>& params,
                 const CombMap* base) {
    if (family == "square_patch" || family == "grid_graph")
        return square_patch(param(params, "rows", 3), param(params, "cols", 3));
    if (family == "hexagon_cycle") return hexagon_cycle(param(params, "n", 6));
    if (family == "triangle") return triangle();
    if (family == "single_edge") return single_edge();
    if (family == "closed_loop_fixture") return closed_loop_fixture();
    if (family == "doubled_edge") {
        // default: an edge at the centre vertex of a 3x3 patch, between two inner faces
        CombMap sq = square_patch(3, 3);
        const CombMap& b = base ? *base : sq;
        return doubled_edge(b, param(params, "edge", base ? b.edge_id(0) : 7));
    }
    if (family == "pendant") {
        // default: a bipartite gadget, a leaf hung from the centre of a 3x3 patch
        CombMap sq = square_patch(3, 3);
        const CombMap& b = base ? *base : sq;
        const int vid = param(params, "vertex", base ? b.vertex_id(0) : 4);
        int face = param(params, "face", -1);
        if (face < 0) {
            const auto vi = b.vertex_index(vid);
            if (!vi) throw Error(Errc::BadParams, "no vertex with id " + std::to_string(vid));
            for (int d : b.darts_around(*vi))
                if (!b.is_outer_corner(d)) {
                    face = b.face_of(d);
                    break;
                }
            if (face < 0) face = b.outer_face();
        }
        return pendant(b, vid, face);
    }
    throw Error(Errc::UnknownFamily, "unknown family '" + family + "'");
}

}  // namespace isorad
