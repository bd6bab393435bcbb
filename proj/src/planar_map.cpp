#include "isorad/planar_map.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "isorad/error.hpp"

namespace isorad {

bool CombMap::is_inner_vertex(int v) const {
    for (int d : vertex_darts_[v])
        if (face_of_[d] == outer_face_) return false;
    return true;
}

bool CombMap::colored() const {
    return !colors_.empty() && colors_[0] != Color::None;
}

std::optional<int> CombMap::vertex_index(int id) const {
    auto it = std::find(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end()) return std::nullopt;
    return static_cast<int>(it - vertex_ids_.begin());
}

std::optional<int> CombMap::edge_index(int id) const {
    auto it = std::find(edge_ids_.begin(), edge_ids_.end(), id);
    if (it == edge_ids_.end()) return std::nullopt;
    return static_cast<int>(it - edge_ids_.begin());
}

MapSpec CombMap::to_spec() const {
    MapSpec s;
    for (int v = 0; v < num_vertices(); ++v) s.vertices.push_back({vertex_ids_[v], colors_[v]});
    for (int e = 0; e < num_edges(); ++e)
        s.edges.push_back({edge_ids_[e], vertex_ids_[tail_[2 * e]], vertex_ids_[tail_[2 * e + 1]]});
    for (int v = 0; v < num_vertices(); ++v) {
        auto& rot = s.rotations[vertex_ids_[v]];
        for (int d : vertex_darts_[v]) rot.push_back({edge_ids_[edge_of(d)], end_of(d)});
    }
    s.outer_dart = {edge_ids_[edge_of(outer_dart_)], end_of(outer_dart_)};
    return s;
}

namespace {

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace

CombMap build_map(const MapSpec& spec) {
    CombMap m;
    std::unordered_map<int, int> vidx, eidx;
    for (const auto& v : spec.vertices) {
        if (!vidx.emplace(v.id, static_cast<int>(m.vertex_ids_.size())).second)
            fail(Errc::NonPlanarOrInconsistent, "duplicate vertex id " + std::to_string(v.id));
        m.vertex_ids_.push_back(v.id);
        m.colors_.push_back(v.color);
    }
    const int V = static_cast<int>(m.vertex_ids_.size());
    if (V == 0) fail(Errc::NonPlanarOrInconsistent, "map has no vertices");
    const bool any_color = std::any_of(m.colors_.begin(), m.colors_.end(),
                                       [](Color c) { return c != Color::None; });
    const bool all_color = std::all_of(m.colors_.begin(), m.colors_.end(),
                                       [](Color c) { return c != Color::None; });
    if (any_color && !all_color) fail(Errc::BadBipartition, "coloring is partial");

    for (const auto& e : spec.edges) {
        if (!eidx.emplace(e.id, static_cast<int>(m.edge_ids_.size())).second)
            fail(Errc::NonPlanarOrInconsistent, "duplicate edge id " + std::to_string(e.id));
        auto a = vidx.find(e.a), b = vidx.find(e.b);
        if (a == vidx.end() || b == vidx.end())
            fail(Errc::DanglingReference, "edge " + std::to_string(e.id) + " has unknown endpoint");
        m.edge_ids_.push_back(e.id);
        m.tail_.push_back(a->second);
        m.tail_.push_back(b->second);
        if (any_color && m.colors_[a->second] == m.colors_[b->second])
            fail(Errc::BadBipartition, "edge " + std::to_string(e.id) + " joins equal colors");
    }
    const int D = static_cast<int>(m.tail_.size());
    if (D == 0) fail(Errc::NonPlanarOrInconsistent, "map has no edges");

    m.rot_.assign(D, -1);
    m.rot_inv_.assign(D, -1);
    m.vertex_darts_.assign(V, {});
    std::vector<char> seen(D, 0);
    for (const auto& [vid, list] : spec.rotations) {
        auto vit = vidx.find(vid);
        if (vit == vidx.end())
            fail(Errc::DanglingReference, "rotation for unknown vertex " + std::to_string(vid));
        const int v = vit->second;
        if (!m.vertex_darts_[v].empty())
            fail(Errc::NonPlanarOrInconsistent, "two rotations for vertex " + std::to_string(vid));
        for (const auto& ref : list) {
            auto eit = eidx.find(ref.edge);
            if (eit == eidx.end())
                fail(Errc::DanglingReference, "rotation references unknown edge " +
                                                  std::to_string(ref.edge));
            if (ref.end != 0 && ref.end != 1)
                fail(Errc::DanglingReference, "dart end must be 0 or 1");
            const int d = 2 * eit->second + ref.end;
            if (m.tail_[d] != v)
                fail(Errc::NonPlanarOrInconsistent,
                     "dart of edge " + std::to_string(ref.edge) + " listed at wrong vertex");
            if (seen[d]) fail(Errc::NonPlanarOrInconsistent, "dart listed twice");
            seen[d] = 1;
            m.vertex_darts_[v].push_back(d);
        }
    }
    for (int d = 0; d < D; ++d)
        if (!seen[d])
            fail(Errc::NonPlanarOrInconsistent,
                 "dart of edge " + std::to_string(m.edge_ids_[d >> 1]) + " missing from rotation");
    for (int v = 0; v < V; ++v) {
        const auto& ds = m.vertex_darts_[v];
        if (ds.empty())
            fail(Errc::NonPlanarOrInconsistent, "isolated vertex " + std::to_string(m.vertex_ids_[v]));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const int d = ds[i], n = ds[(i + 1) % ds.size()];
            m.rot_[d] = n;
            m.rot_inv_[n] = d;
        }
    }

    // connectivity
    {
        std::vector<char> vis(V, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : m.vertex_darts_[v]) {
                int w = m.tail_[d ^ 1];
                if (!vis[w]) {
                    vis[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != V) fail(Errc::NonPlanarOrInconsistent, "map is not connected");
    }

    m.face_of_.assign(D, -1);
    for (int d0 = 0; d0 < D; ++d0) {
        if (m.face_of_[d0] >= 0) continue;
        const int f = static_cast<int>(m.faces_.size());
        m.faces_.emplace_back();
        int d = d0;
        do {
            m.face_of_[d] = f;
            m.faces_[f].push_back(d);
            d = m.next_in_face(d);
        } while (d != d0);
    }
    const int E = D / 2, F = static_cast<int>(m.faces_.size());
    if (V - E + F != 2)
        fail(Errc::NonPlanarOrInconsistent,
             "Euler characteristic " + std::to_string(V - E + F) + " != 2");

    auto oe = eidx.find(spec.outer_dart.edge);
    if (oe == eidx.end() || (spec.outer_dart.end != 0 && spec.outer_dart.end != 1))
        fail(Errc::DanglingReference, "outer dart does not exist");
    m.outer_dart_ = 2 * oe->second + spec.outer_dart.end;
    m.outer_face_ = m.face_of_[m.outer_dart_];

    // rotation, face permutation and involution compose consistently
    for (int d = 0; d < D; ++d)
        if (m.prev_in_face(m.next_in_face(d)) != d)
            fail(Errc::NonPlanarOrInconsistent, "face permutation is not invertible");
    return m;
}

FaceSet trace_faces(const CombMap& m) {
    FaceSet fs;
    for (int f = 0; f < m.num_faces(); ++f) {
        fs.faces.push_back(m.face_darts(f));
        fs.degree.push_back(m.face_degree(f));
    }
    fs.outer = m.outer_face();
    return fs;
}

CombMap dual_map(const CombMap& m) {
    MapSpec s;
    for (int f = 0; f < m.num_faces(); ++f) s.vertices.push_back({f, Color::None});
    for (int e = 0; e < m.num_edges(); ++e)
        s.edges.push_back({m.edge_id(e), m.face_of(2 * e), m.face_of(2 * e + 1)});
    for (int f = 0; f < m.num_faces(); ++f) {
        auto& rot = s.rotations[f];
        for (int d : m.face_darts(f)) rot.push_back({m.edge_id(CombMap::edge_of(d)), CombMap::end_of(d)});
    }
    // a dart of the primal outer face ending at tail(outer_dart)
    const int od = m.prev_in_face(m.outer_dart());
    s.outer_dart = {m.edge_id(CombMap::edge_of(od)), CombMap::end_of(od)};
    return build_map(s);
}

bool isomorphic(const CombMap& a, const CombMap& b, bool match_outer, bool match_colors) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.num_faces() != b.num_faces())
        return false;
    const int D = a.num_darts();
    for (int start = 0; start < D; ++start) {
        std::vector<int> fwd(D, -1), bwd(D, -1);
        std::vector<int> queue{0};
        fwd[0] = start;
        bwd[start] = 0;
        bool ok = true;
        for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
            const int d = queue[qi], x = fwd[d];
            const std::pair<int, int> pairs[] = {{a.rot(d), b.rot(x)},
                                                 {CombMap::opp(d), CombMap::opp(x)},
                                                 {a.rot_inv(d), b.rot_inv(x)}};
            for (auto [nd, nx] : pairs) {
                if (fwd[nd] == -1 && bwd[nx] == -1) {
                    fwd[nd] = nx;
                    bwd[nx] = nd;
                    queue.push_back(nd);
                } else if (fwd[nd] != nx || bwd[nx] != nd) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || static_cast<int>(queue.size()) != D) continue;
        if (match_outer && b.face_of(fwd[a.outer_dart()]) != b.outer_face()) continue;
        if (match_colors) {
            bool cok = true;
            for (int d = 0; d < D && cok; ++d)
                cok = a.color(a.tail(d)) == b.color(b.tail(fwd[d]));
            if (!cok) continue;
        }
        return true;
    }
    return false;
}

int side_corner(const CombMap& m, int e, int port) {
    const int d0 = 2 * e, d1 = 2 * e + 1;
    switch (port & 3) {
        case 0: return m.rot_inv(d0);
        case 1: return d1;
        case 2: return m.rot_inv(d1);
        default: return d0;
    }
}

Slot own_slot(const CombMap&, int c) { return {CombMap::edge_of(c), (c & 1) ? 1 : 3}; }

Slot rot_slot(const CombMap& m, int c) {
    const int r = m.rot(c);
    return {CombMap::edge_of(r), (r & 1) ? 2 : 0};
}

int QuadGraph::shared_side_count() const {
    int n = 0;
    for (const auto& q : quads)
        for (bool s : q.shared) n += s;
    return n / 2;  // each glued pair is seen from both quads
}

QuadGraph quad_graph(const CombMap& m) {
    QuadGraph g;
    for (int e = 0; e < m.num_edges(); ++e) {
        Quad q;
        q.edge = e;
        q.v1 = m.tail(2 * e);
        q.v2 = m.tail(2 * e + 1);
        q.f1 = m.face_of(2 * e + 1);
        q.f2 = m.face_of(2 * e);
        for (int p = 0; p < 4; ++p) {
            const int c = side_corner(m, e, p);
            q.side[p] = c;
            q.shared[p] = !m.is_outer_corner(c);
            if (q.shared[p]) {
                const Slot here{e, p};
                const Slot a = own_slot(m, c), b = rot_slot(m, c);
                q.neighbor[p] = (a == here) ? b : a;
            } else {
                q.neighbor[p] = Slot{};
            }
        }
        g.quads.push_back(q);
    }
    return g;
}

}  // namespace isorad
