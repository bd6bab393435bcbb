#include "isorad/moves.hpp"

#include <algorithm>
#include <string>

#include "isorad/error.hpp"

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

DartRef ref(const CombMap& m, int d) { return {m.edge_id(CombMap::edge_of(d)), CombMap::end_of(d)}; }

// Moves the end of the edge named by the dart to vertex `to`.
void retarget(MapSpec& s, const DartRef& r, int to) {
    for (auto& e : s.edges)
        if (e.id == r.edge) (r.end == 0 ? e.a : e.b) = to;
}

MoveResult finish(const CombMap& from, MapSpec spec) {
    MoveResult r;
    r.map = build_map(spec);
    r.tc = track_context(r.map);
    identify_tracks(from, track_context(from), r);
    return r;
}

int index_of(const CombMap& m, int vertex_id) {
    const auto v = m.vertex_index(vertex_id);
    if (!v) throw Error(Errc::PatternMismatch, "no vertex with id " + std::to_string(vertex_id));
    return *v;
}

}  // namespace

void identify_tracks(const CombMap& from, const TrackContext& from_tc, MoveResult& r) {
    const TrackSet& nts = r.tc.ts;
    r.track_map.assign(nts.size(), -1);
    r.reversed.assign(nts.size(), 0);
    for (int t = 0; t < nts.size(); ++t) {
        for (const Passage& p : nts.tracks[t].passages) {
            const auto oe = from.edge_index(r.map.edge_id(p.edge));
            if (!oe) continue;
            const int pr = p.pairing();
            const int old = from_tc.ts.track_of[*oe][pr];
            const bool rev = from_tc.ts.passage(*oe, pr).entry != p.entry;
            if (r.track_map[t] < 0) {
                r.track_map[t] = old;
                r.reversed[t] = rev;
            } else if (r.track_map[t] != old || r.reversed[t] != rev) {
                throw Error(Errc::PatternMismatch, "track " + std::to_string(t) + " matches two old tracks");
            }
        }
        if (r.track_map[t] < 0)
            throw Error(Errc::PatternMismatch, "track " + std::to_string(t) + " has no shared edge");
    }
    std::vector<int> sorted = r.track_map;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) != from_tc.ts.size() ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::PatternMismatch, "track identification is not a bijection");
}

AngleMap transfer_angles(const MoveResult& r, const AngleMap& a) {
    AngleMap out;
    for (std::size_t t = 0; t < r.track_map.size(); ++t) out.alpha.push_back(a.at(r.track_map[t], r.reversed[t]));
    return out;
}

MoveResult expand_vertex(const CombMap& m, int vertex_id, int start, int count) {
    const int v = index_of(m, vertex_id);
    const int n = m.degree(v);
    if (n < 2 || count < 1 || count >= n || start < 0 || start >= n)
        throw Error(Errc::PatternMismatch, "bad split of a degree-" + std::to_string(n) + " vertex");
    const auto& around = m.darts_around(v);
    if (m.is_outer_corner(around[(start + count - 1) % n]) || m.is_outer_corner(around[(start + n - 1) % n]))
        throw Error(Errc::PatternMismatch, "expand must split at two bounded corners");
    for (int d : m.darts_around(v))
        if (m.head(d) == v) throw Error(Errc::PatternMismatch, "expand at a vertex with a loop");
    MapSpec s = m.to_spec();
    const int u = max_vertex_id(s) + 1, v2 = u + 1;
    const int ea = max_edge_id(s) + 1, eb = ea + 1;
    s.vertices.push_back({u, opposite_color(m.color(v))});
    s.vertices.push_back({v2, m.color(v)});
    s.edges.push_back({ea, vertex_id, u});
    s.edges.push_back({eb, u, v2});
    std::vector<DartRef> keep, move;
    for (int i = 0; i < n; ++i) {
        const int d = m.darts_around(v)[(start + i) % n];
        (i < count ? keep : move).push_back(ref(m, d));
    }
    for (const auto& r : move) retarget(s, r, v2);
    keep.push_back({ea, 0});
    move.push_back({eb, 1});
    s.rotations[vertex_id] = keep;
    s.rotations[v2] = move;
    s.rotations[u] = {{ea, 1}, {eb, 0}};
    return finish(m, s);
}

MoveResult shrink_vertex(const CombMap& m, int vertex_id) {
    const int u = index_of(m, vertex_id);
    if (m.degree(u) != 2 || !m.is_inner_vertex(u))
        throw Error(Errc::PatternMismatch, "shrink needs an inner 2-valent vertex");
    const int da = m.darts_around(u)[0], db = m.darts_around(u)[1];
    const int va = m.head(da), vb = m.head(db);
    if (va == vb || va == u || vb == u) throw Error(Errc::PatternMismatch, "shrink needs two distinct neighbours");
    if (m.color(va) != m.color(vb)) throw Error(Errc::PatternMismatch, "neighbours differ in colour");
    // darts of each neighbour after the one pointing at u, in rotation order
    auto after = [&](int w, int back) {
        const auto& ds = m.darts_around(w);
        const int n = static_cast<int>(ds.size());
        const int at = static_cast<int>(std::find(ds.begin(), ds.end(), back) - ds.begin());
        std::vector<int> out;
        for (int i = 1; i < n; ++i) out.push_back(ds[(at + i) % n]);
        return out;
    };
    const auto ra = after(va, CombMap::opp(da)), rb = after(vb, CombMap::opp(db));
    MapSpec s = m.to_spec();
    const int ea = m.edge_id(CombMap::edge_of(da)), eb = m.edge_id(CombMap::edge_of(db));
    const int ida = m.vertex_id(va), idb = m.vertex_id(vb);
    std::vector<DartRef> merged;
    for (int d : ra) merged.push_back(ref(m, d));
    for (int d : rb) {
        merged.push_back(ref(m, d));
        retarget(s, ref(m, d), ida);
    }
    std::erase_if(s.edges, [&](const EdgeSpec& e) { return e.id == ea || e.id == eb; });
    std::erase_if(s.vertices, [&](const VertexSpec& x) { return x.id == vertex_id || x.id == idb; });
    s.rotations.erase(vertex_id);
    s.rotations.erase(idb);
    s.rotations[ida] = merged;
    return finish(m, s);
}

MoveResult spider_move(const CombMap& m, int face) {
    if (face < 0 || face >= m.num_faces() || face == m.outer_face() || m.face_degree(face) != 4)
        throw Error(Errc::PatternMismatch, "spider needs a bounded face of degree 4");
    if (!m.colored()) throw Error(Errc::PatternMismatch, "spider needs a bipartite map");
    const auto& ds = m.face_darts(face);
    std::vector<int> vs;
    for (int d : ds) {
        const int v = m.tail(d);
        if (!m.is_inner_vertex(v) || m.degree(v) < 3)
            throw Error(Errc::PatternMismatch, "spider needs inner corners of degree at least 3");
        vs.push_back(v);
    }
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::PatternMismatch, "spider face corners are not distinct");
    MapSpec s = m.to_spec();
    const int y0 = max_vertex_id(s) + 1, e0 = max_edge_id(s) + 1;
    auto y = [&](int i) { return y0 + ((i % 4) + 4) % 4; };
    auto leg = [&](int i) { return e0 + ((i % 4) + 4) % 4; };
    auto side = [&](int i) { return e0 + 4 + ((i % 4) + 4) % 4; };
    std::vector<int> gone;
    for (int d : ds) gone.push_back(m.edge_id(CombMap::edge_of(d)));
    for (int i = 0; i < 4; ++i) {
        s.vertices.push_back({y(i), opposite_color(m.color(vs[i]))});
        s.edges.push_back({leg(i), m.vertex_id(vs[i]), y(i)});
        s.edges.push_back({side(i), y(i), y(i + 1)});
        s.rotations[y(i)] = {{side(i), 0}, {side(i - 1), 1}, {leg(i), 1}};
        // the face darts d_i and opp(d_{i-1}) sit next to each other at v_i
        const DartRef out = ref(m, ds[i]);
        const DartRef in = ref(m, CombMap::opp(ds[(i + 3) % 4]));
        auto& rot = s.rotations[m.vertex_id(vs[i])];
        auto it = std::find(rot.begin(), rot.end(), out);
        *it = DartRef{leg(i), 0};
        rot.erase(std::find(rot.begin(), rot.end(), in));
    }
    std::erase_if(s.edges, [&](const EdgeSpec& e) { return std::count(gone.begin(), gone.end(), e.id) > 0; });
    return finish(m, s);
}

}  // namespace isorad
