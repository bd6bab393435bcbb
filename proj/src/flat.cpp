#include "isorad/flat.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "isorad/error.hpp"

namespace isorad {

std::vector<std::int64_t> FlatSystem::apply(const std::vector<std::int64_t>& k) const {
    std::vector<std::int64_t> out(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t e = 0; e < k.size(); ++e) out[r] += a[r][e] * k[e];
    return out;
}

bool FlatSystem::satisfied_by(const Lift& k) const { return apply(k) == rhs; }

std::vector<std::vector<int>> flat_matrix(const CombMap& m, const TrackGraph& tg) {
    std::vector<std::vector<int>> a(tg.num_bounded_faces(), std::vector<int>(m.num_edges(), 0));
    for (int v = 0; v < m.num_vertices(); ++v)
        if (tg.vertex_node[v] > 0)
            for (int d : m.darts_around(v)) a[tg.vertex_node[v] - 1][CombMap::edge_of(d)] += 1;
    for (int f = 0; f < m.num_faces(); ++f)
        if (tg.face_node[f] > 0)
            for (int d : m.face_darts(f)) a[tg.face_node[f] - 1][CombMap::edge_of(d)] -= 1;
    return a;
}

FlatSystem flat_system(const CombMap& m, const TrackContext& tc, const AngleMap& a) {
    const TrackGraph& tg = tc.tg;
    FlatSystem sys;
    sys.a = flat_matrix(m, tg);
    sys.theta = edge_thetas(tc.ts, a);
    std::vector<Turn> s(tg.num_bounded_faces(), Turn(0));
    for (int v = 0; v < m.num_vertices(); ++v)
        if (tg.vertex_node[v] > 0)
            for (int d : m.darts_around(v)) s[tg.vertex_node[v] - 1] += sys.theta[CombMap::edge_of(d)];
    for (int f = 0; f < m.num_faces(); ++f)
        if (tg.face_node[f] > 0)
            for (int d : m.face_darts(f))
                s[tg.face_node[f] - 1] += kHalfTurn - sys.theta[CombMap::edge_of(d)];
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (!s[r].is_integer())
            throw Error(Errc::NonIntegerRHS, "angle sum " + s[r].str() + " at row " + std::to_string(r));
        sys.rhs.push_back(1 - s[r].num());
    }
    return sys;
}

SolveResult solve_flat(const CombMap& m, const TrackContext& tc, const AngleMap& a,
                       TreeOrder order) {
    SolveResult res;
    for (const auto& t : tc.ts.tracks)
        if (t.closed) {
            res.closed_loop_track = t.id;
            return res;
        }
    const FlatSystem sys = flat_system(m, tc, a);
    const CornerBasis cb = corner_basis(tc.tg, tc.ts, order);
    Lift k(m.num_edges(), 0);
    for (std::size_t i = 0; i < cb.non_m.size(); ++i) {
        const int e = cb.non_m[i];
        const std::vector<int> n = region_multiplicities(tc.tg, cb.basis[i]);
        std::vector<std::int64_t> coef(m.num_edges(), 0);
        std::int64_t rhs = 0;
        for (int r = 0; r < sys.rows(); ++r) {
            const int w = n[r + 1];
            if (w == 0) continue;
            for (int x = 0; x < m.num_edges(); ++x) coef[x] += w * sys.a[r][x];
            rhs += w * sys.rhs[r];
        }
        for (int x = 0; x < m.num_edges(); ++x)
            if (x != e && coef[x] != 0 && !cb.in_m[x])
                throw Error(Errc::NotFlat, "basis curve equation involves an unmarked non-corner");
        if (coef[e] != 1 && coef[e] != -1)
            throw Error(Errc::NotFlat, "basis curve equation does not isolate its corner");
        k[e] = rhs * coef[e];
    }
    if (!sys.satisfied_by(k)) throw Error(Errc::NotFlat, "constructed lift violates the system");
    res.k = std::move(k);
    return res;
}

Lift track_shift(const TrackSet& ts, int t, int num_edges) {
    Lift k(num_edges, 0);
    const auto& ps = ts.tracks[t].passages;
    for (std::size_t i = 0; i < ps.size(); ++i) k[ps[i].edge] += (i % 2 == 0) ? 1 : -1;
    return k;
}

std::vector<Lift> kernel_basis(const TrackSet& ts, int num_edges) {
    if (ts.any_closed()) throw Error(Errc::HasClosedLoop, "kernel basis needs open tracks");
    std::vector<Lift> out;
    for (int t = 0; t < ts.size(); ++t) out.push_back(track_shift(ts, t, num_edges));
    return out;
}

Lift shift(Lift k, const TrackSet& ts, int t, int sign) {
    const Lift d = track_shift(ts, t, static_cast<int>(k.size()));
    for (std::size_t e = 0; e < k.size(); ++e) k[e] += sign * d[e];
    return k;
}

Lift normal_form(const Lift& k, const FlatSystem& sys, const TrackSet& ts, const CornerBasis& cb) {
    if (!sys.satisfied_by(k)) throw Error(Errc::NotFlat, "lift does not satisfy the system");
    Lift out = k;
    const int E = static_cast<int>(k.size());
    for (int x : cb.tree_order) {
        const int t = cb.tau[x];
        const Lift d = track_shift(ts, t, E);
        if (d[x] != 1 && d[x] != -1) throw Error(Errc::NotFlat, "marked vertex not on its track once");
        const std::int64_t c = out[x] * d[x];
        for (int e = 0; e < E; ++e) out[e] -= c * d[e];
    }
    return out;
}

bool equivalent(const Lift& k1, const Lift& k2, const FlatSystem& sys, const TrackSet& ts,
                const CornerBasis& cb) {
    return normal_form(k1, sys, ts, cb) == normal_form(k2, sys, ts, cb);
}

Lift corner_solution(const CombMap& m, const TrackContext& tc, int c) {
    const TrackSet& ts = tc.ts;
    const int t = ts.track_of[CombMap::edge_of(c)][1];
    const int i1 = ts.pos_of[CombMap::edge_of(c)][1];
    const int i2 = ts.pos_of[CombMap::edge_of(m.rot(c))][0];
    if (ts.track_of[CombMap::edge_of(m.rot(c))][0] != t)
        throw Error(Errc::NonPlanarOrInconsistent, "corner strand spans two tracks");
    const auto& ps = ts.tracks[t].passages;
    const int n = static_cast<int>(ps.size());
    // the passage after the corner along t
    int start = std::max(i1, i2);
    if (ts.tracks[t].closed) throw Error(Errc::HasClosedLoop, "corner on a closed track");
    if (std::abs(i1 - i2) != 1) throw Error(Errc::NonPlanarOrInconsistent, "corner passages not adjacent");
    Lift k(m.num_edges(), 0);
    for (int j = start, s = 1; j < n; ++j, s = -s) k[ps[j].edge] += s;
    return k;
}

GeometricBasis geometric_basis(const CombMap& m, const TrackContext& tc) {
    if (tc.ts.any_closed()) throw Error(Errc::HasClosedLoop, "geometric basis needs open tracks");
    const TrackGraph& tg = tc.tg;
    const int V = m.num_vertices();
    // quad graph nodes: vertices 0..V-1, faces V..V+F-1, joined by bounded corners
    const int N = V + m.num_faces();
    std::vector<std::vector<std::pair<int, int>>> adj(N);  // (node, corner)
    for (int d = 0; d < m.num_darts(); ++d) {
        if (m.is_outer_corner(d)) continue;
        adj[m.tail(d)].push_back({V + m.face_of(d), d});
        adj[V + m.face_of(d)].push_back({m.tail(d), d});
    }
    const Lift zero(m.num_edges(), 0);
    GeometricBasis gb;
    auto build = [&](int src, int row) {
        std::vector<int> via(N, -2), from(N, -1);
        std::deque<int> q{src};
        via[src] = -1;
        int target = -1;
        while (!q.empty() && target < 0) {
            const int u = q.front();
            q.pop_front();
            for (auto [w, c] : adj[u]) {
                if (via[w] != -2) continue;
                via[w] = c;
                from[w] = u;
                if (w < V && !m.is_inner_vertex(w)) {
                    target = w;
                    break;
                }
                q.push_back(w);
            }
        }
        if (target < 0) throw Error(Errc::NonPlanarOrInconsistent, "no path to the boundary");
        std::vector<int> path;  // corners from src to target
        for (int w = target; w != src; w = from[w]) path.push_back(via[w]);
        std::reverse(path.begin(), path.end());
        Lift k = zero;
        int s = src < V ? 1 : -1;
        for (int c : path) {
            const Lift kc = corner_solution(m, tc, c);
            for (int e = 0; e < m.num_edges(); ++e) k[e] += s * kc[e];
            s = -s;
        }
        gb.rows.push_back(row);
        gb.sols.push_back(std::move(k));
    };
    for (int r = 0; r < tg.num_bounded_faces(); ++r) {
        const auto& fn = tg.face_nodes[r + 1];
        build(fn.kind == TrackGraph::FaceKind::InnerVertex ? fn.index : V + fn.index, r);
    }
    return gb;
}

}  // namespace isorad
