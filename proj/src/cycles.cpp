#include "isorad/cycles.hpp"

#include <algorithm>
#include <deque>

#include "isorad/error.hpp"

namespace isorad {

Slot arrival(const TrackGraph& tg, DirectedTEdge d) {
    return d.dir > 0 ? tg.edges[d.edge].rot : tg.edges[d.edge].own;
}

Slot departure(const TrackGraph& tg, DirectedTEdge d) {
    return d.dir > 0 ? tg.edges[d.edge].own : tg.edges[d.edge].rot;
}

namespace {

// Traversal of the G^T edge at the given port, leaving the quad through it.
DirectedTEdge leave_through(const TrackGraph& tg, int quad, int port) {
    const int ge = tg.port_edge[quad][port];
    if (ge < 0) throw Error(Errc::NotACycle, "walk leaves through an unshared side");
    return {ge, tg.edges[ge].own == Slot{quad, port} ? +1 : -1};
}

}  // namespace

std::vector<int> curve_corners(const TrackGraph& tg, const std::vector<DirectedTEdge>& edges) {
    std::vector<int> corners;
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Slot a = arrival(tg, edges[i]);
        const Slot b = departure(tg, edges[(i + 1) % n]);
        if (a.edge != b.edge || a.port == b.port)
            throw Error(Errc::NotACycle, "consecutive walk edges do not pass through a quad");
        if (b.port != opposite_port(a.port)) corners.push_back(a.edge);
    }
    return corners;
}

CycleF2 cycle_of(const TrackGraph& tg, const ClosedCurve& c) {
    CycleF2 out(static_cast<int>(tg.edges.size()));
    for (const auto& d : c.edges) out.flip(d.edge);
    return out;
}

std::vector<ClosedCurve> decompose_cycle(const TrackGraph& tg, const CycleF2& c) {
    const int V = tg.num_vertices;
    // pairing of used ports at each quad
    std::vector<std::array<int, 4>> partner(V, {-1, -1, -1, -1});
    for (int v = 0; v < V; ++v) {
        std::vector<int> used;
        for (int p = 0; p < 4; ++p) {
            const int ge = tg.port_edge[v][p];
            if (ge >= 0 && c.test(ge)) used.push_back(p);
        }
        if (used.size() % 2 != 0) throw Error(Errc::NotACycle, "odd degree at a track-graph vertex");
        if (used.size() == 2) {
            partner[v][used[0]] = used[1];
            partner[v][used[1]] = used[0];
        } else if (used.size() == 4) {
            for (int p = 0; p < 4; ++p) partner[v][p] = opposite_port(p);
        }
    }
    std::vector<ClosedCurve> out;
    std::vector<char> done(tg.edges.size(), 0);
    for (int ge0 = 0; ge0 < static_cast<int>(tg.edges.size()); ++ge0) {
        if (!c.test(ge0) || done[ge0]) continue;
        ClosedCurve curve;
        DirectedTEdge d{ge0, +1};
        do {
            curve.edges.push_back(d);
            done[d.edge] = 1;
            const Slot a = arrival(tg, d);
            d = leave_through(tg, a.edge, partner[a.edge][a.port]);
        } while (!(d == DirectedTEdge{ge0, +1}));
        curve.corners = curve_corners(tg, curve.edges);
        out.push_back(std::move(curve));
    }
    return out;
}

AuxGraph auxiliary_graph(const TrackGraph& tg, const TrackSet& ts) {
    AuxGraph g;
    g.num_vertices = ts.size();
    for (int v = 0; v < tg.num_vertices; ++v) g.edges.push_back({ts.track_of[v][0], ts.track_of[v][1]});
    return g;
}

BitVec phi(const TrackGraph& tg, const TrackSet& ts, const CycleF2& c) {
    if (ts.any_closed()) throw Error(Errc::HasClosedLoop, "phi needs open tracks");
    BitVec out(tg.num_vertices);
    for (const auto& curve : decompose_cycle(tg, c))
        for (int x : curve.corners) out.flip(x);
    return out;
}

namespace {

int position_on(const TrackSet& ts, int x, int track) {
    if (ts.track_of[x][0] == track) return ts.pos_of[x][0];
    return ts.pos_of[x][1];
}

// Walk along track t from passage i to passage j.
void append_segment(const TrackGraph& tg, const TrackSet& ts, int t, int i, int j,
                    std::vector<DirectedTEdge>& out) {
    const auto& ps = ts.tracks[t].passages;
    if (i < j) {
        for (int s = i; s < j; ++s) out.push_back(leave_through(tg, ps[s].edge, ps[s].exit));
    } else {
        for (int s = i; s > j; --s) out.push_back(leave_through(tg, ps[s].edge, ps[s].entry));
    }
}

}  // namespace

CornerBasis corner_basis(const TrackGraph& tg, const TrackSet& ts, TreeOrder order) {
    if (ts.any_closed()) throw Error(Errc::HasClosedLoop, "corner basis needs open tracks");
    const int T = ts.size(), V = tg.num_vertices;
    CornerBasis cb;
    cb.in_m.assign(V, 0);
    cb.tau.assign(V, -1);
    cb.parent_edge.assign(T, -1);
    cb.parent.assign(T, -1);
    std::vector<int> depth(T, -1);

    // neighbours of a track in passage order: (crossing, other track)
    auto neighbours = [&](int t) {
        std::vector<std::pair<int, int>> out;
        for (const auto& p : ts.tracks[t].passages) {
            const int other = ts.track_of[p.edge][1 - p.pairing()];
            if (other != t) out.push_back({p.edge, other});
        }
        return out;
    };
    auto attach = [&](int child, int x, int par) {
        depth[child] = depth[par] + 1;
        cb.parent[child] = par;
        cb.parent_edge[child] = x;
        cb.in_m[x] = 1;
        cb.tau[x] = child;
        cb.tree_order.push_back(x);
    };
    for (int r = 0; r < T; ++r) {
        if (depth[r] >= 0) continue;
        cb.roots.push_back(r);
        depth[r] = 0;
        if (order == TreeOrder::BreadthFirst) {
            std::deque<int> q{r};
            while (!q.empty()) {
                const int t = q.front();
                q.pop_front();
                for (auto [x, u] : neighbours(t))
                    if (depth[u] < 0) {
                        attach(u, x, t);
                        q.push_back(u);
                    }
            }
        } else {
            std::vector<std::pair<int, std::size_t>> stack{{r, 0}};
            std::vector<std::vector<std::pair<int, int>>> nb(T);
            nb[r] = neighbours(r);
            while (!stack.empty()) {
                auto& [t, idx] = stack.back();
                if (idx == nb[t].size()) {
                    stack.pop_back();
                    continue;
                }
                auto [x, u] = nb[t][idx++];
                if (depth[u] < 0) {
                    attach(u, x, t);
                    nb[u] = neighbours(u);
                    stack.push_back({u, 0});
                }
            }
        }
    }

    for (int e = 0; e < V; ++e) {
        if (cb.in_m[e]) continue;
        cb.non_m.push_back(e);
        const int a = ts.track_of[e][0], b = ts.track_of[e][1];
        // tree path a = u0 -x1- u1 - ... -xk- uk = b
        std::vector<int> up_a{a}, up_b{b}, xa, xb;
        int ua = a, ub = b;
        while (depth[ua] > depth[ub]) {
            xa.push_back(cb.parent_edge[ua]);
            ua = cb.parent[ua];
            up_a.push_back(ua);
        }
        while (depth[ub] > depth[ua]) {
            xb.push_back(cb.parent_edge[ub]);
            ub = cb.parent[ub];
            up_b.push_back(ub);
        }
        while (ua != ub) {
            xa.push_back(cb.parent_edge[ua]);
            ua = cb.parent[ua];
            up_a.push_back(ua);
            xb.push_back(cb.parent_edge[ub]);
            ub = cb.parent[ub];
            up_b.push_back(ub);
        }
        std::vector<int> tracks = up_a, xs = xa;
        for (int i = static_cast<int>(up_b.size()) - 2; i >= 0; --i) tracks.push_back(up_b[i]);
        for (int i = static_cast<int>(xb.size()) - 1; i >= 0; --i) xs.push_back(xb[i]);

        ClosedCurve curve;
        int from_pos = ts.pos_of[e][0];
        for (std::size_t i = 0; i < tracks.size(); ++i) {
            const int t = tracks[i];
            const int to = i < xs.size() ? xs[i] : e;
            const int to_pos = i < xs.size() ? position_on(ts, to, t) : ts.pos_of[e][1];
            append_segment(tg, ts, t, from_pos, to_pos, curve.edges);
            if (i < xs.size()) from_pos = position_on(ts, to, tracks[i + 1]);
        }
        curve.corners = curve_corners(tg, curve.edges);
        cb.basis.push_back(std::move(curve));
    }
    return cb;
}

std::vector<int> region_multiplicities(const TrackGraph& tg, const ClosedCurve& c) {
    const int N = static_cast<int>(tg.face_nodes.size());
    std::vector<int> net(tg.edges.size(), 0);
    for (const auto& d : c.edges) net[d.edge] += d.dir;
    std::vector<std::vector<std::pair<int, int>>> adj(N);  // (node, n(node) - n(this))
    for (std::size_t ge = 0; ge < tg.edges.size(); ++ge) {
        const auto& E = tg.edges[ge];
        adj[E.right].push_back({E.left, net[ge]});
        adj[E.left].push_back({E.right, -net[ge]});
    }
    std::vector<int> n(N, 0);
    std::vector<char> seen(N, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (auto [w, diff] : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                n[w] = n[u] + diff;
                q.push_back(w);
            }
    }
    for (int i = 0; i < N; ++i)
        if (!seen[i]) throw Error(Errc::NonPlanarOrInconsistent, "track-graph face not reachable");
    for (std::size_t ge = 0; ge < tg.edges.size(); ++ge) {
        const auto& E = tg.edges[ge];
        if (n[E.left] - n[E.right] != net[ge])
            throw Error(Errc::NotACycle, "walk is not the boundary of a 2-chain");
    }
    return n;
}

namespace {

struct Forest {
    std::vector<int> parent_edge, parent, depth;
    std::vector<char> tree;
};

Forest spanning_forest(const TrackGraph& tg) {
    const int V = tg.num_vertices;
    Forest f;
    f.parent_edge.assign(V, -1);
    f.parent.assign(V, -1);
    f.depth.assign(V, -1);
    f.tree.assign(tg.edges.size(), 0);
    for (int r = 0; r < V; ++r) {
        if (f.depth[r] >= 0) continue;
        f.depth[r] = 0;
        std::deque<int> q{r};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int ge : tg.port_edge[v]) {
                if (ge < 0) continue;
                const auto& E = tg.edges[ge];
                const int w = E.own.edge == v ? E.rot.edge : E.own.edge;
                if (f.depth[w] < 0) {
                    f.depth[w] = f.depth[v] + 1;
                    f.parent[w] = v;
                    f.parent_edge[w] = ge;
                    f.tree[ge] = 1;
                    q.push_back(w);
                }
            }
        }
    }
    return f;
}

}  // namespace

int cycle_space_dim(const TrackGraph& tg) {
    const Forest f = spanning_forest(tg);
    int co = 0;
    for (char t : f.tree) co += !t;
    return co;
}

std::vector<CycleF2> fundamental_cycles(const TrackGraph& tg) {
    const Forest f = spanning_forest(tg);
    std::vector<CycleF2> out;
    for (std::size_t ge = 0; ge < tg.edges.size(); ++ge) {
        if (f.tree[ge]) continue;
        CycleF2 c(static_cast<int>(tg.edges.size()));
        c.flip(static_cast<int>(ge));
        int u = tg.edges[ge].own.edge, w = tg.edges[ge].rot.edge;
        while (u != w) {
            if (f.depth[u] >= f.depth[w]) {
                c.flip(f.parent_edge[u]);
                u = f.parent[u];
            } else {
                c.flip(f.parent_edge[w]);
                w = f.parent[w];
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace isorad
