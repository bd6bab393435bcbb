#include "isorad/minimal.hpp"

#include <algorithm>
#include <map>

#include "isorad/error.hpp"

namespace isorad {

Turn cyclic_lift_sum(const std::vector<Turn>& values) {
    Turn s(0);
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) s += lift01(values[(i + 1) % n] - values[i]);
    return s;
}

namespace {

// Strand angles in the listed order (rotation order at a vertex, face walk
// order in a face); the angles of a monotone restriction increase along it.
std::vector<Turn> strand_values(const AngleMap& a, const std::vector<Strand>& strands) {
    std::vector<Turn> out;
    for (const Strand& s : strands) out.push_back(a.at(s.track));
    return out;
}

std::string vname(const CombMap& m, int v) { return "vertex " + std::to_string(m.vertex_id(v)); }

bool boundary_clause(const CombMap& m, const std::vector<Turn>& theta, int v, std::string* why) {
    for (int d : m.darts_around(v)) {
        if (m.is_outer_corner(d)) continue;
        if (theta[CombMap::edge_of(d)] + theta[CombMap::edge_of(m.rot(d))] > Turn(1)) {
            if (why) *why = vname(m, v) + ": corner angles exceed one turn";
            return false;
        }
    }
    return true;
}

}  // namespace

YReport in_Y(const CombMap& m, const TrackContext& tc, const AngleMap& a) {
    if (!m.colored()) throw Error(Errc::NotBipartite, "in_Y needs a bipartite map");
    const TrackSet& ts = tc.ts;
    const StrandSets ss = strand_sets(m, ts);
    const std::vector<Turn> theta = edge_thetas(ts, a);
    YReport r;
    auto fail = [&](std::string s) {
        r.ok = false;
        r.failures.push_back(std::move(s));
    };
    for (int e = 0; e < m.num_edges(); ++e)
        if (theta[e] == Turn(0)) fail("edge " + std::to_string(m.edge_id(e)) + ": zero rhombus angle");
    for (int v = 0; v < m.num_vertices(); ++v) {
        if (m.is_inner_vertex(v)) {
            const auto vals = strand_values(a, ss.at_vertex[v]);
            bool zero = false;
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (vals[(i + 1) % vals.size()] == vals[i]) zero = true;
            const Turn s = cyclic_lift_sum(vals);
            if (zero || s != Turn(1)) fail(vname(m, v) + ": strand angles sum to " + s.str());
        } else {
            std::string why;
            if (!boundary_clause(m, theta, v, &why)) fail(why);
        }
    }
    for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.outer_face()) continue;
        const Turn sb = cyclic_lift_sum(strand_values(a, ss.black[f]));
        const Turn sw = cyclic_lift_sum(strand_values(a, ss.white[f]));
        if (sb != Turn(1)) fail("face " + std::to_string(f) + ": black strands sum to " + sb.str());
        if (sw != Turn(1)) fail("face " + std::to_string(f) + ": white strands sum to " + sw.str());
    }
    return r;
}

bool flat_minimal_reference(const CombMap& m, const TrackContext& tc, const AngleMap& a) {
    const FlatSystem sys = flat_system(m, tc, a);
    for (const Turn& t : sys.theta)
        if (t == Turn(0)) return false;
    if (!sys.satisfied_by(Lift(m.num_edges(), 0))) return false;
    for (int v = 0; v < m.num_vertices(); ++v)
        if (!m.is_inner_vertex(v) && !boundary_clause(m, sys.theta, v, nullptr)) return false;
    return true;
}

bool in_X(const CombMap& m, const TrackContext& tc, const AngleMap& a) {
    const TrackSet& ts = tc.ts;
    const auto order = boundary_order(m, ts);
    std::vector<Turn> vals;
    for (int t : order) vals.push_back(a.at(t));
    const Turn s = cyclic_lift_sum(vals);
    if (s != Turn(0) && s != Turn(1)) return false;
    for (const auto& [pr, xs] : track_crossings(ts))
        if (a.at(pr.first) == a.at(pr.second)) return false;
    if (m.colored())
        for (const auto& [t1, t2] : face_antiparallel_pairs(m, ts, strand_sets(m, ts)))
            if (a.at(t1) == a.at(t2)) return false;
    return true;
}

AngleMap sample_X(const CombMap& m, const TrackContext& tc) {
    const auto order = boundary_order(m, tc.ts);
    const int n = static_cast<int>(order.size());
    AngleMap a;
    a.alpha.assign(tc.ts.size(), Turn(0));
    for (int j = 0; j < n; ++j) a.alpha[order[j]] = Turn(j, 2 * n);
    return a;
}

GaussBonnet gauss_bonnet(const CombMap& m, const TrackContext& tc, const ClosedCurve& c,
                         const AngleMap& a, const Lift& k) {
    const TrackGraph& tg = tc.tg;
    std::vector<char> seen(tg.num_vertices, 0);
    for (const auto& d : c.edges) {
        const int q = arrival(tg, d).edge;
        if (seen[q]) throw Error(Errc::NotSimpleCycle, "walk revisits quad " + std::to_string(q));
        seen[q] = 1;
    }
    curve_corners(tg, c.edges);  // validates the walk
    const std::vector<int> n = region_multiplicities(tg, c);
    const std::vector<Turn> theta = edge_thetas(tc.ts, a);
    auto lifted = [&](int e) { return theta[e] + Rational(k[e]); };

    GaussBonnet gb{Turn(0), Turn(0)};
    const std::size_t L = c.edges.size();
    for (std::size_t i = 0; i < L; ++i) {
        const Slot in = arrival(tg, c.edges[i]);
        const Slot out = departure(tg, c.edges[(i + 1) % L]);
        if (pairing_of(in.port) == pairing_of(out.port)) continue;
        const int e = in.edge;
        const int lo = std::min(in.port, out.port), hi = std::max(in.port, out.port);
        const int quadrant = (lo == 0 && hi == 3) ? 3 : lo;  // 0:f1 1:v2 2:f2 3:v1
        const int d0 = 2 * e, d1 = 2 * e + 1;
        int node;
        Turn ang;
        switch (quadrant) {
            case 0: node = tg.face_node[m.face_of(d1)]; ang = kHalfTurn - lifted(e); break;
            case 1: node = tg.vertex_node[m.tail(d1)]; ang = lifted(e); break;
            case 2: node = tg.face_node[m.face_of(d0)]; ang = kHalfTurn - lifted(e); break;
            default: node = tg.vertex_node[m.tail(d0)]; ang = lifted(e); break;
        }
        gb.corner_sum += n[node] != 0 ? ang : -ang;
    }
    for (int v = 0; v < m.num_vertices(); ++v) {
        const int x = tg.vertex_node[v];
        if (x == 0 || n[x] == 0) continue;
        Turn s(0);
        for (int d : m.darts_around(v)) s += lifted(CombMap::edge_of(d));
        gb.curvature += 1 - s;
    }
    for (int f = 0; f < m.num_faces(); ++f) {
        const int x = tg.face_node[f];
        if (x == 0 || n[x] == 0) continue;
        Turn s(0);
        for (int d : m.face_darts(f)) s += kHalfTurn - lifted(CombMap::edge_of(d));
        gb.curvature += 1 - s;
    }
    return gb;
}

std::optional<ClosedCurve> region_boundary(const TrackGraph& tg, const std::vector<char>& inside) {
    std::vector<DirectedTEdge> bd;
    for (int ge = 0; ge < static_cast<int>(tg.edges.size()); ++ge) {
        const auto& E = tg.edges[ge];
        const bool l = inside[E.left], r = inside[E.right];
        if (l != r) bd.push_back({ge, l ? +1 : -1});
    }
    if (bd.empty()) return std::nullopt;
    std::map<int, std::vector<int>> leaving;  // quad -> indices of boundary edges departing it
    for (int i = 0; i < static_cast<int>(bd.size()); ++i) leaving[departure(tg, bd[i]).edge].push_back(i);
    for (const auto& [q, v] : leaving)
        if (v.size() != 1) return std::nullopt;
    ClosedCurve c;
    std::vector<char> used(bd.size(), 0);
    int i = 0;
    while (!used[i]) {
        used[i] = 1;
        c.edges.push_back(bd[i]);
        const int q = arrival(tg, bd[i]).edge;
        const auto it = leaving.find(q);
        if (it == leaving.end()) return std::nullopt;
        i = it->second[0];
    }
    if (i != 0 || c.edges.size() != bd.size()) return std::nullopt;
    c.corners = curve_corners(tg, c.edges);
    return c;
}

ClosedCurve face_boundary_curve(const TrackGraph& tg, int node) {
    std::vector<char> inside(tg.face_nodes.size(), 0);
    inside[node] = 1;
    auto c = region_boundary(tg, inside);
    if (!c) throw Error(Errc::NotSimpleCycle, "face boundary is not a simple curve");
    return *c;
}

}  // namespace isorad
