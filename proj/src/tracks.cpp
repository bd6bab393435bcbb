#include "isorad/tracks.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "isorad/error.hpp"

namespace isorad {

int TrackGraph::degree(int v) const {
    int d = 0;
    for (int x : port_edge[v]) d += x >= 0;
    return d;
}

TrackGraph build_track_graph(const CombMap& m) { return build_track_graph(m, quad_graph(m)); }

TrackGraph build_track_graph(const CombMap& m, const QuadGraph& quads) {
    TrackGraph tg;
    tg.num_vertices = m.num_edges();
    tg.port_edge.assign(m.num_edges(), {-1, -1, -1, -1});
    tg.corner_edge.assign(m.num_darts(), -1);
    tg.face_nodes.push_back({TrackGraph::FaceKind::Outside, -1});
    tg.vertex_node.assign(m.num_vertices(), 0);
    tg.face_node.assign(m.num_faces(), 0);
    for (int v = 0; v < m.num_vertices(); ++v) {
        if (!m.is_inner_vertex(v)) continue;
        tg.vertex_node[v] = static_cast<int>(tg.face_nodes.size());
        tg.face_nodes.push_back({TrackGraph::FaceKind::InnerVertex, v});
    }
    for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.outer_face()) continue;
        tg.face_node[f] = static_cast<int>(tg.face_nodes.size());
        tg.face_nodes.push_back({TrackGraph::FaceKind::InnerFace, f});
    }
    for (int c = 0; c < m.num_darts(); ++c) {
        if (m.is_outer_corner(c)) continue;
        TrackGraph::Edge e;
        e.corner = c;
        e.own = own_slot(m, c);
        e.rot = rot_slot(m, c);
        e.left = tg.vertex_node[m.tail(c)];
        e.right = tg.face_node[m.face_of(c)];
        const int idx = static_cast<int>(tg.edges.size());
        tg.edges.push_back(e);
        tg.corner_edge[c] = idx;
        tg.port_edge[e.own.edge][e.own.port] = idx;
        tg.port_edge[e.rot.edge][e.rot.port] = idx;
    }
    // the quad adjacency and the track graph must agree side by side
    for (const auto& q : quads.quads)
        for (int p = 0; p < 4; ++p)
            if (q.shared[p] != (tg.port_edge[q.edge][p] >= 0))
                throw Error(Errc::NonPlanarOrInconsistent, "quad graph and track graph disagree");
    return tg;
}

bool TrackSet::any_closed() const {
    return std::any_of(tracks.begin(), tracks.end(), [](const TrainTrack& t) { return t.closed; });
}

namespace {

// Slot reached by leaving edge e through port p, or nullopt at the boundary.
std::optional<Slot> across(const TrackGraph& tg, int e, int p) {
    const int ge = tg.port_edge[e][p];
    if (ge < 0) return std::nullopt;
    const auto& E = tg.edges[ge];
    if (E.own == Slot{e, p}) return E.rot;
    return E.own;
}

void index_track(TrackSet& ts, int id) {
    const auto& ps = ts.tracks[id].passages;
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
        ts.track_of[ps[i].edge][ps[i].pairing()] = id;
        ts.pos_of[ps[i].edge][ps[i].pairing()] = i;
    }
}

}  // namespace

TrackSet extract_tracks(const CombMap& m, const TrackGraph& tg) {
    TrackSet ts;
    const int E = m.num_edges();
    ts.track_of.assign(E, {-1, -1});
    ts.pos_of.assign(E, {-1, -1});
    for (int e0 = 0; e0 < E; ++e0) {
        for (int pr = 0; pr < 2; ++pr) {
            if (ts.track_of[e0][pr] >= 0) continue;
            // walk backwards from the coherent entry port until the boundary
            // or back to the start
            int e = e0, entry = pr;
            bool closed = false;
            for (;;) {
                auto prev = across(tg, e, entry);
                if (!prev) break;
                e = prev->edge;
                entry = opposite_port(prev->port);
                if (e == e0 && pairing_of(entry) == pr) {
                    closed = true;
                    entry = pr;
                    break;
                }
            }
            TrainTrack t;
            t.id = static_cast<int>(ts.tracks.size());
            t.closed = closed;
            const int se = e, sentry = entry;
            for (;;) {
                t.passages.push_back({e, entry, opposite_port(entry)});
                auto nxt = across(tg, e, opposite_port(entry));
                if (!nxt) break;
                e = nxt->edge;
                entry = nxt->port;
                if (e == se && entry == sentry) break;
            }
            ts.tracks.push_back(std::move(t));
            index_track(ts, ts.tracks.back().id);
        }
    }
    return ts;
}

namespace {

void reverse_track(TrainTrack& t) {
    std::reverse(t.passages.begin(), t.passages.end());
    for (auto& p : t.passages) std::swap(p.entry, p.exit);
}

// Entry port of the bipartite orientation at edge e for the given pairing:
// coherent with white -> black.
int bipartite_entry(const CombMap& m, int e, int pairing) {
    const bool v1_white = m.color(m.tail(2 * e)) == Color::White;
    return v1_white ? pairing : pairing + 2;
}

}  // namespace

TrackSet orient_bipartite(const CombMap& m, TrackSet ts) {
    if (!m.colored()) throw Error(Errc::NotBipartite, "map has no bipartite coloring");
    for (auto& t : ts.tracks) {
        const auto& p0 = t.passages.front();
        if (p0.entry != bipartite_entry(m, p0.edge, p0.pairing())) reverse_track(t);
        for (const auto& p : t.passages)
            if (p.entry != bipartite_entry(m, p.edge, p.pairing()))
                throw Error(Errc::NotBipartite, "track cannot be oriented consistently");
    }
    for (int i = 0; i < ts.size(); ++i) index_track(ts, i);
    ts.bipartite_oriented = true;
    return ts;
}

TrackSet reverse_all(TrackSet ts) {
    for (auto& t : ts.tracks) reverse_track(t);
    for (int i = 0; i < ts.size(); ++i) index_track(ts, i);
    return ts;
}

std::map<std::pair<int, int>, std::vector<Crossing>> track_crossings(const TrackSet& ts) {
    std::map<std::pair<int, int>, std::vector<Crossing>> out;
    for (int e = 0; e < static_cast<int>(ts.track_of.size()); ++e) {
        int a = ts.track_of[e][0], b = ts.track_of[e][1];
        int pa = ts.pos_of[e][0], pb = ts.pos_of[e][1];
        if (a == b) continue;
        if (a > b) {
            std::swap(a, b);
            std::swap(pa, pb);
        }
        out[{a, b}].push_back({e, pa, pb});
    }
    return out;
}

bool ClassificationReport::is_minimal() const {
    if (!bipartite) throw Error(Errc::NotBipartite, "minimality needs a bipartite coloring");
    return !has_closed_loop && !has_self_intersection && !has_parallel_bigon;
}

ClassificationReport classify(const CombMap& m, const TrackSet& ts) {
    ClassificationReport r;
    for (const auto& t : ts.tracks)
        if (t.closed) {
            r.has_closed_loop = true;
            r.closed_loop_track = t.id;
            break;
        }
    for (int e = 0; e < static_cast<int>(ts.track_of.size()); ++e)
        if (ts.track_of[e][0] == ts.track_of[e][1]) {
            r.has_self_intersection = true;
            r.self_intersection = std::make_pair(ts.track_of[e][0], e);
            break;
        }
    const auto cross = track_crossings(ts);
    for (const auto& [pair, xs] : cross)
        if (xs.size() > 1) {
            r.ks_violation = pair;
            break;
        }
    r.ks_ok = !r.has_closed_loop && !r.has_self_intersection && !r.ks_violation;

    r.bipartite = m.colored();
    if (r.bipartite) {
        const TrackSet oriented = ts.bipartite_oriented ? ts : orient_bipartite(m, ts);
        for (const auto& [pair, xs0] : track_crossings(oriented)) {
            if (xs0.size() < 2) continue;
            const bool any_closed =
                oriented.tracks[pair.first].closed || oriented.tracks[pair.second].closed;
            if (any_closed) {
                // no start point on a closed track: two crossings always bound
                // a parallel bigon for one of the two arcs
                r.has_parallel_bigon = true;
                r.parallel_bigon = {{pair.first, pair.second, xs0[0].edge, xs0[1].edge}};
                break;
            }
            for (std::size_t i = 0; i < xs0.size() && !r.parallel_bigon; ++i)
                for (std::size_t j = 0; j < xs0.size(); ++j) {
                    const auto& x = xs0[i];
                    const auto& y = xs0[j];
                    if (x.pos_a < y.pos_a && x.pos_b < y.pos_b) {
                        r.has_parallel_bigon = true;
                        r.parallel_bigon = {{pair.first, pair.second, x.edge, y.edge}};
                        break;
                    }
                }
            if (r.parallel_bigon) break;
        }
    }
    return r;
}

Strand strand_at(const CombMap& m, const TrackSet& ts, int c) {
    Strand s;
    s.corner = c;
    const int e = CombMap::edge_of(c);
    const Slot own = own_slot(m, c);
    s.track = ts.track_of[e][pairing_of(own.port)];
    // leaving through the own slot means going own -> rot
    const Passage& p = ts.passage(e, pairing_of(own.port));
    s.ccw = p.exit == own.port ? +1 : -1;
    return s;
}

StrandSets strand_sets(const CombMap& m, const TrackSet& ts) {
    if (!m.colored()) throw Error(Errc::NotBipartite, "strand sets need a bipartite coloring");
    StrandSets ss;
    ss.at_vertex.resize(m.num_vertices());
    ss.black.resize(m.num_faces());
    ss.white.resize(m.num_faces());
    for (int v = 0; v < m.num_vertices(); ++v)
        for (int d : m.darts_around(v))
            if (!m.is_outer_corner(d)) ss.at_vertex[v].push_back(strand_at(m, ts, d));
    for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.outer_face()) continue;
        for (int d : m.face_darts(f)) {
            auto& dst = m.color(m.tail(d)) == Color::Black ? ss.black[f] : ss.white[f];
            dst.push_back(strand_at(m, ts, d));
        }
    }
    return ss;
}

std::vector<int> boundary_order(const CombMap& m, const TrackSet& ts) {
    if (ts.any_closed()) throw Error(Errc::HasClosedLoop, "boundary order needs open tracks");
    // exit slot of each track
    std::map<std::pair<int, int>, int> exit_at;
    for (const auto& t : ts.tracks) {
        const auto& last = t.passages.back();
        exit_at[{last.edge, last.exit}] = t.id;
    }
    std::vector<int> order;
    const int start = m.outer_dart();
    int d = start;
    do {
        const Slot slots[2] = {own_slot(m, d), rot_slot(m, d)};
        for (const Slot& s : slots) {
            auto it = exit_at.find({s.edge, s.port});
            if (it != exit_at.end()) order.push_back(it->second);
        }
        d = m.prev_in_face(d);
    } while (d != start);
    if (static_cast<int>(order.size()) != ts.size())
        throw Error(Errc::NonPlanarOrInconsistent, "boundary order missed a track");
    return order;
}

std::set<std::pair<int, int>> face_antiparallel_pairs(const CombMap& m, const TrackSet& ts,
                                                      const StrandSets& ss) {
    const auto cross = track_crossings(ts);
    std::set<std::pair<int, int>> out;
    auto scan = [&](const std::vector<Strand>& list) {
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                int a = list[i].track, b = list[j].track;
                if (a == b) continue;
                if (a > b) std::swap(a, b);
                if (!cross.count({a, b})) out.insert({a, b});
            }
    };
    for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.outer_face()) continue;
        scan(ss.black[f]);
        scan(ss.white[f]);
    }
    return out;
}

std::vector<int> direction_classes(const CombMap& m, const TrackSet& ts,
                                   const std::vector<std::array<double, 2>>& layout) {
    auto mid = [&](int e) {
        const auto& a = layout[m.tail(2 * e)];
        const auto& b = layout[m.tail(2 * e + 1)];
        return std::array<double, 2>{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
    };
    // the entry side midpoint of the first passage and the exit side of the
    // last one pin down the direction even for two-passage corner tracks
    auto side_mid = [&](int e, int port) {
        const int c = side_corner(m, e, port);
        const auto q = mid(e);
        const auto& v = layout[m.tail(c)];
        return std::array<double, 2>{(q[0] + v[0]) / 2, (q[1] + v[1]) / 2};
    };
    std::vector<int> cls;
    for (const auto& t : ts.tracks) {
        const auto& f = t.passages.front();
        const auto& l = t.passages.back();
        const auto a = side_mid(f.edge, f.entry), b = side_mid(l.edge, l.exit);
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        const double eps = 1e-9;
        if (std::abs(dx) < eps || std::abs(dy) < eps) {
            cls.push_back(-1);
        } else if (dx > 0) {
            cls.push_back(dy > 0 ? 0 : 3);
        } else {
            cls.push_back(dy > 0 ? 1 : 2);
        }
    }
    return cls;
}

TrackContext track_context(const CombMap& m) {
    TrackContext c;
    c.tg = build_track_graph(m);
    c.ts = extract_tracks(m, c.tg);
    if (m.colored()) c.ts = orient_bipartite(m, c.ts);
    return c;
}

}  // namespace isorad
