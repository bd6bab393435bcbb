#include "isorad/geometry.hpp"

#include <cmath>
#include <deque>
#include <numbers>

#include "isorad/error.hpp"

namespace isorad {

namespace {

constexpr double kTol = 1e-9;

// Principal angle of q / p in turns, in (-1/2, 1/2].
double turn_between(Point p, Point q) { return std::arg(q / p) / (2 * std::numbers::pi); }

// Same, lifted to [0,1), with values within kTol of 1 read as 0.
double lift_between(Point p, Point q) {
    double t = turn_between(p, q);
    if (t < 0) t += 1;
    if (t > 1 - kTol) t = 0;
    return t;
}

}  // namespace

const char* status_name(RhombusStatus s) {
    switch (s) {
        case RhombusStatus::Embedded: return "embedded";
        case RhombusStatus::Folded: return "folded";
        default: return "degenerate";
    }
}

RhombusStatus rhombus_status(const Turn& theta) {
    if (theta == Turn(0) || theta == kHalfTurn) return RhombusStatus::Degenerate;
    return theta < kHalfTurn ? RhombusStatus::Embedded : RhombusStatus::Folded;
}

Point unit(const Turn& t) { return std::polar(1.0, 2 * std::numbers::pi * t.to_double()); }

Immersion immerse(const CombMap& m, const TrackContext& tc, const AngleMap& a) {
    const TrackSet& ts = tc.ts;
    Immersion im;
    const int V = m.num_vertices(), E = m.num_edges();
    std::vector<Point> step(E);  // v2 - v1
    std::vector<Point> u1(E), u2(E);
    for (int e = 0; e < E; ++e) {
        u1[e] = unit(coherent_alpha(ts, a, e, 0));
        u2[e] = unit(coherent_alpha(ts, a, e, 1));
        step[e] = -u1[e] - u2[e];
    }
    im.vertex.assign(V, Point(0, 0));
    std::vector<char> placed(V, 0);
    std::deque<int> q{0};
    placed[0] = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (int d : m.darts_around(v)) {
            const int w = m.head(d), e = CombMap::edge_of(d);
            if (placed[w]) continue;
            im.vertex[w] = im.vertex[v] + (CombMap::end_of(d) == 0 ? step[e] : -step[e]);
            placed[w] = 1;
            q.push_back(w);
        }
    }
    auto note = [&](Point p, Point q2) { im.closure_error = std::max(im.closure_error, std::abs(p - q2)); };
    for (int e = 0; e < E; ++e)
        note(im.vertex[m.tail(2 * e + 1)], im.vertex[m.tail(2 * e)] + step[e]);

    im.face.assign(m.num_faces(), Point(NAN, NAN));
    std::vector<char> fplaced(m.num_faces(), 0);
    for (int d = 0; d < m.num_darts(); ++d) {
        if (m.is_outer_corner(d)) continue;
        const Point p = im.vertex[m.tail(d)] - unit(ccw_alpha(m, ts, a, d));
        const int f = m.face_of(d);
        if (!fplaced[f]) {
            im.face[f] = p;
            fplaced[f] = 1;
        } else {
            note(im.face[f], p);
        }
    }
    im.theta = edge_thetas(ts, a);
    for (int e = 0; e < E; ++e) {
        const Point v1 = im.vertex[m.tail(2 * e)];
        const std::array<Point, 4> r{v1, v1 - u1[e], im.vertex[m.tail(2 * e + 1)], v1 - u2[e]};
        for (int i = 0; i < 4; ++i)
            im.side_error = std::max(im.side_error, std::abs(std::abs(r[(i + 1) % 4] - r[i]) - 1.0));
        const int f1 = m.face_of(2 * e + 1), f2 = m.face_of(2 * e);
        if (f1 != m.outer_face()) note(im.face[f1], r[1]);
        if (f2 != m.outer_face()) note(im.face[f2], r[3]);
        im.rhombus.push_back(r);
        im.status.push_back(rhombus_status(im.theta[e]));
    }
    return im;
}

double face_winding(const CombMap& m, const Immersion& im, int f) {
    const auto& ds = m.face_darts(f);
    const Point c = im.face[f];
    double w = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const Point p = im.vertex[m.tail(ds[i])] - c;
        const Point q = im.vertex[m.tail(ds[(i + 1) % ds.size()])] - c;
        w += turn_between(p, q);
    }
    return w;
}

FoldState fold_state(const Turn& lifted) {
    const Turn twice = lifted * Rational(2);
    if (twice.is_integer())
        throw Error(Errc::DegenerateAngle, "lifted angle " + lifted.str() + " is a multiple of 1/2");
    FoldState s;
    s.index = lifted.floor();
    s.positive = lifted - Rational(s.index) < kHalfTurn;
    const long long half = twice.floor();  // theta in (half/2, (half+1)/2)
    const char first = half >= 0 ? 'p' : 'd';
    const long long len = half >= 0 ? half : -half;
    for (long long i = 0; i < len; ++i) s.word.push_back(i % 2 == 0 ? first : (first == 'p' ? 'd' : 'p'));
    return s;
}

MinimalReport check_minimal_immersion(const CombMap& m, const TrackContext& tc, const AngleMap& a) {
    if (!m.colored()) throw Error(Errc::NotBipartite, "minimal immersion needs a bipartite map");
    for (int v = 0; v < m.num_vertices(); ++v)
        if (m.degree(v) == 1)
            throw Error(Errc::HasDegreeOneVertex, "vertex " + std::to_string(m.vertex_id(v)));
    const Immersion im = immerse(m, tc, a);
    MinimalReport r;
    auto fail = [&](std::string s) {
        r.ok = false;
        r.failures.push_back(std::move(s));
    };
    // rhombus angle at v1 read from the picture
    std::vector<double> angle(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
        const auto& q = im.rhombus[e];
        angle[e] = lift_between(q[1] - q[0], q[3] - q[0]);
        if (angle[e] < kTol) fail("edge " + std::to_string(m.edge_id(e)) + ": flat rhombus");
    }
    for (int v = 0; v < m.num_vertices(); ++v) {
        const std::string name = "vertex " + std::to_string(m.vertex_id(v));
        if (m.is_inner_vertex(v)) {
            const auto& ds = m.darts_around(v);
            double sweep = 0;
            bool coincide = false;
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const double t = lift_between(im.face[m.face_of(ds[i])] - im.vertex[v],
                                              im.face[m.face_of(ds[(i + 1) % ds.size()])] - im.vertex[v]);
                if (t < kTol) coincide = true;
                sweep += t;
            }
            if (coincide || std::abs(sweep - 1) > 1e-6) fail(name + ": dual points out of order");
        } else {
            for (int d : m.darts_around(v))
                if (!m.is_outer_corner(d) &&
                    angle[CombMap::edge_of(d)] + angle[CombMap::edge_of(m.rot(d))] > 1 + 1e-6)
                    fail(name + ": boundary corner overlaps");
        }
    }
    for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.outer_face()) continue;
        for (Color col : {Color::White, Color::Black}) {
            std::vector<Point> pts;
            for (int d : m.face_darts(f))
                if (m.color(m.tail(d)) == col) pts.push_back(im.vertex[m.tail(d)] - im.face[f]);
            double sweep = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) sweep += lift_between(pts[i], pts[(i + 1) % pts.size()]);
            if (std::abs(sweep - 1) > 1e-6)
                fail("face " + std::to_string(f) + (col == Color::White ? ": white" : ": black") +
                     " points out of order");
        }
    }
    return r;
}

}  // namespace isorad
