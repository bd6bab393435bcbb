#include "isorad/dimer.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "isorad/error.hpp"

namespace isorad {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Coherent angles of e with the white endpoint as v1.
std::pair<Turn, Turn> white_coherent(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e) {
    if (!m.colored()) throw Error(Errc::NotBipartite, "phases need a bipartite map");
    Turn a1 = coherent_alpha(ts, a, e, 0), a2 = coherent_alpha(ts, a, e, 1);
    if (m.color(m.tail(2 * e)) == Color::Black) {
        a1 = lift01(a1 + kHalfTurn);
        a2 = lift01(a2 + kHalfTurn);
    }
    if (a1 == a2) throw Error(Errc::DegenerateEdge, "edge " + std::to_string(m.edge_id(e)) + " has equal track angles");
    return {a1, a2};
}

}  // namespace

Turn phase_arg(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e, const Turn& c) {
    const auto [a1, a2] = white_coherent(m, ts, a, e);
    const Turn theta = lift01(a2 - a1);
    return lift01(c + a1 + theta / Rational(2) + kQuarterTurn);
}

std::complex<double> phase(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e,
                           const Turn& c) {
    return std::polar(1.0, kTwoPi * phase_arg(m, ts, a, e, c).to_double());
}

double chord_arg(const CombMap& m, const TrackSet& ts, const AngleMap& a, int e, const Turn& c) {
    const auto [a1, a2] = white_coherent(m, ts, a, e);
    const auto z = std::polar(1.0, kTwoPi * a2.to_double()) - std::polar(1.0, kTwoPi * a1.to_double());
    double t = std::arg(z) / kTwoPi + c.to_double();
    t -= std::floor(t);
    return t;
}

FaceDefect face_defect(const CombMap& m, const TrackSet& ts, const AngleMap& a, int f) {
    Turn s(0);
    for (int d : m.face_darts(f)) {
        const int e = CombMap::edge_of(d);
        white_coherent(m, ts, a, e);  // rejects degenerate edges
        s += kHalfTurn - rhombus_angle(ts, a, e).theta;
    }
    if (!s.is_integer()) throw Error(Errc::NonIntegerRHS, "face cone angle " + s.str());
    FaceDefect fd;
    fd.cone = s.num();
    fd.pass = ((fd.cone % 2) + 2) % 2 == 1;
    return fd;
}

bool face_phase_product_ok(const CombMap& m, const TrackSet& ts, const AngleMap& a, int f,
                           const Turn& c) {
    std::complex<double> p = 1;
    for (int d : m.face_darts(f)) {
        const auto w = phase(m, ts, a, CombMap::edge_of(d), c);
        p *= m.color(m.tail(d)) == Color::White ? w : std::conj(w);
    }
    const int half = m.face_degree(f) / 2;
    const double want = half % 2 == 0 ? -1.0 : 1.0;
    return std::abs(p - want) < 1e-9;
}

bool in_K(const CombMap& m, const TrackSet& ts, const AngleMap& a) {
    bool ok = true;
    for (int f = 0; f < m.num_faces(); ++f)
        if (f != m.outer_face() && !face_defect(m, ts, a, f).pass) ok = false;
    return ok;
}

bool isoradial_defined(const TrackSet& ts, const AngleMap& a) {
    for (const Turn& t : edge_thetas(ts, a))
        if (!(Turn(0) < t && t < kHalfTurn)) return false;
    return true;
}

std::vector<double> edge_weights(const TrackSet& ts, const AngleMap& a, WeightMode mode) {
    const auto th = edge_thetas(ts, a);
    if (mode == WeightMode::Unit) return std::vector<double>(th.size(), 1.0);
    if (!isoradial_defined(ts, a)) throw Error(Errc::BadParams, "isoradial weights need every theta in (0,1/2)");
    std::vector<double> w;
    for (const Turn& t : th) w.push_back(2 * std::sin(std::numbers::pi * t.to_double()));
    return w;
}

KasteleynMatrix kasteleyn_matrix(const CombMap& m, const TrackSet& ts, const AngleMap& a,
                                 const std::vector<double>& weights, const Turn& c) {
    if (!m.colored()) throw Error(Errc::NotBipartite, "Kasteleyn matrix needs a bipartite map");
    KasteleynMatrix km;
    std::vector<int> idx(m.num_vertices(), -1);
    for (int v = 0; v < m.num_vertices(); ++v) {
        auto& side = m.color(v) == Color::White ? km.white : km.black;
        idx[v] = static_cast<int>(side.size());
        side.push_back(v);
    }
    if (km.white.size() != km.black.size())
        throw Error(Errc::UnbalancedColors, std::to_string(km.white.size()) + " white vs " +
                                                std::to_string(km.black.size()) + " black");
    const int n = static_cast<int>(km.white.size());
    km.k = Eigen::MatrixXcd::Zero(n, n);
    for (int e = 0; e < m.num_edges(); ++e) {
        int w = m.tail(2 * e), b = m.tail(2 * e + 1);
        if (m.color(w) != Color::White) std::swap(w, b);
        km.k(idx[w], idx[b]) += phase(m, ts, a, e, c) * weights[e];
    }
    return km;
}

double det_partition(const KasteleynMatrix& km) {
    if (km.k.rows() == 0) return 1.0;
    return std::abs(km.k.partialPivLu().determinant());
}

int matching_cap() {
    if (const char* s = std::getenv("ISORAD_MATCHING_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
    }
    return 32;
}

namespace {

struct Matcher {
    const CombMap& m;
    const std::vector<double>& w;
    std::vector<char> used;
    MatchingSum out;

    void run(double prod, int left) {
        if (left == 0) {
            out.z += prod;
            ++out.count;
            return;
        }
        // unmatched vertex with the fewest available edges
        int best = -1, best_deg = 1 << 30;
        for (int v = 0; v < m.num_vertices(); ++v) {
            if (used[v]) continue;
            int deg = 0;
            for (int d : m.darts_around(v))
                if (m.head(d) != v && !used[m.head(d)]) ++deg;
            if (deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        if (best_deg == 0) return;
        used[best] = 1;
        for (int d : m.darts_around(best)) {
            const int u = m.head(d);
            if (u == best || used[u]) continue;
            used[u] = 1;
            run(prod * w[CombMap::edge_of(d)], left - 2);
            used[u] = 0;
        }
        used[best] = 0;
    }
};

}  // namespace

MatchingSum brute_force_Z(const CombMap& m, const std::vector<double>& weights, int cap) {
    if (cap < 0) cap = matching_cap();
    if (m.num_vertices() > cap)
        throw Error(Errc::TooLarge, std::to_string(m.num_vertices()) + " vertices exceed the cap " +
                                        std::to_string(cap));
    if (m.num_vertices() % 2) return {};
    Matcher mt{m, weights, std::vector<char>(m.num_vertices(), 0), {}};
    mt.run(1.0, m.num_vertices());
    return mt.out;
}

}  // namespace isorad
