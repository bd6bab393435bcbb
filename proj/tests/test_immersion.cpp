#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "isorad/error.hpp"
#include "isorad/geometry.hpp"

using namespace isorad;
using namespace isorad::helpers;
using fixtures::Named;

namespace {

// Angles listed in boundary order.
AngleMap in_boundary_order(const Named& f, const std::vector<Turn>& vals) {
    const auto order = boundary_order(f.m, f.tc.ts);
    AngleMap a;
    a.alpha.assign(f.tc.ts.size(), Turn(0));
    for (std::size_t i = 0; i < order.size(); ++i) a.alpha[order[i]] = vals[i];
    return a;
}

AngleMap by_class(const Named& f, const std::vector<int>& cls, const std::array<Turn, 4>& val) {
    AngleMap a;
    for (int t = 0; t < f.tc.ts.size(); ++t) a.alpha.push_back(val[cls[t]]);
    return a;
}

}  // namespace

TEST_CASE("rhombus angle examples") {
    auto r = rhombus_angle(Turn(0), Turn(1, 4));
    CHECK(r.theta == Turn(1, 4));
    CHECK(r.theta_dual == Turn(1, 4));
    r = rhombus_angle(Turn(3, 4), Turn(1, 4));
    CHECK(r.theta == Turn(1, 2));
    CHECK(r.theta_dual == Turn(0));
    r = rhombus_angle(Turn(1, 4), Turn(0));
    CHECK(r.theta == Turn(3, 4));
    CHECK(r.theta_dual == Turn(-1, 4));
}

TEST_CASE("rhombus angle does not depend on the track orientation") {
    const Named f = fixtures::named("SQ33", square_patch(3, 3));
    std::mt19937_64 rng(11);
    const AngleMap a = random_angles(f.tc.ts.size(), rng);
    const TrackSet rev = reverse_all(f.tc.ts);
    AngleMap ar;
    for (int t = 0; t < f.tc.ts.size(); ++t) ar.alpha.push_back(a.at(t, true));
    CHECK(edge_thetas(f.tc.ts, a) == edge_thetas(rev, ar));
}

TEST_CASE("strand angles step by the rhombus angle around a vertex") {
    for (const auto& f : fixtures::all_open_fixtures()) {
        std::mt19937_64 rng(5);
        const AngleMap a = random_angles(f.tc.ts.size(), rng);
        const auto th = edge_thetas(f.tc.ts, a);
        for (int c = 0; c < f.m.num_darts(); ++c) {
            const int c2 = f.m.rot(c);
            if (f.m.is_outer_corner(c) || f.m.is_outer_corner(c2)) continue;
            CHECK(lift01(ccw_alpha(f.m, f.tc.ts, a, c2) - ccw_alpha(f.m, f.tc.ts, a, c)) ==
                  th[CombMap::edge_of(c2)]);
        }
    }
}

TEST_CASE("flat system shape and SQ22 worked values") {
    const Named sq2 = fixtures::named("SQ22", square_patch(2, 2));
    const AngleMap y = in_boundary_order(sq2, {Turn(0), Turn(1, 4), Turn(1, 2), Turn(3, 4)});
    const FlatSystem s = flat_system(sq2.m, sq2.tc, y);
    REQUIRE(s.rows() == 1);
    CHECK(s.rhs[0] == 0);
    auto sol = solve_flat(sq2.m, sq2.tc, y);
    REQUIRE(sol.k);
    CHECK(*sol.k == zeros(sq2.m));

    // swapped pairs in boundary order
    const AngleMap beta = in_boundary_order(sq2, {Turn(1, 4), Turn(0), Turn(3, 4), Turn(1, 2)});
    const FlatSystem sb = flat_system(sq2.m, sq2.tc, beta);
    CHECK(sb.rhs[0] == 2);
    auto solb = solve_flat(sq2.m, sq2.tc, beta);
    REQUIRE(solb.k);
    std::int64_t sum = 0;
    for (auto x : *solb.k) sum += x;
    CHECK(sum == -2);

    const Named sq3 = fixtures::named("SQ33", square_patch(3, 3));
    std::mt19937_64 rng(1);
    const FlatSystem s3 = flat_system(sq3.m, sq3.tc, random_angles(sq3.tc.ts.size(), rng));
    CHECK(s3.rows() == 5);
    CHECK(s3.a[0].size() == 12);
    int vertex_rows = 0;
    for (int r = 0; r < s3.rows(); ++r)
        if (sq3.tc.tg.face_nodes[r + 1].kind == TrackGraph::FaceKind::InnerVertex) {
            ++vertex_rows;
            CHECK(std::count(s3.a[r].begin(), s3.a[r].end(), 1) == 4);
            CHECK(std::count(s3.a[r].begin(), s3.a[r].end(), 0) == 8);
        }
    CHECK(vertex_rows == 1);
}

TEST_CASE("angle sums are whole turns for random angles") {
    std::mt19937_64 rng(2024);
    for (const auto& f : fixtures::all_open_fixtures())
        for (int it = 0; it < 50; ++it) {
            const AngleMap a = random_angles(f.tc.ts.size(), rng, 1 + it % 37);
            CHECK_NOTHROW(flat_system(f.m, f.tc, a));
        }
}

TEST_CASE("solver: exact, and BFS and DFS trees give the same normal form") {
    std::mt19937_64 rng(7);
    for (const auto& f : fixtures::all_open_fixtures()) {
        const CornerBasis cb = corner_basis(f.tc.tg, f.tc.ts);
        for (int it = 0; it < 10; ++it) {
            const AngleMap a = random_angles(f.tc.ts.size(), rng, 60);
            const FlatSystem sys = flat_system(f.m, f.tc, a);
            const auto b = solve_flat(f.m, f.tc, a, TreeOrder::BreadthFirst);
            const auto d = solve_flat(f.m, f.tc, a, TreeOrder::DepthFirst);
            REQUIRE(b.k);
            REQUIRE(d.k);
            CHECK(sys.satisfied_by(*b.k));
            CHECK(sys.satisfied_by(*d.k));
            CHECK(normal_form(*b.k, sys, f.tc.ts, cb) == normal_form(*d.k, sys, f.tc.ts, cb));
            const Lift nf = normal_form(*d.k, sys, f.tc.ts, cb);
            for (int x : cb.tree_order) CHECK(nf[x] == 0);
        }
    }
}

TEST_CASE("closed loop has no flat lift") {
    const Named f = fixtures::named("closed_loop", closed_loop_fixture());
    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
        const auto r = solve_flat(f.m, f.tc, random_angles(f.tc.ts.size(), rng));
        CHECK_FALSE(r.k);
        REQUIRE(r.closed_loop_track);
        CHECK(f.tc.ts.tracks[*r.closed_loop_track].closed);
    }
    CHECK_THROWS_AS(kernel_basis(f.tc.ts, f.m.num_edges()), Error);
    CHECK_THROWS_AS(geometric_basis(f.m, f.tc), Error);
}

TEST_CASE("kernel: track shifts span a space of rank |T| - 1") {
    for (const auto& f : fixtures::all_open_fixtures()) {
        const auto M = flat_matrix(f.m, f.tc.tg);
        const auto ker = kernel_basis(f.tc.ts, f.m.num_edges());
        for (const auto& k : ker)
            CHECK(multiply(M, k) == std::vector<std::int64_t>(M.size(), 0));
        CHECK(rank_q(to_q(ker)) == f.tc.ts.size() - 1);
    }
    const Named sq2 = fixtures::named("SQ22", square_patch(2, 2));
    for (const auto& k : kernel_basis(sq2.tc.ts, 4)) {
        CHECK(std::count(k.begin(), k.end(), 1) == 1);
        CHECK(std::count(k.begin(), k.end(), -1) == 1);
    }
}

TEST_CASE("shifts: commutative, invertible, and equivalent") {
    const Named f = fixtures::named("SQ33", square_patch(3, 3));
    std::mt19937_64 rng(9);
    const AngleMap a = random_angles(f.tc.ts.size(), rng);
    const FlatSystem sys = flat_system(f.m, f.tc, a);
    const CornerBasis cb = corner_basis(f.tc.tg, f.tc.ts);
    const Lift k = *solve_flat(f.m, f.tc, a).k;
    CHECK(shift(shift(k, f.tc.ts, 0, +1), f.tc.ts, 0, -1) == k);
    CHECK(shift(shift(k, f.tc.ts, 0), f.tc.ts, 3) == shift(shift(k, f.tc.ts, 3), f.tc.ts, 0));
    Lift k2 = k;
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < f.tc.ts.size(); ++t) k2 = shift(k2, f.tc.ts, t, c(rng));
    CHECK(sys.satisfied_by(k2));
    CHECK(equivalent(k, k2, sys, f.tc.ts, cb));
    Lift bad = k;
    bad[0] += 1;
    CHECK_THROWS_AS(normal_form(bad, sys, f.tc.ts, cb), Error);

    const Named sq2 = fixtures::named("SQ22", square_patch(2, 2));
    const Lift s = shift(zeros(sq2.m), sq2.tc.ts, 0);
    CHECK(std::count(s.begin(), s.end(), 1) == 1);
    CHECK(std::count(s.begin(), s.end(), -1) == 1);
}

TEST_CASE("geometric basis hits every row and has full rank") {
    for (const auto& f : fixtures::all_open_fixtures()) {
        const auto M = flat_matrix(f.m, f.tc.tg);
        const GeometricBasis gb = geometric_basis(f.m, f.tc);
        REQUIRE(gb.sols.size() == M.size());
        QMatrix images;
        for (std::size_t i = 0; i < gb.sols.size(); ++i) {
            std::vector<std::int64_t> want(M.size(), 0);
            want[gb.rows[i]] = 1;
            CHECK(multiply(M, gb.sols[i]) == want);
            std::vector<Rational> row;
            for (auto x : multiply(M, gb.sols[i])) row.push_back(Rational(x));
            images.push_back(row);
        }
        CHECK(rank_q(images) == static_cast<int>(M.size()));
        // corner building blocks
        for (int c = 0; c < f.m.num_darts(); ++c) {
            if (f.m.is_outer_corner(c)) continue;
            std::vector<std::int64_t> want(M.size(), 0);
            const int xv = f.tc.tg.vertex_node[f.m.tail(c)];
            const int xf = f.tc.tg.face_node[f.m.face_of(c)];
            if (xv > 0) want[xv - 1] += 1;
            if (xf > 0) want[xf - 1] -= 1;
            CHECK(multiply(M, corner_solution(f.m, f.tc, c)) == want);
        }
    }
}

TEST_CASE("in_Y agrees with the flatness reference") {
    std::mt19937_64 rng(31);
    for (const auto& f : fixtures::open_fixtures()) {
        int yes = 0;
        for (int it = 0; it < 200; ++it) {
            const AngleMap a = it % 2 ? random_angles(f.tc.ts.size(), rng, 24)
                                      : random_monotone_angles(f.m, f.tc.ts, rng, 48);
            const bool y = in_Y(f.m, f.tc, a).ok;
            CHECK_MESSAGE(y == flat_minimal_reference(f.m, f.tc, a), f.name);
            yes += y;
        }
        if (f.minimal) CHECK_MESSAGE(yes > 0, f.name);
        if (!f.minimal) CHECK_MESSAGE(yes == 0, f.name);
    }
    CHECK_THROWS_AS(in_Y(triangle(), track_context(triangle()), AngleMap{{0, 0, 0}}), Error);
}

TEST_CASE("square lattice example: direction classes in order") {
    const Named f = fixtures::named("SQ33", square_patch(3, 3));
    const auto cls = direction_classes(f.m, f.tc.ts, square_layout(3, 3));
    const AngleMap y = by_class(f, cls, {Turn(0), Turn(1, 4), Turn(1, 2), Turn(3, 4)});
    CHECK(in_Y(f.m, f.tc, y).ok);
    // t1' -> 0, t1 -> 1/4, t2' -> 1/2, t2 -> 3/4
    const AngleMap beta = by_class(f, cls, {Turn(1, 4), Turn(0), Turn(3, 4), Turn(1, 2)});
    const YReport r = in_Y(f.m, f.tc, beta);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failures.empty());
    // every inner face has cone angle -1 turn, so its row reads -sum k = 2
    const FlatSystem s = flat_system(f.m, f.tc, beta);
    for (int r2 = 0; r2 < s.rows(); ++r2)
        if (f.tc.tg.face_nodes[r2 + 1].kind == TrackGraph::FaceKind::InnerFace) CHECK(s.rhs[r2] == 2);
}

TEST_CASE("doubled edge is never in Y") {
    const Named f = fixtures::named("doubled_edge", generate("doubled_edge", {}));
    std::mt19937_64 rng(4);
    for (int it = 0; it < 300; ++it) CHECK_FALSE(in_Y(f.m, f.tc, random_angles(f.tc.ts.size(), rng)).ok);
}

TEST_CASE("X and sample_X") {
    const Named sq2 = fixtures::named("SQ22", square_patch(2, 2));
    const AngleMap s2 = sample_X(sq2.m, sq2.tc);
    std::multiset<Turn> vals(s2.alpha.begin(), s2.alpha.end());
    CHECK(vals == std::multiset<Turn>{Turn(0), Turn(1, 8), Turn(2, 8), Turn(3, 8)});
    CHECK(in_X(sq2.m, sq2.tc, s2));
    CHECK_FALSE(in_X(sq2.m, sq2.tc, AngleMap{std::vector<Turn>(4, Turn(0))}));
    std::mt19937_64 rng(8);
    for (const auto& f : fixtures::open_fixtures()) {
        const AngleMap s = sample_X(f.m, f.tc);
        CHECK_MESSAGE(in_X(f.m, f.tc, s), f.name);
        CHECK_MESSAGE(in_Y(f.m, f.tc, s).ok == f.minimal, f.name);
        if (!f.minimal) continue;
        for (int it = 0; it < 200; ++it) {
            const AngleMap a = random_monotone_angles(f.m, f.tc.ts, rng, 40);
            if (in_X(f.m, f.tc, a)) CHECK_MESSAGE(in_Y(f.m, f.tc, a).ok, f.name);
        }
    }
}

TEST_CASE("Gauss-Bonnet on face boundaries and random simple cycles") {
    std::mt19937_64 rng(77);
    for (const auto& f : fixtures::all_open_fixtures()) {
        const TrackGraph& tg = f.tc.tg;
        for (int it = 0; it < 4; ++it) {
            const AngleMap a = random_angles(f.tc.ts.size(), rng, 36);
            const Lift k = *solve_flat(f.m, f.tc, a).k;
            const Lift k2 = shift(k, f.tc.ts, it % f.tc.ts.size(), 2);
            int faces = 0, random_ok = 0;
            for (int x = 1; x < static_cast<int>(tg.face_nodes.size()); ++x) {
                std::vector<char> in(tg.face_nodes.size(), 0);
                in[x] = 1;
                const auto c = region_boundary(tg, in);
                if (!c) continue;
                ++faces;
                const GaussBonnet gb = gauss_bonnet(f.m, f.tc, *c, a, k2);
                CHECK(gb.residual() == Turn(0));
                CHECK(gb.curvature == Turn(0));
            }
            CHECK(faces > 0);
            for (int tries = 0; tries < 2000 && random_ok < 50; ++tries) {
                const auto c = region_boundary(tg, random_region(tg, rng));
                if (!c) continue;
                ++random_ok;
                const GaussBonnet gb = gauss_bonnet(f.m, f.tc, *c, a, k);
                CHECK(gb.residual() == Turn(0));
                // identity valid without flatness
                const GaussBonnet g0 = gauss_bonnet(f.m, f.tc, *c, a, zeros(f.m));
                CHECK(g0.corner_sum + g0.curvature == Turn(1));
            }
            CHECK(random_ok > 0);
        }
    }
}

TEST_CASE("Gauss-Bonnet with k = 0: zero for Y angles, -1 on a doubled edge bigon") {
    std::mt19937_64 rng(12);
    const Named sq3 = fixtures::named("SQ33", square_patch(3, 3));
    for (int it = 0; it < 20; ++it) {
        const AngleMap a = random_monotone_angles(sq3.m, sq3.tc.ts, rng, 48);
        if (!in_Y(sq3.m, sq3.tc, a).ok) continue;
        for (int tries = 0; tries < 100; ++tries) {
            const auto c = region_boundary(sq3.tc.tg, random_region(sq3.tc.tg, rng));
            if (c) CHECK(gauss_bonnet(sq3.m, sq3.tc, *c, a, zeros(sq3.m)).residual() == Turn(0));
        }
    }
    const Named de = fixtures::named("doubled_edge", generate("doubled_edge", {}));
    int digon = -1;
    for (int fc = 0; fc < de.m.num_faces(); ++fc)
        if (fc != de.m.outer_face() && de.m.face_degree(fc) == 2) digon = fc;
    REQUIRE(digon >= 0);
    const auto bigon = face_boundary_curve(de.tc.tg, de.tc.tg.face_node[digon]);
    CHECK(bigon.corners.size() == 2);
    for (int it = 0; it < 50; ++it) {
        const AngleMap a = random_angles(de.tc.ts.size(), rng, 24);
        const auto th = edge_thetas(de.tc.ts, a);
        Turn dual_sum(0);
        for (int x : bigon.corners) dual_sum += kHalfTurn - th[x];
        if (th[bigon.corners[0]] == Turn(0)) continue;
        CHECK(dual_sum == Turn(0));
        CHECK(gauss_bonnet(de.m, de.tc, bigon, a, zeros(de.m)).residual() == Turn(-1));
    }
}

TEST_CASE("non-simple cycle is rejected") {
    const Named p = fixtures::named("pendant_triangle", pendant(triangle(), 0, 1));
    ClosedCurve all;
    // the boundary of every bounded face together revisits the pendant quad
    for (int ge = 0; ge < static_cast<int>(p.tc.tg.edges.size()); ++ge) all.edges.push_back({ge, +1});
    CHECK_THROWS_AS(gauss_bonnet(p.m, p.tc, all, AngleMap{std::vector<Turn>(p.tc.ts.size(), Turn(0))},
                                 zeros(p.m)),
                    Error);
}

TEST_CASE("fold states") {
    CHECK(fold_state(Turn(1, 4)).word.empty());
    CHECK(fold_state(Turn(1, 4)).positive);
    CHECK(fold_state(Turn(3, 4)).word == "p");
    CHECK_FALSE(fold_state(Turn(3, 4)).positive);
    CHECK(fold_state(Turn(-1, 4)).word == "d");
    CHECK(fold_state(Turn(5, 4)).word == "pd");
    CHECK(fold_state(Turn(-3, 4)).word == "dp");
    CHECK(fold_state(Turn(5, 4)).index == 1);
    CHECK_THROWS_AS(fold_state(Turn(1, 2)), Error);
    CHECK_THROWS_AS(fold_state(Turn(0)), Error);
    // duality theta -> 1/2 - theta with k -> -k swaps p and d
    for (int n = -7; n <= 7; ++n) {
        const Turn t(2 * n + 1, 4);
        std::string w = fold_state(t).word;
        for (char& ch : w) ch = ch == 'p' ? 'd' : 'p';
        CHECK(fold_state(kHalfTurn - t).word == w);
    }
}

TEST_CASE("immersion closes up with unit sides") {
    std::mt19937_64 rng(15);
    for (const auto& f : fixtures::all_open_fixtures())
        for (int it = 0; it < 10; ++it) {
            const Immersion im = immerse(f.m, f.tc, random_angles(f.tc.ts.size(), rng, 97));
            CHECK(im.closure_error <= 1e-9);
            CHECK(im.side_error <= 1e-9);
        }
    const Named e = fixtures::named("single_edge", single_edge());
    AngleMap a;
    a.alpha.assign(2, Turn(0));
    a.alpha[e.tc.ts.track_of[0][1]] = Turn(1, 4);
    a.alpha[e.tc.ts.track_of[0][0]] = Turn(0);
    if (e.tc.ts.passage(0, 0).entry != 0) a.alpha[e.tc.ts.track_of[0][0]] = Turn(1, 2);
    if (e.tc.ts.passage(0, 1).entry != 1) a.alpha[e.tc.ts.track_of[0][1]] = Turn(3, 4);
    const Immersion im = immerse(e.m, e.tc, a);
    CHECK(im.theta[0] == Turn(1, 4));
    const auto& r = im.rhombus[0];
    CHECK(std::abs(std::abs(r[2] - r[0]) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(std::abs(r[3] - r[1]) - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("immersion of Y angles: embedded flower, unit windings, cyclic orders") {
    const Named sq2 = fixtures::named("SQ22", square_patch(2, 2));
    const AngleMap y = in_boundary_order(sq2, {Turn(0), Turn(1, 4), Turn(1, 2), Turn(3, 4)});
    const Immersion im = immerse(sq2.m, sq2.tc, y);
    int inner = -1;
    for (int fc = 0; fc < sq2.m.num_faces(); ++fc)
        if (fc != sq2.m.outer_face()) inner = fc;
    for (auto s : im.status) CHECK(s == RhombusStatus::Embedded);
    for (int v = 0; v < 4; ++v) CHECK(std::abs(std::abs(im.vertex[v] - im.face[inner]) - 1) < 1e-12);
    CHECK(std::abs(face_winding(sq2.m, im, inner) - 1) < 1e-9);

    std::mt19937_64 rng(21);
    for (const auto& f : fixtures::open_fixtures()) {
        if (f.name == "pendant") {
            CHECK_THROWS_AS(check_minimal_immersion(f.m, f.tc, sample_X(f.m, f.tc)), Error);
            continue;
        }
        int agree = 0;
        for (int it = 0; it < 60; ++it) {
            const AngleMap a = it % 2 ? random_angles(f.tc.ts.size(), rng, 24)
                                      : random_monotone_angles(f.m, f.tc.ts, rng, 48);
            const bool y2 = in_Y(f.m, f.tc, a).ok;
            CHECK_MESSAGE(check_minimal_immersion(f.m, f.tc, a).ok == y2, f.name);
            agree++;
            if (!y2) continue;
            const Immersion imm = immerse(f.m, f.tc, a);
            for (int fc = 0; fc < f.m.num_faces(); ++fc)
                if (fc != f.m.outer_face()) CHECK(std::abs(face_winding(f.m, imm, fc) - 1) < 1e-9);
            // folded rhombi never share a vertex
            for (int v = 0; v < f.m.num_vertices(); ++v) {
                int folded = 0;
                for (int d : f.m.darts_around(v))
                    folded += imm.status[CombMap::edge_of(d)] == RhombusStatus::Folded;
                CHECK(folded <= 1);
            }
        }
        CHECK(agree == 60);
    }
}

TEST_CASE("one folded rhombus on SQ33") {
    const Named f = fixtures::named("SQ33", square_patch(3, 3));
    std::mt19937_64 rng(40);
    int seen = 0;
    for (int it = 0; it < 2000 && seen < 5; ++it) {
        const AngleMap a = random_monotone_angles(f.m, f.tc.ts, rng, 64);
        if (!in_Y(f.m, f.tc, a).ok) continue;
        const Immersion im = immerse(f.m, f.tc, a);
        int folded = 0, which = -1;
        for (int e = 0; e < f.m.num_edges(); ++e)
            if (im.status[e] == RhombusStatus::Folded) {
                ++folded;
                which = e;
            }
        if (folded != 1) continue;
        ++seen;
        CHECK(im.theta[which] > kHalfTurn);
        CHECK(fold_state(im.theta[which]).word == "p");
    }
    CHECK(seen > 0);
}
