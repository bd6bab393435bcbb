#include <numeric>

#include "doctest.h"
#include "isorad/error.hpp"
#include "isorad/planar_map.hpp"

using namespace isorad;

namespace {

int inner_face(const CombMap& m) {
    for (int f = 0; f < m.num_faces(); ++f)
        if (f != m.outer_face()) return f;
    return -1;
}

bool all_edges_join(const CombMap& m, int a, int b) {
    for (int e = 0; e < m.num_edges(); ++e) {
        const int x = m.tail(2 * e), y = m.tail(2 * e + 1);
        if (!((x == a && y == b) || (x == b && y == a))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("square patch 2x2 counts") {
    CombMap m = square_patch(2, 2);
    CHECK(m.num_vertices() == 4);
    CHECK(m.num_edges() == 4);
    CHECK(m.num_faces() == 2);
    CHECK(m.face_degree(m.outer_face()) == 4);
    CHECK(m.face_degree(inner_face(m)) == 4);
    CHECK(m.colored());
}

TEST_CASE("hexagon cycle counts") {
    CombMap m = hexagon_cycle(6);
    CHECK(m.num_vertices() == 6);
    CHECK(m.num_edges() == 6);
    CHECK(m.num_faces() == 2);
}

TEST_CASE("square patch 3x3 faces") {
    CombMap m = square_patch(3, 3);
    FaceSet fs = trace_faces(m);
    CHECK(fs.faces.size() == 5);
    int deg_sum = 0;
    for (int f = 0; f < 5; ++f) {
        deg_sum += fs.degree[f];
        CHECK(fs.degree[f] == (f == fs.outer ? 8 : 4));
    }
    CHECK(deg_sum == 2 * m.num_edges());
    // only the centre vertex is inner
    int inner = 0;
    for (int v = 0; v < m.num_vertices(); ++v) inner += m.is_inner_vertex(v);
    CHECK(inner == 1);
    CHECK(m.is_inner_vertex(*m.vertex_index(4)));
}

TEST_CASE("pendant inside a triangle gives a slit face of degree 5") {
    CombMap m = pendant(triangle(), 0, inner_face(triangle()));
    CHECK(m.num_vertices() == 4);
    CHECK(m.num_edges() == 4);
    CHECK(m.face_degree(inner_face(m)) == 5);
    CHECK(m.face_degree(m.outer_face()) == 3);
    // the slit face visits vertex 0 twice
    int visits = 0;
    for (int d : m.face_darts(inner_face(m))) visits += m.vertex_id(m.tail(d)) == 0;
    CHECK(visits == 2);
}

TEST_CASE("doubled edge creates a degree-2 face") {
    CombMap m = generate("doubled_edge", {});
    CHECK(m.num_edges() == 13);
    bool has2 = false;
    for (int f = 0; f < m.num_faces(); ++f) has2 = has2 || m.face_degree(f) == 2;
    CHECK(has2);
    CHECK(m.num_faces() == 6);
}

TEST_CASE("build errors") {
    MapSpec s = square_patch(2, 2).to_spec();
    SUBCASE("same colors") {
        s.vertices[1].color = s.vertices[0].color;
        CHECK_THROWS_AS(build_map(s), Error);
        try {
            build_map(s);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::BadBipartition);
        }
    }
    SUBCASE("dangling endpoint") {
        s.edges[0].b = 99;
        try {
            build_map(s);
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::DanglingReference);
        }
    }
    SUBCASE("non planar rotation") {
        // swapping two darts at a degree-2 vertex is harmless; at a degree-4
        // vertex of a larger patch it breaks Euler
        MapSpec t = square_patch(3, 3).to_spec();
        auto& r = t.rotations[4];
        std::swap(r[0], r[1]);
        try {
            build_map(t);
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonPlanarOrInconsistent);
        }
    }
    SUBCASE("unknown family") {
        try {
            generate("nope", {});
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnknownFamily);
        }
    }
}

TEST_CASE("spec round trip") {
    CombMap m = square_patch(3, 4);
    CombMap n = build_map(m.to_spec());
    CHECK(isomorphic(m, n, true, true));
}

TEST_CASE("duals") {
    CombMap sq = square_patch(2, 2);
    CombMap d = dual_map(sq);
    CHECK(d.num_vertices() == 2);
    CHECK(d.num_edges() == 4);
    CHECK(all_edges_join(d, 0, 1));

    CombMap hx = dual_map(hexagon_cycle(6));
    CHECK(hx.num_vertices() == 2);
    CHECK(hx.num_edges() == 6);
    CHECK(all_edges_join(hx, 0, 1));

    CombMap s3 = square_patch(3, 3);
    CHECK(isomorphic(dual_map(dual_map(s3)), s3, true));
    CHECK(!isomorphic(dual_map(s3), s3));
    CHECK(!isomorphic(square_patch(2, 3), square_patch(3, 3)));
}

TEST_CASE("quad graph sides") {
    CombMap m2 = square_patch(2, 2);
    QuadGraph q2 = quad_graph(m2);
    CHECK(q2.quads.size() == 4);
    for (const auto& q : q2.quads) {
        int shared = 0;
        for (bool s : q.shared) shared += s;
        CHECK(shared == 2);
    }
    CHECK(q2.shared_side_count() == 4);

    CombMap m3 = square_patch(3, 3);
    QuadGraph q3 = quad_graph(m3);
    CHECK(q3.quads.size() == 12);
    const int centre = *m3.vertex_index(4);
    for (const auto& q : q3.quads) {
        int shared = 0;
        for (bool s : q.shared) shared += s;
        if (q.v1 == centre || q.v2 == centre) CHECK(shared == 4);
        // adjacency is symmetric
        for (int p = 0; p < 4; ++p) {
            if (!q.shared[p]) continue;
            const Slot nb = q.neighbor[p];
            CHECK(q3.quads[nb.edge].neighbor[nb.port] == Slot{q.edge, p});
            CHECK(q3.quads[nb.edge].side[nb.port] == q.side[p]);
        }
    }
    int bounded_deg = 0;
    for (int f = 0; f < m3.num_faces(); ++f)
        if (f != m3.outer_face()) bounded_deg += m3.face_degree(f);
    CHECK(q3.shared_side_count() == bounded_deg);

    QuadGraph q1 = quad_graph(single_edge());
    CHECK(q1.quads.size() == 1);
    CHECK(q1.shared_side_count() == 0);
}

TEST_CASE("quad corner labels") {
    CombMap m = square_patch(2, 2);
    QuadGraph g = quad_graph(m);
    for (const auto& q : g.quads) {
        // sides (v1,f1) and (f2,v1) sit at v1; the others at v2
        CHECK(m.tail(q.side[0]) == q.v1);
        CHECK(m.tail(q.side[3]) == q.v1);
        CHECK(m.tail(q.side[1]) == q.v2);
        CHECK(m.tail(q.side[2]) == q.v2);
        CHECK(m.face_of(q.side[0]) == q.f1);
        CHECK(m.face_of(q.side[1]) == q.f1);
        CHECK(m.face_of(q.side[2]) == q.f2);
        CHECK(m.face_of(q.side[3]) == q.f2);
    }
}
