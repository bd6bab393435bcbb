#include <random>
#include <regex>

#include "doctest.h"
#include "fixtures.hpp"
#include "isorad/error.hpp"
#include "isorad/io.hpp"
#include "isorad/minimal.hpp"
#include "isorad/render.hpp"

using namespace isorad;
using fixtures::Named;

namespace {

std::vector<Named> every_fixture() {
    auto out = fixtures::all_open_fixtures();
    out.push_back(fixtures::named("closed_loop", closed_loop_fixture()));
    return out;
}

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

std::string without_lift_layer(const std::string& svg) {
    const auto b = svg.find("<g id=\"lift\"");
    if (b == std::string::npos) return svg;
    const auto e = svg.find("</g>\n", b);
    return svg.substr(0, b) + svg.substr(e + 5);
}

AngleMap class_angles(const Named& f) {
    const auto cls = direction_classes(f.m, f.tc.ts, square_layout(3, 3));
    AngleMap a;
    for (int t = 0; t < f.tc.ts.size(); ++t) a.alpha.push_back(Turn(cls[t], 4));
    return a;
}

}  // namespace

TEST_CASE("graph, angle and lift files round-trip byte for byte") {
    std::mt19937_64 rng(41);
    for (const auto& f : every_fixture()) {
        const std::string g = dump_canonical(map_to_json(f.m));
        const CombMap back = map_from_json(Json::parse(g));
        CHECK(isomorphic(back, f.m, true, true));
        CHECK(dump_canonical(map_to_json(back)) == g);
        CHECK(g.back() == '\n');
        CHECK(g.find('\r') == std::string::npos);

        const AngleMap a = random_angles(f.tc.ts.size(), rng, 48);
        const std::string at = dump_canonical(angles_to_json(a));
        const AngleMap a2 = angles_from_json(Json::parse(at), f.tc.ts.size());
        CHECK(a2.alpha == a.alpha);
        CHECK(dump_canonical(angles_to_json(a2)) == at);

        Lift k(f.m.num_edges());
        for (auto& x : k) x = std::uniform_int_distribution<int>(-3, 3)(rng);
        const std::string kt = dump_canonical(lift_to_json(f.m, k));
        CHECK(lift_from_json(f.m, Json::parse(kt)) == k);
    }
}

TEST_CASE("malformed angle and lift files are rejected") {
    const Named f = fixtures::named("SQ22", square_patch(2, 2));
    auto bad_angles = [&](const char* text) {
        CHECK_THROWS_AS(angles_from_json(Json::parse(text), f.tc.ts.size()), Error);
    };
    bad_angles(R"({"angles":{"0":{"num":1,"den":2}}})");  // tracks missing
    bad_angles(R"({"angles":{"0":{"num":2,"den":4},"1":{"num":0,"den":1},"2":{"num":0,"den":1},"3":{"num":0,"den":1}}})");
    bad_angles(R"({"angles":{"0":{"num":5,"den":4},"1":{"num":0,"den":1},"2":{"num":0,"den":1},"3":{"num":0,"den":1}}})");
    bad_angles(R"({"angles":{"0":{"num":1,"den":0},"1":{"num":0,"den":1},"2":{"num":0,"den":1},"3":{"num":0,"den":1}}})");
    bad_angles(R"({"angles":{"x":{"num":0,"den":1}}})");
    CHECK_THROWS_AS(lift_from_json(f.m, Json::parse(R"({"k":{"0":1}})")), Error);
    CHECK_THROWS_AS(map_from_json(Json::parse(R"({"vertices":[]})")), Error);
}

TEST_CASE("SVG of SQ33 with Y angles") {
    const Named f = fixtures::named("SQ33", square_patch(3, 3));
    const AngleMap a = class_angles(f);
    REQUIRE(in_Y(f.m, f.tc, a).ok);
    const std::string svg = render_svg(f.m, f.tc, a);
    CHECK(count(svg, "class=\"embedded\"") == 12);
    CHECK(count(svg, "class=\"folded\"") == 0);
    CHECK(count(svg, "data-track=") == f.tc.ts.size());
    CHECK(svg == render_svg(f.m, f.tc, a));
    // every coordinate carries exactly six decimals
    const std::regex number(R"(-?\d+\.\d+)");
    int numbers = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), number); it != std::sregex_iterator(); ++it) {
        const std::string s = it->str();
        if (s == "0.1" || s == "0.03" || s == "0.01" || s == "0.02" || s == "0.06" || s == "0.04" || s == "0.15")
            continue;  // style constants
        CHECK(s.size() - s.find('.') - 1 == 6);
        ++numbers;
    }
    CHECK(numbers > 100);
}

TEST_CASE("SVG marks a single folded rhombus") {
    const Named f = fixtures::named("SQ33", square_patch(3, 3));
    std::mt19937_64 rng(12);
    int seen = 0;
    for (int it = 0; it < 3000 && seen < 3; ++it) {
        const AngleMap a = random_monotone_angles(f.m, f.tc.ts, rng, 64);
        if (!in_Y(f.m, f.tc, a).ok) continue;
        const std::string svg = render_svg(f.m, f.tc, a);
        if (count(svg, "class=\"folded\"") != 1) continue;
        ++seen;
        CHECK(count(svg, "url(#hatch)") == 1);
        CHECK(count(svg, "class=\"embedded\"") == 11);
    }
    CHECK(seen == 3);
}

TEST_CASE("SVG geometry does not depend on the lift") {
    std::mt19937_64 rng(8);
    for (const auto& f : fixtures::open_fixtures()) {
        const AngleMap a = random_monotone_angles(f.m, f.tc.ts, rng, 96);
        const auto r = solve_flat(f.m, f.tc, a);
        REQUIRE(r.k);
        const std::string plain = render_svg(f.m, f.tc, a);
        const std::string with_k = render_svg(f.m, f.tc, a, r.k);
        const Lift shifted = shift(*r.k, f.tc.ts, 0, +1);
        const std::string with_shift = render_svg(f.m, f.tc, a, shifted);
        CHECK(without_lift_layer(with_k) == plain);
        CHECK(without_lift_layer(with_shift) == plain);
        if (shifted != *r.k) CHECK(with_shift != with_k);
    }
}

TEST_CASE("stored closed-loop fixture matches the built-in one") {
    const CombMap stored = map_from_json(read_json_file(std::string(ISORAD_DATA_DIR) + "/closed_loop_fixture.json"));
    CHECK(isomorphic(stored, closed_loop_fixture(), true, true));
    CHECK(track_context(stored).ts.any_closed());
}
