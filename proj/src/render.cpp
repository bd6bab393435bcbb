#include "isorad/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "isorad/geometry.hpp"

namespace isorad {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

// SVG y grows downwards.
std::string xy(Point p) { return num(p.real()) + "," + num(-p.imag()); }

std::string track_color(int t, int n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "hsl(%d,70%%,40%%)", n > 0 ? 360 * t / n : 0);
    return buf;
}

}  // namespace

std::string render_svg(const CombMap& m, const TrackContext& tc, const AngleMap& a, const std::optional<Lift>& k) {
    const Immersion im = immerse(m, tc, a);
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (const auto& r : im.rhombus)
        for (const Point& p : r) {
            if (first) {
                x0 = x1 = p.real();
                y0 = y1 = -p.imag();
                first = false;
            }
            x0 = std::min(x0, p.real());
            x1 = std::max(x1, p.real());
            y0 = std::min(y0, -p.imag());
            y1 = std::max(y1, -p.imag());
        }
    const double pad = 0.5;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0 - pad) << " " << num(y0 - pad) << " "
      << num(x1 - x0 + 2 * pad) << " " << num(y1 - y0 + 2 * pad) << "\">\n";
    o << "<defs><pattern id=\"hatch\" width=\"0.1\" height=\"0.1\" patternUnits=\"userSpaceOnUse\" "
         "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0.1\" stroke=\"#c03030\" "
         "stroke-width=\"0.03\"/></pattern></defs>\n";

    o << "<g id=\"rhombi\" stroke=\"#808080\" stroke-width=\"0.01\">\n";
    for (int e = 0; e < m.num_edges(); ++e) {
        const auto& r = im.rhombus[e];
        const RhombusStatus st = im.status[e];
        if (st == RhombusStatus::Degenerate) {
            o << "<polyline class=\"degenerate\" data-edge=\"" << m.edge_id(e) << "\" points=\"" << xy(r[0]) << " "
              << xy(r[2]) << "\" fill=\"none\"/>\n";
            continue;
        }
        o << "<polygon class=\"" << status_name(st) << "\" data-edge=\"" << m.edge_id(e) << "\" points=\"" << xy(r[0])
          << " " << xy(r[1]) << " " << xy(r[2]) << " " << xy(r[3]) << "\" fill=\""
          << (st == RhombusStatus::Embedded ? "#d0d0d0" : "url(#hatch)") << "\"/>\n";
    }
    o << "</g>\n";

    o << "<g id=\"primal\" stroke=\"#000000\" stroke-width=\"0.03\">\n";
    for (int e = 0; e < m.num_edges(); ++e)
        o << "<line data-edge=\"" << m.edge_id(e) << "\" x1=\"" << num(im.rhombus[e][0].real()) << "\" y1=\""
          << num(-im.rhombus[e][0].imag()) << "\" x2=\"" << num(im.rhombus[e][2].real()) << "\" y2=\""
          << num(-im.rhombus[e][2].imag()) << "\"/>\n";
    for (int v = 0; v < m.num_vertices(); ++v) {
        const char* fill = m.color(v) == Color::Black ? "#000000" : "#ffffff";
        o << "<circle data-vertex=\"" << m.vertex_id(v) << "\" cx=\"" << num(im.vertex[v].real()) << "\" cy=\""
          << num(-im.vertex[v].imag()) << "\" r=\"0.06\" fill=\"" << fill << "\"/>\n";
    }
    o << "</g>\n";

    o << "<g id=\"dual\" fill=\"#3060c0\">\n";
    for (int f = 0; f < m.num_faces(); ++f) {
        if (f == m.outer_face()) continue;
        o << "<circle data-face=\"" << f << "\" cx=\"" << num(im.face[f].real()) << "\" cy=\""
          << num(-im.face[f].imag()) << "\" r=\"0.04\"/>\n";
    }
    o << "</g>\n";

    o << "<g id=\"tracks\" fill=\"none\" stroke-width=\"0.02\">\n";
    for (int t = 0; t < tc.ts.size(); ++t) {
        o << "<polyline data-track=\"" << t << "\" stroke=\"" << track_color(t, tc.ts.size()) << "\" points=\"";
        const auto& ps = tc.ts.tracks[t].passages;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const auto& r = im.rhombus[ps[i].edge];
            // midpoints of the entry and exit sides of the rhombus
            const Point in = (r[ps[i].entry] + r[(ps[i].entry + 1) % 4]) / 2.0;
            const Point out = (r[ps[i].exit] + r[(ps[i].exit + 1) % 4]) / 2.0;
            if (i == 0) o << xy(in);
            o << " " << xy(out);
        }
        if (tc.ts.tracks[t].closed && !ps.empty()) {
            const auto& r = im.rhombus[ps[0].edge];
            o << " " << xy((r[ps[0].entry] + r[(ps[0].entry + 1) % 4]) / 2.0);
        }
        o << "\"/>\n";
    }
    o << "</g>\n";

    if (k) {
        o << "<g id=\"lift\" font-size=\"0.15\" text-anchor=\"middle\">\n";
        for (int e = 0; e < m.num_edges(); ++e) {
            const auto& r = im.rhombus[e];
            const Point c = (r[0] + r[1] + r[2] + r[3]) / 4.0;
            o << "<text data-edge=\"" << m.edge_id(e) << "\" x=\"" << num(c.real()) << "\" y=\"" << num(-c.imag())
              << "\">" << (*k)[e] << "</text>\n";
        }
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace isorad
