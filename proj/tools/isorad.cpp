#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "isorad/cycles.hpp"
#include "isorad/dimer.hpp"
#include "isorad/error.hpp"
#include "isorad/flat.hpp"
#include "isorad/geometry.hpp"
#include "isorad/io.hpp"
#include "isorad/minimal.hpp"
#include "isorad/render.hpp"

using namespace isorad;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr double kRelTol = 1e-9;

bool is_input_error(Errc c) {
    switch (c) {
        case Errc::NonPlanarOrInconsistent:
        case Errc::BadBipartition:
        case Errc::DanglingReference:
        case Errc::UnknownFamily:
        case Errc::BadParams:
        case Errc::BadInput:
        case Errc::NotBipartite:
        case Errc::UnbalancedColors:
        case Errc::HasDegreeOneVertex:
        case Errc::TooLarge:
            return true;
        default:
            return false;
    }
}

void emit(const Json& j) { std::cout << dump_canonical(j); }

Json turn_json(const Turn& t) { return {{"num", t.num()}, {"den", t.den()}}; }

struct Loaded {
    CombMap m;
    TrackContext tc;
};

Loaded load_graph(const std::string& path) {
    CombMap m = map_from_json(read_json_file(path));
    TrackContext tc = track_context(m);
    return {std::move(m), std::move(tc)};
}

AngleMap load_angles(const Loaded& g, const std::string& path) {
    return angles_from_json(read_json_file(path), g.tc.ts.size());
}

void write_or_print(const std::string& out, const std::string& text) {
    if (out.empty()) std::cout << text;
    else write_text_file(out, text);
}

// "sqRC" (e.g. sq33), "hexN", or a graph file.
CombMap base_map(const std::string& name) {
    if (name.size() == 4 && name.rfind("sq", 0) == 0 && std::isdigit(name[2]) && std::isdigit(name[3]))
        return square_patch(name[2] - '0', name[3] - '0');
    if (name.rfind("hex", 0) == 0 && name.size() > 3 && std::isdigit(name[3])) return hexagon_cycle(std::stoi(name.substr(3)));
    return map_from_json(read_json_file(name));
}

std::string family_name(const std::string& f) {
    static const std::map<std::string, std::string> names{
        {"square", "square_patch"},   {"grid", "square_patch"},       {"hexagon", "hexagon_cycle"},
        {"triangle", "triangle"},     {"single-edge", "single_edge"}, {"closed-loop", "closed_loop_fixture"},
        {"doubled-edge", "doubled_edge"}, {"pendant", "pendant"}};
    const auto it = names.find(f);
    return it == names.end() ? f : it->second;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isoradial immersions, train tracks and Kasteleyn phases"};
    app.require_subcommand(1);

    std::string graph, angles, out, lift_path;

    auto* gen = app.add_subcommand("gen", "write a fixture graph");
    std::string family, base;
    std::map<std::string, int> params;
    int seed = 0;
    gen->add_option("--family", family, "square, hexagon, triangle, single-edge, closed-loop, doubled-edge, pendant")
        ->required();
    for (const char* key : {"rows", "cols", "n", "edge", "vertex", "face"})
        gen->add_option_function<int>(std::string("--") + key, [&params, key](int v) { params[key] = v; });
    gen->add_option("--base", base, "base map for doubled-edge and pendant: sqRC, hexN or a graph file");
    gen->add_option("--seed", seed, "accepted for interface stability; all families are deterministic");
    gen->add_option("-o,--output", out);

    auto* analyze = app.add_subcommand("analyze", "classify the train tracks of a graph");
    analyze->add_option("graph", graph)->required();

    auto* tracks = app.add_subcommand("tracks", "list the train tracks");
    tracks->add_option("graph", graph)->required();

    auto* solve = app.add_subcommand("solve", "solve the flatness system");
    solve->add_option("graph", graph)->required();
    solve->add_option("angles", angles)->required();
    std::string order = "bfs";
    solve->add_option("--order", order, "spanning tree order: bfs or dfs")->check(CLI::IsMember({"bfs", "dfs"}));
    solve->add_option("-o,--output", out, "lift file");

    auto* check_y = app.add_subcommand("check-y", "is the angle map in Y");
    auto* check_x = app.add_subcommand("check-x", "is the angle map in X");
    auto* check_k = app.add_subcommand("check-k", "is the angle map in K");
    for (auto* c : {check_y, check_x, check_k}) {
        c->add_option("graph", graph)->required();
        c->add_option("angles", angles)->required();
    }

    auto* sample_x = app.add_subcommand("sample-x", "write an angle map in X");
    sample_x->add_option("graph", graph)->required();
    sample_x->add_option("-o,--output", out);

    auto* dimer = app.add_subcommand("dimer", "Kasteleyn determinant against brute-force matchings");
    dimer->add_option("graph", graph)->required();
    dimer->add_option("angles", angles)->required();
    std::string nu = "unit";
    dimer->add_option("--nu", nu, "edge weights: unit or isoradial")->check(CLI::IsMember({"unit", "isoradial"}));

    auto* gb = app.add_subcommand("gauss-bonnet", "corner sums around every bounded face of the track graph");
    gb->add_option("graph", graph)->required();
    gb->add_option("angles", angles)->required();
    gb->add_option("--lift", lift_path, "lift file; solved from the angles if omitted");
    bool zero_lift = false;
    gb->add_flag("--zero-lift", zero_lift, "use k = 0");

    auto* render = app.add_subcommand("render", "SVG of the rhombic immersion");
    render->add_option("graph", graph)->required();
    render->add_option("angles", angles)->required();
    render->add_option("--lift", lift_path, "lift file, shown as labels");
    render->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*gen) {
            std::optional<CombMap> b;
            if (!base.empty()) b = base_map(base);
            const CombMap m = generate(family_name(family), params, b ? &*b : nullptr);
            write_or_print(out, dump_canonical(map_to_json(m)));
            return 0;
        }
        const Loaded g = load_graph(graph);
        const CombMap& m = g.m;
        const TrackContext& tc = g.tc;

        if (*analyze) {
            const ClassificationReport rep = classify(m, tc.ts);
            Json j{{"vertices", m.num_vertices()},
                   {"edges", m.num_edges()},
                   {"faces", m.num_faces()},
                   {"tracks", tc.ts.size()},
                   {"bipartite", rep.bipartite},
                   {"has_closed_loop", rep.has_closed_loop},
                   {"has_self_intersection", rep.has_self_intersection},
                   {"ks_ok", rep.ks_ok},
                   {"cycle_space_dim", cycle_space_dim(tc.tg)}};
            j["minimal"] = rep.bipartite ? Json(rep.is_minimal()) : Json(nullptr);
            j["has_parallel_bigon"] = rep.bipartite ? Json(rep.has_parallel_bigon) : Json(nullptr);
            if (rep.closed_loop_track) j["closed_loop_track"] = *rep.closed_loop_track;
            emit(j);
            return 0;
        }
        if (*tracks) {
            Json list = Json::array();
            for (const auto& t : tc.ts.tracks) {
                Json ps = Json::array();
                for (const auto& p : t.passages)
                    ps.push_back({{"edge", m.edge_id(p.edge)}, {"entry", p.entry}, {"exit", p.exit}});
                list.push_back({{"id", t.id}, {"closed", t.closed}, {"passages", ps}});
            }
            Json j{{"tracks", list}};
            if (!tc.ts.any_closed()) j["boundary_order"] = boundary_order(m, tc.ts);
            emit(j);
            return 0;
        }
        if (*sample_x) {
            write_or_print(out, dump_canonical(angles_to_json(isorad::sample_X(m, tc))));
            return 0;
        }

        const AngleMap a = load_angles(g, angles);

        if (*solve) {
            const SolveResult r =
                solve_flat(m, tc, a, order == "dfs" ? TreeOrder::DepthFirst : TreeOrder::BreadthFirst);
            if (!r.k) {
                emit({{"result", "no-solution"}, {"witness", {{"closed_track", *r.closed_loop_track}}}});
                return kExitFail;
            }
            const Json lift = lift_to_json(m, *r.k);
            if (!out.empty()) write_text_file(out, dump_canonical(lift));
            emit({{"result", "solved"}, {"k", lift["k"]}});
            return 0;
        }
        if (*check_y) {
            const YReport r = in_Y(m, tc, a);
            emit({{"in_Y", r.ok}, {"failures", r.failures}});
            return r.ok ? 0 : kExitFail;
        }
        if (*check_x) {
            const bool ok = in_X(m, tc, a);
            emit({{"in_X", ok}});
            return ok ? 0 : kExitFail;
        }
        if (*check_k) {
            Json faces = Json::array();
            bool ok = true;
            for (int f = 0; f < m.num_faces(); ++f) {
                if (f == m.outer_face()) continue;
                const FaceDefect d = face_defect(m, tc.ts, a, f);
                ok &= d.pass;
                faces.push_back({{"face", f}, {"cone", d.cone}, {"pass", d.pass}});
            }
            emit({{"in_K", ok}, {"faces", faces}});
            return ok ? 0 : kExitFail;
        }
        if (*dimer) {
            const WeightMode mode = nu == "unit" ? WeightMode::Unit : WeightMode::Isoradial;
            const auto w = edge_weights(tc.ts, a, mode);
            const double det = det_partition(kasteleyn_matrix(m, tc.ts, a, w));
            Json j{{"det", det}, {"in_K", in_K(m, tc.ts, a)}, {"nu", nu}};
            int code = 0;
            if (m.num_vertices() <= matching_cap()) {
                const MatchingSum z = brute_force_Z(m, w);
                const double rel = std::abs(det - z.z) / std::max(1.0, std::abs(z.z));
                j["bruteforce"] = z.z;
                j["matchings"] = z.count;
                j["relerr"] = rel;
                if (!(rel <= kRelTol)) code = kExitFail;
            } else {
                j["bruteforce"] = nullptr;
                j["relerr"] = nullptr;
            }
            emit(j);
            return code;
        }
        if (*gb) {
            Lift k(m.num_edges(), 0);
            if (!lift_path.empty()) {
                k = lift_from_json(m, read_json_file(lift_path));
            } else if (!zero_lift) {
                const SolveResult r = solve_flat(m, tc, a);
                if (!r.k) {
                    emit({{"result", "no-solution"}, {"witness", {{"closed_track", *r.closed_loop_track}}}});
                    return kExitFail;
                }
                k = *r.k;
            }
            Json faces = Json::array();
            bool ok = true;
            for (int node = 1; node <= tc.tg.num_bounded_faces(); ++node) {
                std::vector<char> inside(tc.tg.face_nodes.size(), 0);
                inside[node] = 1;
                const auto curve = region_boundary(tc.tg, inside);
                if (!curve) {
                    faces.push_back({{"node", node}, {"simple", false}});
                    continue;
                }
                const GaussBonnet r = gauss_bonnet(m, tc, *curve, a, k);
                ok &= r.residual() == Turn(0);
                faces.push_back({{"node", node},
                                 {"simple", true},
                                 {"corner_sum", turn_json(r.corner_sum)},
                                 {"curvature", turn_json(r.curvature)},
                                 {"residual", turn_json(r.residual())}});
            }
            emit({{"ok", ok}, {"faces", faces}});
            return ok ? 0 : kExitFail;
        }
        if (*render) {
            std::optional<Lift> k;
            if (!lift_path.empty()) k = lift_from_json(m, read_json_file(lift_path));
            write_or_print(out, render_svg(m, tc, a, k));
            return 0;
        }
    } catch (const Error& e) {
        emit({{"error", errc_name(e.code())}, {"message", e.what()}});
        return is_input_error(e.code()) ? kExitInput : kExitFail;
    } catch (const std::exception& e) {
        emit({{"error", "Internal"}, {"message", e.what()}});
        return kExitFail;
    }
    return kExitInput;
}
