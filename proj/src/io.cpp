#include "isorad/io.hpp"

#include <fstream>
#include <sstream>

#include "isorad/error.hpp"

namespace isorad {

namespace {

Json dart_json(const DartRef& d) { return Json{{"edge", d.edge}, {"end", d.end}}; }

DartRef dart_from(const Json& j) {
    if (!j.is_object() || !j.contains("edge") || !j.contains("end"))
        throw Error(Errc::BadInput, "dart reference needs edge and end");
    return {j.at("edge").get<int>(), j.at("end").get<int>()};
}

}  // namespace

Json map_to_json(const CombMap& m) {
    const MapSpec s = m.to_spec();
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : s.vertices) {
        Json c = v.color == Color::Black ? Json("black") : v.color == Color::White ? Json("white") : Json(nullptr);
        j["vertices"].push_back({{"id", v.id}, {"color", c}});
    }
    j["edges"] = Json::array();
    for (const auto& e : s.edges) j["edges"].push_back({{"id", e.id}, {"endpoints", {e.a, e.b}}});
    j["rotations"] = Json::object();
    for (const auto& [vid, list] : s.rotations) {
        Json arr = Json::array();
        for (const auto& d : list) arr.push_back(dart_json(d));
        j["rotations"][std::to_string(vid)] = arr;
    }
    j["outer_dart"] = dart_json(s.outer_dart);
    return j;
}

MapSpec spec_from_json(const Json& j) {
    try {
        MapSpec s;
        for (const auto& v : j.at("vertices")) {
            Color c = Color::None;
            if (v.contains("color") && !v.at("color").is_null()) {
                const auto name = v.at("color").get<std::string>();
                if (name == "black") c = Color::Black;
                else if (name == "white") c = Color::White;
                else throw Error(Errc::BadInput, "unknown color '" + name + "'");
            }
            s.vertices.push_back({v.at("id").get<int>(), c});
        }
        for (const auto& e : j.at("edges")) {
            const auto& ep = e.at("endpoints");
            if (!ep.is_array() || ep.size() != 2) throw Error(Errc::BadInput, "edge needs two endpoints");
            s.edges.push_back({e.at("id").get<int>(), ep[0].get<int>(), ep[1].get<int>()});
        }
        for (const auto& [key, list] : j.at("rotations").items()) {
            int vid = 0;
            try {
                std::size_t used = 0;
                vid = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw Error(Errc::BadInput, "rotation key '" + key + "' is not a vertex id");
            }
            auto& rot = s.rotations[vid];
            for (const auto& d : list) rot.push_back(dart_from(d));
        }
        s.outer_dart = dart_from(j.at("outer_dart"));
        return s;
    } catch (const Json::exception& e) {
        throw Error(Errc::BadInput, e.what());
    }
}

CombMap map_from_json(const Json& j) { return build_map(spec_from_json(j)); }

Json angles_to_json(const AngleMap& a) {
    Json j;
    j["angles"] = Json::object();
    for (std::size_t t = 0; t < a.alpha.size(); ++t)
        j["angles"][std::to_string(t)] = {{"num", a.alpha[t].num()}, {"den", a.alpha[t].den()}};
    return j;
}

namespace {

int parse_key(const std::string& key, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(key, &used);
        if (used == key.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::BadInput, std::string(what) + " key '" + key + "' is not an integer");
}

}  // namespace

AngleMap angles_from_json(const Json& j, int num_tracks) {
    try {
        AngleMap a;
        a.alpha.assign(num_tracks, Turn(0));
        std::vector<char> seen(num_tracks, 0);
        for (const auto& [key, v] : j.at("angles").items()) {
            const int t = parse_key(key, "angle");
            if (t < 0 || t >= num_tracks) throw Error(Errc::BadInput, "no track " + key);
            const auto num = v.at("num").get<std::int64_t>(), den = v.at("den").get<std::int64_t>();
            if (den <= 0) throw Error(Errc::BadInput, "track " + key + ": den must be positive");
            const Turn x(num, den);
            if (x.num() != num || x.den() != den) throw Error(Errc::BadInput, "track " + key + ": fraction not reduced");
            if (x < Turn(0) || x >= Turn(1)) throw Error(Errc::BadInput, "track " + key + ": angle outside [0,1)");
            a.alpha[t] = x;
            seen[t] = 1;
        }
        for (int t = 0; t < num_tracks; ++t)
            if (!seen[t]) throw Error(Errc::BadInput, "missing angle for track " + std::to_string(t));
        return a;
    } catch (const Json::exception& e) {
        throw Error(Errc::BadInput, e.what());
    }
}

Json lift_to_json(const CombMap& m, const Lift& k) {
    Json j;
    j["k"] = Json::object();
    for (int e = 0; e < m.num_edges(); ++e) j["k"][std::to_string(m.edge_id(e))] = k[e];
    return j;
}

Lift lift_from_json(const CombMap& m, const Json& j) {
    try {
        Lift k(m.num_edges(), 0);
        std::vector<char> seen(m.num_edges(), 0);
        for (const auto& [key, v] : j.at("k").items()) {
            const auto e = m.edge_index(parse_key(key, "lift"));
            if (!e) throw Error(Errc::BadInput, "no edge " + key);
            k[*e] = v.get<std::int64_t>();
            seen[*e] = 1;
        }
        for (int e = 0; e < m.num_edges(); ++e)
            if (!seen[e]) throw Error(Errc::BadInput, "missing k for edge " + std::to_string(m.edge_id(e)));
        return k;
    } catch (const Json::exception& e) {
        throw Error(Errc::BadInput, e.what());
    }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::BadInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::exception& e) {
        throw Error(Errc::BadInput, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::BadInput, "cannot write " + path);
    out << text;
}

}  // namespace isorad
