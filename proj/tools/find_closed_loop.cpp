// Exhaustive search for the smallest planar rotation system whose graph of
// train-tracks contains a closed track. Maps are enumerated by edge count,
// then vertex count, then edge multiset and rotation system; the first hit
// is printed as JSON and is the data behind closed_loop_fixture().
//
//   find_closed_loop [--max-edges N] [--bipartite] [--no-loops]

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <vector>

#include "isorad/error.hpp"
#include "isorad/io.hpp"
#include "isorad/tracks.hpp"

using namespace isorad;

namespace {

struct Options {
    int max_edges = 8;
    bool bipartite = false;
    bool no_loops = false;
};

bool connected(int V, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    for (int v = 0; v < V; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

bool two_colorable(int V, const std::vector<std::pair<int, int>>& edges, std::vector<int>& color) {
    color.assign(V, -1);
    color[0] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : edges) {
            if (color[a] >= 0 && color[b] < 0) {
                color[b] = 1 - color[a];
                changed = true;
            } else if (color[b] >= 0 && color[a] < 0) {
                color[a] = 1 - color[b];
                changed = true;
            }
        }
    }
    for (auto [a, b] : edges)
        if (color[a] == color[b]) return false;
    return true;
}

// Tries every rotation system and every outer face for one edge multiset.
bool try_graph(int V, const std::vector<std::pair<int, int>>& edges, const Options& opt) {
    std::vector<int> color;
    const bool bip = two_colorable(V, edges, color);
    if (opt.bipartite && !bip) return false;
    const int E = static_cast<int>(edges.size());
    std::vector<std::vector<int>> darts(V);
    for (int e = 0; e < E; ++e) {
        darts[edges[e].first].push_back(2 * e);
        darts[edges[e].second].push_back(2 * e + 1);
    }
    for (const auto& d : darts)
        if (d.empty()) return false;
    // each vertex keeps its first dart fixed; the rest are permuted
    std::vector<std::vector<int>> perm(V);
    for (int v = 0; v < V; ++v) perm[v] = darts[v];
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == V) {
            MapSpec s;
            for (int i = 0; i < V; ++i)
                s.vertices.push_back({i, bip ? (color[i] == 0 ? Color::White : Color::Black) : Color::None});
            for (int e = 0; e < E; ++e) s.edges.push_back({e, edges[e].first, edges[e].second});
            for (int i = 0; i < V; ++i)
                for (int d : perm[i]) s.rotations[i].push_back({d / 2, d % 2});
            // genus check before building
            std::vector<int> rot(2 * E);
            for (int i = 0; i < V; ++i)
                for (std::size_t k = 0; k < perm[i].size(); ++k)
                    rot[perm[i][k]] = perm[i][(k + 1) % perm[i].size()];
            std::vector<int> rinv(2 * E);
            for (int d = 0; d < 2 * E; ++d) rinv[rot[d]] = d;
            std::vector<char> seen(2 * E, 0);
            std::vector<int> face_rep;
            for (int d0 = 0; d0 < 2 * E; ++d0) {
                if (seen[d0]) continue;
                face_rep.push_back(d0);
                for (int d = d0; !seen[d]; d = rinv[d ^ 1]) seen[d] = 1;
            }
            if (V - E + static_cast<int>(face_rep.size()) != 2) return false;
            for (int rep : face_rep) {
                s.outer_dart = {rep / 2, rep % 2};
                CombMap m = build_map(s);
                TrackSet ts = extract_tracks(m, build_track_graph(m));
                if (ts.any_closed()) {
                    std::cout << map_to_json(m).dump(2) << "\n";
                    return true;
                }
            }
            return false;
        }
        auto& p = perm[v];
        if (p.size() <= 2) return rec(v + 1);
        std::sort(p.begin() + 1, p.end());
        do {
            if (rec(v + 1)) return true;
        } while (std::next_permutation(p.begin() + 1, p.end()));
        return false;
    };
    return rec(0);
}

bool search(int V, int E, const Options& opt) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < V; ++a)
        for (int b = a; b < V; ++b)
            if (!(opt.no_loops && a == b)) pairs.push_back({a, b});
    std::vector<std::pair<int, int>> chosen;
    // multisets of pairs, non-decreasing index
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(chosen.size()) == E) {
            if (!connected(V, chosen)) return false;
            return try_graph(V, chosen, opt);
        }
        for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
            chosen.push_back(pairs[i]);
            if (rec(i)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--max-edges") && i + 1 < argc) opt.max_edges = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--bipartite")) opt.bipartite = true;
        else if (!std::strcmp(argv[i], "--no-loops")) opt.no_loops = true;
        else {
            std::cerr << "usage: find_closed_loop [--max-edges N] [--bipartite] [--no-loops]\n";
            return 2;
        }
    }
    for (int E = 1; E <= opt.max_edges; ++E)
        for (int V = 1; V <= E + 1; ++V) {
            std::cerr << "edges " << E << " vertices " << V << "\n";
            if (search(V, E, opt)) return 0;
        }
    std::cerr << "no closed loop found\n";
    return 1;
}
