#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "isorad/cycles.hpp"
#include "isorad/flat.hpp"
#include "isorad/linalg.hpp"

namespace isorad::helpers {

inline Lift zeros(const CombMap& m) { return Lift(m.num_edges(), 0); }

inline QMatrix to_q(const std::vector<Lift>& rows) {
    QMatrix q;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (auto x : r) row.push_back(Rational(x));
        q.push_back(row);
    }
    return q;
}

inline std::vector<std::int64_t> multiply(const std::vector<std::vector<int>>& a, const Lift& k) {
    std::vector<std::int64_t> out(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t e = 0; e < k.size(); ++e) out[r] += a[r][e] * k[e];
    return out;
}

// Distinct angles j/den on every track.
inline AngleMap random_injective(int n, std::mt19937_64& rng, int den = 120) {
    std::vector<int> pool(den);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    AngleMap a;
    for (int t = 0; t < n; ++t) a.alpha.push_back(Turn(pool[t], den));
    return a;
}

// Random connected set of bounded face nodes of G^T.
inline std::vector<char> random_region(const TrackGraph& tg, std::mt19937_64& rng) {
    const int N = static_cast<int>(tg.face_nodes.size());
    std::vector<std::vector<int>> adj(N);
    for (const auto& E : tg.edges)
        if (E.left > 0 && E.right > 0 && E.left != E.right) {
            adj[E.left].push_back(E.right);
            adj[E.right].push_back(E.left);
        }
    std::vector<char> in(N, 0);
    std::uniform_int_distribution<int> pick(1, N - 1);
    const int target = std::uniform_int_distribution<int>(1, N - 1)(rng);
    in[pick(rng)] = 1;
    int size = 1;
    while (size < target) {
        std::vector<int> cand;
        for (int u = 1; u < N; ++u)
            if (in[u])
                for (int w : adj[u])
                    if (!in[w]) cand.push_back(w);
        if (cand.empty()) break;
        in[cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)]] = 1;
        ++size;
    }
    return in;
}

inline bool is_aux_cycle(const AuxGraph& g, const BitVec& edges) {
    std::vector<int> deg(g.num_vertices, 0);
    for (int x = 0; x < edges.size(); ++x)
        if (edges.test(x)) {
            ++deg[g.edges[x].a];
            ++deg[g.edges[x].b];
        }
    for (int d : deg)
        if (d % 2) return false;
    return true;
}

// Fundamental cycle of the auxiliary graph for e outside M: e plus the tree path.
inline BitVec aux_fundamental(const CornerBasis& cb, const TrackSet& ts, int e, int nv) {
    BitVec out(nv);
    out.flip(e);
    const int a = ts.track_of[e][0], b = ts.track_of[e][1];
    std::vector<int> pa{a}, pb{b};
    while (cb.parent[pa.back()] >= 0) pa.push_back(cb.parent[pa.back()]);
    while (cb.parent[pb.back()] >= 0) pb.push_back(cb.parent[pb.back()]);
    const std::set<int> anc_b(pb.begin(), pb.end());
    for (int t : pa) {
        if (anc_b.count(t)) break;
        out.flip(cb.parent_edge[t]);
    }
    const std::set<int> anc_a(pa.begin(), pa.end());
    for (int t : pb) {
        if (anc_a.count(t)) break;
        out.flip(cb.parent_edge[t]);
    }
    return out;
}

}  // namespace isorad::helpers
