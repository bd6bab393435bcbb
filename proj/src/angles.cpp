#include "isorad/angles.hpp"

#include <algorithm>

namespace isorad {

RhombusAngle rhombus_angle(const Turn& a1, const Turn& a2) {
    const Turn th = lift01(a2 - a1);
    return {th, kHalfTurn - th};
}

Turn coherent_alpha(const TrackSet& ts, const AngleMap& a, int e, int pairing) {
    const Passage& p = ts.passage(e, pairing);
    return a.at(ts.track_of[e][pairing], p.entry != pairing);
}

RhombusAngle rhombus_angle(const TrackSet& ts, const AngleMap& a, int e) {
    return rhombus_angle(coherent_alpha(ts, a, e, 0), coherent_alpha(ts, a, e, 1));
}

std::vector<Turn> edge_thetas(const TrackSet& ts, const AngleMap& a) {
    std::vector<Turn> out;
    for (int e = 0; e < static_cast<int>(ts.track_of.size()); ++e)
        out.push_back(rhombus_angle(ts, a, e).theta);
    return out;
}

Turn ccw_alpha(const CombMap& m, const TrackSet& ts, const AngleMap& a, int c) {
    const Strand s = strand_at(m, ts, c);
    return a.at(s.track, s.ccw < 0);
}

AngleMap random_angles(int num_tracks, std::mt19937_64& rng, int den) {
    std::uniform_int_distribution<int> pick(0, den - 1);
    AngleMap a;
    for (int t = 0; t < num_tracks; ++t) a.alpha.push_back(Turn(pick(rng), den));
    return a;
}

AngleMap random_monotone_angles(const CombMap& m, const TrackSet& ts, std::mt19937_64& rng,
                                int den) {
    const auto order = boundary_order(m, ts);
    const int n = static_cast<int>(order.size());
    // n strictly increasing values in [0, den), then a random rotation
    std::vector<int> pool(den);
    for (int i = 0; i < den; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> vals(pool.begin(), pool.begin() + std::min(n, den));
    std::sort(vals.begin(), vals.end());
    std::uniform_int_distribution<int> shift(0, den - 1);
    const int s = shift(rng);
    AngleMap a;
    a.alpha.assign(ts.size(), Turn(0));
    for (int i = 0; i < n; ++i) a.alpha[order[i]] = lift01(Turn(vals[i % vals.size()] + s, den));
    return a;
}

}  // namespace isorad
