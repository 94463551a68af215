#ifndef PLANEPATH_TEST_UTIL_HPP
#define PLANEPATH_TEST_UTIL_HPP

#include <vector>

#include "planepath/io.hpp"
#include "planepath/plan.hpp"

namespace planepath::testutil {

// Convex position, general position: integer points on a parabola.
inline PointSet convex_ngon(int n) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back(Point{i, static_cast<Coord>(i) * i});
    return PointSet(std::move(pts));
}

// Triangle with a small triangle inside: layers [3, 3].
inline PointSet two33() {
    return PointSet({{0, 0}, {12, 0}, {6, 12}, {5, 3}, {7, 3}, {6, 5}});
}

inline PointSet seeded(std::uint64_t seed, int n,
                       std::optional<std::vector<int>> profile = std::nullopt) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.layer_profile = std::move(profile);
    return generate_point_set(spec);
}

// Replays and returns the final order, oriented with the plan's start first
// when that point is still an endpoint.
inline std::vector<int> replay_final(const PointSet& s, const FlipPlan& plan) {
    ReplayResult rr = replay_plan(s, plan);
    if (!rr.ok) throw std::runtime_error("replay failed: " + rr.message);
    return rr.states.back();
}

inline int outer_level_count(const PointSet& s, const std::vector<int>& order) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (s.layer_of(order[i]) == 0 && s.layer_of(order[i + 1]) == 0 &&
            s.level_adjacent(order[i], order[i + 1]))
            ++c;
    return c;
}

}  // namespace planepath::testutil

#endif
