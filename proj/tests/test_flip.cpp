#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"

using namespace planepath;
using namespace planepath::testutil;

TEST_CASE("apply_flip_order surfaces each failure class") {
    const PointSet s = convex_ngon(5);
    const auto& h = s.layers()[0];
    const std::vector<int> walk{h[0], h[1], h[2], h[3], h[4]};

    auto r1 = apply_flip_order(s, walk, Flip{make_edge(h[0], h[3]), make_edge(h[0], h[4])});
    CHECK(r1.error == FlipError::EdgeNotPresent);
    auto r2 = apply_flip_order(s, walk, Flip{make_edge(h[0], h[1]), make_edge(h[1], h[2])});
    CHECK(r2.error == FlipError::EdgeAlreadyPresent);
    // degree three at h1
    auto r3 = apply_flip_order(s, walk, Flip{make_edge(h[3], h[4]), make_edge(h[1], h[3])});
    CHECK(r3.error == FlipError::NotAPath);
    // h0 disconnected
    auto r4 = apply_flip_order(s, walk, Flip{make_edge(h[0], h[1]), make_edge(h[1], h[3])});
    CHECK(r4.error == FlipError::NotAPath);
    // chords (h1,h4) and (h0,h2) interleave around the hull, so they cross
    const std::vector<int> zig{h[1], h[2], h[0], h[3], h[4]};
    REQUIRE(plane_sequence_ok(s, zig));
    auto r5 = apply_flip_order(s, zig, Flip{make_edge(h[3], h[4]), make_edge(h[1], h[4])});
    CHECK(r5.error == FlipError::CrossingEdges);
    auto ok = apply_flip_order(s, walk, Flip{make_edge(h[0], h[1]), make_edge(h[0], h[4])});
    REQUIRE(ok.order);
    CHECK(ok.error == FlipError::None);
}

TEST_CASE("a flip followed by its inverse is the identity") {
    for (std::uint64_t seed : {5u, 6u}) {
        const PointSet s = seeded(seed, 7);
        for (const auto& order : enumerate_paths(s)) {
            const PathOnSet p(s, order);
            for (const Neighbor& nb : neighbors(p)) {
                const PathOnSet q = apply_flip(p, nb.flip);
                const PathOnSet back = apply_flip(q, inverse(nb.flip));
                CHECK(canonical_free(back.order()) == canonical_free(order));
            }
        }
    }
}

TEST_CASE("the free neighbor relation is symmetric") {
    const PointSet s = seeded(8, 6);
    const auto paths = enumerate_paths(s);
    std::set<std::vector<int>> index(paths.begin(), paths.end());
    for (const auto& order : paths) {
        const PathOnSet p(s, order);
        for (const Neighbor& nb : neighbors(p)) {
            REQUIRE(index.count(nb.order));
            bool found = false;
            for (const Neighbor& back : neighbors(PathOnSet(s, nb.order)))
                if (back.order == canonical_free(order)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("fixed-start degree equals visible points minus one") {
    for (std::uint64_t seed : {0u, 9u, 10u}) {
        const PointSet s = (seed == 0) ? convex_ngon(6) : seeded(seed, 6);
        const int start = s.layers()[0][0];
        for (const auto& order : enumerate_paths_fixed_start(s, start)) {
            const PathOnSet p(s, order);
            const int t = order.back();
            int visible = 0;
            for (int w = 0; w < s.size(); ++w)
                if (w != t && sees(p, t, w)) ++visible;
            CHECK(static_cast<int>(neighbors_fixed_start(p, start).size()) == visible - 1);
        }
    }
}

TEST_CASE("fixed-start neighbors keep the root and add at the end") {
    const PointSet s = seeded(11, 6);
    const int start = s.layers()[0][0];
    for (const auto& order : enumerate_paths_fixed_start(s, start)) {
        const PathOnSet p(s, order);
        for (const Neighbor& nb : neighbors_fixed_start(p, start)) {
            CHECK(nb.order.front() == start);
            const int t = order.back();
            CHECK((nb.flip.added.first == t || nb.flip.added.second == t));
        }
    }
}

TEST_CASE("replay and reversal round-trip") {
    const PointSet s = convex_ngon(6);
    const auto& h = s.layers()[0];
    std::vector<int> walk;
    for (int i = 0; i < 6; ++i) walk.push_back(h[static_cast<std::size_t>(i)]);
    FlipPlan plan{walk, {}};
    // peel two hull edges into a different path
    plan.steps.push_back(Flip{make_edge(walk[0], walk[1]), make_edge(walk[0], walk[5])});
    plan.steps.push_back(Flip{make_edge(walk[1], walk[2]), make_edge(walk[1], walk[0])});
    const ReplayResult rr = replay_plan(s, plan);
    REQUIRE(rr.ok);
    CHECK(rr.states.size() == 3);
    const FlipPlan rev = reversed_plan(s, plan);
    const ReplayResult back = replay_plan(s, rev);
    REQUIRE(back.ok);
    CHECK(canonical_free(back.states.back()) == canonical_free(walk));

    FlipPlan broken = plan;
    broken.steps.push_back(Flip{make_edge(0, 3), make_edge(0, 3)});
    CHECK_FALSE(replay_plan(s, broken).ok);
}
