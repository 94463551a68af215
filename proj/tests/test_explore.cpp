#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "test_util.hpp"

using namespace planepath;
using namespace planepath::testutil;

namespace {

bool plane_brute(const PointSet& s, const std::vector<int>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < seq.size(); ++j)
            if (segments_cross(s.pt(seq[i]), s.pt(seq[i + 1]), s.pt(seq[j]),
                               s.pt(seq[j + 1])))
                return false;
    return true;
}

// Permutation-filter oracle for the free count.
std::set<std::vector<int>> free_paths_brute(const PointSet& s) {
    std::vector<int> perm(static_cast<std::size_t>(s.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> out;
    do {
        if (plane_brute(s, perm)) out.insert(canonical_free(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("enumeration counts on convex sets match the closed forms") {
    for (int n = 3; n <= 8; ++n) {
        const PointSet s = convex_ngon(n);
        const long long expect_free = (n == 3) ? 3 : static_cast<long long>(n) << (n - 3);
        CHECK(static_cast<long long>(enumerate_paths(s).size()) == expect_free);
        const long long expect_fixed = 1LL << (n - 2);
        CHECK(static_cast<long long>(enumerate_paths_fixed_start(s, 0).size()) ==
              expect_fixed);
    }
}

TEST_CASE("enumeration agrees with the permutation filter") {
    for (std::uint64_t seed : {3u, 14u, 15u}) {
        const PointSet s = seeded(seed, 6);
        const auto fast = enumerate_paths(s);
        const auto brute = free_paths_brute(s);
        CHECK(std::set<std::vector<int>>(fast.begin(), fast.end()) == brute);
        // fixed-start is the rooted restriction
        const int start = s.layers()[0][0];
        std::set<std::vector<int>> fixed_brute;
        for (const auto& c : brute) {
            if (c.front() == start) fixed_brute.insert(c);
            if (c.back() == start) fixed_brute.insert({c.rbegin(), c.rend()});
        }
        const auto fixed = enumerate_paths_fixed_start(s, start);
        CHECK(std::set<std::vector<int>>(fixed.begin(), fixed.end()) == fixed_brute);
    }
}

TEST_CASE("enumeration honors the cap") {
    CHECK_THROWS_AS(enumerate_paths(convex_ngon(8), 7), CapExceededError);
}

TEST_CASE("flip graph is consistent and undirected") {
    for (std::uint64_t seed : {4u, 16u}) {
        const PointSet s = seeded(seed, 6);
        const FlipGraph g = build_flip_graph(s, GraphMode::Free);
        REQUIRE(g.vertices.size() == enumerate_paths(s).size());
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            for (int w : g.adjacency[v]) {
                CHECK(w != static_cast<int>(v));
                const auto& back = g.adjacency[static_cast<std::size_t>(w)];
                CHECK(std::count(back.begin(), back.end(), static_cast<int>(v)) >= 1);
            }
        CHECK(components(g).size() == 1);
    }
}

TEST_CASE("eccentricity profile on the convex fixed-start graph") {
    for (int n = 4; n <= 7; ++n) {
        const PointSet s = convex_ngon(n);
        const FlipGraph g = build_flip_graph(s, GraphMode::FixedStart, 0);
        const EccentricityProfile prof = eccentricity_profile(g);
        CHECK(prof.diameter == 2 * n - 5);
        CHECK(prof.radius == n - 2);
        CHECK(prof.centers.size() == ((n == 3) ? 1 : 2));
    }
}

TEST_CASE("flip_distance equals graph BFS for all pairs") {
    for (std::uint64_t seed : {5u, 18u}) {
        const PointSet s = seeded(seed, 6);
        for (GraphMode mode : {GraphMode::Free, GraphMode::FixedStart}) {
            const int start = s.layers()[0][0];
            const FlipGraph g = build_flip_graph(s, mode, start);
            const int n = static_cast<int>(g.vertices.size());
            for (int a = 0; a < n; a += 3) {
                // reference distances from vertex a by plain BFS
                std::vector<int> dist(static_cast<std::size_t>(n), -1);
                std::vector<int> queue{a};
                dist[static_cast<std::size_t>(a)] = 0;
                for (std::size_t qi = 0; qi < queue.size(); ++qi)
                    for (int w : g.adjacency[static_cast<std::size_t>(queue[qi])])
                        if (dist[static_cast<std::size_t>(w)] < 0) {
                            dist[static_cast<std::size_t>(w)] =
                                dist[static_cast<std::size_t>(queue[qi])] + 1;
                            queue.push_back(w);
                        }
                for (int b = 0; b < n; b += 5) {
                    const auto res = flip_distance(s, g.vertices[static_cast<std::size_t>(a)],
                                                   g.vertices[static_cast<std::size_t>(b)], mode);
                    REQUIRE(res.has_value());
                    CHECK(res->distance == dist[static_cast<std::size_t>(b)]);
                    // the witness plan replays to the target
                    const ReplayResult rr = replay_plan(s, res->plan);
                    REQUIRE(rr.ok);
                    CHECK(static_cast<int>(res->plan.steps.size()) == res->distance);
                    CHECK(canonical_free(rr.states.back()) ==
                          canonical_free(g.vertices[static_cast<std::size_t>(b)]));
                }
            }
        }
    }
}

TEST_CASE("fixed-start distance rejects mismatched roots") {
    const PointSet s = convex_ngon(5);
    const auto paths = enumerate_paths_fixed_start(s, 0);
    std::vector<int> other = paths[0];
    std::reverse(other.begin(), other.end());
    CHECK_THROWS_AS(flip_distance(s, paths[0], other, GraphMode::FixedStart),
                    std::invalid_argument);
}
