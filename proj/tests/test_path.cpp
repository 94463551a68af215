#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "test_util.hpp"

using namespace planepath;
using namespace planepath::testutil;

namespace {

// Independent crossing check used as an oracle against plane_sequence_ok.
bool plane_brute(const PointSet& s, const std::vector<int>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < seq.size(); ++j)
            if (segments_cross(s.pt(seq[i]), s.pt(seq[i + 1]), s.pt(seq[j]),
                               s.pt(seq[j + 1])))
                return false;
    return true;
}

}  // namespace

TEST_CASE("plane_sequence_ok equals the brute-force filter over permutations") {
    const PointSet s = seeded(17, 6);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    int plane = 0;
    do {
        CHECK(plane_sequence_ok(s, perm) == plane_brute(s, perm));
        if (plane_sequence_ok(s, perm)) ++plane;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(plane > 0);
}

TEST_CASE("plane_sequence_ok rejects repeats and reports the crossing pair") {
    const PointSet s = convex_ngon(4);
    CHECK_FALSE(plane_sequence_ok(s, std::vector<int>{0, 1, 1, 2}));
    PathError err;
    // convex quadrilateral: the two diagonals cross
    const auto& hull = s.layers()[0];
    std::vector<int> seq{hull[0], hull[2], hull[1], hull[3]};
    CHECK_FALSE(plane_sequence_ok(s, seq, &err));
    CHECK(err.kind == PathError::Kind::CrossingEdges);
}

TEST_CASE("edge taxonomy on the nested-triangles set") {
    const PointSet s = two33();
    // outer hull 0,1,2; inner 3,4,5
    CHECK(classify_edge(s, 0, 1).kind == EdgeKind::Level);
    CHECK(classify_edge(s, 0, 1).layer == 0);
    CHECK(classify_edge(s, 3, 4).kind == EdgeKind::Level);
    CHECK(classify_edge(s, 3, 4).layer == 1);
    const EdgeClass in = classify_edge(s, 0, 3);
    CHECK(in.kind == EdgeKind::Inward);
    const EdgeClass out = classify_edge(s, 5, 2);
    CHECK(out.kind == EdgeKind::Outward);
    // no chords exist on a 3-point hull; build a 4-gon with inner point
    const PointSet q({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}});
    const auto& h = q.layers()[0];
    CHECK(classify_edge(q, h[0], h[2]).kind == EdgeKind::Chord);
}

TEST_CASE("cutting edges cross a level edge of the set") {
    // square with an inner triangle; (0,0)-(10,12) passes over the inner
    // level edge (5,10)-(15,10)
    const PointSet sq({{0, 0}, {20, 0}, {20, 20}, {0, 20}, {5, 10}, {15, 10}, {10, 12}});
    REQUIRE(sq.layer_count() == 2);
    int cuts = 0;
    for (const PointSet& s : {sq, two33()})
        for (int u = 0; u < s.size(); ++u)
            for (int v = u + 1; v < s.size(); ++v) {
                const EdgeClass c = classify_edge(s, u, v);
                if (c.kind != EdgeKind::Inward && c.kind != EdgeKind::Outward) continue;
                bool brute = false;
                for (const auto& [a, b] : level_edges(s))
                    if (segments_cross(s.pt(u), s.pt(v), s.pt(a), s.pt(b))) brute = true;
                CHECK(c.cutting == brute);
                if (c.cutting) ++cuts;
            }
    CHECK(classify_edge(sq, 0, 6).cutting);
    CHECK(cuts > 0);
}

TEST_CASE("visibility respects path edges only") {
    const PointSet s = convex_ngon(5);
    const auto& h = s.layers()[0];
    const PathOnSet p(s, std::vector<int>{h[0], h[1], h[2], h[3], h[4]});
    // endpoints of the hull walk see each other across the free side
    CHECK(sees(p, h[0], h[4]));
    // in convex position the chords h0-h3 and h1-h4 always cross, so the path
    // edge (h1,h4) blocks the view from h0 to h3
    const PathOnSet z(s, std::vector<int>{h[0], h[1], h[4], h[2], h[3]});
    CHECK_FALSE(sees(z, h[0], h[3]));
}

TEST_CASE("every path on a convex set is suffix-independent") {
    const PointSet s = convex_ngon(6);
    for (const auto& order : enumerate_paths(s)) {
        CHECK(is_suffix_independent(s, order));
        std::vector<int> rev(order.rbegin(), order.rend());
        CHECK(is_suffix_independent(s, rev));
    }
}

TEST_CASE("suffix independence detects trapped prefixes") {
    const PointSet s = two33();
    // end deep inside: ... finishing on the inner triangle after visiting outer
    // points means earlier outer points are never inside the inner hull; build
    // the opposite: path ending with all three outer points is independent,
    // one ending 5,3,4 with outer points before is too; a path whose suffix is
    // the inner triangle plus one outer point traps nothing. Trap: suffix hull
    // = outer triangle with an inner point in the prefix.
    const std::vector<int> trapped{3, 0, 1, 2, 4, 5};
    if (plane_sequence_ok(s, trapped)) {
        // suffix {2,4,5} etc: check the defining property directly
        CHECK(is_suffix_independent(s, trapped) ==
              [&] {
                  for (std::size_t k = 1; k < trapped.size(); ++k) {
                      std::vector<int> suf(trapped.begin() + static_cast<long>(k),
                                           trapped.end());
                      const auto hull = hull_of(s, suf);
                      for (std::size_t i = 0; i < k; ++i)
                          if (strictly_inside_hull(s.points(), hull, s.pt(trapped[i])))
                              return false;
                  }
                  return true;
              }());
    }
    // exhaustive cross-check of the member against the definition
    int dependent = 0;
    for (const auto& order : enumerate_paths(s)) {
        bool brute = true;
        for (std::size_t k = 1; k < order.size(); ++k) {
            std::vector<int> suf(order.begin() + static_cast<long>(k), order.end());
            const auto hull = hull_of(s, suf);
            for (std::size_t i = 0; i < k && brute; ++i)
                if (strictly_inside_hull(s.points(), hull, s.pt(order[i]))) brute = false;
        }
        CHECK(is_suffix_independent(s, order) == brute);
        if (!brute) ++dependent;
    }
    CHECK(dependent > 0);
}

TEST_CASE("layer monotone paths and inner suffixes") {
    const PointSet s = two33();
    const PathOnSet mono(s, std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(is_layer_monotone(mono));
    CHECK(li_suffix(mono, 1) == std::vector<int>{3, 4, 5});
    CHECK(li_suffix_begin(s, mono.order(), 1) == 3);
    const PathOnSet mixed(s, std::vector<int>{0, 3, 1, 4, 2, 5});
    CHECK_FALSE(is_layer_monotone(mixed));
    CHECK(li_suffix(mixed, 1) == std::vector<int>{5});
    CHECK(level_count(mono, 0) == 2);
    CHECK(level_count(mono, 1) == 2);
}

TEST_CASE("canonical_free is orientation-invariant") {
    const std::vector<int> a{0, 3, 1, 4, 2};
    const std::vector<int> r{2, 4, 1, 3, 0};
    CHECK(canonical_free(a) == canonical_free(r));
    CHECK((canonical_free(a) == a || canonical_free(a) == r));
}
