#include "planepath/plan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace planepath {

namespace {

using I128 = __int128;

std::vector<int> all_indices(const PointSet& s) {
    std::vector<int> v(static_cast<std::size_t>(s.size()));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

bool edge_in(const std::vector<int>& order, int u, int v) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        int a = order[i], b = order[i + 1];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

// Accumulates a flip sequence; every emitted flip is applied and validated
// immediately. The front of `cur` is kept stable while it stays an endpoint.
struct Builder {
    const PointSet& ps;
    std::vector<int> cur;
    std::vector<Flip> steps;

    Builder(const PointSet& s, std::vector<int> order) : ps(s), cur(std::move(order)) {}

    int pos(int v) const {
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (cur[i] == v) return static_cast<int>(i);
        throw PlanError("internal: point not on path");
    }

    void emit(int ru, int rv, int au, int av, const char* note) {
        Flip f{make_edge(ru, rv), make_edge(au, av), note};
        const int root = cur.front();
        FlipOutcome out = apply_flip_order(ps, cur, f);
        if (!out.order)
            throw PlanError(std::string("construction step is not a valid flip (") +
                            to_string(out.error) + ")");
        cur = std::move(*out.order);
        if (cur.front() != root && cur.back() == root)
            std::reverse(cur.begin(), cur.end());
        steps.push_back(std::move(f));
    }

    void emit(const Flip& f) {
        emit(f.removed.first, f.removed.second, f.added.first, f.added.second,
             f.note.c_str());
    }

    // Rollback support for constructions that try symmetric variants.
    struct Snap {
        std::vector<int> cur;
        std::size_t nsteps;
    };
    Snap save() const { return {cur, steps.size()}; }
    void restore(const Snap& s) {
        cur = s.cur;
        steps.resize(s.nsteps);
    }
};

// Convex-layer view of an arbitrary index subset.
struct Ctx {
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_idx;  // -1 for points outside the subset
    std::vector<int> pos_idx;

    Ctx(const PointSet& ps, std::span<const int> subset)
        : layer_idx(static_cast<std::size_t>(ps.size()), -1),
          pos_idx(static_cast<std::size_t>(ps.size()), -1) {
        layers = layers_of(ps, subset);
        for (int li = 0; li < static_cast<int>(layers.size()); ++li)
            for (int p = 0; p < static_cast<int>(layers[li].size()); ++p) {
                layer_idx[static_cast<std::size_t>(layers[li][p])] = li;
                pos_idx[static_cast<std::size_t>(layers[li][p])] = p;
            }
    }

    int layer_of(int v) const { return layer_idx[static_cast<std::size_t>(v)]; }

    bool level_adjacent(int u, int v) const {
        if (layer_of(u) < 0 || layer_of(u) != layer_of(v) || u == v) return false;
        const int m = static_cast<int>(layers[static_cast<std::size_t>(layer_of(u))].size());
        if (m == 2) return true;
        const int d = std::abs(pos_idx[static_cast<std::size_t>(u)] -
                               pos_idx[static_cast<std::size_t>(v)]);
        return d == 1 || d == m - 1;
    }

    std::vector<std::pair<int, int>> level_edges() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& cyc : layers) {
            const int m = static_cast<int>(cyc.size());
            if (m < 2) continue;
            const int limit = (m == 2) ? 1 : m;
            for (int i = 0; i < limit; ++i)
                out.emplace_back(cyc[static_cast<std::size_t>(i)],
                                 cyc[static_cast<std::size_t>((i + 1) % m)]);
        }
        return out;
    }

    bool cutting(const PointSet& ps, int u, int v) const {
        if (layer_of(u) == layer_of(v)) return false;
        for (const auto& [a, b] : level_edges())
            if (segments_cross(ps.pt(u), ps.pt(v), ps.pt(a), ps.pt(b))) return true;
        return false;
    }
};

std::vector<int> suffix_of(const std::vector<int>& cur, int k) {
    return {cur.begin() + k, cur.end()};
}

int level0_count(const PointSet& ps, const std::vector<int>& cur, int k, const Ctx& ctx) {
    (void)ps;
    int c = 0;
    for (std::size_t i = static_cast<std::size_t>(k); i + 1 < cur.size(); ++i)
        if (ctx.layer_of(cur[i]) == 0 && ctx.level_adjacent(cur[i], cur[i + 1])) ++c;
    return c;
}

int cutting_count_ctx(const PointSet& ps, const std::vector<int>& cur, int k,
                      const Ctx& ctx) {
    int c = 0;
    for (std::size_t i = static_cast<std::size_t>(k); i + 1 < cur.size(); ++i)
        if (ctx.cutting(ps, cur[i], cur[i + 1])) ++c;
    return c;
}

// Index of the path edge whose crossing with segment t->p lies closest to t.
std::optional<int> first_obstruction(const PointSet& ps, const std::vector<int>& cur,
                                     int t, int p) {
    std::optional<int> best;
    I128 bn = 0, bd = 1;  // crossing parameter along t->p as a fraction
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        int x = cur[i], y = cur[i + 1];
        if (!segments_cross(ps.pt(t), ps.pt(p), ps.pt(x), ps.pt(y))) continue;
        I128 a = cross(ps.pt(x), ps.pt(y), ps.pt(t));
        I128 b = cross(ps.pt(x), ps.pt(y), ps.pt(p));
        I128 num = a < 0 ? -a : a;
        I128 den = (a - b) < 0 ? -(a - b) : (a - b);
        if (!best || num * bd < bn * den) {
            best = static_cast<int>(i);
            bn = num;
            bd = den;
        }
    }
    return best;
}

// Vertices of the subset from which every other subset point lies strictly on
// one side of the line through `view`; there are exactly two for size >= 2.
std::vector<int> tangent_points(const PointSet& ps, std::span<const int> set, int view) {
    std::vector<int> out;
    for (int z : set) {
        int pos = 0, neg = 0;
        for (int x : set) {
            if (x == z) continue;
            Coord c = cross(ps.pt(view), ps.pt(z), ps.pt(x));
            (c > 0 ? pos : neg)++;
        }
        if (pos == 0 || neg == 0) out.push_back(z);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Strongly reversible suffix-independent construction on a subset.

std::vector<int> ssi_seq(const PointSet& ps, std::vector<int> subset, int from, int to);

bool seq_strongly_independent(const PointSet& ps, const std::vector<int>& seq) {
    if (!plane_sequence_ok(ps, seq)) return false;
    if (!is_suffix_independent(ps, seq)) return false;
    std::vector<int> rev(seq.rbegin(), seq.rend());
    return is_suffix_independent(ps, rev);
}

std::vector<int> ssi_seq(const PointSet& ps, std::vector<int> subset, int from, int to) {
    const int m = static_cast<int>(subset.size());
    if (m == 1) return {from};
    if (m == 2) return {from, to};
    std::vector<int> hull = hull_of(ps, subset);
    auto on_hull = [&](int v) {
        return std::find(hull.begin(), hull.end(), v) != hull.end();
    };
    if (!on_hull(from) || !on_hull(to))
        throw PlanError("both route endpoints must lie on the hull of the subset");

    // A direction in which `to` is uniquely extreme and all projections are
    // pairwise distinct; built from the outward normals of its hull edges.
    const int h = static_cast<int>(hull.size());
    int tp = static_cast<int>(std::find(hull.begin(), hull.end(), to) - hull.begin());
    const Point& pa = ps.pt(hull[static_cast<std::size_t>((tp - 1 + h) % h)]);
    const Point& pt = ps.pt(to);
    const Point& pb = ps.pt(hull[static_cast<std::size_t>((tp + 1) % h)]);
    const Point n1{pt.y - pa.y, pa.x - pt.x};
    const Point n2{pb.y - pt.y, pt.x - pb.x};

    const long long cap = static_cast<long long>(m) * m + 2;
    Point d{};
    std::vector<std::pair<I128, int>> proj;
    for (long long j = 0; j <= cap; ++j) {
        d = Point{(j + 1) * n1.x + (cap - j) * n2.x, (j + 1) * n1.y + (cap - j) * n2.y};
        proj.clear();
        for (int v : subset)
            proj.emplace_back(static_cast<I128>(d.x) * ps.pt(v).x +
                                  static_cast<I128>(d.y) * ps.pt(v).y,
                              v);
        std::sort(proj.begin(), proj.end());
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < proj.size(); ++i)
            if (proj[i].first == proj[i + 1].first) distinct = false;
        if (distinct) break;
    }
    if (proj.back().second != to)
        throw PlanError("internal: sweep direction does not isolate the target");

    auto projection = [&](int v) {
        return static_cast<I128>(d.x) * ps.pt(v).x + static_cast<I128>(d.y) * ps.pt(v).y;
    };
    const I128 split = projection(from);
    std::vector<int> half, rest;
    for (int v : subset) {
        if (v == from) continue;
        (projection(v) < split ? half : rest).push_back(v);
    }
    std::sort(rest.begin(), rest.end(),
              [&](int a, int b) { return projection(a) < projection(b); });
    std::sort(half.begin(), half.end(), [&](int a, int b) {
        return cross(ps.pt(from), ps.pt(a), ps.pt(b)) > 0;
    });

    const int fp = static_cast<int>(std::find(hull.begin(), hull.end(), from) - hull.begin());
    const int fprev = hull[static_cast<std::size_t>((fp - 1 + h) % h)];
    const int fnext = hull[static_cast<std::size_t>((fp + 1) % h)];
    auto hull_first = [&](const std::vector<int>& sweep) {
        return sweep.empty() || sweep.front() == fprev || sweep.front() == fnext;
    };

    std::vector<std::vector<int>> sweeps{half};
    if (half.size() > 1) {
        sweeps.push_back({half.rbegin(), half.rend()});
        if (!hull_first(sweeps[0]) && hull_first(sweeps[1]))
            std::swap(sweeps[0], sweeps[1]);
    }
    for (const auto& sweep : sweeps) {
        std::vector<int> seq{from};
        seq.insert(seq.end(), sweep.begin(), sweep.end());
        seq.insert(seq.end(), rest.begin(), rest.end());
        if (seq.back() == to && seq_strongly_independent(ps, seq)) return seq;
    }
    throw PlanError("internal: reversible suffix-independent route failed validation");
}

// ---------------------------------------------------------------------------
// Mutually recursive planner core. All routines act on the full path held by
// the Builder; `k` marks the start of the suffix being reshaped, and the
// point at position k is kept fixed throughout.

void make_ssi(Builder& b, int k);
void fixed_connect(Builder& b, int k, const std::vector<int>& target);
void region_flip(Builder& b, int k, int u, int v);

// --- convex suffix machinery ---

std::vector<int> walk_from(const std::vector<int>& cycle, int start, bool ccw) {
    const int m = static_cast<int>(cycle.size());
    int p = 0;
    while (cycle[static_cast<std::size_t>(p)] != start) ++p;
    std::vector<int> out;
    for (int i = 0; i < m; ++i) {
        out.push_back(cycle[static_cast<std::size_t>(ccw ? (p + i) % m : (p - i + m * 2) % m)]);
    }
    return out;
}

int shared_edges(const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (edge_in(b, a[i], a[i + 1])) ++c;
    return c;
}

// Flip the convex suffix to one of its two hull walks; which one is reached
// depends on which shares more edges with the input.
void sub_to_spiral(Builder& b, int k) {
    const std::vector<int> subset = suffix_of(b.cur, k);
    const int m = static_cast<int>(subset.size());
    if (m <= 2) return;
    const std::vector<int> hull = hull_of(b.ps, subset);
    if (static_cast<int>(hull.size()) != m)
        throw PlanError("suffix is not in convex position");
    const int a = b.cur[static_cast<std::size_t>(k)];
    const std::vector<int> walk_ccw = walk_from(hull, a, true);
    const std::vector<int> walk_cw = walk_from(hull, a, false);

    std::vector<int> target =
        shared_edges(suffix_of(b.cur, k), walk_cw) >= 2 ? walk_cw : walk_ccw;

    for (int guard = 0; guard <= m + 1; ++guard) {
        const std::vector<int> suf = suffix_of(b.cur, k);
        if (suf == walk_cw || suf == walk_ccw) return;
        const int t = b.cur.back();
        int hp = static_cast<int>(std::find(hull.begin(), hull.end(), t) - hull.begin());
        const int hn = static_cast<int>(hull.size());
        int nb1 = hull[static_cast<std::size_t>((hp + 1) % hn)];
        int nb2 = hull[static_cast<std::size_t>((hp - 1 + hn) % hn)];
        int w = -1;
        for (int cand : {nb1, nb2}) {
            if (edge_in(suf, t, cand)) continue;
            if (w < 0 || edge_in(target, t, cand)) w = cand;
        }
        if (w < 0) throw PlanError("internal: no missing hull edge at the end");
        const int j = b.pos(w);
        b.emit(b.cur[static_cast<std::size_t>(j)], b.cur[static_cast<std::size_t>(j) + 1],
               t, w, "extend hull edge at the end");
    }
    throw PlanError("internal: hull walk not reached");
}

// Exact routing between two fixed-start paths on a convex suffix.
void fixed_connect_convex(Builder& b, int k, const std::vector<int>& target) {
    sub_to_spiral(b, k);
    Builder sim(b.ps, std::vector<int>(b.cur.begin(), b.cur.begin() + k));
    sim.cur.insert(sim.cur.end(), target.begin(), target.end());
    sub_to_spiral(sim, k);
    if (suffix_of(b.cur, k) != suffix_of(sim.cur, k)) {
        // swap between the two hull walks in a single flip
        const int a = b.cur[static_cast<std::size_t>(k)];
        const int first = b.cur[static_cast<std::size_t>(k) + 1];
        const int last = b.cur.back();
        b.emit(a, first, a, last, "swap hull walk orientation");
    }
    if (suffix_of(b.cur, k) != suffix_of(sim.cur, k))
        throw PlanError("internal: hull walks disagree");
    for (auto it = sim.steps.rbegin(); it != sim.steps.rend(); ++it) b.emit(inverse(*it));
    if (suffix_of(b.cur, k) != target)
        throw PlanError("internal: convex routing missed the target");
}

// --- suffix-independent connection (fixed start, recursion on the suffix) ---

void ssi_connect_rec(Builder& b, int k, const std::vector<int>& target) {
    const int n = static_cast<int>(b.cur.size());
    if (n - k <= 1) return;
    if (b.cur[static_cast<std::size_t>(k)] != target.front())
        throw PlanError("internal: route start mismatch");
    if (suffix_of(b.cur, k) == target) return;
    const int s1 = b.cur[static_cast<std::size_t>(k) + 1];
    const int s2 = target[1];
    std::vector<int> rest_target(target.begin() + 1, target.end());
    if (s1 == s2) {
        ssi_connect_rec(b, k + 1, rest_target);
        return;
    }
    std::vector<int> h = ssi_seq(b.ps, suffix_of(b.cur, k + 1), s1, s2);
    ssi_connect_rec(b, k + 1, h);
    const int a = b.cur[static_cast<std::size_t>(k)];
    b.emit(a, s1, a, s2, "reconnect start to the opposite route end");
    ssi_connect_rec(b, k + 1, rest_target);
}

// --- dispatch: route a fixed-start suffix to an exact target sequence ---

void fixed_connect(Builder& b, int k, const std::vector<int>& target) {
    if (suffix_of(b.cur, k) == target) return;
    if (b.cur[static_cast<std::size_t>(k)] != target.front())
        throw PlanError("internal: route start mismatch");
    const std::vector<int> subset = suffix_of(b.cur, k);
    if (subset.size() <= 2)
        throw PlanError("internal: trivial suffixes must already match");
    if (subset_convex(b.ps, subset)) {
        fixed_connect_convex(b, k, target);
        return;
    }
    if (layers_of(b.ps, subset).size() > 2)
        throw PlanError("suffix has more than two layers; routing unsupported");
    make_ssi(b, k);
    Builder sim(b.ps, std::vector<int>(b.cur.begin(), b.cur.begin() + k));
    sim.cur.insert(sim.cur.end(), target.begin(), target.end());
    make_ssi(sim, k);
    ssi_connect_rec(b, k, suffix_of(sim.cur, k));
    for (auto it = sim.steps.rbegin(); it != sim.steps.rend(); ++it) b.emit(inverse(*it));
    if (suffix_of(b.cur, k) != target)
        throw PlanError("internal: two-layer routing missed the target");
}

// --- empty-pocket region machinery ---

struct RegionGeom {
    int u, v;                // oriented: v follows u ccw on hull(A + {u,v})
    std::vector<int> huv;    // ccw hull cycle of A + {u,v}
    std::vector<int> ha;     // ccw hull cycle of A
    std::vector<int> chain;  // hull(A+{u,v}) vertices strictly between v and u
    std::vector<int> zs;     // hull(A) walk from chain.back() to chain.front()
};

std::optional<RegionGeom> region_geom(const PointSet& ps, const std::vector<int>& setA,
                                      int u, int v) {
    RegionGeom g;
    std::vector<int> auv = setA;
    auv.push_back(u);
    auv.push_back(v);
    g.huv = hull_of(ps, auv);
    const int h = static_cast<int>(g.huv.size());
    int pu = -1, pv = -1;
    for (int i = 0; i < h; ++i) {
        if (g.huv[static_cast<std::size_t>(i)] == u) pu = i;
        if (g.huv[static_cast<std::size_t>(i)] == v) pv = i;
    }
    if (pu < 0 || pv < 0) return std::nullopt;
    if ((pu + 1) % h == pv) {
        g.u = u;
        g.v = v;
    } else if ((pv + 1) % h == pu) {
        g.u = v;
        g.v = u;
        std::swap(pu, pv);
    } else {
        return std::nullopt;
    }
    for (int i = (pv + 1) % h; g.huv[static_cast<std::size_t>(i)] != g.u; i = (i + 1) % h)
        g.chain.push_back(g.huv[static_cast<std::size_t>(i)]);
    if (g.chain.empty()) return std::nullopt;

    g.ha = hull_of(ps, setA);
    const int ck = g.chain.back(), c1 = g.chain.front();
    const int ma = static_cast<int>(g.ha.size());
    if (ma == 1) {
        g.zs = {g.ha.front()};
        return g;
    }
    int i = 0;
    while (g.ha[static_cast<std::size_t>(i)] != ck) ++i;
    g.zs.push_back(ck);
    do {
        i = (i + 1) % ma;
        g.zs.push_back(g.ha[static_cast<std::size_t>(i)]);
    } while (g.ha[static_cast<std::size_t>(i)] != c1);
    return g;
}

bool in_region(const PointSet& ps, const RegionGeom& g, const Point& p) {
    return strictly_inside_hull(ps.points(), g.huv, p) &&
           !strictly_inside_hull(ps.points(), g.ha, p);
}

// Full precondition check: uv bounds an empty pocket attached to the hull of
// the independent suffix starting at position k.
bool region_ok(const PointSet& ps, const std::vector<int>& cur, int k, int u, int v,
               std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = static_cast<int>(cur.size());
    if (k < 1 || k >= n) return fail("suffix start must have a predecessor");
    const std::vector<int> setA = suffix_of(cur, k);
    auto inA = [&](int x) {
        return std::find(setA.begin(), setA.end(), x) != setA.end();
    };
    if (inA(u) || inA(v)) return fail("edge endpoints must precede the suffix");
    int epos = -1;
    for (int i = 0; i + 1 < k; ++i)
        if ((cur[static_cast<std::size_t>(i)] == u && cur[static_cast<std::size_t>(i) + 1] == v) ||
            (cur[static_cast<std::size_t>(i)] == v && cur[static_cast<std::size_t>(i) + 1] == u))
            epos = i;
    if (epos < 0) return fail("uv is not a path edge before the suffix");

    const std::vector<int> ha = hull_of(ps, setA);
    if (ha.size() >= 3)
        for (int i = 0; i < k; ++i)
            if (strictly_inside_hull(ps.points(), ha, ps.pt(cur[static_cast<std::size_t>(i)])))
                return fail("suffix is not independent");

    auto g = region_geom(ps, setA, u, v);
    if (!g) return fail("uv is not a boundary edge of the suffix hull with uv");

    for (int x = 0; x < ps.size(); ++x)
        if (x != u && x != v && !inA(x) && in_region(ps, *g, ps.pt(x)))
            return fail("a point lies inside the pocket");

    std::vector<std::pair<int, int>> border;
    border.emplace_back(g->v, g->chain.front());
    border.emplace_back(g->chain.back(), g->u);
    for (std::size_t i = 0; i + 1 < g->zs.size(); ++i)
        border.emplace_back(g->zs[i], g->zs[i + 1]);
    for (int i = 0; i + 1 < n; ++i) {
        const int x = cur[static_cast<std::size_t>(i)], y = cur[static_cast<std::size_t>(i) + 1];
        if (inA(x) && inA(y)) continue;
        if (make_edge(x, y) == make_edge(u, v)) continue;
        for (int e : {x, y})
            if (e != u && e != v && !inA(e) && in_region(ps, *g, ps.pt(e)))
                return fail("a path edge ends inside the pocket");
        for (const auto& [p, q] : border)
            if (segments_cross(ps.pt(x), ps.pt(y), ps.pt(p), ps.pt(q)))
                return fail("a path edge crosses the pocket");
    }
    return true;
}

// Hull-level visibility between a hull vertex of A and an outside point.
bool hull_visible(const PointSet& ps, const std::vector<int>& ha, int z, int w) {
    const int m = static_cast<int>(ha.size());
    if (m < 3) return true;
    for (int i = 0; i < m; ++i)
        if (segments_cross(ps.pt(z), ps.pt(w), ps.pt(ha[static_cast<std::size_t>(i)]),
                           ps.pt(ha[static_cast<std::size_t>((i + 1) % m)])))
            return false;
    return true;
}

// Flips the path so it ends at the predecessor of the suffix start, consuming
// the empty pocket bounded by uv. Recursion peels hull points of the suffix.
void region_flip(Builder& b, int k, int u, int v) {
    const PointSet& ps = b.ps;
    const int a = b.cur[static_cast<std::size_t>(k)];
    const std::vector<int> setA = suffix_of(b.cur, k);

    if (setA.size() == 1) {
        const int p = b.cur[static_cast<std::size_t>(k) - 1];
        b.emit(u, v, u, a, "attach the last suffix point to the pocket edge");
        b.emit(a, p, a, v, "close the pocket and retreat to the predecessor");
        return;
    }

    auto g = region_geom(ps, setA, u, v);
    if (!g) throw PlanError("pocket edge is not on the extended hull boundary");
    u = g->u;
    v = g->v;

    if (u == b.cur[static_cast<std::size_t>(k) - 1] ||
        v == b.cur[static_cast<std::size_t>(k) - 1]) {
        // the pocket edge leads straight into the suffix: reroute its tail so
        // it ends at the suffix predecessor
        const int pu = b.cur[static_cast<std::size_t>(k) - 2];
        const int pv = b.cur[static_cast<std::size_t>(k) - 1];
        if (k < 2 || make_edge(pu, pv) != make_edge(u, v))
            throw PlanError("internal: unexpected pocket attachment");
        std::vector<int> sub = suffix_of(b.cur, k - 2);
        fixed_connect(b, k - 2, ssi_seq(ps, sub, pu, pv));
        return;
    }

    const int m = static_cast<int>(g->zs.size());
    if (m < 2) throw PlanError("internal: degenerate hull chain");

    // The reconnection must attach the peeled point to the free end left by
    // removing uv, which is the endpoint closer to the path start.
    const int early = (b.pos(u) < b.pos(v)) ? u : v;
    const int late = (early == u) ? v : u;

    if (m == 2) {
        for (int z : {g->zs[0], g->zs[1]}) {
            if (z == a) continue;
            const Builder::Snap snap = b.save();
            try {
                fixed_connect(b, k, ssi_seq(ps, setA, a, z));
                const int p = b.cur[b.cur.size() - 2];
                b.emit(u, v, early, z, "open the pocket toward the visible hull point");
                b.emit(p, z, z, late, "hand the hull point over to the pocket");
                // z moved into the prefix, so the remaining suffix starts one later
                for (auto cand : {std::pair{z, late}, std::pair{early, z}}) {
                    if (region_ok(ps, b.cur, k + 1, cand.first, cand.second)) {
                        region_flip(b, k + 1, cand.first, cand.second);
                        return;
                    }
                }
                throw PlanError("internal: no pocket edge for the peeled suffix");
            } catch (const PlanError&) {
                b.restore(snap);
            }
        }
        throw PlanError("internal: pocket peel failed for every hull choice");
    }

    int zi = -1, idx = -1;
    for (int i = 1; i + 1 < m; ++i)
        if (hull_visible(ps, g->ha, g->zs[static_cast<std::size_t>(i)], u) &&
            hull_visible(ps, g->ha, g->zs[static_cast<std::size_t>(i)], v)) {
            zi = g->zs[static_cast<std::size_t>(i)];
            idx = i;
            break;
        }
    if (zi < 0) throw PlanError("internal: no hull point sees the pocket edge");

    std::vector<int> rest = setA;
    rest.erase(std::remove(rest.begin(), rest.end(), zi), rest.end());
    for (int p : {g->zs[static_cast<std::size_t>(idx) + 1],
                  g->zs[static_cast<std::size_t>(idx) - 1]}) {
        if (p == a) continue;
        const Builder::Snap snap = b.save();
        try {
            std::vector<int> target = ssi_seq(ps, rest, a, p);
            target.push_back(zi);
            fixed_connect(b, k, target);
            b.emit(u, v, early, zi, "open the pocket toward the visible hull point");
            b.emit(p, zi, zi, late, "hand the hull point over to the pocket");
            const int w = b.cur[b.cur.size() - 2];
            // rechain so that p ends the path while zi-p becomes the pocket edge;
            // which side p can see decides the variant, so try both
            bool done = false;
            for (int variant = 0; variant < 2 && !done; ++variant) {
                const Builder::Snap inner = b.save();
                try {
                    if (variant == 0) {
                        b.emit(zi, late, zi, p, "rechain the peeled pair along the hull");
                        b.emit(p, w, p, late, "retreat behind the peeled pair");
                    } else {
                        b.emit(early, zi, p, early, "rechain the peeled pair along the hull");
                        b.emit(p, w, p, zi, "retreat behind the peeled pair");
                    }
                    // zi and p both left the suffix, which therefore starts two later
                    region_flip(b, k + 2, zi, p);
                    done = true;
                } catch (const PlanError&) {
                    b.restore(inner);
                }
            }
            if (!done) throw PlanError("internal: rechain failed on both sides");
            return;
        } catch (const PlanError&) {
            b.restore(snap);
        }
    }
    throw PlanError("internal: pocket peel failed for every hull choice");
}

// --- level-raising machinery on a two-layer suffix ---

int l1_suffix_begin(const std::vector<int>& cur, int k, const Ctx& ctx) {
    int bgn = static_cast<int>(cur.size());
    while (bgn > k && ctx.layer_of(cur[static_cast<std::size_t>(bgn) - 1]) >= 1) --bgn;
    return bgn;
}

// Re-route the inner-layer suffix so that its edges stop obstructing the view
// from `view`; the suffix ends at a tangent point of its hull afterwards.
void detangle(Builder& b, int kx, int view) {
    const std::vector<int> xs = suffix_of(b.cur, kx);
    if (xs.size() < 2) throw PlanError("internal: nothing to detangle");
    const int ax = xs.front();
    std::vector<int> tps = tangent_points(b.ps, xs, view);
    std::sort(tps.begin(), tps.end());
    for (int z : tps) {
        if (z == ax) continue;
        fixed_connect(b, kx, ssi_seq(b.ps, xs, ax, z));
        return;
    }
    throw PlanError("internal: no tangent end for the inner suffix");
}

std::pair<std::vector<int>, std::vector<int>> inner_split(const PointSet& ps,
                                                          const Ctx& ctx, int u, int v,
                                                          int ref) {
    const Orientation want = orientation(ps.pt(u), ps.pt(v), ps.pt(ref));
    if (want == Orientation::Collinear)
        throw PlanError("internal: reference point on the splitting line");
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int x : ctx.layers[1]) {
        if (x == u || x == v) continue;
        (orientation(ps.pt(u), ps.pt(v), ps.pt(x)) == want ? out.first : out.second)
            .push_back(x);
    }
    return out;
}

// Removes one crossing inter-layer edge uv (u outer, v inner in the suffix
// view) whose inner far side is fully contained in the inner suffix.
void remove_cutting_edge(Builder& b, int k, int u, int v, const Ctx& ctx) {
    const PointSet& ps = b.ps;
    const int t = b.cur.back();

    // The edge entering the maximal inner suffix; everything after it stays on
    // the inner layer and can be re-routed with the convex machinery.
    const int kx = l1_suffix_begin(b.cur, k, ctx);
    if (kx <= k || kx >= static_cast<int>(b.cur.size()))
        throw PlanError("internal: cutting-edge removal needs an inner suffix");
    const int a2 = b.cur[static_cast<std::size_t>(kx) - 1];
    const int b2 = b.cur[static_cast<std::size_t>(kx)];
    if (ctx.layer_of(a2) != 0 || ctx.layer_of(b2) != 1)
        throw PlanError("internal: inner suffix not entered by an inward edge");

    auto [plus, minus] = inner_split(ps, ctx, u, v, t);
    std::set<int> minus_set(minus.begin(), minus.end());
    std::vector<int> zs;
    for (int z : plus) {
        if (ctx.cutting(ps, u, z)) continue;
        zs.push_back(z);
    }
    // prefer anchors whose straight attachment cuts nothing, but keep the
    // cutting ones as a validated fallback
    std::stable_sort(zs.begin(), zs.end(), [&](int za, int zb) {
        auto nb_minus = [&](int z) {
            const auto& cyc = ctx.layers[1];
            const int m = static_cast<int>(cyc.size());
            const int p = ctx.pos_idx[static_cast<std::size_t>(z)];
            return minus_set.count(cyc[static_cast<std::size_t>((p + 1) % m)]) +
                   minus_set.count(cyc[static_cast<std::size_t>((p - 1 + m) % m)]);
        };
        return nb_minus(za) > nb_minus(zb);
    });
    for (int z : plus)
        if (ctx.cutting(ps, u, z)) zs.push_back(z);
    if (zs.empty()) throw PlanError("internal: no safe inner anchor for the removal");

    for (const int z : zs) {
        const Builder::Snap snap = b.save();
        try {
            if (z == t) {
                b.emit(u, v, u, z, "replace the crossing edge by a straight attachment");
                return;
            }
            if (b2 != z) {
                const int pb = b.pos(b2);
                fixed_connect(b, pb, ssi_seq(ps, suffix_of(b.cur, pb), b2, z));
                b.emit(u, v, u, z, "replace the crossing edge by a straight attachment");
                return;
            }
            // the anchor is the suffix entry itself: hand the entry over to
            // another inner point so the anchor can become the free end
            const int pb = b.pos(b2);
            const std::vector<int> xs = suffix_of(b.cur, pb);
            std::vector<int> cands;
            for (int c : plus)
                if (c != b2 && !ctx.cutting(ps, a2, c)) cands.push_back(c);
            for (int c : xs)
                if (c != b2 && std::find(cands.begin(), cands.end(), c) == cands.end())
                    cands.push_back(c);
            bool done = false;
            for (int c : cands) {
                const Builder::Snap inner = b.save();
                try {
                    fixed_connect(b, pb, ssi_seq(ps, xs, b2, c));
                    b.emit(a2, b2, a2, c, "swap the inward attachment point");
                    b.emit(u, v, u, z, "replace the crossing edge by a straight attachment");
                    done = true;
                    break;
                } catch (const PlanError&) {
                    b.restore(inner);
                }
            }
            if (!done) throw PlanError("internal: no alternate inner anchor");
            return;
        } catch (const PlanError&) {
            b.restore(snap);
        }
    }
    throw PlanError("internal: no safe inner anchor for the removal");
}

// Fallback removal of a crossing edge uv whose far side spills out of the
// trailing inner run: reroute a larger independent suffix so an anchor on the
// far side becomes the free end, then attach it straight to u.
bool wide_cut_removal(Builder& b, int u, int v, const std::vector<int>& plus,
                      const Ctx& ctx) {
    const PointSet& ps = b.ps;
    if (plus.empty()) return false;
    int top = static_cast<int>(b.cur.size()) - 1;
    for (int z : plus) top = std::min(top, b.pos(z));
    const int lim = std::max(b.pos(u), b.pos(v));
    for (int p0 = top; p0 > lim && p0 > 0; --p0) {
        const std::vector<int> sub = suffix_of(b.cur, p0);
        const std::vector<int> hull = hull_of(ps, sub);
        auto on_hull = [&](int x) {
            return std::find(hull.begin(), hull.end(), x) != hull.end();
        };
        if (!on_hull(b.cur[static_cast<std::size_t>(p0)])) continue;
        bool indep = true;
        if (hull.size() >= 3)
            for (int i = 0; i < p0 && indep; ++i)
                if (strictly_inside_hull(ps.points(), hull,
                                         ps.pt(b.cur[static_cast<std::size_t>(i)])))
                    indep = false;
        if (!indep) continue;
        std::vector<int> zc;
        for (int z : plus)
            if (z != b.cur[static_cast<std::size_t>(p0)] && on_hull(z) &&
                !ctx.cutting(ps, u, z))
                zc.push_back(z);
        for (int z : plus)
            if (z != b.cur[static_cast<std::size_t>(p0)] && on_hull(z) &&
                ctx.cutting(ps, u, z))
                zc.push_back(z);
        for (int z : zc) {
            const Builder::Snap snap = b.save();
            try {
                fixed_connect(b, p0,
                              ssi_seq(ps, sub, b.cur[static_cast<std::size_t>(p0)], z));
                b.emit(u, v, u, z, "replace the crossing edge by a straight attachment");
                return true;
            } catch (const PlanError&) {
                b.restore(snap);
            }
        }
    }
    return false;
}

// One full improvement round: raise the outer level-edge count if the suffix
// ends outside, then walk the end back to the outer hull.
void k_step_run(Builder& b, int k, const Ctx& ctx) {
    const PointSet& ps = b.ps;

    if (ctx.layer_of(b.cur.back()) == 0) {
        const int t = b.cur.back();
        const auto& cyc = ctx.layers[0];
        const int m = static_cast<int>(cyc.size());
        const int tp = ctx.pos_idx[static_cast<std::size_t>(t)];
        int n1 = cyc[static_cast<std::size_t>((tp + 1) % m)];
        int n2 = cyc[static_cast<std::size_t>((tp - 1 + m) % m)];
        const int aa = (b.pos(n1) < b.pos(n2)) ? n1 : n2;
        const int p = b.cur[static_cast<std::size_t>(b.pos(aa)) + 1];
        if (ctx.layer_of(p) != 1)
            throw PlanError("internal: hull neighbor has no inward edge");
        b.emit(aa, p, aa, t, "trade an inward edge for the outer level edge");
        // the trade may have turned the first suffix edge into a level edge;
        // hand control back so the driver can peel it before continuing
        return;
    }

    const int psi0 = cutting_count_ctx(ps, b.cur, k, ctx);
    const int guard = 4 * static_cast<int>(b.cur.size()) * (psi0 + 2) + 8;
    for (int iter = 0; iter <= guard; ++iter) {
        const int t = b.cur.back();
        if (ctx.layer_of(t) == 0) return;
        if (level0_count(ps, b.cur, k, ctx) ==
            static_cast<int>(ctx.layers[0].size()) - 1)
            return;

        std::vector<std::pair<int, int>> outward;
        for (std::size_t i = static_cast<std::size_t>(k); i + 1 < b.cur.size(); ++i)
            if (ctx.layer_of(b.cur[i]) == 1 && ctx.layer_of(b.cur[i + 1]) == 0)
                outward.emplace_back(b.cur[i], b.cur[i + 1]);
        if (outward.empty())
            throw PlanError("internal: no outward edge although level count is short");

        bool done = false;
        for (auto [p, q] : outward) {
            if (p == t || edge_in(b.cur, t, p)) continue;
            if (!sees(ps, b.cur, t, p)) continue;
            b.emit(p, q, p, t, "redirect the outward edge to the current end");
            done = true;
            break;
        }
        if (done) return;

        bool progressed = false;
        for (auto [p, q] : outward) {
            (void)q;
            if (p == t) continue;
            auto obs = first_obstruction(ps, b.cur, t, p);
            if (!obs) continue;  // blocked only by adjacency, try the next one
            const int j = *obs;
            const int x = b.cur[static_cast<std::size_t>(j)];
            const int y = b.cur[static_cast<std::size_t>(j) + 1];
            const int kx = l1_suffix_begin(b.cur, k, ctx);
            if (j >= kx) {
                detangle(b, kx, p);
                progressed = true;
                break;
            }
            const int lx = ctx.layer_of(x), ly = ctx.layer_of(y);
            if (lx < 0 || ly < 0)
                throw PlanError("internal: obstruction outside the working suffix");
            if (lx == 1 && ly == 1) {
                region_flip(b, kx, x, y);
                return;
            }
            const int u0 = (lx == 0) ? x : y;
            const int v1 = (lx == 0) ? y : x;
            auto [plus, minus] = inner_split(ps, ctx, u0, v1, t);
            (void)minus;
            const std::vector<int> xs = suffix_of(b.cur, kx);
            const bool covered = std::all_of(plus.begin(), plus.end(), [&](int z) {
                return std::find(xs.begin(), xs.end(), z) != xs.end();
            });
            if (!covered) {
                if (wide_cut_removal(b, u0, v1, plus, ctx)) {
                    progressed = true;
                    break;
                }
                const Builder::Snap snap = b.save();
                try {
                    remove_cutting_edge(b, k, u0, v1, ctx);
                    progressed = true;
                    break;
                } catch (const PlanError&) {
                    b.restore(snap);
                }
                continue;
            }
            remove_cutting_edge(b, k, u0, v1, ctx);
            progressed = true;
            break;
        }
        if (!progressed)
            throw PlanError("internal: end is stuck on the inner layer");
    }
    throw PlanError("internal: improvement round exceeded its step budget");
}

// --- driver: flip a fixed-start suffix to a suffix-independent path ---

void make_ssi(Builder& b, int k) {
    const PointSet& ps = b.ps;
    const int n = static_cast<int>(b.cur.size());
    if (n - k <= 2) return;
    if (is_suffix_independent(ps, std::span<const int>(b.cur).subspan(
                                      static_cast<std::size_t>(k))))
        return;
    const std::vector<int> subset = suffix_of(b.cur, k);
    if (subset_convex(ps, subset)) {
        sub_to_spiral(b, k);
        return;
    }
    if (layers_of(ps, subset).size() > 2)
        throw PlanError("point set has more than two layers");
    const Ctx ctx(ps, subset);
    if (ctx.layer_of(b.cur[static_cast<std::size_t>(k)]) != 0)
        throw PlanError("suffix start is not on the outer hull of the suffix");

    for (int guard = 0; guard <= n; ++guard) {
        int ci = -1;
        for (int i = k; i + 1 < n; ++i) {
            const int x = b.cur[static_cast<std::size_t>(i)];
            const int y = b.cur[static_cast<std::size_t>(i) + 1];
            if (ctx.layer_of(x) == 0 && ctx.layer_of(y) == 0 &&
                !ctx.level_adjacent(x, y)) {
                ci = i;
                break;
            }
        }
        if (ci < 0) break;
        if (guard == n) throw PlanError("internal: chord elimination does not settle");
        const int u = b.cur[static_cast<std::size_t>(ci)];
        const int v = b.cur[static_cast<std::size_t>(ci) + 1];
        fixed_connect(b, ci, ssi_seq(ps, suffix_of(b.cur, ci), u, v));
    }

    const int psi0 = cutting_count_ctx(ps, b.cur, k, ctx);
    const int guard =
        (static_cast<int>(ctx.layers[0].size()) + 2) * (psi0 + 2) + 4;
    for (int iter = 0; iter <= guard; ++iter) {
        if (is_suffix_independent(ps, std::span<const int>(b.cur).subspan(
                                          static_cast<std::size_t>(k))))
            return;
        if (ctx.layer_of(b.cur[static_cast<std::size_t>(k) + 1]) == 0) {
            make_ssi(b, k + 1);
            return;
        }
        if (iter == guard)
            throw PlanError("internal: level raising exceeded its round budget");
        k_step_run(b, k, ctx);
    }
}

// --- free-endpoint escape for paths trapped on the inner layer ---

void orient_outer_front(Builder& b) {
    if (b.ps.layer_of(b.cur.front()) != 0 && b.ps.layer_of(b.cur.back()) == 0)
        std::reverse(b.cur.begin(), b.cur.end());
}

void escape_to_outer(Builder& b) {
    const PointSet& ps = b.ps;
    const Ctx ctx(ps, all_indices(ps));
    const int n = static_cast<int>(b.cur.size());
    const int guard = 4 * n * (cutting_count_ctx(ps, b.cur, 0, ctx) + 2) + 8;

    for (int iter = 0; iter <= guard; ++iter) {
        if (ps.layer_of(b.cur.front()) == 0 || ps.layer_of(b.cur.back()) == 0) {
            orient_outer_front(b);
            return;
        }
        const int s0 = b.cur.front();
        const int t = b.cur.back();

        if (!edge_in(b.cur, s0, t) && sees(ps, b.cur, s0, t)) {
            int i = 0;
            while (ps.layer_of(b.cur[static_cast<std::size_t>(i)]) != 0) ++i;
            b.emit(b.cur[static_cast<std::size_t>(i)], b.cur[static_cast<std::size_t>(i) + 1],
                   s0, t, "close the cycle and break it at an outer point");
            orient_outer_front(b);
            return;
        }

        bool done = false;
        for (int i = 0; i + 1 < n; ++i) {
            const int p = b.cur[static_cast<std::size_t>(i)];
            const int q = b.cur[static_cast<std::size_t>(i) + 1];
            if (ps.layer_of(q) != 0 || p == t || edge_in(b.cur, t, p)) continue;
            if (!sees(ps, b.cur, t, p)) continue;
            b.emit(p, q, p, t, "redirect the outward edge to the current end");
            done = true;
            break;
        }
        if (done) {
            orient_outer_front(b);
            return;
        }

        auto obs = first_obstruction(ps, b.cur, t, s0);
        if (!obs) throw PlanError("internal: blocked view with no obstruction");
        const int j = *obs;
        const int x = b.cur[static_cast<std::size_t>(j)];
        const int y = b.cur[static_cast<std::size_t>(j) + 1];
        const int kx = l1_suffix_begin(b.cur, 0, ctx);
        if (j >= kx) {
            detangle(b, kx, s0);
            continue;
        }
        const int lx = ps.layer_of(x), ly = ps.layer_of(y);
        if (lx == 1 && ly == 1) {
            if (!sees(ps, b.cur, t, x) || !sees(ps, b.cur, t, y))
                throw PlanError("internal: inner obstruction out of sight");
            region_flip(b, kx, x, y);
            orient_outer_front(b);
            return;
        }
        if (lx == 0 && ly == 0) {
            // chord: reroute the independent trailing segment to an outer end
            const int pu = b.pos(x) == j ? j : b.pos(x);
            const std::vector<int> sub = suffix_of(b.cur, pu);
            int zz = -1;
            for (int c : sub)
                if (c != x && ps.layer_of(c) == 0) zz = c;
            if (zz < 0) throw PlanError("internal: chord segment has no outer exit");
            fixed_connect(b, pu, ssi_seq(ps, sub, x, zz));
            orient_outer_front(b);
            return;
        }
        const int u0 = (lx == 0) ? x : y;
        const int v1 = (lx == 0) ? y : x;
        auto [plus, minus] = inner_split(ps, ctx, u0, v1, t);
        (void)minus;
        const std::vector<int> xs = suffix_of(b.cur, kx);
        const bool covered = std::all_of(plus.begin(), plus.end(), [&](int z) {
            return std::find(xs.begin(), xs.end(), z) != xs.end();
        });
        if (!covered) {
            if (wide_cut_removal(b, u0, v1, plus, ctx)) continue;
            const Builder::Snap snap = b.save();
            try {
                remove_cutting_edge(b, 0, u0, v1, ctx);
            } catch (const PlanError&) {
                b.restore(snap);
                // the other free end may have a clearer view; swap orientation
                std::reverse(b.cur.begin(), b.cur.end());
            }
            continue;
        }
        remove_cutting_edge(b, 0, u0, v1, ctx);
    }
    throw PlanError("internal: inner escape exceeded its step budget");
}

// --- shared validation helpers for the public entry points ---

std::vector<int> rooted_order(const PathOnSet& p, int start) {
    if (p.start() != start && p.end() != start)
        throw PlanError("start point is not an endpoint of the path");
    std::vector<int> order = p.order();
    if (order.front() != start) std::reverse(order.begin(), order.end());
    return order;
}

void require_convex(const PointSet& s) {
    if (!s.convex_position()) throw PlanError("point set is not in convex position");
}

void require_two_layers(const PointSet& s) {
    if (s.layer_count() > 2) throw PlanError("point set has more than two layers");
}

FlipPlan finish(Builder&& b, std::vector<int> start) {
    return FlipPlan{std::move(start), std::move(b.steps)};
}

}  // namespace

// ---------------------------------------------------------------------------

PathOnSet spiral(const PointSet& s, int start, Direction d) {
    if (!s.is_outer(start)) throw PlanError("spiral start must be an outer point");
    std::vector<int> remaining = all_indices(s);
    std::vector<int> order;
    int cur = start;
    while (true) {
        order.push_back(cur);
        if (remaining.size() == 1) break;
        const std::vector<int> hull = hull_of(s, remaining);
        const int m = static_cast<int>(hull.size());
        int p = static_cast<int>(std::find(hull.begin(), hull.end(), cur) - hull.begin());
        const int next = (d == Direction::CounterClockwise)
                             ? hull[static_cast<std::size_t>((p + 1) % m)]
                             : hull[static_cast<std::size_t>((p - 1 + m) % m)];
        remaining.erase(std::remove(remaining.begin(), remaining.end(), cur),
                        remaining.end());
        cur = next;
    }
    return PathOnSet(s, std::move(order));
}

PathOnSet zigzag(const PointSet& s, int start, Direction d) {
    require_convex(s);
    std::vector<int> cyc = walk_from(s.layers()[0], start,
                                     d == Direction::CounterClockwise);
    std::deque<int> rest(cyc.begin() + 1, cyc.end());
    std::vector<int> order{cyc.front()};
    bool front = true;
    while (!rest.empty()) {
        if (front) {
            order.push_back(rest.front());
            rest.pop_front();
        } else {
            order.push_back(rest.back());
            rest.pop_back();
        }
        front = !front;
    }
    return PathOnSet(s, std::move(order));
}

FlipPlan convex_to_spiral_plan(const PathOnSet& p, int start) {
    require_convex(p.set());
    Builder b(p.set(), rooted_order(p, start));
    std::vector<int> orig = b.cur;
    sub_to_spiral(b, 0);
    if (static_cast<int>(b.steps.size()) > std::max(0, p.size() - 3))
        throw PlanError("internal: hull-walk routing exceeded its flip budget");
    return finish(std::move(b), std::move(orig));
}

FlipPlan convex_pair_plan(const PathOnSet& p1, const PathOnSet& p2, int start) {
    require_convex(p1.set());
    Builder b(p1.set(), rooted_order(p1, start));
    std::vector<int> orig = b.cur;
    fixed_connect_convex(b, 0, rooted_order(p2, start));
    return finish(std::move(b), std::move(orig));
}

PathOnSet strongly_ssi_path(const PointSet& s, int from, int to) {
    if (!s.is_outer(from) || !s.is_outer(to))
        throw PlanError("route endpoints must be outer points");
    if (from == to) throw PlanError("route endpoints must differ");
    return PathOnSet(s, ssi_seq(s, all_indices(s), from, to));
}

FlipPlan ssi_connect_plan(const PointSet& s, int start, const PathOnSet& p1,
                          const PathOnSet& p2) {
    if (!s.is_outer(start)) throw PlanError("start point is not outer");
    Builder b(s, rooted_order(p1, start));
    std::vector<int> orig = b.cur;
    std::vector<int> target = rooted_order(p2, start);
    if (!is_suffix_independent(s, orig) || !is_suffix_independent(s, target))
        throw PlanError("both paths must be suffix-independent");
    ssi_connect_rec(b, 0, target);
    return finish(std::move(b), std::move(orig));
}

FlipPlan convex_region_flip_plan(const PathOnSet& p, int a, Edge uv) {
    Builder b(p.set(), p.order());
    std::vector<int> orig = b.cur;
    const int k = b.pos(a);
    std::string why;
    if (!region_ok(p.set(), b.cur, k, uv.first, uv.second, &why))
        throw PlanError("precondition violated: " + why);
    region_flip(b, k, uv.first, uv.second);
    if (b.cur.back() != orig[static_cast<std::size_t>(k) - 1])
        throw PlanError("internal: pocket routing missed the predecessor");
    return finish(std::move(b), std::move(orig));
}

FlipPlan k_property_step(const PathOnSet& p, int start) {
    const PointSet& s = p.set();
    require_two_layers(s);
    if (!s.is_outer(start)) throw PlanError("start point is not outer");
    Builder b(s, rooted_order(p, start));
    std::vector<int> orig = b.cur;
    const Ctx ctx(s, all_indices(s));
    for (std::size_t i = 0; i + 1 < b.cur.size(); ++i) {
        const int x = b.cur[i], y = b.cur[i + 1];
        if (ctx.layer_of(x) == 0 && ctx.layer_of(y) == 0 && !ctx.level_adjacent(x, y))
            throw PlanError("path has a chord");
    }
    if (ctx.layer_of(b.cur[1]) == 0)
        throw PlanError("first edge must leave the outer hull");
    if (level0_count(s, b.cur, 0, ctx) >= static_cast<int>(ctx.layers[0].size()) - 1)
        throw PlanError("outer level-edge count is already maximal");
    k_step_run(b, 0, ctx);
    return finish(std::move(b), std::move(orig));
}

FlipPlan to_suffix_independent_plan(const PathOnSet& p, int start) {
    const PointSet& s = p.set();
    require_two_layers(s);
    if (!s.is_outer(start)) throw PlanError("start point is not outer");
    Builder b(s, rooted_order(p, start));
    std::vector<int> orig = b.cur;
    make_ssi(b, 0);
    return finish(std::move(b), std::move(orig));
}

FlipPlan two_layer_fixed_start_plan(const PathOnSet& p1, const PathOnSet& p2,
                                    int start) {
    const PointSet& s = p1.set();
    require_two_layers(s);
    if (!s.is_outer(start)) throw PlanError("start point is not outer");
    Builder b(s, rooted_order(p1, start));
    std::vector<int> orig = b.cur;
    fixed_connect(b, 0, rooted_order(p2, start));
    return finish(std::move(b), std::move(orig));
}

FlipPlan two_layer_plan(const PathOnSet& p1, const PathOnSet& p2) {
    const PointSet& s = p1.set();
    require_two_layers(s);
    if (canonical_free(p1.order()) == canonical_free(p2.order()))
        return FlipPlan{p1.order(), {}};

    Builder b1(s, p1.order());
    Builder b2(s, p2.order());
    std::vector<int> orig = b1.cur;
    escape_to_outer(b1);
    escape_to_outer(b2);
    orient_outer_front(b1);
    orient_outer_front(b2);
    const int s1 = b1.cur.front();
    const int s2 = b2.cur.front();
    if (s1 == s2) {
        fixed_connect(b1, 0, b2.cur);
    } else {
        std::vector<int> h = ssi_seq(s, all_indices(s), s1, s2);
        fixed_connect(b1, 0, h);
        std::vector<int> rev(h.rbegin(), h.rend());
        fixed_connect(b2, 0, rev);
    }
    if (canonical_free(b1.cur) != canonical_free(b2.cur))
        throw PlanError("internal: the two sides did not meet");
    for (auto it = b2.steps.rbegin(); it != b2.steps.rend(); ++it) b1.emit(inverse(*it));
    if (canonical_free(b1.cur) != canonical_free(p2.order()))
        throw PlanError("internal: free routing missed the target");
    return finish(std::move(b1), std::move(orig));
}

}  // namespace planepath
