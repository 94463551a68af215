#include "planepath/flip.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace planepath {

const char* to_string(FlipError e) {
    switch (e) {
        case FlipError::None: return "ok";
        case FlipError::EdgeNotPresent: return "EdgeNotPresent";
        case FlipError::EdgeAlreadyPresent: return "EdgeAlreadyPresent";
        case FlipError::NotAPath: return "NotAPath";
        case FlipError::CrossingEdges: return "CrossingEdges";
    }
    return "?";
}

FlipOutcome apply_flip_order(const PointSet& s, std::span<const int> order, const Flip& f) {
    const int n = static_cast<int>(order.size());
    const Edge rem = make_edge(f.removed.first, f.removed.second);
    const Edge add = make_edge(f.added.first, f.added.second);

    std::set<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.insert(make_edge(order[i], order[i + 1]));
    if (!edges.count(rem)) return {std::nullopt, FlipError::EdgeNotPresent};
    if (edges.count(add) || add.first == add.second || rem == add)
        return {std::nullopt, FlipError::EdgeAlreadyPresent};
    edges.erase(rem);
    edges.insert(add);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(s.size()));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    int head = -1;
    for (int i : order) {
        const auto d = adj[static_cast<std::size_t>(i)].size();
        if (d > 2) return {std::nullopt, FlipError::NotAPath};
        if (d == 1 && head < 0) head = i;
    }
    if (head < 0) return {std::nullopt, FlipError::NotAPath};  // 2-regular: a cycle

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    int prev = -1, cur = head;
    while (true) {
        out.push_back(cur);
        int next = -1;
        for (int w : adj[static_cast<std::size_t>(cur)])
            if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(out.size()) != n) return {std::nullopt, FlipError::NotAPath};

    // Everything but the added edge was already pairwise non-crossing.
    for (const auto& [u, v] : edges)
        if (Edge{u, v} != add &&
            segments_cross(s.pt(add.first), s.pt(add.second), s.pt(u), s.pt(v)))
            return {std::nullopt, FlipError::CrossingEdges};

    return {std::move(out), FlipError::None};
}

PathOnSet apply_flip(const PathOnSet& p, const Flip& f) {
    FlipOutcome out = apply_flip_order(p.set(), p.order(), f);
    if (!out.order)
        throw std::invalid_argument(std::string("apply_flip: ") + to_string(out.error));
    std::vector<int> order = std::move(*out.order);
    if (order.back() == p.start() && order.front() != p.start())
        std::reverse(order.begin(), order.end());
    return PathOnSet(p.set(), std::move(order));
}

std::vector<Neighbor> neighbors(const PathOnSet& p) {
    const PointSet& s = p.set();
    const int n = p.size();
    std::vector<Neighbor> out;
    std::set<std::vector<int>> seen;
    std::set<Edge> present;
    for (auto [u, v] : p.edges()) present.insert(make_edge(u, v));

    for (const Edge& rem : present)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const Edge add{u, v};
                if (present.count(add)) continue;
                FlipOutcome r = apply_flip_order(s, p.order(), Flip{rem, add});
                if (!r.order) continue;
                std::vector<int> canon = canonical_free(*r.order);
                if (seen.insert(canon).second)
                    out.push_back(Neighbor{Flip{rem, add}, std::move(canon)});
            }
    return out;
}

std::vector<Neighbor> neighbors_fixed_start(const PathOnSet& p, int start) {
    if (p.start() != start && p.end() != start)
        throw std::invalid_argument("neighbors_fixed_start: start is not an endpoint");
    std::vector<int> order = p.order();
    if (order.front() != start) std::reverse(order.begin(), order.end());
    const PointSet& s = p.set();
    const int n = p.size();
    const int t = order.back();

    std::vector<Neighbor> out;
    std::set<std::vector<int>> seen;
    std::set<Edge> present;
    for (int i = 0; i + 1 < n; ++i) present.insert(make_edge(order[i], order[i + 1]));

    for (int w = 0; w < n; ++w) {
        if (w == t) continue;
        const Edge add = make_edge(t, w);
        if (present.count(add)) continue;
        for (const Edge& rem : present) {
            FlipOutcome r = apply_flip_order(s, order, Flip{rem, add});
            if (!r.order) continue;
            std::vector<int>& res = *r.order;
            if (res.front() != start && res.back() != start) continue;
            if (res.front() != start) std::reverse(res.begin(), res.end());
            if (seen.insert(res).second) out.push_back(Neighbor{Flip{rem, add}, std::move(res)});
        }
    }
    return out;
}

ReplayResult replay_plan(const PointSet& s, const FlipPlan& plan) {
    ReplayResult rr;
    PathError perr;
    auto p = validate_path(s, plan.start, &perr);
    if (!p) {
        rr.message = "start is not a valid plane spanning path";
        return rr;
    }
    std::vector<int> cur = plan.start;
    rr.states.push_back(cur);
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        FlipOutcome out = apply_flip_order(s, cur, plan.steps[i]);
        if (!out.order) {
            rr.message = "step " + std::to_string(i) + " failed: " + to_string(out.error);
            return rr;
        }
        cur = std::move(*out.order);
        // keep the original start as the root whenever it is still an endpoint
        if (cur.back() == plan.start.front() && cur.front() != plan.start.front())
            std::reverse(cur.begin(), cur.end());
        rr.states.push_back(cur);
    }
    rr.ok = true;
    return rr;
}

FlipPlan reversed_plan(const PointSet& s, const FlipPlan& plan) {
    ReplayResult rr = replay_plan(s, plan);
    if (!rr.ok) throw std::invalid_argument("reversed_plan: " + rr.message);
    FlipPlan rev;
    rev.start = rr.states.back();
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it)
        rev.steps.push_back(inverse(*it));
    return rev;
}

}  // namespace planepath
