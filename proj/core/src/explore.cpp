#include "planepath/explore.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace planepath {

namespace {

// Backtracking over prefixes with incremental crossing checks against the
// partial path only.
void extend(const PointSet& s, std::vector<int>& prefix, std::vector<char>& used,
            std::vector<std::vector<int>>& out, bool rooted) {
    const int n = s.size();
    if (static_cast<int>(prefix.size()) == n) {
        if (rooted || !std::lexicographical_compare(prefix.rbegin(), prefix.rend(),
                                                    prefix.begin(), prefix.end()))
            out.push_back(prefix);
        return;
    }
    const int tail = prefix.back();
    for (int nxt = 0; nxt < n; ++nxt) {
        if (used[static_cast<std::size_t>(nxt)]) continue;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < prefix.size() && ok; ++i)
            if (segments_cross(s.pt(tail), s.pt(nxt), s.pt(prefix[i]), s.pt(prefix[i + 1])))
                ok = false;
        if (!ok) continue;
        prefix.push_back(nxt);
        used[static_cast<std::size_t>(nxt)] = 1;
        extend(s, prefix, used, out, rooted);
        used[static_cast<std::size_t>(nxt)] = 0;
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_paths(const PointSet& s, int cap) {
    if (s.size() > cap)
        throw CapExceededError("enumerate_paths: n=" + std::to_string(s.size()) +
                               " exceeds cap " + std::to_string(cap));
    std::vector<std::vector<int>> out;
    std::vector<char> used(static_cast<std::size_t>(s.size()), 0);
    std::vector<int> prefix;
    for (int start = 0; start < s.size(); ++start) {
        prefix = {start};
        used[static_cast<std::size_t>(start)] = 1;
        extend(s, prefix, used, out, /*rooted=*/false);
        used[static_cast<std::size_t>(start)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> enumerate_paths_fixed_start(const PointSet& s, int start,
                                                          int cap) {
    if (s.size() > cap)
        throw CapExceededError("enumerate_paths_fixed_start: n=" + std::to_string(s.size()) +
                               " exceeds cap " + std::to_string(cap));
    std::vector<std::vector<int>> out;
    std::vector<char> used(static_cast<std::size_t>(s.size()), 0);
    std::vector<int> prefix = {start};
    used[static_cast<std::size_t>(start)] = 1;
    extend(s, prefix, used, out, /*rooted=*/true);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t FlipGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency) twice += a.size();
    return twice / 2;
}

int FlipGraph::vertex_id(const std::vector<int>& order) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), order);
    if (it == vertices.end() || *it != order) return -1;
    return static_cast<int>(it - vertices.begin());
}

FlipGraph build_flip_graph(const PointSet& s, GraphMode mode, int fixed_start, int cap) {
    FlipGraph g;
    g.mode = mode;
    g.fixed_start = fixed_start;
    if (cap < 0) cap = (mode == GraphMode::Free) ? kDefaultFreeCap : kDefaultFixedCap;
    g.vertices = (mode == GraphMode::Free)
                     ? enumerate_paths(s, cap)
                     : enumerate_paths_fixed_start(s, fixed_start, cap);

    g.adjacency.assign(g.vertices.size(), {});
    std::size_t edges = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        PathOnSet p(s, g.vertices[v]);
        const auto nbrs = (mode == GraphMode::Free) ? neighbors(p)
                                                    : neighbors_fixed_start(p, fixed_start);
        for (const Neighbor& nb : nbrs) {
            const int id = g.vertex_id(mode == GraphMode::Free ? canonical_free(nb.order)
                                                               : nb.order);
            if (id < 0)
                throw std::logic_error("flip graph vertex set not closed under flips");
            g.adjacency[v].push_back(id);
            if (++edges > kEdgeGuard)
                throw CapExceededError("flip graph exceeds the edge guard");
        }
        std::sort(g.adjacency[v].begin(), g.adjacency[v].end());
    }
    return g;
}

std::vector<std::vector<int>> components(const FlipGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> members;
        std::deque<int> queue{v};
        comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            members.push_back(u);
            for (int w : g.adjacency[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

std::vector<int> bfs_depths(const FlipGraph& g, int src) {
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.adjacency[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

EccentricityProfile eccentricity_profile(const FlipGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    if (n == 0) return {};
    EccentricityProfile prof;
    prof.radius = -1;
    for (int v = 0; v < n; ++v) {
        const std::vector<int> dist = bfs_depths(g, v);
        int ecc = 0;
        for (int d : dist) {
            if (d < 0) throw DisconnectedError("eccentricity_profile: graph is disconnected");
            ecc = std::max(ecc, d);
        }
        prof.diameter = std::max(prof.diameter, ecc);
        if (prof.radius < 0 || ecc < prof.radius) {
            prof.radius = ecc;
            prof.centers = {v};
        } else if (ecc == prof.radius) {
            prof.centers.push_back(v);
        }
    }
    return prof;
}

namespace {

struct SearchNode {
    int dist = 0;
    std::vector<int> parent;  // canonical order of the predecessor
    Flip via;
};

using Visited = std::map<std::vector<int>, SearchNode>;

std::vector<Neighbor> gen_neighbors(const PointSet& s, const std::vector<int>& order,
                                    GraphMode mode, int root) {
    PathOnSet p(s, order);
    if (mode == GraphMode::Free) return neighbors(p);
    return neighbors_fixed_start(p, root);
}

}  // namespace

std::optional<DistanceResult> flip_distance(const PointSet& s, const std::vector<int>& from,
                                            const std::vector<int>& to, GraphMode mode) {
    const int root = from.front();
    if (mode == GraphMode::FixedStart && to.front() != root)
        throw std::invalid_argument("flip_distance: fixed-start paths must share the root");
    auto canon = [&](const std::vector<int>& o) {
        return mode == GraphMode::Free ? canonical_free(o) : o;
    };
    const std::vector<int> a = canon(from), b = canon(to);
    if (a == b) return DistanceResult{0, FlipPlan{from, {}}};

    Visited fwd, bwd;
    fwd[a] = {};
    bwd[b] = {};
    std::deque<std::vector<int>> qf{a}, qb{b};
    int lf = 0, lb = 0;  // completed levels per side
    int best = -1;
    std::vector<int> meet;

    // Expands one full breadth level. Every node common to both searches is
    // detected at the moment the second side inserts it, with its final BFS
    // distances on both sides; any later meet costs at least lf+lb+2.
    auto expand = [&](std::deque<std::vector<int>>& q, Visited& mine, Visited& other,
                      int level) {
        std::deque<std::vector<int>> next;
        for (const auto& cur : q) {
            for (const Neighbor& nb : gen_neighbors(s, cur, mode, root)) {
                std::vector<int> key = canon(nb.order);
                if (mine.count(key)) continue;
                mine[key] = SearchNode{level, cur, nb.flip};
                const auto hit = other.find(key);
                if (hit != other.end()) {
                    const int total = level + hit->second.dist;
                    if (best < 0 || total < best) {
                        best = total;
                        meet = key;
                    }
                }
                next.push_back(std::move(key));
            }
        }
        return next;
    };

    while (!qf.empty() && !qb.empty()) {
        if (best >= 0 && lf + lb + 1 >= best) break;
        if (qf.size() <= qb.size()) {
            qf = expand(qf, fwd, bwd, lf + 1);
            ++lf;
        } else {
            qb = expand(qb, bwd, fwd, lb + 1);
            ++lb;
        }
    }
    if (best < 0) return std::nullopt;

    // forward chain: from -> meet
    std::vector<Flip> steps;
    for (std::vector<int> cur = meet; cur != a;) {
        const SearchNode& n = fwd.at(cur);
        steps.push_back(n.via);
        cur = n.parent;
    }
    std::reverse(steps.begin(), steps.end());
    // backward chain: meet -> to, inverting the flips discovered from `to`
    for (std::vector<int> cur = meet; cur != b;) {
        const SearchNode& n = bwd.at(cur);
        steps.push_back(inverse(n.via));
        cur = n.parent;
    }
    DistanceResult res;
    res.distance = static_cast<int>(steps.size());
    res.plan = FlipPlan{from, std::move(steps)};
    return res;
}

}  // namespace planepath
