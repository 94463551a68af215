#include "planepath/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace planepath {

std::vector<std::pair<int, int>> level_edges(const PointSet& s) {
    std::vector<std::pair<int, int>> out;
    for (const auto& cyc : s.layers()) {
        const int m = static_cast<int>(cyc.size());
        if (m < 2) continue;
        const int limit = (m == 2) ? 1 : m;  // avoid the duplicate wrap edge
        for (int i = 0; i < limit; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % m];
            out.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return out;
}

EdgeClass classify_edge(const PointSet& s, int u, int v) {
    const int lu = s.layer_of(u), lv = s.layer_of(v);
    EdgeClass c;
    if (lu == lv) {
        c.layer = lu;
        if (s.level_adjacent(u, v))
            c.kind = EdgeKind::Level;
        else
            c.kind = (lu == 0) ? EdgeKind::Chord : EdgeKind::InnerChord;
        return c;
    }
    c.kind = (lu < lv) ? EdgeKind::Inward : EdgeKind::Outward;
    for (const auto& [a, b] : level_edges(s))
        if (segments_cross(s.pt(u), s.pt(v), s.pt(a), s.pt(b))) {
            c.cutting = true;
            break;
        }
    return c;
}

bool plane_sequence_ok(const PointSet& s, std::span<const int> seq, PathError* err) {
    const int m = static_cast<int>(seq.size());
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        if (err) err->kind = PathError::Kind::NotAPermutation;
        return false;
    }
    for (int i = 0; i + 1 < m; ++i)
        for (int j = i + 2; j + 1 < m; ++j)
            if (segments_cross(s.pt(seq[i]), s.pt(seq[i + 1]), s.pt(seq[j]), s.pt(seq[j + 1]))) {
                if (err) {
                    err->kind = PathError::Kind::CrossingEdges;
                    err->edges = {seq[i], seq[i + 1], seq[j], seq[j + 1]};
                }
                return false;
            }
    return true;
}

std::optional<PathOnSet> validate_path(const PointSet& s, std::vector<int> order,
                                       PathError* err) {
    const int n = s.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool perm = static_cast<int>(order.size()) == n;
    if (perm)
        for (int i : order) {
            if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)]) {
                perm = false;
                break;
            }
            seen[static_cast<std::size_t>(i)] = 1;
        }
    if (!perm) {
        if (err) err->kind = PathError::Kind::NotAPermutation;
        return std::nullopt;
    }
    if (!plane_sequence_ok(s, order, err)) return std::nullopt;
    PathOnSet p;
    p.set_ = &s;
    p.order_ = std::move(order);
    return p;
}

PathOnSet::PathOnSet(const PointSet& s, std::vector<int> order) {
    PathError err;
    auto p = validate_path(s, std::move(order), &err);
    if (!p) {
        if (err.kind == PathError::Kind::NotAPermutation)
            throw std::invalid_argument("path order is not a permutation of the point set");
        throw std::invalid_argument("path has crossing edges (" +
                                    std::to_string(err.edges[0]) + "," +
                                    std::to_string(err.edges[1]) + ") x (" +
                                    std::to_string(err.edges[2]) + "," +
                                    std::to_string(err.edges[3]) + ")");
    }
    *this = *p;
}

bool PathOnSet::has_edge(int u, int v) const {
    for (int i = 0; i + 1 < size(); ++i) {
        int a = order_[static_cast<std::size_t>(i)], b = order_[static_cast<std::size_t>(i) + 1];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> PathOnSet::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i + 1 < size(); ++i) out.emplace_back(at(i), at(i + 1));
    return out;
}

PathOnSet PathOnSet::reversed() const {
    PathOnSet p(*this);
    std::reverse(p.order_.begin(), p.order_.end());
    return p;
}

bool sees(const PointSet& s, std::span<const int> order, int u, int v) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (segments_cross(s.pt(u), s.pt(v), s.pt(order[i]), s.pt(order[i + 1]))) return false;
    return true;
}

bool sees(const PathOnSet& p, int u, int v) { return sees(p.set(), p.order(), u, v); }

int level_count(const PathOnSet& p, int layer) {
    int c = 0;
    for (auto [u, v] : p.edges()) {
        EdgeClass e = classify_edge(p.set(), u, v);
        if (e.kind == EdgeKind::Level && e.layer == layer) ++c;
    }
    return c;
}

int cutting_count(const PathOnSet& p) {
    int c = 0;
    for (auto [u, v] : p.edges())
        if (classify_edge(p.set(), u, v).cutting) ++c;
    return c;
}

bool is_layer_monotone(const PathOnSet& p) {
    for (int i = 0; i + 1 < p.size(); ++i)
        if (p.set().layer_of(p.at(i)) > p.set().layer_of(p.at(i + 1))) return false;
    return true;
}

bool is_suffix_independent(const PointSet& s, std::span<const int> order) {
    const int m = static_cast<int>(order.size());
    for (int a = 1; a < m; ++a) {
        std::vector<int> suffix(order.begin() + a, order.end());
        std::vector<int> hull = convex_hull(s.points(), suffix);
        if (hull.size() < 3) continue;
        for (int i = 0; i < a; ++i)
            if (strictly_inside_hull(s.points(), hull, s.pt(order[i]))) return false;
    }
    return true;
}

bool is_suffix_independent(const PathOnSet& p, bool reversed) {
    if (!reversed) return is_suffix_independent(p.set(), p.order());
    std::vector<int> rev(p.order().rbegin(), p.order().rend());
    return is_suffix_independent(p.set(), rev);
}

bool is_strongly_suffix_independent(const PathOnSet& p) {
    return is_suffix_independent(p, false) && is_suffix_independent(p, true);
}

int li_suffix_begin(const PointSet& s, std::span<const int> order, int layer) {
    int b = static_cast<int>(order.size());
    while (b > 0 && s.layer_of(order[static_cast<std::size_t>(b) - 1]) >= layer) --b;
    return b;
}

std::vector<int> li_suffix(const PathOnSet& p, int layer) {
    const int b = li_suffix_begin(p.set(), p.order(), layer);
    return {p.order().begin() + b, p.order().end()};
}

std::vector<int> canonical_free(std::span<const int> order) {
    std::vector<int> fwd(order.begin(), order.end());
    std::vector<int> rev(order.rbegin(), order.rend());
    return std::min(fwd, rev);
}

}  // namespace planepath
