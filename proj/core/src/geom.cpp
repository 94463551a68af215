#include "planepath/geom.hpp"

#include <algorithm>
#include <numeric>

namespace planepath {

Coord cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const Coord d = cross(p, q, r);
    if (d > 0) return Orientation::CounterClockwise;
    if (d < 0) return Orientation::ClockWise;
    return Orientation::Collinear;
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
    // assumes a, b, p collinear
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == c || a == d || b == c || b == d) return false;

    const Coord o1 = cross(a, b, c);
    const Coord o2 = cross(a, b, d);
    const Coord o3 = cross(c, d, a);
    const Coord o4 = cross(c, d, b);

    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 &&
        o3 != 0 && o4 != 0)
        return true;

    // Collinear contacts; unreachable for sets in general position but kept
    // so the predicate is total.
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool in_general_position(std::span<const Point> points) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) return false;
            for (int k = j + 1; k < n; ++k)
                if (orientation(points[i], points[j], points[k]) == Orientation::Collinear)
                    return false;
        }
    return true;
}

std::vector<int> convex_hull(std::span<const Point> points, std::span<const int> subset) {
    std::vector<int> idx(subset.begin(), subset.end());
    const int m = static_cast<int>(idx.size());
    if (m <= 2) {
        std::sort(idx.begin(), idx.end());
        return idx;
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Point &pa = points[a], &pb = points[b];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });

    // Andrew's monotone chain; ccw output.
    std::vector<int> hull(2 * m);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= 0)
            --k;
        hull[k++] = idx[i];
    }
    for (int i = m - 2, lo = k + 1; i >= 0; --i) {
        while (k >= lo && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= 0)
            --k;
        hull[k++] = idx[i];
    }
    hull.resize(k - 1);

    const auto mn = std::min_element(hull.begin(), hull.end());
    std::rotate(hull.begin(), mn, hull.end());
    return hull;
}

std::vector<int> convex_hull(std::span<const Point> points) {
    std::vector<int> all(points.size());
    std::iota(all.begin(), all.end(), 0);
    return convex_hull(points, all);
}

std::vector<std::vector<int>> convex_layers_of(std::span<const Point> points,
                                               std::span<const int> subset) {
    std::vector<std::vector<int>> layers;
    std::vector<int> rest(subset.begin(), subset.end());
    while (!rest.empty()) {
        std::vector<int> hull = convex_hull(points, rest);
        std::vector<int> next;
        for (int i : rest)
            if (std::find(hull.begin(), hull.end(), i) == hull.end()) next.push_back(i);
        layers.push_back(std::move(hull));
        rest = std::move(next);
    }
    return layers;
}

bool strictly_inside_hull(std::span<const Point> points, std::span<const int> hull_ccw,
                          const Point& p) {
    const int h = static_cast<int>(hull_ccw.size());
    if (h < 3) return false;
    for (int i = 0; i < h; ++i) {
        const Point& a = points[hull_ccw[i]];
        const Point& b = points[hull_ccw[(i + 1) % h]];
        if (cross(a, b, p) <= 0) return false;
    }
    return true;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const Point& p = pt(i);
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit)
            throw std::invalid_argument("coordinate out of range at index " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pt(i) == pt(j))
                throw GeneralPositionError(i, j, j, "duplicate points " + std::to_string(i) +
                                                        " and " + std::to_string(j));
            for (int k = j + 1; k < n; ++k)
                if (orientation(pt(i), pt(j), pt(k)) == Orientation::Collinear)
                    throw GeneralPositionError(
                        i, j, k,
                        "collinear triple (" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + ")");
        }

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    layers_ = convex_layers_of(points_, all);
    layer_of_.assign(static_cast<std::size_t>(n), -1);
    pos_in_layer_.assign(static_cast<std::size_t>(n), -1);
    for (int li = 0; li < layer_count(); ++li)
        for (int p = 0; p < static_cast<int>(layers_[li].size()); ++p) {
            layer_of_[static_cast<std::size_t>(layers_[li][p])] = li;
            pos_in_layer_[static_cast<std::size_t>(layers_[li][p])] = p;
        }
}

bool PointSet::level_adjacent(int u, int v) const {
    if (layer_of(u) != layer_of(v)) return false;
    const auto& cyc = layers_[static_cast<std::size_t>(layer_of(u))];
    const int m = static_cast<int>(cyc.size());
    if (m == 2) return true;
    const int d = std::abs(pos_in_layer(u) - pos_in_layer(v));
    return d == 1 || d == m - 1;
}

std::pair<std::vector<int>, std::vector<int>> side_split(const PointSet& s, int layer,
                                                         int u, int v, int w) {
    if (u == v) throw std::invalid_argument("side_split: u == v");
    if (w == u || w == v || orientation(s.pt(u), s.pt(v), s.pt(w)) == Orientation::Collinear)
        throw std::invalid_argument("side_split: reference point on line uv");
    const Orientation ref = orientation(s.pt(u), s.pt(v), s.pt(w));
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int i : s.layers()[static_cast<std::size_t>(layer)]) {
        if (i == u || i == v) continue;
        (orientation(s.pt(u), s.pt(v), s.pt(i)) == ref ? out.first : out.second).push_back(i);
    }
    return out;
}

std::vector<int> hull_of(const PointSet& s, std::span<const int> subset) {
    return convex_hull(s.points(), subset);
}

std::vector<std::vector<int>> layers_of(const PointSet& s, std::span<const int> subset) {
    return convex_layers_of(s.points(), subset);
}

bool subset_convex(const PointSet& s, std::span<const int> subset) {
    return hull_of(s, subset).size() == subset.size();
}

}  // namespace planepath
