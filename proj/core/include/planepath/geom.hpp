#ifndef PLANEPATH_GEOM_HPP
#define PLANEPATH_GEOM_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace planepath {

// Coordinates are exact integers. All predicates are evaluated with 64-bit
// integer arithmetic; PointSet rejects coordinates outside +-kCoordLimit so
// that every 3-point determinant fits into a signed 64-bit value.
using Coord = std::int64_t;
inline constexpr Coord kCoordLimit = (Coord{1} << 30) - 1;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation : int {
    ClockWise = -1,
    Collinear = 0,
    CounterClockwise = 1,
};

// Sign of det(q-p, r-p).
Orientation orientation(const Point& p, const Point& q, const Point& r);
Coord cross(const Point& p, const Point& q, const Point& r);

// True iff the closed segments ab and cd share a point that is not a common
// endpoint. Segments that meet only in a shared endpoint do not cross.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// All points distinct and no collinear triple (brute force over triples).
bool in_general_position(std::span<const Point> points);

struct GeneralPositionError : std::invalid_argument {
    // Offending indices: a==b for a duplicate pair, otherwise a collinear triple.
    int a, b, c;
    GeneralPositionError(int a, int b, int c, const std::string& what)
        : std::invalid_argument(what), a(a), b(b), c(c) {}
};

// Counterclockwise hull cycle of the given subset, rotated so the smallest
// participating index comes first. Interior points are omitted.
std::vector<int> convex_hull(std::span<const Point> points, std::span<const int> subset);
std::vector<int> convex_hull(std::span<const Point> points);

// Repeated hull peeling of a subset; concatenation of the result partitions
// the subset. Each layer is a ccw hull cycle.
std::vector<std::vector<int>> convex_layers_of(std::span<const Point> points,
                                               std::span<const int> subset);

// True iff p lies strictly inside the ccw hull cycle (false on or outside;
// cycles of fewer than 3 vertices have no interior).
bool strictly_inside_hull(std::span<const Point> points, std::span<const int> hull_ccw,
                          const Point& p);

// A point set in general position with its convex-layer decomposition
// computed once at construction. Immutable.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& pt(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

    // Layer cycles, each counterclockwise; layers()[0] is the outer hull.
    const std::vector<std::vector<int>>& layers() const { return layers_; }
    int layer_count() const { return static_cast<int>(layers_.size()); }
    int layer_of(int i) const { return layer_of_[static_cast<std::size_t>(i)]; }
    bool is_outer(int i) const { return layer_of(i) == 0; }
    bool convex_position() const { return layer_count() <= 1; }

    // u and v adjacent on the hull cycle of their (common) layer.
    bool level_adjacent(int u, int v) const;
    // Position of i within its layer cycle.
    int pos_in_layer(int i) const { return pos_in_layer_[static_cast<std::size_t>(i)]; }

private:
    std::vector<Point> points_;
    std::vector<std::vector<int>> layers_;
    std::vector<int> layer_of_;
    std::vector<int> pos_in_layer_;
};

// Splits L_i minus {u,v} by the line uv; first = points on w's side.
// Throws std::invalid_argument if w gives no usable reference side.
std::pair<std::vector<int>, std::vector<int>> side_split(const PointSet& s, int layer,
                                                         int u, int v, int w);

// Convenience wrappers over index subsets of a PointSet.
std::vector<int> hull_of(const PointSet& s, std::span<const int> subset);
std::vector<std::vector<int>> layers_of(const PointSet& s, std::span<const int> subset);
bool subset_convex(const PointSet& s, std::span<const int> subset);

}  // namespace planepath

#endif
