#ifndef PLANEPATH_PATH_HPP
#define PLANEPATH_PATH_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "planepath/geom.hpp"

namespace planepath {

enum class EdgeKind {
    Level,       // endpoints adjacent on the hull cycle of a common layer
    Chord,       // non-adjacent pair on L_0
    InnerChord,  // non-adjacent pair on a common layer >= 1
    Inward,      // layer(u) < layer(v), read along the directed edge uv
    Outward,     // layer(u) > layer(v)
};

struct EdgeClass {
    EdgeKind kind;
    int layer = -1;        // for Level / Chord / InnerChord
    bool cutting = false;  // inter-layer edge crossing some level edge of S
};

// Level edges of every layer, as index pairs (u < v).
std::vector<std::pair<int, int>> level_edges(const PointSet& s);

EdgeClass classify_edge(const PointSet& s, int u, int v);

struct PathError {
    enum class Kind { NotAPermutation, CrossingEdges };
    Kind kind;
    // For CrossingEdges: the two offending edges (u1,v1), (u2,v2).
    std::array<int, 4> edges{-1, -1, -1, -1};
};

// Distinct indices whose consecutive segments are pairwise non-crossing.
bool plane_sequence_ok(const PointSet& s, std::span<const int> seq, PathError* err = nullptr);

// A validated plane spanning path, stored directed.
class PathOnSet {
public:
    PathOnSet(const PointSet& s, std::vector<int> order);  // throws std::invalid_argument

    const PointSet& set() const { return *set_; }
    const std::vector<int>& order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }
    int at(int i) const { return order_[static_cast<std::size_t>(i)]; }
    int start() const { return order_.front(); }
    int end() const { return order_.back(); }

    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // directed along the path

    PathOnSet reversed() const;

private:
    friend std::optional<PathOnSet> validate_path(const PointSet&, std::vector<int>, PathError*);
    PathOnSet() = default;

    const PointSet* set_ = nullptr;
    std::vector<int> order_;
};

std::optional<PathOnSet> validate_path(const PointSet& s, std::vector<int> order,
                                       PathError* err = nullptr);

// u sees v iff segment uv crosses no path edge (shared endpoints allowed).
bool sees(const PathOnSet& p, int u, int v);
bool sees(const PointSet& s, std::span<const int> order, int u, int v);

int level_count(const PathOnSet& p, int layer);
int cutting_count(const PathOnSet& p);
bool is_layer_monotone(const PathOnSet& p);

// Every suffix of the directed sequence is independent: no earlier point lies
// strictly inside the convex hull of the remaining points.
bool is_suffix_independent(const PointSet& s, std::span<const int> order);
bool is_suffix_independent(const PathOnSet& p, bool reversed = false);
bool is_strongly_suffix_independent(const PathOnSet& p);

// Maximal suffix whose points all lie on layers >= layer; possibly empty.
std::vector<int> li_suffix(const PathOnSet& p, int layer);
// Start position of that suffix in the order (== size() when empty).
int li_suffix_begin(const PointSet& s, std::span<const int> order, int layer);

// Lexicographic minimum of the two orientations (undirected identity).
std::vector<int> canonical_free(std::span<const int> order);

}  // namespace planepath

#endif
