#ifndef PLANEPATH_FLIP_HPP
#define PLANEPATH_FLIP_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planepath/path.hpp"

namespace planepath {

using Edge = std::pair<int, int>;  // undirected; normalized to first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Flip {
    Edge removed;
    Edge added;
    // Optional audit note filled by planners (--narrate); ignored by equality.
    std::string note;

    friend bool operator==(const Flip& a, const Flip& b) {
        return a.removed == b.removed && a.added == b.added;
    }
};

inline Flip inverse(const Flip& f) { return Flip{f.added, f.removed, f.note}; }

struct FlipPlan {
    std::vector<int> start;
    std::vector<Flip> steps;
};

enum class FlipError {
    None,
    EdgeNotPresent,
    EdgeAlreadyPresent,
    NotAPath,       // cycle, disconnected, or a degree-3 vertex
    CrossingEdges,
};

const char* to_string(FlipError e);

struct FlipOutcome {
    std::optional<std::vector<int>> order;  // endpoint-rooted; orientation unspecified
    FlipError error = FlipError::None;
};

FlipOutcome apply_flip_order(const PointSet& s, std::span<const int> order, const Flip& f);

// Throwing wrapper; result is oriented to keep the original start when the
// start point is still an endpoint.
PathOnSet apply_flip(const PathOnSet& p, const Flip& f);

struct Neighbor {
    Flip flip;
    std::vector<int> order;  // canonical (free) or s-rooted (fixed-start)
};

// All valid single flips, deduplicated by canonical form of the result.
std::vector<Neighbor> neighbors(const PathOnSet& p);

// Flips whose added edge is incident to the current end and whose result
// still has s as an endpoint; results rooted at s.
std::vector<Neighbor> neighbors_fixed_start(const PathOnSet& p, int s);

struct ReplayResult {
    bool ok = false;
    std::string message;
    // states[0] is the start order, states[i] the order after step i.
    std::vector<std::vector<int>> states;
};

// Applies the plan step by step, validating each intermediate path.
ReplayResult replay_plan(const PointSet& s, const FlipPlan& plan);

// Undoes the plan: starts at its final path and applies the inverted steps
// in reverse order. Throws if the input plan does not replay.
FlipPlan reversed_plan(const PointSet& s, const FlipPlan& plan);

}  // namespace planepath

#endif
