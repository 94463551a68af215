#ifndef PLANEPATH_PLAN_HPP
#define PLANEPATH_PLAN_HPP

#include <stdexcept>

#include "planepath/flip.hpp"

namespace planepath {

// Raised when a planner precondition fails or a construction step cannot be
// carried out (the latter indicates a defect and is surfaced, never hidden).
struct PlanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Direction { Clockwise, CounterClockwise };

// Onion spiral from an outer point: repeatedly step to the d-adjacent outer
// point of the not-yet-consumed set. Layer-monotone by construction.
PathOnSet spiral(const PointSet& s, int start, Direction d);

// Convex sets only. With hull order start=v0,v1,...,v_{n-1} counterclockwise,
// the ccw zigzag is v0,v1,v_{n-1},v2,v_{n-2},...; cw is the mirror image.
PathOnSet zigzag(const PointSet& s, int start, Direction d);

// Convex sets, path with endpoint `start`. At most n-3 flips; each one adds
// the hull edge at the current end that is missing from the path. Ends at one
// of the two hull walks from `start`.
FlipPlan convex_to_spiral_plan(const PathOnSet& p, int start);

// Convex sets; route p1 to p2 through the hull walks. At most 2n-5 flips.
FlipPlan convex_pair_plan(const PathOnSet& p1, const PathOnSet& p2, int start);

// A path between two outer points whose every suffix, in both orientations,
// is independent of the corresponding prefix. Built from a half-plane sweep
// around `from` followed by a linear sweep towards `to`.
PathOnSet strongly_ssi_path(const PointSet& s, int from, int to);

// Connects two suffix-independent paths with common outer start; every
// intermediate path stays suffix-independent.
FlipPlan ssi_connect_plan(const PointSet& s, int start, const PathOnSet& p1,
                          const PathOnSet& p2);

// Given an independent suffix X = P[a,t] over point set A and an earlier path
// edge uv bounding an empty pocket attached to conv(A), flips P to a path
// that ends at the predecessor of a. Adds edges inside conv(A+{u,v}) only.
FlipPlan convex_region_flip_plan(const PathOnSet& p, int a, Edge uv);

// One improvement round for chord-free paths on <=2-layer sets whose first
// edge leaves the outer hull: raises the outer level-edge count when the path
// ends outside, otherwise moves the end to the outer hull keeping that count.
FlipPlan k_property_step(const PathOnSet& p, int start);

// Flips a fixed-start path on a <=2-layer set to a suffix-independent path.
FlipPlan to_suffix_independent_plan(const PathOnSet& p, int start);

// Connects any two fixed-start paths on a <=2-layer set with outer start.
FlipPlan two_layer_fixed_start_plan(const PathOnSet& p1, const PathOnSet& p2,
                                    int start);

// Connects any two paths on a <=2-layer set (no fixed endpoint).
FlipPlan two_layer_plan(const PathOnSet& p1, const PathOnSet& p2);

}  // namespace planepath

#endif
