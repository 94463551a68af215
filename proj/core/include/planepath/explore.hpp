#ifndef PLANEPATH_EXPLORE_HPP
#define PLANEPATH_EXPLORE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "planepath/flip.hpp"

namespace planepath {

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultFreeCap = 10;
inline constexpr int kDefaultFixedCap = 12;
inline constexpr std::size_t kEdgeGuard = std::size_t{1} << 31;

// Every plane spanning path, one canonical representative each, sorted.
std::vector<std::vector<int>> enumerate_paths(const PointSet& s, int cap = kDefaultFreeCap);

// Every plane spanning path with endpoint `start`, rooted at it, sorted.
std::vector<std::vector<int>> enumerate_paths_fixed_start(const PointSet& s, int start,
                                                          int cap = kDefaultFixedCap);

enum class GraphMode { Free, FixedStart };

struct FlipGraph {
    GraphMode mode = GraphMode::Free;
    int fixed_start = -1;
    std::vector<std::vector<int>> vertices;  // canonical orders, lexicographically sorted
    std::vector<std::vector<int>> adjacency;

    std::size_t edge_count() const;
    // Index of a path's canonical form, or -1.
    int vertex_id(const std::vector<int>& order) const;
};

FlipGraph build_flip_graph(const PointSet& s, GraphMode mode, int fixed_start = -1,
                           int cap = -1);

std::vector<std::vector<int>> components(const FlipGraph& g);

struct EccentricityProfile {
    int diameter = 0;
    int radius = 0;
    std::vector<int> centers;  // vertex ids of minimum eccentricity
};

struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EccentricityProfile eccentricity_profile(const FlipGraph& g);

struct DistanceResult {
    int distance = 0;
    FlipPlan plan;  // witness, starting at the first path
};

// Shortest flip sequence via bidirectional search over implicitly generated
// neighbors; nullopt when the two paths are in different components.
std::optional<DistanceResult> flip_distance(const PointSet& s, const std::vector<int>& from,
                                            const std::vector<int>& to, GraphMode mode);

}  // namespace planepath

#endif
