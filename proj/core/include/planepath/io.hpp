#ifndef PLANEPATH_IO_HPP
#define PLANEPATH_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepath/explore.hpp"

namespace planepath {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleLayerSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text form: first line n, then n lines "x y". JSON form: array of [x, y]
// pairs. Both reject sets that are not in general position, naming the
// offending indices.
PointSet read_point_set_text(std::istream& in);
PointSet read_point_set_text(const std::string& text);
std::string write_point_set_text(const PointSet& s);
PointSet read_point_set_json(const std::string& text);
std::string write_point_set_json(const PointSet& s);

// Path text form: comma-separated 0-based indices, e.g. "0,1,2,3".
// JSON form: array of integers.
std::vector<int> parse_path_text(const std::string& text);
std::string format_path_text(const std::vector<int>& order);
std::vector<int> parse_path_json(const std::string& text);
std::string format_path_json(const std::vector<int>& order);

// Plan form: { "start": [indices], "steps": [ {"remove":[u,v],"add":[u,w]},
// ... ] }. With narrate, each step additionally carries its "note".
std::string plan_to_json(const FlipPlan& plan, bool narrate = false);
FlipPlan plan_from_json(const std::string& text);

// DOT export: vertex label = canonical sequence; vertices that are onion
// spirals carry a `spiral` attribute.
std::string graph_to_dot(const PointSet& s, const FlipGraph& g);
std::string graph_adjacency_json(const FlipGraph& g);
// {vertices, edges, components, diameter, radius, centers}; the distance
// fields are null when the graph is disconnected.
std::string graph_metrics_json(const FlipGraph& g);

struct GenSpec {
    std::uint64_t seed = 0;
    int n = 0;
    // Outermost first; every entry except the last must be >= 3.
    std::optional<std::vector<int>> layer_profile;
    int max_attempts = 20000;
};

// Deterministic per spec: the same GenSpec always yields the same set.
// Coordinates lie in [-10^4, 10^4]^2; layered specs are rejection-sampled
// from concentric radius bands until the exact layer profile appears.
PointSet generate_point_set(const GenSpec& spec);

// Static SVG of the set with an optional path; `highlight` marks one edge.
std::string render_svg(const PointSet& s, const std::vector<int>& order,
                       std::optional<Edge> highlight = std::nullopt);
// One frame per plan state; frame i>0 highlights the edge added by step i.
std::vector<std::string> render_plan_frames(const PointSet& s, const FlipPlan& plan);

}  // namespace planepath

#endif
