#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "planepath/explore.hpp"
#include "planepath/io.hpp"
#include "planepath/plan.hpp"

using namespace planepath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResourceCap = 4;

// PLANEPATH_CAP overrides the built-in enumeration caps when --cap is absent.
int default_cap(GraphMode mode) {
    if (const char* env = std::getenv("PLANEPATH_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ParseError("PLANEPATH_CAP is not an integer: " + std::string(env));
        }
    }
    return mode == GraphMode::Free ? kDefaultFreeCap : kDefaultFixedCap;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << text;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '[' || c == '{';
    }
    return false;
}

PointSet read_points(const std::string& path) {
    const std::string text = slurp(path);
    return looks_like_json(text) ? read_point_set_json(text) : read_point_set_text(text);
}

std::vector<int> parse_path_arg(const std::string& arg) {
    return looks_like_json(arg) ? parse_path_json(arg) : parse_path_text(arg);
}

struct Mode {
    GraphMode mode = GraphMode::Free;
    int fixed_start = -1;
};

Mode parse_mode(const std::string& text) {
    if (text == "free") return {GraphMode::Free, -1};
    if (text.rfind("fixed:", 0) == 0) {
        try {
            return {GraphMode::FixedStart, std::stoi(text.substr(6))};
        } catch (const std::exception&) {
        }
    }
    throw ParseError("mode must be 'free' or 'fixed:<start>', got '" + text + "'");
}

std::vector<int> parse_layers(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad layer count: '" + item + "'");
        }
    if (out.empty()) throw ParseError("empty layer list");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        try {
            return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        } catch (const std::exception&) {
        }
    }
    throw ParseError("range must be 'a..b', got '" + text + "'");
}

// --- subcommand bodies -----------------------------------------------------

struct GenArgs {
    std::uint64_t seed = 0;
    int n = 0;
    std::string layers;
    int attempts = 20000;
    std::string out = "-";
    std::string format = "text";
};

int run_gen(const GenArgs& a) {
    GenSpec spec;
    spec.seed = a.seed;
    spec.n = a.n;
    spec.max_attempts = a.attempts;
    if (!a.layers.empty()) spec.layer_profile = parse_layers(a.layers);
    const PointSet s = generate_point_set(spec);
    spill(a.out, a.format == "json" ? write_point_set_json(s) + "\n"
                                    : write_point_set_text(s));
    return kExitOk;
}

struct EnumArgs {
    std::string points;
    int fixed_start = -1;
    int cap = -1;
    bool count_only = false;
};

int run_enumerate(const EnumArgs& a) {
    const PointSet s = read_points(a.points);
    const GraphMode mode = a.fixed_start >= 0 ? GraphMode::FixedStart : GraphMode::Free;
    const int cap = a.cap >= 0 ? a.cap : default_cap(mode);
    const auto paths = mode == GraphMode::Free
                           ? enumerate_paths(s, cap)
                           : enumerate_paths_fixed_start(s, a.fixed_start, cap);
    std::cout << "count " << paths.size() << "\n";
    if (!a.count_only)
        for (const auto& p : paths) std::cout << format_path_text(p) << "\n";
    return kExitOk;
}

struct GraphArgs {
    std::string points;
    std::string mode = "free";
    std::string dot, metrics, adjacency;
    int cap = -1;
};

int run_graph(const GraphArgs& a) {
    const PointSet s = read_points(a.points);
    const Mode m = parse_mode(a.mode);
    const int cap = a.cap >= 0 ? a.cap : default_cap(m.mode);
    const FlipGraph g = build_flip_graph(s, m.mode, m.fixed_start, cap);
    const std::string metrics = graph_metrics_json(g);
    if (!a.dot.empty()) spill(a.dot, graph_to_dot(s, g));
    if (!a.adjacency.empty()) spill(a.adjacency, graph_adjacency_json(g));
    if (!a.metrics.empty())
        spill(a.metrics, metrics);
    else
        std::cout << metrics;
    return kExitOk;
}

struct DistanceArgs {
    std::string points;
    std::string from, to;
    std::string mode = "free";
    bool narrate = false;
};

int run_distance(const DistanceArgs& a) {
    const PointSet s = read_points(a.points);
    const Mode m = parse_mode(a.mode);
    const std::vector<int> p1 = parse_path_arg(a.from);
    const std::vector<int> p2 = parse_path_arg(a.to);
    const auto res = flip_distance(s, p1, p2, m.mode);
    if (!res) {
        std::cout << "{ \"distance\": null }\n";
        return kExitOk;
    }
    std::cout << "{ \"distance\": " << res->distance
              << ", \"plan\": " << plan_to_json(res->plan, a.narrate) << " }\n";
    const ReplayResult rr = replay_plan(s, res->plan);
    if (!rr.ok || canonical_free(rr.states.back()) != canonical_free(p2)) {
        std::cerr << "replay check failed: " << rr.message << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

struct PlanArgs {
    std::string points;
    std::string planner;
    std::string from, to;
    int start = -1;
    bool narrate = false;
};

int run_plan(const PlanArgs& a) {
    const PointSet s = read_points(a.points);
    const PathOnSet p1(s, parse_path_arg(a.from));
    const PathOnSet p2(s, parse_path_arg(a.to));
    const int start = a.start >= 0 ? a.start : p1.start();

    FlipPlan plan;
    if (a.planner == "convex")
        plan = convex_pair_plan(p1, p2, start);
    else if (a.planner == "ssi")
        plan = ssi_connect_plan(s, start, p1, p2);
    else if (a.planner == "two-layer-fixed")
        plan = two_layer_fixed_start_plan(p1, p2, start);
    else if (a.planner == "two-layer")
        plan = two_layer_plan(p1, p2);
    else
        throw ParseError("unknown planner: " + a.planner);

    const ReplayResult rr = replay_plan(s, plan);
    const bool hits_target =
        rr.ok && canonical_free(rr.states.back()) == canonical_free(p2.order());
    std::cout << plan_to_json(plan, a.narrate) << "\n";
    std::cerr << "replay: " << (hits_target ? "ok" : "FAILED") << ", steps "
              << plan.steps.size() << "\n";
    return hits_target ? kExitOk : kExitVerification;
}

struct ExportArgs {
    std::string points;
    std::string path;
    std::string plan_file;
    std::string svg = "-";
};

int run_export(const ExportArgs& a) {
    const PointSet s = read_points(a.points);
    if (!a.plan_file.empty()) {
        const FlipPlan plan = plan_from_json(slurp(a.plan_file));
        const auto frames = render_plan_frames(s, plan);
        if (a.svg == "-") {
            for (const auto& f : frames) std::cout << f;
            return kExitOk;
        }
        for (std::size_t i = 0; i < frames.size(); ++i) {
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, "_%03zu.svg", i);
            spill(a.svg + suffix, frames[i]);
        }
        return kExitOk;
    }
    std::vector<int> order;
    if (!a.path.empty()) order = parse_path_arg(a.path);
    spill(a.svg == "-" ? "-" : a.svg, render_svg(s, order));
    return kExitOk;
}

// --- verify suites ---------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::string range = "4..7";
    int samples = 5;
    std::uint64_t seed = 1;
};

PointSet gen_for(std::uint64_t seed, int n, std::optional<std::vector<int>> profile) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.layer_profile = std::move(profile);
    return generate_point_set(spec);
}

bool chord_free_order(const PointSet& s, const std::vector<int>& order) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (classify_edge(s, order[i], order[i + 1]).kind == EdgeKind::Chord)
            return false;
    return true;
}

// Convex fixed-start graph: diameter 2n-5, radius n-2, centers = the spirals.
int verify_thm1(const VerifyArgs& a) {
    const auto [lo, hi] = parse_range(a.range);
    for (int n = std::max(3, lo); n <= hi; ++n) {
        for (int i = 0; i < a.samples; ++i) {
            const PointSet s = gen_for(a.seed * 100000 + static_cast<std::uint64_t>(n * 100 + i),
                                       n, std::vector<int>{n});
            const int start = s.layers()[0][0];
            const FlipGraph g = build_flip_graph(s, GraphMode::FixedStart, start);
            const EccentricityProfile prof = eccentricity_profile(g);
            const int want_d = std::max(1, 2 * n - 5);
            const int want_r = std::max(1, n - 2);
            std::set<int> spirals{
                g.vertex_id(planepath::spiral(s, start, Direction::Clockwise).order()),
                g.vertex_id(planepath::spiral(s, start, Direction::CounterClockwise).order())};
            std::set<int> centers(prof.centers.begin(), prof.centers.end());
            if (prof.diameter != want_d || prof.radius != want_r || centers != spirals) {
                std::cout << "FAIL n=" << n << " sample " << i << ": diameter "
                          << prof.diameter << " (want " << want_d << "), radius "
                          << prof.radius << " (want " << want_r << ")\n";
                return kExitVerification;
            }
            if (i == 0)
                std::cout << "n=" << n << ": diameter " << prof.diameter << ", radius "
                          << prof.radius << ", centers = spirals\n";
        }
    }
    std::cout << "suite thm1: pass\n";
    return kExitOk;
}

// Structural path facts verified over full enumerations of sampled sets.
int verify_path_facts(const VerifyArgs& a) {
    const auto [lo, hi] = parse_range(a.range);
    long long checked = 0;
    for (int n = std::max(4, lo); n <= hi; ++n) {
        for (int i = 0; i < a.samples; ++i) {
            const PointSet s = gen_for(a.seed * 100000 + static_cast<std::uint64_t>(n * 100 + i), n,
                                       std::nullopt);
            for (const auto& order : enumerate_paths(s, default_cap(GraphMode::Free))) {
                for (const auto& o : {order, std::vector<int>(order.rbegin(), order.rend())}) {
                    const PathOnSet p(s, o);
                    ++checked;
                    if (a.suite == "lemma5") {
                        if (is_layer_monotone(p) && !is_suffix_independent(p)) {
                            std::cout << "FAIL: layer-monotone but dependent: "
                                      << format_path_text(o) << "\n";
                            return kExitVerification;
                        }
                        if (!is_suffix_independent(p)) {
                            bool outward = false;
                            for (const auto& [u, v] : p.edges())
                                if (classify_edge(s, u, v).kind == EdgeKind::Outward)
                                    outward = true;
                            if (!outward) {
                                std::cout << "FAIL: dependent path without outward edge: "
                                          << format_path_text(o) << "\n";
                                return kExitVerification;
                            }
                        }
                    } else if (a.suite == "lemma6") {
                        const int st = o.front(), en = o.back();
                        if (!s.is_outer(st) || !s.is_outer(en)) continue;
                        for (int v : s.layers()[0]) {
                            if (v == st || v == en) continue;
                            const auto [plus, minus] = side_split(s, 0, st, v, en);
                            (void)plus;
                            const auto vpos = std::find(o.begin(), o.end(), v);
                            for (int m : minus)
                                if (std::find(o.begin(), vpos, m) == vpos) {
                                    std::cout << "FAIL: prefix before " << v
                                              << " misses far-side point " << m << ": "
                                              << format_path_text(o) << "\n";
                                    return kExitVerification;
                                }
                        }
                    } else {  // lemma7
                        const int st = o.front(), en = o.back();
                        if (!s.is_outer(st) || !s.is_outer(en)) continue;
                        if (s.level_adjacent(st, en) && !chord_free_order(s, o)) {
                            std::cout << "FAIL: chord despite adjacent outer endpoints: "
                                      << format_path_text(o) << "\n";
                            return kExitVerification;
                        }
                    }
                }
            }
        }
    }
    std::cout << "suite " << a.suite << ": pass (" << checked << " directed paths)\n";
    return kExitOk;
}

// Fixed-start flips only ever add edges at the current end.
int verify_obs4(const VerifyArgs& a) {
    const auto [lo, hi] = parse_range(a.range);
    long long flips = 0;
    for (int n = std::max(4, lo); n <= hi; ++n) {
        for (int i = 0; i < a.samples; ++i) {
            const PointSet s = gen_for(a.seed * 100000 + static_cast<std::uint64_t>(n * 100 + i), n,
                                       std::nullopt);
            const int start = s.layers()[0][0];
            for (const auto& order :
                 enumerate_paths_fixed_start(s, start, default_cap(GraphMode::FixedStart))) {
                const PathOnSet p(s, order);
                for (const Neighbor& nb : neighbors_fixed_start(p, start)) {
                    ++flips;
                    if (nb.flip.added.first != p.end() && nb.flip.added.second != p.end()) {
                        std::cout << "FAIL: added edge not incident to the end: "
                                  << format_path_text(order) << "\n";
                        return kExitVerification;
                    }
                    const PathOnSet q = apply_flip(p, nb.flip);
                    if (q.start() != start && q.end() != start) {
                        std::cout << "FAIL: flip lost the fixed start\n";
                        return kExitVerification;
                    }
                }
            }
        }
    }
    std::cout << "suite obs4: pass (" << flips << " flips)\n";
    return kExitOk;
}

// The suffix-independent fixed-start paths induce a connected subgraph, and
// the guided connector stays inside it.
int verify_thm2(const VerifyArgs& a) {
    const auto [lo, hi] = parse_range(a.range);
    long long pairs = 0;
    for (int n = std::max(4, lo); n <= hi; ++n) {
        for (int i = 0; i < a.samples; ++i) {
            const PointSet s = gen_for(a.seed * 100000 + static_cast<std::uint64_t>(n * 100 + i), n,
                                       std::nullopt);
            for (int start : s.layers()[0]) {
                const auto all =
                    enumerate_paths_fixed_start(s, start, default_cap(GraphMode::FixedStart));
                std::vector<std::vector<int>> ssi;
                for (const auto& o : all)
                    if (is_suffix_independent(s, o)) ssi.push_back(o);
                if (ssi.size() < 2) continue;
                // connectivity of the induced subgraph
                std::set<std::vector<int>> in(ssi.begin(), ssi.end()), seen{ssi[0]};
                std::vector<std::vector<int>> queue{ssi[0]};
                for (std::size_t qi = 0; qi < queue.size(); ++qi)
                    for (const Neighbor& nb :
                         neighbors_fixed_start(PathOnSet(s, queue[qi]), start))
                        if (in.count(nb.order) && seen.insert(nb.order).second)
                            queue.push_back(nb.order);
                if (seen.size() != in.size()) {
                    std::cout << "FAIL: induced subgraph disconnected (n=" << n
                              << ", start " << start << ")\n";
                    return kExitVerification;
                }
                // guided connection keeps every intermediate independent
                std::mt19937_64 rng(a.seed + static_cast<std::uint64_t>(n * 31 + start));
                for (int rep = 0; rep < 4; ++rep) {
                    const auto& o1 = ssi[rng() % ssi.size()];
                    const auto& o2 = ssi[rng() % ssi.size()];
                    const FlipPlan plan =
                        ssi_connect_plan(s, start, PathOnSet(s, o1), PathOnSet(s, o2));
                    const ReplayResult rr = replay_plan(s, plan);
                    bool ok = rr.ok;
                    for (const auto& st : rr.states)
                        if (!is_suffix_independent(s, st)) ok = false;
                    if (!ok || canonical_free(rr.states.back()) != canonical_free(o2)) {
                        std::cout << "FAIL: guided connection left the independent set\n";
                        return kExitVerification;
                    }
                    ++pairs;
                }
            }
        }
    }
    std::cout << "suite thm2: pass (" << pairs << " guided pairs)\n";
    return kExitOk;
}

// Two-layer planners: fixed-start and free connection plus the improvement
// round disjunction on chord-free inward-first paths.
int verify_two_layer(const VerifyArgs& a) {
    const auto [lo, hi] = parse_range(a.range);
    long long plans = 0, rounds = 0;
    for (int n = std::max(4, lo); n <= hi; ++n) {
        for (int i = 0; i < a.samples; ++i) {
            const PointSet s = gen_for(a.seed * 100000 + static_cast<std::uint64_t>(n * 100 + i), n,
                                       std::vector<int>{3, n - 3});
            const int start = s.layers()[0][0];
            const auto all =
                enumerate_paths_fixed_start(s, start, default_cap(GraphMode::FixedStart));
            std::mt19937_64 rng(a.seed + static_cast<std::uint64_t>(n * 7 + i));
            for (int rep = 0; rep < 6; ++rep) {
                const auto& o1 = all[rng() % all.size()];
                const auto& o2 = all[rng() % all.size()];
                const FlipPlan plan =
                    two_layer_fixed_start_plan(PathOnSet(s, o1), PathOnSet(s, o2), start);
                const ReplayResult rr = replay_plan(s, plan);
                if (!rr.ok || canonical_free(rr.states.back()) != canonical_free(o2)) {
                    std::cout << "FAIL: fixed-start plan did not reach its target\n";
                    return kExitVerification;
                }
                ++plans;
            }
            for (const auto& o : all) {
                if (s.layer_of(o[1]) == 0 || !chord_free_order(s, o)) continue;
                const int l0 = static_cast<int>(s.layers()[0].size());
                const PathOnSet p(s, o);
                if (level_count(p, 0) >= l0 - 1) continue;
                const FlipPlan plan = k_property_step(p, start);
                const ReplayResult rr = replay_plan(s, plan);
                if (!rr.ok) {
                    std::cout << "FAIL: improvement round does not replay\n";
                    return kExitVerification;
                }
                const PathOnSet after(s, rr.states.back());
                const int before_lv = level_count(p, 0), after_lv = level_count(after, 0);
                const bool raised = after_lv == before_lv + 1;
                const bool walked_out =
                    after_lv == before_lv && s.is_outer(after.order().back());
                if (!(raised || walked_out)) {
                    std::cout << "FAIL: improvement round broke its disjunction: "
                              << format_path_text(o) << "\n";
                    return kExitVerification;
                }
                ++rounds;
                if (rounds > 200) break;
            }
            // free connection on sampled pairs
            const auto free_all = enumerate_paths(s, default_cap(GraphMode::Free));
            for (int rep = 0; rep < 4; ++rep) {
                const auto& o1 = free_all[rng() % free_all.size()];
                const auto& o2 = free_all[rng() % free_all.size()];
                const FlipPlan plan = two_layer_plan(PathOnSet(s, o1), PathOnSet(s, o2));
                const ReplayResult rr = replay_plan(s, plan);
                if (!rr.ok || canonical_free(rr.states.back()) != canonical_free(o2)) {
                    std::cout << "FAIL: free two-layer plan did not reach its target\n";
                    return kExitVerification;
                }
                ++plans;
            }
        }
    }
    std::cout << "suite two-layer: pass (" << plans << " plans, " << rounds
              << " improvement rounds)\n";
    return kExitOk;
}

int run_verify(const VerifyArgs& a) {
    if (a.suite == "thm1") return verify_thm1(a);
    if (a.suite == "lemma5" || a.suite == "lemma6" || a.suite == "lemma7")
        return verify_path_facts(a);
    if (a.suite == "obs4") return verify_obs4(a);
    if (a.suite == "thm2") return verify_thm2(a);
    if (a.suite == "two-layer") return verify_two_layer(a);
    throw ParseError("unknown suite: " + a.suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "flip graphs of plane spanning paths: generation, enumeration, "
        "distances, constructive planners, and exports"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "report failures as a JSON object on stderr");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a seeded point set");
    gen->add_option("--seed", ga.seed, "RNG seed");
    gen->add_option("--n", ga.n, "point count")->required();
    gen->add_option("--layers", ga.layers, "layer profile, outermost first, e.g. 3,3");
    gen->add_option("--attempts", ga.attempts, "rejection-sampling budget");
    gen->add_option("--out", ga.out, "output file ('-' = stdout)");
    gen->add_option("--format", ga.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    EnumArgs ea;
    auto* enu = app.add_subcommand("enumerate", "list plane spanning paths");
    enu->add_option("--points", ea.points, "point-set file")->required();
    enu->add_option("--fixed-start", ea.fixed_start, "restrict to paths with this endpoint");
    enu->add_option("--cap", ea.cap, "maximum point count (default per mode, PLANEPATH_CAP)");
    enu->add_flag("--count-only", ea.count_only, "print only the count");

    GraphArgs gra;
    auto* gr = app.add_subcommand("graph", "build the flip graph");
    gr->add_option("--points", gra.points, "point-set file")->required();
    gr->add_option("--mode", gra.mode, "free or fixed:<start>");
    gr->add_option("--dot", gra.dot, "write DOT to this file");
    gr->add_option("--metrics", gra.metrics, "write metrics JSON to this file");
    gr->add_option("--adjacency", gra.adjacency, "write adjacency JSON to this file");
    gr->add_option("--cap", gra.cap, "maximum point count");

    DistanceArgs da;
    auto* dist = app.add_subcommand("distance", "shortest flip sequence between two paths");
    dist->add_option("--points", da.points, "point-set file")->required();
    dist->add_option("from", da.from, "first path, e.g. 0,1,2,3")->required();
    dist->add_option("to", da.to, "second path")->required();
    dist->add_option("--mode", da.mode, "free or fixed:<start>");
    dist->add_flag("--narrate", da.narrate, "annotate the witness plan steps");

    PlanArgs pa;
    auto* pl = app.add_subcommand("plan", "constructive flip plan between two paths");
    pl->add_option("--points", pa.points, "point-set file")->required();
    pl->add_option("--planner", pa.planner, "convex|ssi|two-layer-fixed|two-layer")
        ->required();
    pl->add_option("--from", pa.from, "source path")->required();
    pl->add_option("--to", pa.to, "target path")->required();
    pl->add_option("--start", pa.start, "fixed start point (default: first of --from)");
    pl->add_flag("--narrate", pa.narrate, "annotate each flip with its construction step");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "run an invariant suite over seeded sets");
    ver->add_option("--suite", va.suite, "thm1|lemma5|lemma6|lemma7|obs4|thm2|two-layer")
        ->required();
    ver->add_option("--n-range", va.range, "point counts, e.g. 4..7");
    ver->add_option("--samples", va.samples, "sets per point count");
    ver->add_option("--seed", va.seed, "base seed");

    ExportArgs xa;
    auto* ex = app.add_subcommand("export", "render a point set, path, or plan as SVG");
    ex->add_option("--points", xa.points, "point-set file")->required();
    ex->add_option("--path", xa.path, "path to draw");
    ex->add_option("--plan", xa.plan_file, "plan JSON file; renders one frame per state");
    ex->add_option("--svg", xa.svg, "output file or frame prefix ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitPrecondition;
    }

    auto fail = [&](const std::string& kind, const std::string& what, int code) {
        if (json_errors)
            std::cerr << "{ \"error\": \"" << kind << "\", \"detail\": \"" << what
                      << "\", \"exit\": " << code << " }\n";
        else
            std::cerr << "error (" << kind << "): " << what << "\n";
        return code;
    };

    try {
        if (gen->parsed()) return run_gen(ga);
        if (enu->parsed()) return run_enumerate(ea);
        if (gr->parsed()) return run_graph(gra);
        if (dist->parsed()) return run_distance(da);
        if (pl->parsed()) return run_plan(pa);
        if (ver->parsed()) return run_verify(va);
        if (ex->parsed()) return run_export(xa);
    } catch (const CapExceededError& e) {
        return fail("resource-cap", e.what(), kExitResourceCap);
    } catch (const SamplingExhausted& e) {
        return fail("resource-cap", e.what(), kExitResourceCap);
    } catch (const InfeasibleLayerSpec& e) {
        return fail("precondition", e.what(), kExitPrecondition);
    } catch (const ParseError& e) {
        return fail("precondition", e.what(), kExitPrecondition);
    } catch (const PlanError& e) {
        // internal construction defects are verification failures, everything
        // else is a caller-side precondition
        const bool internal = std::string(e.what()).rfind("internal:", 0) == 0;
        return fail(internal ? "verification" : "precondition", e.what(),
                    internal ? kExitVerification : kExitPrecondition);
    } catch (const std::invalid_argument& e) {
        return fail("precondition", e.what(), kExitPrecondition);
    } catch (const std::exception& e) {
        return fail("verification", e.what(), kExitVerification);
    }
    return kExitPrecondition;
}
