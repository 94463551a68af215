#include "planepath/io.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "planepath/plan.hpp"

namespace planepath {

namespace {

using nlohmann::json;

PointSet make_set(std::vector<Point> pts) {
    try {
        return PointSet(std::move(pts));
    } catch (const GeneralPositionError& e) {
        throw ParseError(std::string("point set rejected: ") + e.what() + " (indices " +
                         std::to_string(e.a) + ", " + std::to_string(e.b) + ", " +
                         std::to_string(e.c) + ")");
    }
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

PointSet read_point_set_text(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw ParseError("expected a positive point count");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point p;
        if (!(in >> p.x >> p.y))
            throw ParseError("expected " + std::to_string(n) + " coordinate lines, got " +
                             std::to_string(i));
        pts.push_back(p);
    }
    return make_set(std::move(pts));
}

PointSet read_point_set_text(const std::string& text) {
    std::istringstream in(text);
    return read_point_set_text(in);
}

std::string write_point_set_text(const PointSet& s) {
    std::ostringstream out;
    out << s.size() << '\n';
    for (int i = 0; i < s.size(); ++i) out << s.pt(i).x << ' ' << s.pt(i).y << '\n';
    return out.str();
}

PointSet read_point_set_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError("expected a JSON array of [x, y] pairs");
    std::vector<Point> pts;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("each point must be an [x, y] integer pair");
        pts.push_back(Point{e[0].get<Coord>(), e[1].get<Coord>()});
    }
    if (pts.empty()) throw ParseError("point set is empty");
    return make_set(std::move(pts));
}

std::string write_point_set_json(const PointSet& s) {
    json j = json::array();
    for (int i = 0; i < s.size(); ++i) j.push_back({s.pt(i).x, s.pt(i).y});
    return j.dump();
}

std::vector<int> parse_path_text(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad path index: '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
            ++used;
        if (used != tok.size() || v < 0) throw ParseError("bad path index: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty path");
    return out;
}

std::string format_path_text(const std::vector<int>& order) {
    std::ostringstream out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out << ',';
        out << order[i];
    }
    return out.str();
}

std::vector<int> parse_path_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_array() || j.empty()) throw ParseError("expected a JSON array of indices");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<int>() < 0)
            throw ParseError("path indices must be non-negative integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::string format_path_json(const std::vector<int>& order) {
    return json(order).dump();
}

std::string plan_to_json(const FlipPlan& plan, bool narrate) {
    json steps = json::array();
    for (const Flip& f : plan.steps) {
        json step{{"remove", {f.removed.first, f.removed.second}},
                  {"add", {f.added.first, f.added.second}}};
        if (narrate && !f.note.empty()) step["note"] = f.note;
        steps.push_back(std::move(step));
    }
    return json{{"start", plan.start}, {"steps", std::move(steps)}}.dump(2);
}

FlipPlan plan_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("start") || !j.contains("steps"))
        throw ParseError("plan must have 'start' and 'steps'");
    FlipPlan plan;
    for (const auto& e : j["start"]) {
        if (!e.is_number_integer()) throw ParseError("plan start must be an index array");
        plan.start.push_back(e.get<int>());
    }
    for (const auto& st : j["steps"]) {
        if (!st.is_object() || !st.contains("remove") || !st.contains("add") ||
            st["remove"].size() != 2 || st["add"].size() != 2)
            throw ParseError("each step needs 'remove' and 'add' index pairs");
        Flip f{make_edge(st["remove"][0].get<int>(), st["remove"][1].get<int>()),
               make_edge(st["add"][0].get<int>(), st["add"][1].get<int>()), {}};
        if (st.contains("note")) f.note = st["note"].get<std::string>();
        plan.steps.push_back(std::move(f));
    }
    return plan;
}

namespace {

std::set<std::vector<int>> spiral_vertices(const PointSet& s, const FlipGraph& g) {
    std::set<std::vector<int>> out;
    for (int i = 0; i < s.size(); ++i) {
        if (!s.is_outer(i)) continue;
        if (g.mode == GraphMode::FixedStart && i != g.fixed_start) continue;
        for (Direction d : {Direction::Clockwise, Direction::CounterClockwise}) {
            std::vector<int> order = spiral(s, i, d).order();
            out.insert(g.mode == GraphMode::Free ? canonical_free(order) : order);
        }
    }
    return out;
}

}  // namespace

std::string graph_to_dot(const PointSet& s, const FlipGraph& g) {
    const std::set<std::vector<int>> spirals = spiral_vertices(s, g);
    std::ostringstream out;
    out << "graph flipgraph {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        out << "  v" << v << " [label=\"" << format_path_text(g.vertices[v]) << '"';
        if (spirals.count(g.vertices[v])) out << " spiral=true shape=doublecircle";
        out << "];\n";
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (int w : g.adjacency[v])
            if (static_cast<std::size_t>(w) > v) out << "  v" << v << " -- v" << w << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_adjacency_json(const FlipGraph& g) {
    json j{{"vertices", g.vertices}, {"adjacency", g.adjacency}};
    return j.dump();
}

std::string graph_metrics_json(const FlipGraph& g) {
    const auto comps = components(g);
    json j{{"vertices", g.vertices.size()},
           {"edges", g.edge_count()},
           {"components", comps.size()}};
    if (comps.size() == 1 && !g.vertices.empty()) {
        const EccentricityProfile prof = eccentricity_profile(g);
        j["diameter"] = prof.diameter;
        j["radius"] = prof.radius;
        j["centers"] = prof.centers;
    } else {
        j["diameter"] = nullptr;
        j["radius"] = nullptr;
        j["centers"] = nullptr;
    }
    return j.dump(2);
}

namespace {

constexpr Coord kGenRange = 10000;

// Portable uniform draw in [lo, hi]; std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
Coord draw(std::mt19937_64& rng, Coord lo, Coord hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<Coord>(v % span);
}

std::optional<PointSet> try_build(std::vector<Point> pts,
                                  const std::optional<std::vector<int>>& profile) {
    std::set<std::pair<Coord, Coord>> uniq;
    for (const Point& p : pts)
        if (!uniq.insert({p.x, p.y}).second) return std::nullopt;
    if (!in_general_position(pts)) return std::nullopt;
    PointSet s(std::move(pts));
    if (profile) {
        if (s.layer_count() != static_cast<int>(profile->size())) return std::nullopt;
        for (int i = 0; i < s.layer_count(); ++i)
            if (static_cast<int>(s.layers()[static_cast<std::size_t>(i)].size()) !=
                (*profile)[static_cast<std::size_t>(i)])
                return std::nullopt;
    }
    return s;
}

}  // namespace

PointSet generate_point_set(const GenSpec& spec) {
    if (spec.n < 1 || spec.n > 1000) throw InfeasibleLayerSpec("n out of range");
    if (spec.layer_profile) {
        const auto& prof = *spec.layer_profile;
        if (prof.empty()) throw InfeasibleLayerSpec("empty layer profile");
        int total = 0;
        for (std::size_t i = 0; i < prof.size(); ++i) {
            if (prof[i] < 1 || (i + 1 < prof.size() && prof[i] < 3))
                throw InfeasibleLayerSpec("every non-innermost layer needs >= 3 points");
            total += prof[i];
        }
        if (total != spec.n)
            throw InfeasibleLayerSpec("layer profile does not sum to n");
    }

    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        std::vector<Point> pts;
        if (!spec.layer_profile) {
            for (int i = 0; i < spec.n; ++i)
                pts.push_back(Point{draw(rng, -kGenRange, kGenRange),
                                    draw(rng, -kGenRange, kGenRange)});
        } else {
            // concentric radius bands, outermost layer widest
            const int L = static_cast<int>(spec.layer_profile->size());
            for (int li = 0; li < L; ++li) {
                const Coord hi = kGenRange * (L - li) / L;
                const Coord lo = (li + 1 < L || (*spec.layer_profile)[static_cast<std::size_t>(li)] > 1)
                                     ? hi * 7 / 10
                                     : 0;
                for (int c = 0; c < (*spec.layer_profile)[static_cast<std::size_t>(li)]; ++c) {
                    Point p;
                    do {
                        p = Point{draw(rng, -hi, hi), draw(rng, -hi, hi)};
                    } while (p.x * p.x + p.y * p.y > hi * hi ||
                             p.x * p.x + p.y * p.y < lo * lo);
                    pts.push_back(p);
                }
            }
        }
        if (auto s = try_build(std::move(pts), spec.layer_profile)) return std::move(*s);
    }
    throw SamplingExhausted("no admissible point set after " +
                            std::to_string(spec.max_attempts) + " attempts");
}

std::string render_svg(const PointSet& s, const std::vector<int>& order,
                       std::optional<Edge> highlight) {
    Coord minx = s.pt(0).x, maxx = s.pt(0).x, miny = s.pt(0).y, maxy = s.pt(0).y;
    for (int i = 0; i < s.size(); ++i) {
        minx = std::min(minx, s.pt(i).x);
        maxx = std::max(maxx, s.pt(i).x);
        miny = std::min(miny, s.pt(i).y);
        maxy = std::max(maxy, s.pt(i).y);
    }
    const double w = std::max<double>(1.0, static_cast<double>(maxx - minx));
    const double h = std::max<double>(1.0, static_cast<double>(maxy - miny));
    const double margin = 0.08 * std::max(w, h);
    auto X = [&](int i) { return static_cast<double>(s.pt(i).x); };
    // flip y so the drawing matches the usual mathematical orientation
    auto Y = [&](int i) { return static_cast<double>(maxy) - static_cast<double>(s.pt(i).y 	- miny); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << (static_cast<double>(minx) - margin) << ' ' << -margin << ' '
        << (w + 2 * margin) << ' ' << (h + 2 * margin) << "\">\n";
    const double stroke = std::max(w, h) / 160.0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const bool hot = highlight && make_edge(order[i], order[i + 1]) == *highlight;
        out << "  <line x1=\"" << X(order[i]) << "\" y1=\"" << Y(order[i]) << "\" x2=\""
            << X(order[i + 1]) << "\" y2=\"" << Y(order[i + 1]) << "\" stroke=\""
            << (hot ? "#d62728" : "#1f77b4") << "\" stroke-width=\""
            << (hot ? 1.8 * stroke : stroke) << "\"/>\n";
    }
    const double r = std::max(w, h) / 70.0;
    for (int i = 0; i < s.size(); ++i) {
        out << "  <circle cx=\"" << X(i) << "\" cy=\"" << Y(i) << "\" r=\"" << r
            << "\" fill=\"" << (s.is_outer(i) ? "#333333" : "#999999") << "\"/>\n";
        out << "  <text x=\"" << X(i) + 1.4 * r << "\" y=\"" << Y(i) - 1.4 * r
            << "\" font-size=\"" << 3.2 * r << "\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<std::string> render_plan_frames(const PointSet& s, const FlipPlan& plan) {
    ReplayResult rr = replay_plan(s, plan);
    if (!rr.ok) throw std::invalid_argument("render_plan_frames: " + rr.message);
    std::vector<std::string> frames;
    frames.push_back(render_svg(s, rr.states.front()));
    for (std::size_t i = 0; i < plan.steps.size(); ++i)
        frames.push_back(render_svg(s, rr.states[i + 1], plan.steps[i].added));
    return frames;
}

}  // namespace planepath
