#pragma once

// Aesthetic metrics of node-link drawings, for the whole drawing or for the
// highlighted subgraph only.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphtrials/geometry.hpp"
#include "graphtrials/graph.hpp"
#include "graphtrials/layout.hpp"

namespace graphtrials {

enum class MetricScope { Full, Highlighted };

inline std::string_view to_string(MetricScope s) { return s == MetricScope::Full ? "full" : "highlighted"; }

struct CrossingPair {
    Edge e, f;
    double angle = 0.0;  // acute, degrees
};

struct CrossingScan {
    std::vector<CrossingPair> crossings;
    std::vector<std::pair<Edge, Edge>> overlaps;  // collinear overlapping segments
};

/// Missing values are reported as N/A (e.g. cr without crossings, el without edges).
struct MetricsReport {
    MetricScope scope = MetricScope::Full;
    std::optional<double> st;
    int cn = 0;
    std::optional<double> ji;
    std::optional<double> el;
    std::optional<double> nr;
    std::optional<double> ar;
    std::optional<double> cr;
    std::optional<double> an;
};

namespace detail {

struct ScopedDrawing {
    std::vector<Vertex> vertices;  // ascending
    std::vector<Edge> edges;
};

inline ScopedDrawing scoped(const NodeLinkLayout& layout, const Graph& g, MetricScope scope) {
    ScopedDrawing out;
    if (scope == MetricScope::Full) {
        out.vertices.resize(static_cast<std::size_t>(g.n()));
        std::iota(out.vertices.begin(), out.vertices.end(), 0);
        out.edges = g.edges();
        return out;
    }
    if (layout.highlight_vertices.empty() && layout.highlight_edges.empty()) {
        throw std::invalid_argument("highlighted scope needs a nonempty highlight");
    }
    out.vertices = layout.highlight_vertices;
    for (const Edge& e : layout.highlight_edges) {
        out.vertices.push_back(e.u);
        out.vertices.push_back(e.v);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    out.edges = layout.highlight_edges;
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

inline void require_distinct(const std::vector<Point>& pos) {
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] == pos[j]) throw std::invalid_argument("two vertices coincide");
}

inline CrossingScan scan_crossings(const std::vector<Point>& pos, const std::vector<Edge>& edges) {
    CrossingScan out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            Point a = pos[e.u], b = pos[e.v], c = pos[f.u], d = pos[f.v];
            if (segments_overlap(a, b, c, d)) {
                out.overlaps.emplace_back(e, f);
            } else if (segments_properly_cross(a, b, c, d)) {
                out.crossings.push_back({e, f, acute_angle_degrees(b - a, d - c)});
            }
        }
    }
    return out;
}

inline double stress(const std::vector<Point>& pos, const ScopedDrawing& s, int n) {
    Graph sub(n, s.edges);
    double num = 0, den = 0;
    std::vector<std::pair<double, double>> pairs;  // (euclidean, graph distance)
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        auto d = bfs_distances(sub, s.vertices[i]);
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
            int dij = d[s.vertices[j]];
            if (dij == kUnreached) continue;
            double e = distance(pos[s.vertices[i]], pos[s.vertices[j]]);
            pairs.emplace_back(e, dij);
            num += e / dij;
            den += (e / dij) * (e / dij);
        }
    }
    if (pairs.empty() || den == 0) return 0.0;
    const double scale = num / den;
    double total = 0;
    for (auto [e, d] : pairs) total += (scale * e - d) * (scale * e - d) / (d * d);
    return total;
}

inline std::optional<double> neighborhood_jaccard(const std::vector<Point>& pos, const ScopedDrawing& s, int n) {
    Graph sub(n, s.edges);
    double sum = 0;
    int counted = 0;
    for (Vertex v : s.vertices) {
        const auto& nbrs = sub.neighbors(v);
        if (nbrs.empty()) continue;
        std::vector<Vertex> others;
        for (Vertex w : s.vertices) {
            if (w != v) others.push_back(w);
        }
        std::sort(others.begin(), others.end(), [&](Vertex a, Vertex b) {
            double da = distance(pos[v], pos[a]), db = distance(pos[v], pos[b]);
            return da != db ? da < db : a < b;
        });
        others.resize(nbrs.size());
        std::sort(others.begin(), others.end());
        std::vector<Vertex> common;
        std::set_intersection(nbrs.begin(), nbrs.end(), others.begin(), others.end(), std::back_inserter(common));
        double uni = static_cast<double>(2 * nbrs.size() - common.size());
        sum += static_cast<double>(common.size()) / uni;
        ++counted;
    }
    if (counted == 0) return std::nullopt;
    return sum / counted;
}

inline std::optional<double> angular_resolution(const std::vector<Point>& pos, const ScopedDrawing& s, int n) {
    Graph sub(n, s.edges);
    std::optional<double> best;
    for (Vertex v : s.vertices) {
        const auto& nbrs = sub.neighbors(v);
        if (nbrs.size() < 2) continue;
        std::vector<double> dirs;
        for (Vertex w : nbrs) dirs.push_back(std::atan2(pos[w].y - pos[v].y, pos[w].x - pos[v].x));
        std::sort(dirs.begin(), dirs.end());
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            double gap = i + 1 < dirs.size() ? dirs[i + 1] - dirs[i] : dirs[0] + 2 * std::numbers::pi - dirs[i];
            double deg = gap * 180.0 / std::numbers::pi;
            if (!best || deg < *best) best = deg;
        }
    }
    return best;
}

}  // namespace detail

namespace detail {

/// Short over long side of the minimum-area enclosing rectangle, so that the
/// value does not depend on how the drawing is turned. Near-equal areas keep
/// the squarer rectangle.
inline std::optional<double> aspect_ratio(const std::vector<Point>& pts) {
    auto hull = convex_hull(pts);
    if (hull.size() < 2) return std::nullopt;
    double best_area = std::numeric_limits<double>::infinity(), best = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Point a = pts[hull[i]], b = pts[hull[(i + 1) % hull.size()]];
        Point dir = b - a;
        dir = {dir.x / norm(dir), dir.y / norm(dir)};
        const Point normal{-dir.y, dir.x};
        double lo_u = std::numeric_limits<double>::infinity(), hi_u = -lo_u, lo_v = lo_u, hi_v = -lo_u;
        for (int h : hull) {
            lo_u = std::min(lo_u, dot(pts[h] - a, dir));
            hi_u = std::max(hi_u, dot(pts[h] - a, dir));
            lo_v = std::min(lo_v, dot(pts[h] - a, normal));
            hi_v = std::max(hi_v, dot(pts[h] - a, normal));
        }
        const double w = hi_u - lo_u, h = hi_v - lo_v, area = w * h;
        const double ratio = std::min(w, h) / std::max(w, h);
        const double tie = 1e-9 * std::max(area, best_area == std::numeric_limits<double>::infinity() ? 0.0 : best_area);
        if (area < best_area - tie || (std::abs(area - best_area) <= tie && ratio > best)) {
            best_area = std::min(area, best_area);
            best = ratio;
        }
    }
    return best;
}

}  // namespace detail

inline CrossingScan crossing_pairs(const NodeLinkLayout& layout, const Graph& g, MetricScope scope = MetricScope::Full) {
    if (static_cast<int>(layout.positions.size()) != g.n()) throw std::invalid_argument("layout does not match graph");
    detail::require_distinct(layout.positions);
    return detail::scan_crossings(layout.positions, detail::scoped(layout, g, scope).edges);
}

inline MetricsReport compute_metrics(const NodeLinkLayout& layout, const Graph& g, MetricScope scope = MetricScope::Full) {
    if (static_cast<int>(layout.positions.size()) != g.n()) throw std::invalid_argument("layout does not match graph");
    detail::require_distinct(layout.positions);
    const auto& pos = layout.positions;
    const auto s = detail::scoped(layout, g, scope);
    MetricsReport r;
    r.scope = scope;
    r.st = detail::stress(pos, s, g.n());

    auto scan = detail::scan_crossings(pos, s.edges);
    r.cn = static_cast<int>(scan.crossings.size());
    for (const auto& c : scan.crossings) {
        if (!r.cr || c.angle < *r.cr) r.cr = c.angle;
    }

    if (!s.edges.empty()) {
        r.ji = detail::neighborhood_jaccard(pos, s, g.n());
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (const Edge& e : s.edges) {
            double len = distance(pos[e.u], pos[e.v]);
            lo = std::min(lo, len);
            hi = std::max(hi, len);
        }
        r.el = lo / hi;
    }

    if (s.vertices.size() >= 2) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
                double d = distance(pos[s.vertices[i]], pos[s.vertices[j]]);
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
        }
        r.nr = lo / hi;
        std::vector<Point> pts;
        for (Vertex v : s.vertices) pts.push_back(pos[v]);
        r.ar = detail::aspect_ratio(pts);
    }
    r.an = detail::angular_resolution(pos, s, g.n());
    return r;
}

namespace detail {

inline std::string format_metric(const std::optional<double>& v, int decimals) {
    if (!v) return "N/A";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, *v);
    return buf;
}

}  // namespace detail

/// Aligned table: one row per metric, one column per report.
inline std::string metrics_table(const std::vector<MetricsReport>& reports) {
    struct Row {
        const char* name;
        std::function<std::string(const MetricsReport&)> cell;
    };
    const Row rows[] = {
        {"st", [](const MetricsReport& r) { return detail::format_metric(r.st, 4); }},
        {"cn", [](const MetricsReport& r) { return std::to_string(r.cn); }},
        {"ji", [](const MetricsReport& r) { return detail::format_metric(r.ji, 4); }},
        {"el", [](const MetricsReport& r) { return detail::format_metric(r.el, 4); }},
        {"nr", [](const MetricsReport& r) { return detail::format_metric(r.nr, 4); }},
        {"ar", [](const MetricsReport& r) { return detail::format_metric(r.ar, 4); }},
        {"cr", [](const MetricsReport& r) { return detail::format_metric(r.cr, 2); }},
        {"an", [](const MetricsReport& r) { return detail::format_metric(r.an, 2); }},
    };
    constexpr int kWidth = 13;
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.insert(0, w - s.size(), ' ');
        return s;
    };
    std::string out = "metric";
    for (const auto& r : reports) out += pad(std::string(to_string(r.scope)), kWidth);
    out += '\n';
    for (const auto& row : rows) {
        std::string line = row.name;
        line.resize(6, ' ');
        for (const auto& r : reports) line += pad(row.cell(r), kWidth);
        out += line + '\n';
    }
    return out;
}

}  // namespace graphtrials
