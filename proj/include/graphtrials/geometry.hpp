#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "graphtrials/graph.hpp"

namespace graphtrials {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

inline Point polar(double radius, double angle) { return {radius * std::cos(angle), radius * std::sin(angle)}; }

inline double distance_to_segment(Point p, Point a, Point b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

struct BoundingBox {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double diagonal() const { return std::hypot(width(), height()); }
};

inline BoundingBox bounding_box(std::span<const Point> pts) {
    BoundingBox box;
    if (pts.empty()) return box;
    box.min_x = box.max_x = pts[0].x;
    box.min_y = box.max_y = pts[0].y;
    for (const Point& p : pts) {
        box.min_x = std::min(box.min_x, p.x);
        box.max_x = std::max(box.max_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

/// Resolution floor: minimum vertex separation for a readable drawing.
inline constexpr double kSeparationFraction = 0.02;

inline double separation_floor(std::span<const Point> pts) {
    return kSeparationFraction * bounding_box(pts).diagonal();
}

/// Orientation sign of (a, b, c) with a relative epsilon guard.
inline int orientation(Point a, Point b, Point c) {
    double v = cross(b - a, c - a);
    double scale = std::max({1.0, norm(b - a) * norm(c - a)});
    if (std::abs(v) <= 1e-12 * scale) return 0;
    return v > 0 ? 1 : -1;
}

/// Open segments ab and cd cross at a single interior point.
inline bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Collinear segments sharing more than a single point.
inline bool segments_overlap(Point a, Point b, Point c, Point d) {
    if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
    Point dir = b - a;
    double len2 = dot(dir, dir);
    if (len2 == 0.0) return false;
    double t0 = dot(c - a, dir) / len2, t1 = dot(d - a, dir) / len2;
    if (t0 > t1) std::swap(t0, t1);
    return std::min(1.0, t1) - std::max(0.0, t0) > 1e-12;
}

/// Acute angle in degrees between two segment directions, in (0, 90].
inline double acute_angle_degrees(Point u, Point v) {
    double angle = std::atan2(std::abs(cross(u, v)), dot(u, v)) * 180.0 / std::numbers::pi;
    return angle > 90.0 ? 180.0 - angle : angle;
}

/// Andrew's monotone chain; returns hull indices counter-clockwise, collinear points dropped.
inline std::vector<int> convex_hull(std::span<const Point> pts) {
    std::vector<int> idx(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    if (idx.size() < 3) return idx;
    std::vector<int> hull(2 * idx.size());
    std::size_t k = 0;
    for (int i : idx) {
        while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
        int i = idx[j];
        while (k >= lower && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

/// Rounds to the 6-decimal grid used when serialising coordinates.
inline double snap(double v) {
    double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;
}

inline Point snap(Point p) { return {snap(p.x), snap(p.y)}; }

// ---------------------------------------------------------------------------
// Readability checks shared by layout synthesis and the verifier.

struct GeometryDefect {
    enum class Kind { Coincident, TooClose, Occluded, NonFinite } kind;
    Vertex vertex = -1;
    Vertex other = -1;  // second vertex, or -1
    Edge edge{};        // occluding edge for Kind::Occluded
};

/// Minimum separation and vertex/edge occlusion over a straight-line drawing.
inline std::vector<GeometryDefect> geometry_defects(std::span<const Point> pts, std::span<const Edge> edges,
                                                    bool stop_at_first = false) {
    std::vector<GeometryDefect> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
            out.push_back({GeometryDefect::Kind::NonFinite, static_cast<Vertex>(i)});
            return out;
        }
    }
    if (pts.size() < 2) return out;
    const double floor = separation_floor(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d = distance(pts[i], pts[j]);
            if (d == 0.0 || d < floor) {
                out.push_back({d == 0.0 ? GeometryDefect::Kind::Coincident : GeometryDefect::Kind::TooClose,
                               static_cast<Vertex>(i), static_cast<Vertex>(j)});
                if (stop_at_first) return out;
            }
        }
    }
    for (const Edge& e : edges) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto x = static_cast<Vertex>(i);
            if (x == e.u || x == e.v) continue;
            if (distance_to_segment(pts[i], pts[e.u], pts[e.v]) < floor / 2) {
                out.push_back({GeometryDefect::Kind::Occluded, x, -1, e});
                if (stop_at_first) return out;
            }
        }
    }
    return out;
}

inline bool geometry_ok(std::span<const Point> pts, std::span<const Edge> edges) {
    return geometry_defects(pts, edges, true).empty();
}

}  // namespace graphtrials
