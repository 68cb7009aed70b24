#pragma once

// Certificate layouts: geometry and orderings that make the embedded evidence
// pop out. Node-link constructions that have free parameters (circle
// rotations, wedge span, level spacing) try a fixed sequence of settings and
// keep the first one that is readable (minimum separation, no vertex sitting
// on a foreign edge). If none is, the last candidate is returned and the
// verifier reports the defect.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "graphtrials/evidence.hpp"
#include "graphtrials/geometry.hpp"
#include "graphtrials/graph.hpp"

namespace graphtrials {

struct Annotation {
    std::string label;
    Point at;
    friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct NodeLinkLayout {
    std::string kind;                 // construction name, informational
    std::vector<Point> positions;     // one per vertex
    std::vector<Edge> edges;          // drawn edges
    std::vector<Vertex> highlight_vertices;
    std::vector<Edge> highlight_edges;
    std::vector<Annotation> annotations;
    friend bool operator==(const NodeLinkLayout&, const NodeLinkLayout&) = default;
};

enum class MarkClass { Evidence, BlockBoundary };

/// Cell in matrix index space (row < col); drawn mirrored.
struct CellMark {
    int row = 0;
    int col = 0;
    MarkClass cls = MarkClass::Evidence;
    friend auto operator<=>(const CellMark&, const CellMark&) = default;
};

enum class BlockExpect { Empty, Filled, Dominating };

/// Diagonal block over matrix indices [begin, end).
struct MatrixBlock {
    int begin = 0;
    int end = 0;
    BlockExpect expect = BlockExpect::Empty;
    friend bool operator==(const MatrixBlock&, const MatrixBlock&) = default;
};

struct MatrixLayout {
    std::vector<Vertex> order;  // matrix index -> vertex
    std::vector<int> widths;    // per index thickness
    std::vector<Edge> edges;    // drawn (filled) vertex pairs
    std::vector<CellMark> marks;
    std::vector<MatrixBlock> blocks;
    friend bool operator==(const MatrixLayout&, const MatrixLayout&) = default;
};

struct BookLayout {
    int k = 0;
    BookDiscipline discipline = BookDiscipline::Stack;
    std::vector<Vertex> order;
    std::vector<PagedEdge> edges;
    friend bool operator==(const BookLayout&, const BookLayout&) = default;
};

using Layout = std::variant<NodeLinkLayout, MatrixLayout, BookLayout>;

enum class LayoutStyle { NodeLink, Matrix, Book };

inline std::string_view to_string(LayoutStyle s) {
    switch (s) {
        case LayoutStyle::NodeLink: return "nodelink";
        case LayoutStyle::Matrix: return "matrix";
        case LayoutStyle::Book: return "book";
    }
    return "";
}

inline LayoutStyle style_of(const Layout& l) { return static_cast<LayoutStyle>(l.index()); }

inline constexpr int kThinWidth = 1;
inline constexpr int kThickWidth = 2;

inline constexpr double kInteriorRadius = 0.45;

namespace detail {

inline bool is_permutation_of(const std::vector<Vertex>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline void snap_all(std::vector<Point>& pts) {
    for (Point& p : pts) p = snap(p);
}

/// Runs `build` for each candidate index and keeps the first readable result.
inline NodeLinkLayout first_readable(int candidates, const std::function<NodeLinkLayout(int)>& build,
                                     const std::function<bool(const NodeLinkLayout&)>& also = nullptr) {
    // nothing readable: the admissible candidate with the fewest defects
    NodeLinkLayout best;
    std::size_t best_defects = std::numeric_limits<std::size_t>::max();
    for (int i = 0; i < candidates; ++i) {
        NodeLinkLayout l = build(i);
        if (also && !also(l)) {
            if (i == candidates - 1 && best_defects == std::numeric_limits<std::size_t>::max()) return l;
            continue;
        }
        const std::size_t defects = geometry_defects(l.positions, l.edges).size();
        if (defects == 0) return l;
        if (defects < best_defects) best_defects = defects, best = std::move(l);
    }
    return best;
}

inline bool edges_cross_free(const std::vector<Point>& pos, const std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge e = edges[i], f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            if (segments_properly_cross(pos[e.u], pos[e.v], pos[f.u], pos[f.v])) return false;
        }
    }
    return true;
}

inline std::vector<Edge> incident_edges(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (std::binary_search(vs.begin(), vs.end(), e.u) || std::binary_search(vs.begin(), vs.end(), e.v)) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Unit circle, clockwise from the top, in `order` (identity if absent).
inline NodeLinkLayout circular_layout(const Graph& g, std::optional<std::vector<Vertex>> order = std::nullopt) {
    const int n = g.n();
    if (order && !detail::is_permutation_of(*order, n)) throw std::invalid_argument("order is not a permutation");
    NodeLinkLayout out;
    out.kind = "circular";
    out.positions.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vertex v = order ? (*order)[i] : i;
        out.positions[v] = polar(1.0, std::numbers::pi / 2 - 2 * std::numbers::pi * i / n);
    }
    detail::snap_all(out.positions);
    out.edges = g.edges();
    return out;
}

/// Side A in a left disk, side B in a right disk, cut vertices on a strip
/// below both. Disks have radius 1 with centres at x = -2 and x = +2.
template <class Separation>
NodeLinkLayout separation_layout(const Graph& g, const Separation& ev) {
    std::vector<Vertex> a = ev.a, b = ev.b, cut;
    if constexpr (std::is_same_v<Separation, VertexCut>) cut = ev.cut;
    if (a.empty() || b.empty()) throw std::invalid_argument("separation needs two nonempty sides");
    if (static_cast<int>(a.size() + b.size() + cut.size()) != g.n()) {
        throw std::invalid_argument("separation does not cover the vertex set");
    }
    if (b.size() < a.size()) std::swap(a, b);

    auto place_side = [](std::vector<Point>& pos, const std::vector<Vertex>& side, Point center, double rotation) {
        if (side.size() == 1) {
            pos[side[0]] = center;
            return;
        }
        const double step = 2 * std::numbers::pi / static_cast<double>(side.size());
        for (std::size_t i = 0; i < side.size(); ++i) {
            pos[side[i]] = center + polar(1.0, std::numbers::pi / 2 + rotation - step * static_cast<double>(i));
        }
    };
    // turn a side so that its neighbours of the cut face the strip
    std::vector<bool> in_cut(static_cast<std::size_t>(g.n()), false);
    for (Vertex v : cut) in_cut[v] = true;
    auto facing = [&](const std::vector<Vertex>& side, Point center) {
        if (cut.empty() || side.size() < 2) return 0.0;
        const double step = 2 * std::numbers::pi / static_cast<double>(side.size());
        Point sum{0, 0};
        for (std::size_t i = 0; i < side.size(); ++i) {
            for (Vertex w : g.neighbors(side[i])) {
                if (in_cut[w]) sum = sum + polar(1.0, std::numbers::pi / 2 - step * static_cast<double>(i));
            }
        }
        if (norm(sum) < 1e-9) return 0.0;
        const Point toward = Point{0.0, -2.5} - center;
        return std::atan2(toward.y, toward.x) - std::atan2(sum.y, sum.x);
    };
    const Point left{-2.0, 0.0}, right{2.0, 0.0};
    const double base_a = facing(a, left), base_b = facing(b, right);

    // offsets around the facing rotation: 0, +1, -1, +2, -2, ... sixteenths of a turn
    constexpr int kTurns = 16;
    auto offset = [](int i) { return (i % 2 == 1 ? 1 : -1) * ((i + 1) / 2) * (2 * std::numbers::pi / kTurns); };
    // strip drop and curvature, tried after all rotations of the previous shape
    static constexpr double kStrip[][2] = {{2.0, 0.25}, {2.0, 0.6}, {3.0, 0.25}, {1.5, 0.5}, {2.5, 1.0},
                                           {3.0, 0.1},  {2.5, -0.15}, {3.0, -0.3}, {2.0, -0.1}};
    constexpr int kPerShape = kTurns * kTurns;
    return detail::first_readable(kPerShape * static_cast<int>(std::size(kStrip)), [&](int attempt) {
        const int candidate = attempt % kPerShape;
        const auto [drop, bend] = kStrip[attempt / kPerShape];
        NodeLinkLayout out;
        out.kind = "separation";
        out.positions.resize(static_cast<std::size_t>(g.n()));
        place_side(out.positions, a, left, base_a + offset(candidate / kTurns));
        place_side(out.positions, b, right, base_b + offset(candidate % kTurns));
        // strip: a parabolic arc so that no three cut vertices are collinear
        const auto c = static_cast<double>(cut.size());
        for (std::size_t i = 0; i < cut.size(); ++i) {
            double x = -3.0 + 6.0 * (static_cast<double>(i) + 0.5) / c;
            out.positions[cut[i]] = {x, -drop - bend * x * x};
        }
        detail::snap_all(out.positions);
        out.edges = g.edges();
        out.highlight_vertices = cut;
        out.highlight_edges = detail::incident_edges(g, cut);
        return out;
    });
}

namespace detail {

/// Angles inside the wedges [lo, hi] of one ring (sorted by lo) whose
/// smallest angular gap, including the one across 2*pi, is `want` or as
/// large as the wedges allow, each as close to its current angle as it can be.
inline void spread_ring(const std::vector<Vertex>& ring, const std::vector<double>& lo, const std::vector<double>& hi,
                        std::vector<double>& angle, double want) {
    const double turn = 2 * std::numbers::pi;
    const std::size_t k = ring.size();
    auto feasible = [&](double gap) {
        double at = lo[ring[0]];
        for (std::size_t i = 1; i < k; ++i) {
            at = std::max(lo[ring[i]], at + gap);
            if (at > hi[ring[i]]) return false;
        }
        return at <= lo[ring[0]] + turn - gap;
    };
    double good = 0, bad = turn / static_cast<double>(k) + 1e-9;
    for (int step = 0; step < 50; ++step) {
        double mid = (good + bad) / 2;
        (feasible(mid) ? good : bad) = mid;
    }
    const double gap = std::min(want, good * (1 - 1e-9));
    std::vector<double> upper(k);
    upper[k - 1] = std::min(hi[ring[k - 1]], lo[ring[0]] + turn - gap);
    for (std::size_t i = k - 1; i-- > 0;) upper[i] = std::min(hi[ring[i]], upper[i + 1] - gap);
    double previous = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double floor = i == 0 ? lo[ring[0]] : std::max(lo[ring[i]], previous + gap);
        double& a = angle[ring[i]];
        a = std::clamp(a, floor, std::max(floor, upper[i]));
        previous = a;
    }
}

}  // namespace detail

/// Root at the origin, depth-d vertices on the circle of radius d. Each
/// subtree owns an angular wedge proportional to its leaf count; below the
/// root a wedge is clipped to 2*acos(d/(d+1)) so that every tree edge stays
/// inside its annulus and its parent's wedge, which keeps tree edges disjoint.
inline NodeLinkLayout radial_tree_layout(const Graph& g, const SpanTree& tree) {
    const int n = g.n();
    if (static_cast<int>(tree.parent.size()) != n || static_cast<int>(tree.depth.size()) != n) {
        throw std::invalid_argument("tree does not span the graph");
    }
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        if (v == tree.root) continue;
        if (tree.parent[v] < 0 || tree.depth[v] < 1) throw std::invalid_argument("tree does not span the graph");
        children[tree.parent[v]].push_back(v);
    }
    std::vector<Vertex> by_depth(static_cast<std::size_t>(n));
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::stable_sort(by_depth.begin(), by_depth.end(), [&](Vertex x, Vertex y) { return tree.depth[x] < tree.depth[y]; });
    std::vector<int> leaves(static_cast<std::size_t>(n), 0);
    for (auto it = by_depth.rbegin(); it != by_depth.rend(); ++it) {
        Vertex v = *it;
        if (children[v].empty()) leaves[v] = 1;
        for (Vertex c : children[v]) leaves[v] += leaves[c];
    }

    static constexpr double kSpans[] = {1.0, 0.9, 0.8, 0.7};
    static constexpr double kPlacement[] = {0.5, 0.4, 0.6};
    // unclipped wedges first (more room per level, crossings checked), then
    // clipped ones, which are crossing-free by construction; the last two
    // rounds move vertices inside their wedges to widen each ring's gaps
    constexpr int kShapes = 12;
    std::vector<Edge> tree_edges;
    for (Vertex v = 0; v < n; ++v) {
        if (v != tree.root) tree_edges.emplace_back(v, tree.parent[v]);
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    std::vector<std::vector<Vertex>> rings;
    for (Vertex v : by_depth) {
        const auto d = static_cast<std::size_t>(tree.depth[v]);
        if (rings.size() <= d) rings.resize(d + 1);
        rings[d].push_back(v);
    }

    auto tree_cross_free = [](const NodeLinkLayout& l) { return detail::edges_cross_free(l.positions, l.highlight_edges); };
    return detail::first_readable(4 * kShapes, [&](int attempt) {
        const bool clip = attempt / kShapes % 2 == 1;
        const bool spread = attempt >= 2 * kShapes;
        const int candidate = attempt % kShapes;
        const double span = kSpans[candidate / 3] * 2 * std::numbers::pi;
        const double place = kPlacement[candidate % 3];
        NodeLinkLayout out;
        out.kind = "radial_tree";
        out.positions.assign(static_cast<std::size_t>(n), Point{});
        std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n)), angle(static_cast<std::size_t>(n));
        lo[tree.root] = std::numbers::pi / 2;
        hi[tree.root] = std::numbers::pi / 2 + span;
        for (std::size_t d = 0; d < rings.size(); ++d) {
            auto ring = rings[d];
            std::sort(ring.begin(), ring.end(), [&](Vertex x, Vertex y) { return lo[x] < lo[y]; });
            for (Vertex v : ring) angle[v] = lo[v] + place * (hi[v] - lo[v]);
            if (spread && d > 0 && ring.size() > 1) {
                // the separation floor of a drawing of radius D is at most kSeparationFraction * 2 * sqrt(2) * D
                double floor = kSeparationFraction * 2 * std::numbers::sqrt2 * static_cast<double>(rings.size() - 1);
                double want = 2 * std::asin(std::min(1.0, 1.1 * floor / (2 * static_cast<double>(d))));
                detail::spread_ring(ring, lo, hi, angle, want);
            }
            for (Vertex v : ring) {
                if (d > 0) {
                    double limit = 2 * std::acos(static_cast<double>(d) / (d + 1));
                    if (clip && hi[v] - lo[v] > limit) {
                        // stays inside the allotted wedge, or siblings would overlap
                        lo[v] = std::max(lo[v], angle[v] - limit / 2);
                        hi[v] = std::min(hi[v], angle[v] + limit / 2);
                    }
                    out.positions[v] = polar(static_cast<double>(d), angle[v]);
                }
                double cursor = lo[v];
                for (Vertex c : children[v]) {
                    double share = (hi[v] - lo[v]) * leaves[c] / leaves[v];
                    lo[c] = cursor;
                    hi[c] = cursor + share;
                    cursor += share;
                }
            }
        }
        detail::snap_all(out.positions);
        out.edges = g.edges();
        out.highlight_vertices.resize(static_cast<std::size_t>(n));
        std::iota(out.highlight_vertices.begin(), out.highlight_vertices.end(), 0);
        out.highlight_edges = tree_edges;
        return out;
    }, tree_cross_free);
}

namespace detail {

/// Moves each vertex of `ring` (in circle order, centred on the origin) to
/// the angle between its two neighbours that leaves the fewest geometry
/// defects, a few sweeps or until none are left. Circle order is kept.
inline void relax_circle(NodeLinkLayout& layout, const std::vector<Vertex>& ring, double radius) {
    constexpr int kSweeps = 4, kSamples = 32;
    const double turn = 2 * std::numbers::pi;
    const std::size_t k = ring.size();
    // clockwise angle from the top, increasing along the ring
    std::vector<double> at(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Point p = layout.positions[ring[i]];
        at[i] = std::numbers::pi / 2 - std::atan2(p.y, p.x);
        while (i > 0 && at[i] <= at[i - 1]) at[i] += turn;
    }
    auto put = [&](std::size_t i) {
        layout.positions[ring[i]] = snap(polar(radius, std::numbers::pi / 2 - at[i]));
    };
    auto defects = [&] { return geometry_defects(layout.positions, layout.edges).size(); };
    std::size_t best = defects();
    for (int sweep = 0; sweep < kSweeps && best > 0; ++sweep) {
        for (std::size_t i = 0; i < k && best > 0; ++i) {
            const double lo = i == 0 ? at[k - 1] - turn : at[i - 1];
            const double hi = i + 1 == k ? at[0] + turn : at[i + 1];
            double keep = at[i];
            for (int s = 1; s < kSamples; ++s) {
                at[i] = lo + (hi - lo) * s / kSamples;
                put(i);
                if (auto d = defects(); d < best) {
                    best = d;
                    keep = at[i];
                }
            }
            at[i] = keep;
            put(i);
        }
    }
}

}  // namespace detail

/// Cycle on the unit circle with cycle index 0 topmost, clockwise; other
/// vertices inside on a concentric circle of radius 0.45, ordered by id.
/// Unreadable drawings retry with the inner circle turned, and last spread
/// it unevenly.
inline NodeLinkLayout cycle_outer_layout(const Graph& g, const Cycle& cycle) {
    const auto& cyc = cycle.vertices;
    const int len = static_cast<int>(cyc.size());
    if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<bool> on_cycle(static_cast<std::size_t>(g.n()), false);
    for (Vertex v : cyc) {
        if (v < 0 || v >= g.n() || on_cycle[v]) throw std::invalid_argument("invalid cycle");
        on_cycle[v] = true;
    }
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!on_cycle[v]) inner.push_back(v);
    }
    std::vector<Edge> cycle_edges;
    for (int i = 0; i < len; ++i) cycle_edges.emplace_back(cyc[i], cyc[(i + 1) % len]);
    std::sort(cycle_edges.begin(), cycle_edges.end());
    std::vector<Vertex> highlighted = cyc;
    std::sort(highlighted.begin(), highlighted.end());

    constexpr int kRotations = 16;
    NodeLinkLayout drawn = detail::first_readable(inner.empty() ? 1 : kRotations, [&](int candidate) {
        NodeLinkLayout out;
        out.kind = "cycle_outer";
        out.positions.resize(static_cast<std::size_t>(g.n()));
        for (int i = 0; i < len; ++i) {
            out.positions[cyc[i]] = polar(1.0, std::numbers::pi / 2 - 2 * std::numbers::pi * i / len);
        }
        const double step = 2 * std::numbers::pi / std::max<std::size_t>(inner.size(), 1);
        for (std::size_t i = 0; i < inner.size(); ++i) {
            double rotation = candidate * step / kRotations;
            out.positions[inner[i]] =
                inner.size() == 1 ? Point{0.0, 0.0}
                                  : polar(kInteriorRadius, std::numbers::pi / 2 + rotation - step * static_cast<double>(i));
        }
        if (inner.size() == 1 && candidate > 0) {
            out.positions[inner[0]] = polar(kInteriorRadius * candidate / kRotations, std::numbers::pi / 2 + 0.3);
        }
        detail::snap_all(out.positions);
        out.edges = g.edges();
        out.highlight_vertices = highlighted;
        out.highlight_edges = cycle_edges;
        return out;
    });
    constexpr int kRelaxLimit = 64;
    if (inner.size() > 1 && g.n() <= kRelaxLimit && !geometry_ok(drawn.positions, drawn.edges)) {
        detail::relax_circle(drawn, inner, kInteriorRadius);
    }
    return drawn;
}

/// BFS level drawing: depth d sits in the band around y = -d. Each level is a
/// slightly bent row (a parabola opening downwards, at most 0.45 deep) so that
/// no three vertices of a level are collinear. Vertices unreachable from the
/// root go to a detached band two levels below the deepest one.
inline NodeLinkLayout level_layout(const Graph& g, const BfsWitness& bfs) {
    const int n = g.n();
    if (static_cast<int>(bfs.depth.size()) != n || bfs.path.empty()) throw std::invalid_argument("invalid BFS witness");
    int max_depth = 0;
    for (int d : bfs.depth) max_depth = std::max(max_depth, d);
    // rows: vertices per band, parent-grouped then by id
    std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(max_depth + 1));
    std::vector<Vertex> detached;
    std::vector<int> slot(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (bfs.depth[v] == kUnreached) detached.push_back(v);
        else if (bfs.depth[v] == 0) rows[0].push_back(v);
    }
    for (int d = 1; d <= max_depth; ++d) {
        for (Vertex v = 0; v < n; ++v) {
            if (bfs.depth[v] == d) rows[d].push_back(v);
        }
        std::stable_sort(rows[d].begin(), rows[d].end(),
                         [&](Vertex x, Vertex y) { return slot[bfs.parent[x]] < slot[bfs.parent[y]]; });
        for (std::size_t i = 0; i < rows[d].size(); ++i) slot[rows[d][i]] = static_cast<int>(i);
    }
    std::vector<double> row_y;
    for (int d = 0; d <= max_depth; ++d) row_y.push_back(-d);
    if (!detached.empty()) {
        rows.push_back(detached);
        row_y.push_back(-(max_depth + 2));
    }
    std::size_t widest = 1;
    for (const auto& r : rows) widest = std::max(widest, r.size());

    std::vector<Edge> path_edges;
    for (std::size_t i = 0; i + 1 < bfs.path.size(); ++i) path_edges.emplace_back(bfs.path[i], bfs.path[i + 1]);
    std::sort(path_edges.begin(), path_edges.end());
    std::vector<Vertex> path_vertices = bfs.path;
    std::sort(path_vertices.begin(), path_vertices.end());

    static constexpr double kSpacing[] = {1.0, 0.6, 0.35, 0.2, 0.12, 0.08};
    // the first two bends across all spacings, then the others
    static constexpr double kBend[] = {0.25, 0.45, 0.1, 0.7};
    return detail::first_readable(24, [&](int candidate) {
        const double spacing = kSpacing[candidate % 12 / 2];
        const double bend = kBend[candidate % 2 + candidate / 12 * 2];
        const double half = std::max(0.5, (static_cast<double>(widest) - 1) / 2) * spacing;
        NodeLinkLayout out;
        out.kind = "level";
        out.positions.resize(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto c = static_cast<double>(rows[r].size());
            for (std::size_t i = 0; i < rows[r].size(); ++i) {
                double x = (static_cast<double>(i) - (c - 1) / 2) * spacing;
                double t = x / half;
                out.positions[rows[r][i]] = {x, row_y[r] - bend * t * t};
            }
        }
        detail::snap_all(out.positions);
        out.edges = g.edges();
        out.highlight_vertices = path_vertices;
        out.highlight_edges = path_edges;
        out.annotations.push_back({"root", out.positions[bfs.root]});
        out.annotations.push_back({"target", out.positions[bfs.target()]});
        return out;
    });
}

/// Circular layout with the sparse certificate subgraph highlighted.
inline NodeLinkLayout sparse_subgraph_layout(const Graph& g, const SparseSubgraph& sparse) {
    NodeLinkLayout out = circular_layout(g);
    out.kind = "sparse_subgraph";
    out.highlight_edges = sparse.edges;
    std::sort(out.highlight_edges.begin(), out.highlight_edges.end());
    return out;
}

// ---------------------------------------------------------------------------
// Matrix certificates

namespace detail {

inline MatrixLayout matrix_base(const Graph& g, std::vector<Vertex> order) {
    MatrixLayout out;
    out.order = std::move(order);
    out.widths.assign(out.order.size(), kThinWidth);
    out.edges = g.edges();
    return out;
}

inline std::vector<Vertex> set_first(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<Vertex> order = set;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (std::find(set.begin(), set.end(), v) == set.end()) order.push_back(v);
    }
    return order;
}

}  // namespace detail

/// `parity_widths` selects the odd-cycle style: even indices thick, odd thin,
/// so the cell closing the cycle is square iff the cycle is odd.
inline MatrixLayout matrix_certificate_order(const Graph& g, const Evidence& ev, bool parity_widths = false) {
    const int n = g.n();
    std::vector<Vertex> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);

    if (const auto* cycle = std::get_if<Cycle>(&ev)) {
        const int len = static_cast<int>(cycle->vertices.size());
        if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        auto out = detail::matrix_base(g, detail::set_first(g, cycle->vertices));
        if (!detail::is_permutation_of(out.order, n)) throw std::invalid_argument("invalid cycle");
        for (int i = 0; i + 1 < len; ++i) out.marks.push_back({i, i + 1, MarkClass::Evidence});
        out.marks.push_back({0, len - 1, MarkClass::Evidence});
        std::sort(out.marks.begin(), out.marks.end());
        if (parity_widths) {
            for (int i = 0; i < n; ++i) out.widths[i] = i % 2 == 0 ? kThickWidth : kThinWidth;
        }
        return out;
    }
    if (const auto* coloring = std::get_if<Coloring>(&ev)) {
        if (static_cast<int>(coloring->colors.size()) != n) throw std::invalid_argument("coloring size mismatch");
        std::vector<Vertex> order = identity;
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return coloring->colors[a] < coloring->colors[b]; });
        auto out = detail::matrix_base(g, order);
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && coloring->colors[order[j]] == coloring->colors[order[i]]) ++j;
            out.blocks.push_back({i, j, BlockExpect::Empty});
            i = j;
        }
        return out;
    }
    if (const auto* set = std::get_if<WitnessSet>(&ev)) {
        auto out = detail::matrix_base(g, detail::set_first(g, set->vertices));
        if (!detail::is_permutation_of(out.order, n)) throw std::invalid_argument("invalid witness set");
        const int k = static_cast<int>(set->vertices.size());
        switch (set->kind) {
            case SetKind::Clique:
                out.blocks.push_back({0, k, BlockExpect::Filled});
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) out.marks.push_back({i, j, MarkClass::Evidence});
                break;
            case SetKind::Independent: out.blocks.push_back({0, k, BlockExpect::Empty}); break;
            case SetKind::Dominating: out.blocks.push_back({0, k, BlockExpect::Dominating}); break;
        }
        return out;
    }
    if (const auto* missing = std::get_if<MissingEdge>(&ev)) {
        auto out = detail::matrix_base(g, identity);
        out.marks.push_back({std::min(missing->u, missing->v), std::max(missing->u, missing->v), MarkClass::BlockBoundary});
        return out;
    }
    if (std::holds_alternative<CompleteWitness>(ev)) return detail::matrix_base(g, identity);
    throw std::invalid_argument("evidence variant has no matrix certificate");
}

/// Spine at x = order index, one panel per page; geometry is implied.
inline BookLayout book_layout(const Graph& g, const BookEmbedding& ev) {
    if (!detail::is_permutation_of(ev.order, g.n())) throw std::invalid_argument("spine is not a permutation");
    for (const Edge& e : g.edges()) {
        auto it = std::find_if(ev.pages.begin(), ev.pages.end(), [&](const PagedEdge& p) { return p.edge == e; });
        if (it == ev.pages.end()) throw std::invalid_argument("edge without a page");
    }
    return BookLayout{ev.k, ev.discipline, ev.order, ev.pages};
}

}  // namespace graphtrials
