#pragma once

// Mental-model extraction: turns a certificate drawing into the list of
// salient components a viewer would perceive. Reads only the layout record
// (positions, drawn edges, highlights, marks, pages), never the graph.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "graphtrials/connectivity.hpp"
#include "graphtrials/errors.hpp"
#include "graphtrials/geometry.hpp"
#include "graphtrials/layout.hpp"

namespace graphtrials {

namespace gist {

struct SeparatedGroup {
    int size = 0;
    friend bool operator==(const SeparatedGroup&, const SeparatedGroup&) = default;
};
struct StripVertices {
    int count = 0;
    friend bool operator==(const StripVertices&, const StripVertices&) = default;
};
struct HighlightedConvexCycle {
    int length = 0;
    bool spanning = false;
    friend bool operator==(const HighlightedConvexCycle&, const HighlightedConvexCycle&) = default;
};
/// Only emitted for a highlighted regular polygon.
struct TopmostSingleton {
    bool unique_top = false;
    bool unique_bottom = false;
    friend bool operator==(const TopmostSingleton&, const TopmostSingleton&) = default;
};
struct HighlightedTree {
    int levels = 0;
    bool spanning = false;
    bool crossing_free = false;
    std::vector<int> level_sizes;
    int uncovered = 0;
    friend bool operator==(const HighlightedTree&, const HighlightedTree&) = default;
};
struct LevelBand {
    int depth = 0;
    int size = 0;
    friend bool operator==(const LevelBand&, const LevelBand&) = default;
};
struct HighlightedPath {
    Vertex from = -1, to = -1;
    int length = 0;
    bool descending = false;       // one band further per step
    bool root_alone = false;       // `from` is alone in the top band
    bool edges_span_one_band = false;
    friend bool operator==(const HighlightedPath&, const HighlightedPath&) = default;
};
struct HighlightedSubgraph {
    int vertices = 0;
    int edges = 0;
    int connectivity = 0;
    friend bool operator==(const HighlightedSubgraph&, const HighlightedSubgraph&) = default;
};
struct DiagonalRun {
    int length = 0;
    bool full = false;
    friend bool operator==(const DiagonalRun&, const DiagonalRun&) = default;
};
struct CornerCellPair {
    friend bool operator==(const CornerCellPair&, const CornerCellPair&) = default;
};
/// Marked cell (0, index) closing a shorter diagonal run.
struct ClosingCell {
    int index = 0;
    friend bool operator==(const ClosingCell&, const ClosingCell&) = default;
};
/// Closing cell of a run in a matrix with thick and thin rows.
struct MarkedCell {
    int index = 0;
    bool square = false;
    bool alternating = false;
    friend bool operator==(const MarkedCell&, const MarkedCell&) = default;
};
struct EmptyBlock {
    int begin = 0, end = 0;
    friend bool operator==(const EmptyBlock&, const EmptyBlock&) = default;
};
struct FilledBlock {
    int begin = 0, end = 0;
    friend bool operator==(const FilledBlock&, const FilledBlock&) = default;
};
struct MissingCell {
    int row = 0, col = 0;
    friend bool operator==(const MissingCell&, const MissingCell&) = default;
};
struct FullGrid {
    friend bool operator==(const FullGrid&, const FullGrid&) = default;
};
struct DominationRows {
    int set_size = 0;
    int rows = 0;
    int covered = 0;
    friend bool operator==(const DominationRows&, const DominationRows&) = default;
};
struct PagePanel {
    int page = 0;
    int arcs = 0;
    bool interleave_free = false;
    bool nesting_free = false;
    friend bool operator==(const PagePanel&, const PagePanel&) = default;
};

}  // namespace gist

using Gist = std::variant<gist::SeparatedGroup, gist::StripVertices, gist::HighlightedConvexCycle, gist::TopmostSingleton,
                          gist::HighlightedTree, gist::LevelBand, gist::HighlightedPath, gist::HighlightedSubgraph,
                          gist::DiagonalRun, gist::CornerCellPair, gist::ClosingCell, gist::MarkedCell, gist::EmptyBlock,
                          gist::FilledBlock, gist::MissingCell, gist::FullGrid, gist::DominationRows, gist::PagePanel>;

/// Size of the drawing itself; not a perceived component.
struct Canvas {
    int vertices = 0;
    int edges = 0;
    friend bool operator==(const Canvas&, const Canvas&) = default;
};

struct MentalModel {
    Canvas canvas;
    std::vector<Gist> components;
    friend bool operator==(const MentalModel&, const MentalModel&) = default;
};

inline std::string to_string(const Gist& token) {
    using namespace gist;
    auto b = [](bool f) { return f ? "true" : "false"; };
    auto s = [](int x) { return std::to_string(x); };
    return std::visit(
        [&](const auto& t) -> std::string {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, SeparatedGroup>) return "SeparatedGroup(" + s(t.size) + ")";
            else if constexpr (std::is_same_v<T, StripVertices>) return "StripVertices(" + s(t.count) + ")";
            else if constexpr (std::is_same_v<T, HighlightedConvexCycle>)
                return "HighlightedConvexCycle(" + s(t.length) + ",spanning=" + b(t.spanning) + ")";
            else if constexpr (std::is_same_v<T, TopmostSingleton>)
                return std::string("TopmostSingleton(top=") + b(t.unique_top) + ",bottom=" + b(t.unique_bottom) + ")";
            else if constexpr (std::is_same_v<T, HighlightedTree>)
                return "HighlightedTree(" + s(t.levels) + ",spanning=" + b(t.spanning) + ")";
            else if constexpr (std::is_same_v<T, LevelBand>) return "LevelBand(" + s(t.depth) + "," + s(t.size) + ")";
            else if constexpr (std::is_same_v<T, HighlightedPath>)
                return "HighlightedPath(" + s(t.from) + "->" + s(t.to) + "," + s(t.length) + ")";
            else if constexpr (std::is_same_v<T, HighlightedSubgraph>)
                return "HighlightedSubgraph(" + s(t.edges) + ",connectivity=" + s(t.connectivity) + ")";
            else if constexpr (std::is_same_v<T, DiagonalRun>) return "DiagonalRun(" + s(t.length) + ")";
            else if constexpr (std::is_same_v<T, CornerCellPair>) return "CornerCellPair";
            else if constexpr (std::is_same_v<T, ClosingCell>) return "ClosingCell(" + s(t.index) + ")";
            else if constexpr (std::is_same_v<T, MarkedCell>)
                return std::string("MarkedCell(") + (t.square ? "square" : "nonsquare") + ")";
            else if constexpr (std::is_same_v<T, EmptyBlock>) return "EmptyBlock(" + s(t.begin) + "," + s(t.end) + ")";
            else if constexpr (std::is_same_v<T, FilledBlock>) return "FilledBlock(" + s(t.end - t.begin) + ")";
            else if constexpr (std::is_same_v<T, MissingCell>) return "MissingCell(" + s(t.row) + "," + s(t.col) + ")";
            else if constexpr (std::is_same_v<T, FullGrid>) return "FullGrid";
            else if constexpr (std::is_same_v<T, DominationRows>)
                return "DominationRows(" + s(t.covered) + "/" + s(t.rows) + ")";
            else return "PagePanel(" + s(t.page) + "," + s(t.arcs) + ")";
        },
        token);
}

// ---------------------------------------------------------------------------

namespace detail {

// Coordinates live on a 1e-6 grid, so a snapped point can be up to
// sqrt(2)/2 * 1e-6 off its circle; two points on one circle twice that.
inline constexpr double kRadiusTolerance = 2e-6;

/// Adjacency restricted to a highlighted edge list.
struct EdgeStructure {
    std::map<Vertex, std::vector<Vertex>> adj;

    explicit EdgeStructure(const std::vector<Edge>& edges) {
        for (const Edge& e : edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
    }

    bool connected() const {
        if (adj.empty()) return true;
        std::map<Vertex, bool> seen;
        std::vector<Vertex> stack{adj.begin()->first};
        seen[stack.back()] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj.at(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return seen.size() == adj.size();
    }
};

/// The highlighted edges as one simple cycle, in traversal order.
inline std::optional<std::vector<Vertex>> highlighted_cycle(const std::vector<Edge>& edges) {
    if (edges.size() < 3) return std::nullopt;
    EdgeStructure s(edges);
    if (s.adj.size() != edges.size() || !s.connected()) return std::nullopt;
    for (const auto& [v, list] : s.adj) {
        if (list.size() != 2) return std::nullopt;
    }
    std::vector<Vertex> order{s.adj.begin()->first};
    Vertex prev = -1;
    while (order.size() < edges.size()) {
        const auto& next = s.adj.at(order.back());
        Vertex y = next[0] != prev ? next[0] : next[1];
        prev = order.back();
        order.push_back(y);
    }
    return order;
}

/// Strictly convex polygon, turning once around.
inline bool convex_polygon(const std::vector<Point>& poly) {
    const std::size_t k = poly.size();
    int sign = 0;
    double turning = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Point a = poly[i], b = poly[(i + 1) % k], c = poly[(i + 2) % k];
        int o = orientation(a, b, c);
        if (o == 0 || (sign != 0 && o != sign)) return false;
        sign = o;
        turning += std::atan2(std::abs(cross(b - a, c - b)), dot(b - a, c - b));
    }
    return std::abs(turning - 2 * std::numbers::pi) < 1e-6;
}

inline bool regular_polygon(const std::vector<Point>& poly) {
    const auto k = static_cast<double>(poly.size());
    Point center{};
    for (const Point& p : poly) center = center + (1.0 / k) * p;
    const double r = distance(poly[0], center);
    if (r <= 0) return false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (std::abs(distance(poly[i], center) - r) > kRadiusTolerance * std::max(1.0, r)) return false;
        if (std::abs(distance(poly[i], poly[(i + 1) % poly.size()]) - distance(poly[0], poly[1])) >
            kRadiusTolerance * std::max(1.0, r)) {
            return false;
        }
    }
    return true;
}

inline void cycle_gists(const NodeLinkLayout& l, std::vector<Gist>& out) {
    auto cycle = highlighted_cycle(l.highlight_edges);
    if (!cycle) return;
    std::vector<Point> poly;
    for (Vertex v : *cycle) poly.push_back(l.positions[v]);
    if (!convex_polygon(poly)) return;
    out.push_back(gist::HighlightedConvexCycle{static_cast<int>(cycle->size()), cycle->size() == l.positions.size()});
    if (!regular_polygon(poly)) return;
    double top = poly[0].y, bottom = poly[0].y;
    for (const Point& p : poly) {
        top = std::max(top, p.y);
        bottom = std::min(bottom, p.y);
    }
    auto count_at = [&](double y) {
        return std::count_if(poly.begin(), poly.end(), [&](const Point& p) { return std::abs(p.y - y) <= kRadiusTolerance; });
    };
    out.push_back(gist::TopmostSingleton{count_at(top) == 1, count_at(bottom) == 1});
}

/// Highlighted edges plus highlighted vertices forming one tree.
struct TreeShape {
    std::vector<Vertex> vertices;
    EdgeStructure structure;
};

inline std::optional<TreeShape> highlighted_tree(const NodeLinkLayout& l) {
    EdgeStructure s(l.highlight_edges);
    std::vector<Vertex> vs;
    for (const auto& [v, list] : s.adj) vs.push_back(v);
    for (Vertex v : l.highlight_vertices) {
        if (!s.adj.contains(v)) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.empty() || vs.size() != l.highlight_edges.size() + 1) return std::nullopt;
    if (!l.highlight_edges.empty() && (s.adj.size() != vs.size() || !s.connected())) return std::nullopt;
    return TreeShape{std::move(vs), std::move(s)};
}

inline std::map<Vertex, int> tree_depths(const TreeShape& t, Vertex root) {
    std::map<Vertex, int> depth{{root, 0}};
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto it = t.structure.adj.find(queue[i]);
        if (it == t.structure.adj.end()) continue;
        for (Vertex y : it->second) {
            if (!depth.contains(y)) {
                depth[y] = depth[queue[i]] + 1;
                queue.push_back(y);
            }
        }
    }
    return depth;
}

inline void tree_gists(const NodeLinkLayout& l, std::vector<Gist>& out) {
    auto tree = highlighted_tree(l);
    if (!tree) return;
    const auto& pos = l.positions;
    // root: a tree vertex around which every tree vertex sits on the circle of its depth
    for (Vertex root : tree->vertices) {
        auto depth = tree_depths(*tree, root);
        // every level on one circle around the root, circles growing with depth
        std::map<int, double> ring;
        int levels = 0;
        for (const auto& [v, d] : depth) {
            ring.emplace(d, distance(pos[root], pos[v]));
            levels = std::max(levels, d + 1);
        }
        bool concentric = true;
        for (const auto& [v, d] : depth) {
            concentric = concentric && std::abs(distance(pos[root], pos[v]) - ring[d]) <= kRadiusTolerance;
        }
        for (int d = 1; d < levels && concentric; ++d) concentric = ring[d] > ring[d - 1] + kRadiusTolerance;
        if (!concentric) continue;
        gist::HighlightedTree token;
        token.levels = levels;
        token.level_sizes.assign(static_cast<std::size_t>(levels), 0);
        for (const auto& [v, d] : depth) ++token.level_sizes[d];
        token.uncovered = static_cast<int>(pos.size()) - static_cast<int>(depth.size());
        token.crossing_free = true;
        const auto& hl = l.highlight_edges;
        for (std::size_t i = 0; i < hl.size() && token.crossing_free; ++i) {
            for (std::size_t j = i + 1; j < hl.size(); ++j) {
                Point a = pos[hl[i].u], b = pos[hl[i].v], c = pos[hl[j].u], d = pos[hl[j].v];
                if (segments_properly_cross(a, b, c, d) || segments_overlap(a, b, c, d)) {
                    token.crossing_free = false;
                    break;
                }
            }
        }
        token.spanning = token.uncovered == 0;
        out.push_back(std::move(token));
        return;
    }
}

inline void path_gists(const NodeLinkLayout& l, std::vector<Gist>& out) {
    if (l.highlight_edges.empty()) return;
    auto tree = highlighted_tree(l);
    if (!tree || tree->structure.adj.size() != tree->vertices.size()) return;
    std::vector<Vertex> ends;
    for (const auto& [v, list] : tree->structure.adj) {
        if (list.size() > 2) return;
        if (list.size() == 1) ends.push_back(v);
    }
    const auto& pos = l.positions;
    double top = pos[0].y;
    for (const Point& p : pos) top = std::max(top, p.y);
    std::vector<int> band(pos.size());
    int deepest = 0;
    for (std::size_t v = 0; v < pos.size(); ++v) {
        band[v] = static_cast<int>(std::floor(top - pos[v].y + 1e-6));
        deepest = std::max(deepest, band[v]);
    }
    Vertex from = band[ends[0]] <= band[ends[1]] ? ends[0] : ends[1];
    Vertex to = from == ends[0] ? ends[1] : ends[0];
    auto depth = tree_depths(*tree, from);
    std::vector<Vertex> path(depth.size());
    for (const auto& [v, d] : depth) path[d] = v;

    std::vector<int> band_size(static_cast<std::size_t>(deepest + 1), 0);
    for (int b : band) ++band_size[b];
    for (int d = 0; d <= deepest; ++d) {
        if (band_size[d] > 0) out.push_back(gist::LevelBand{d, band_size[d]});
    }
    gist::HighlightedPath token{from, to, static_cast<int>(path.size()) - 1};
    token.descending = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        token.descending = token.descending && band[path[i + 1]] == band[path[i]] + 1;
    }
    token.root_alone = band[from] == 0 && band_size[0] == 1;
    token.edges_span_one_band = std::all_of(l.edges.begin(), l.edges.end(),
                                            [&](const Edge& e) { return std::abs(band[e.u] - band[e.v]) <= 1; });
    out.push_back(token);
}

inline void subgraph_gists(const NodeLinkLayout& l, std::vector<Gist>& out) {
    if (!l.highlight_vertices.empty() || l.highlight_edges.empty()) return;
    const int n = static_cast<int>(l.positions.size());
    Graph sub;
    try {
        sub = Graph(n, l.highlight_edges);
    } catch (const std::invalid_argument&) {
        return;
    }
    int kappa = 0;
    while (kappa + 1 < n && is_k_connected(sub, kappa + 1)) ++kappa;
    out.push_back(gist::HighlightedSubgraph{n, sub.m(), kappa});
}

inline void separation_gists(const NodeLinkLayout& l, std::vector<Gist>& out) {
    const auto& pos = l.positions;
    const int n = static_cast<int>(pos.size());
    const bool has_highlight = !l.highlight_vertices.empty() || !l.highlight_edges.empty();
    std::vector<bool> strip(static_cast<std::size_t>(n), false);
    for (Vertex v : l.highlight_vertices) strip[v] = true;
    const double floor = separation_floor(pos);
    std::vector<Vertex> rest;
    double rest_low = std::numeric_limits<double>::infinity();
    double strip_high = -std::numeric_limits<double>::infinity();
    for (Vertex v = 0; v < n; ++v) {
        if (strip[v]) {
            strip_high = std::max(strip_high, pos[v].y);
        } else {
            rest.push_back(v);
            rest_low = std::min(rest_low, pos[v].y);
        }
    }
    if (has_highlight && (l.highlight_vertices.empty() || strip_high > rest_low - floor)) return;
    if (rest.size() < 2) return;

    std::sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
        return pos[a].x != pos[b].x ? pos[a].x < pos[b].x : a < b;
    });
    const double width = pos[rest.back()].x - pos[rest.front()].x;
    const double gap = std::max(floor, 0.25 * width);
    std::vector<int> group(static_cast<std::size_t>(n), -1);
    int groups = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (i > 0 && pos[rest[i]].x - pos[rest[i - 1]].x < gap) {
            group[rest[i]] = group[rest[i - 1]];
        } else {
            group[rest[i]] = groups++;
        }
    }
    // groups joined by a drawn edge are one cluster
    std::vector<int> parent(static_cast<std::size_t>(groups));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : l.edges) {
        if (group[e.u] >= 0 && group[e.v] >= 0) parent[find(group[e.u])] = find(group[e.v]);
    }
    std::vector<int> size(static_cast<std::size_t>(groups), 0);
    for (Vertex v : rest) ++size[find(group[v])];
    for (int g = 0; g < groups; ++g) {
        if (find(g) == g) out.push_back(gist::SeparatedGroup{size[g]});
    }
    if (!l.highlight_vertices.empty()) out.push_back(gist::StripVertices{static_cast<int>(l.highlight_vertices.size())});
}

inline bool layout_indices_ok(const NodeLinkLayout& l) {
    const int n = static_cast<int>(l.positions.size());
    auto ok = [&](Vertex v) { return v >= 0 && v < n; };
    for (const Edge& e : l.edges)
        if (!ok(e.u) || !ok(e.v)) return false;
    for (const Edge& e : l.highlight_edges)
        if (!ok(e.u) || !ok(e.v)) return false;
    return std::all_of(l.highlight_vertices.begin(), l.highlight_vertices.end(), ok);
}

inline MentalModel nodelink_model(const NodeLinkLayout& l) {
    MentalModel m{{static_cast<int>(l.positions.size()), static_cast<int>(l.edges.size())}, {}};
    if (l.positions.empty() || !layout_indices_ok(l)) return m;
    separation_gists(l, m.components);
    cycle_gists(l, m.components);
    tree_gists(l, m.components);
    path_gists(l, m.components);
    subgraph_gists(l, m.components);
    return m;
}

inline MentalModel matrix_model(const MatrixLayout& l) {
    const int n = static_cast<int>(l.order.size());
    MentalModel m{{n, static_cast<int>(l.edges.size())}, {}};
    if (!is_permutation_of(l.order, n) || static_cast<int>(l.widths.size()) != n) return m;
    std::vector<int> index(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) index[l.order[i]] = i;
    std::vector<std::uint8_t> filled(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : l.edges) {
        if (e.u < 0 || e.v >= n) continue;
        filled[index[e.u] * n + index[e.v]] = filled[index[e.v] * n + index[e.u]] = 1;
    }
    auto cell = [&](int i, int j) { return filled[static_cast<std::size_t>(i) * n + j] != 0; };
    auto marked = [&](int i, int j, MarkClass cls) {
        return std::any_of(l.marks.begin(), l.marks.end(), [&](const CellMark& c) {
            return c.cls == cls && std::min(c.row, c.col) == i && std::max(c.row, c.col) == j;
        });
    };

    int run = 0;
    while (run + 1 < n && marked(run, run + 1, MarkClass::Evidence)) ++run;
    if (run > 0) m.components.push_back(gist::DiagonalRun{run, run == n - 1});
    const bool uniform = std::all_of(l.widths.begin(), l.widths.end(), [&](int w) { return w == l.widths[0]; });
    if (run >= 2 && marked(0, run, MarkClass::Evidence)) {
        if (!uniform) {
            bool alternating = true;
            for (int i = 0; i < n; ++i) alternating = alternating && l.widths[i] == (i % 2 == 0 ? kThickWidth : kThinWidth);
            m.components.push_back(gist::MarkedCell{run, l.widths[0] == l.widths[run], alternating});
        } else if (run == n - 1) {
            m.components.push_back(gist::CornerCellPair{});
        } else {
            m.components.push_back(gist::ClosingCell{run});
        }
    }
    for (const MatrixBlock& b : l.blocks) {
        if (b.begin < 0 || b.end > n || b.begin >= b.end) continue;
        if (b.expect == BlockExpect::Dominating) {
            gist::DominationRows rows{b.end - b.begin, n - (b.end - b.begin), 0};
            for (int r = 0; r < n; ++r) {
                if (r >= b.begin && r < b.end) continue;
                for (int c = b.begin; c < b.end; ++c) {
                    if (cell(r, c)) {
                        ++rows.covered;
                        break;
                    }
                }
            }
            m.components.push_back(rows);
            continue;
        }
        const bool want = b.expect == BlockExpect::Filled;
        bool ok = true;
        for (int i = b.begin; i < b.end && ok; ++i)
            for (int j = i + 1; j < b.end && ok; ++j) ok = cell(i, j) == want;
        if (!ok) continue;
        if (want) m.components.push_back(gist::FilledBlock{b.begin, b.end});
        else m.components.push_back(gist::EmptyBlock{b.begin, b.end});
    }
    for (const CellMark& c : l.marks) {
        if (c.cls != MarkClass::BlockBoundary || c.row < 0 || c.col < 0 || c.row >= n || c.col >= n || c.row == c.col) continue;
        if (!cell(c.row, c.col)) m.components.push_back(gist::MissingCell{std::min(c.row, c.col), std::max(c.row, c.col)});
    }
    long long all_cells = static_cast<long long>(n) * (n - 1) / 2;
    long long drawn = 0;
    for (std::size_t i = 0; i < filled.size(); ++i) drawn += filled[i];
    if (drawn / 2 == all_cells) m.components.push_back(gist::FullGrid{});
    return m;
}

inline MentalModel book_model(const BookLayout& l) {
    const int n = static_cast<int>(l.order.size());
    MentalModel m{{n, static_cast<int>(l.edges.size())}, {}};
    if (!is_permutation_of(l.order, n) || l.k < 1) return m;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[l.order[i]] = i;
    for (int page = 0; page < l.k; ++page) {
        std::vector<std::pair<int, int>> arcs;
        for (const PagedEdge& p : l.edges) {
            if (p.page != page || p.edge.u < 0 || p.edge.v >= n) continue;
            arcs.emplace_back(std::min(pos[p.edge.u], pos[p.edge.v]), std::max(pos[p.edge.u], pos[p.edge.v]));
        }
        gist::PagePanel panel{page, static_cast<int>(arcs.size()), true, true};
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            for (std::size_t j = i + 1; j < arcs.size(); ++j) {
                auto [a, b] = arcs[i];
                auto [c, d] = arcs[j];
                if (arcs_conflict(a, b, c, d, BookDiscipline::Stack)) panel.interleave_free = false;
                if (arcs_conflict(a, b, c, d, BookDiscipline::Queue)) panel.nesting_free = false;
            }
        }
        m.components.push_back(panel);
    }
    return m;
}

}  // namespace detail

/// Deterministic gist extraction. Throws UnrecognizedGist when nothing salient is found.
inline MentalModel extract_mental_model(const Layout& layout) {
    MentalModel m = std::visit(
        [](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, NodeLinkLayout>) return detail::nodelink_model(l);
            else if constexpr (std::is_same_v<L, MatrixLayout>) return detail::matrix_model(l);
            else return detail::book_model(l);
        },
        layout);
    if (m.components.empty()) throw UnrecognizedGist("no salient component in the " + std::string(to_string(style_of(layout))) + " drawing");
    return m;
}

}  // namespace graphtrials
