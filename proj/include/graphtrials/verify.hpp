#pragma once

// The defense: checks that a certificate drawing shows exactly the graph and
// is readable, and that the embedded evidence really proves the assertion.

#include <algorithm>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "graphtrials/connectivity.hpp"
#include "graphtrials/evidence.hpp"
#include "graphtrials/geometry.hpp"
#include "graphtrials/graph.hpp"
#include "graphtrials/layout.hpp"

namespace graphtrials {

struct Certificate {
    Graph graph;
    Assertion assertion;
    Evidence evidence;
    Layout layout;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Stable machine-readable code plus a human hint.
struct Violation {
    std::string code;
    std::string detail;
    friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

namespace detail {

inline std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

inline bool valid_vertex(const Graph& g, Vertex v) { return v >= 0 && v < g.n(); }

/// Drawn edge list must equal the graph's edge set.
inline void check_drawn_edges(const Graph& g, const std::vector<Edge>& drawn, Violations& out) {
    std::set<Edge> seen;
    for (const Edge& e : drawn) {
        if (!valid_vertex(g, e.u) || !valid_vertex(g, e.v) || e.u == e.v) {
            out.push_back({"invalid_edge", edge_text(e)});
        } else if (!seen.insert(e).second) {
            out.push_back({"duplicate_edge", edge_text(e)});
        } else if (!g.has_edge(e.u, e.v)) {
            out.push_back({"extra_edge", edge_text(e)});
        }
    }
    for (const Edge& e : g.edges()) {
        if (!seen.contains(e)) out.push_back({"missing_edge", edge_text(e)});
    }
}

inline void check_permutation(const std::vector<Vertex>& order, int n, Violations& out) {
    if (!is_permutation_of(order, n)) out.push_back({"order_not_permutation", ""});
}

inline void faithful_nodelink(const Graph& g, const NodeLinkLayout& l, Violations& out) {
    const int drawn = static_cast<int>(l.positions.size());
    if (drawn < g.n()) out.push_back({"missing_vertex", std::to_string(g.n() - drawn) + " vertices not drawn"});
    if (drawn > g.n()) out.push_back({"extra_vertex", std::to_string(drawn - g.n()) + " vertices not in graph"});
    check_drawn_edges(g, l.edges, out);
    for (Vertex v : l.highlight_vertices) {
        if (!valid_vertex(g, v)) out.push_back({"bad_highlight", "vertex " + std::to_string(v)});
    }
    for (const Edge& e : l.highlight_edges) {
        if (!g.has_edge(e.u, e.v)) out.push_back({"bad_highlight", "edge " + edge_text(e)});
    }
    if (drawn != g.n()) return;
    std::vector<Edge> valid_edges;
    for (const Edge& e : l.edges) {
        if (valid_vertex(g, e.u) && valid_vertex(g, e.v)) valid_edges.push_back(e);
    }
    for (const auto& d : geometry_defects(l.positions, valid_edges)) {
        switch (d.kind) {
            case GeometryDefect::Kind::NonFinite:
                out.push_back({"non_finite_position", "vertex " + std::to_string(d.vertex)});
                break;
            case GeometryDefect::Kind::Coincident:
            case GeometryDefect::Kind::TooClose:
                out.push_back({"vertices_too_close", std::to_string(d.vertex) + "," + std::to_string(d.other)});
                break;
            case GeometryDefect::Kind::Occluded:
                out.push_back({"occluded_vertex", std::to_string(d.vertex) + " on " + edge_text(d.edge)});
                break;
        }
    }
}

inline void faithful_matrix(const Graph& g, const MatrixLayout& l, Violations& out) {
    const int n = g.n();
    check_permutation(l.order, n, out);
    if (static_cast<int>(l.widths.size()) != n ||
        std::any_of(l.widths.begin(), l.widths.end(), [](int w) { return w <= 0; })) {
        out.push_back({"bad_widths", ""});
    }
    check_drawn_edges(g, l.edges, out);
    if (!is_permutation_of(l.order, n)) return;
    auto cell_edge = [&](int i, int j) { return g.has_edge(l.order[i], l.order[j]); };
    for (const CellMark& m : l.marks) {
        if (m.row < 0 || m.col < 0 || m.row >= n || m.col >= n || m.row == m.col) {
            out.push_back({"mark_out_of_range", std::to_string(m.row) + "," + std::to_string(m.col)});
        } else if (m.cls == MarkClass::Evidence && !cell_edge(m.row, m.col)) {
            out.push_back({"evidence_mark_on_non_edge", std::to_string(m.row) + "," + std::to_string(m.col)});
        } else if (m.cls == MarkClass::BlockBoundary && cell_edge(m.row, m.col)) {
            out.push_back({"boundary_mark_on_edge", std::to_string(m.row) + "," + std::to_string(m.col)});
        }
    }
    for (const MatrixBlock& b : l.blocks) {
        const std::string where = "[" + std::to_string(b.begin) + "," + std::to_string(b.end) + ")";
        if (b.begin < 0 || b.end > n || b.begin >= b.end) {
            out.push_back({"bad_block", where});
            continue;
        }
        bool consistent = true;
        if (b.expect == BlockExpect::Dominating) {
            for (int r = 0; r < n && consistent; ++r) {
                if (r >= b.begin && r < b.end) continue;
                bool hit = false;
                for (int c = b.begin; c < b.end && !hit; ++c) hit = cell_edge(r, c);
                consistent = hit;
            }
        } else {
            for (int i = b.begin; i < b.end && consistent; ++i)
                for (int j = i + 1; j < b.end && consistent; ++j)
                    consistent = cell_edge(i, j) == (b.expect == BlockExpect::Filled);
        }
        if (!consistent) out.push_back({"block_inconsistent", where});
    }
}

inline void faithful_book(const Graph& g, const BookLayout& l, Violations& out) {
    check_permutation(l.order, g.n(), out);
    if (l.k < 1) out.push_back({"bad_page_count", std::to_string(l.k)});
    std::vector<Edge> drawn;
    for (const PagedEdge& p : l.edges) {
        drawn.push_back(p.edge);
        if (p.page < 0 || p.page >= l.k) out.push_back({"page_out_of_range", edge_text(p.edge)});
    }
    Violations edge_issues;
    check_drawn_edges(g, drawn, edge_issues);
    for (auto& v : edge_issues) {
        if (v.code == "missing_edge") v.code = "unassigned_edge";
        out.push_back(std::move(v));
    }
}

}  // namespace detail

/// Drawing-vs-graph checks. Empty result means the drawing is faithful and readable.
inline Violations verify_faithfulness(const Certificate& c) {
    Violations out;
    std::visit(
        [&](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, NodeLinkLayout>) detail::faithful_nodelink(c.graph, l, out);
            else if constexpr (std::is_same_v<L, MatrixLayout>) detail::faithful_matrix(c.graph, l, out);
            else detail::faithful_book(c.graph, l, out);
        },
        c.layout);
    return out;
}

// ---------------------------------------------------------------------------
// Evidence validity

namespace detail {

class EvidenceCheck {
public:
    EvidenceCheck(const Graph& g, const Assertion& a) : g_(g), a_(a) {}

    Violations run(const Evidence& ev) {
        std::visit([&](const auto& w) { check(w); }, ev);
        return std::move(out_);
    }

private:
    using K = AssertionKind;

    void fail(std::string code, std::string detail = {}) { out_.push_back({std::move(code), std::move(detail)}); }

    bool expect_kind(std::initializer_list<K> kinds) {
        if (std::find(kinds.begin(), kinds.end(), a_.kind) != kinds.end()) return true;
        fail("evidence_kind_mismatch", std::string(to_string(a_.kind)));
        return false;
    }

    /// Distinct in-range vertices.
    bool vertex_list(const std::vector<Vertex>& vs, const char* code) {
        std::vector<bool> seen(static_cast<std::size_t>(g_.n()), false);
        for (Vertex v : vs) {
            if (!valid_vertex(g_, v) || seen[v]) {
                fail(code, "vertex " + std::to_string(v));
                return false;
            }
            seen[v] = true;
        }
        return true;
    }

    /// a, b (and optionally cut) are disjoint, nonempty sides covering all vertices with no a-b edge.
    void separation(const std::vector<Vertex>& a, const std::vector<Vertex>& b, const std::vector<Vertex>& cut) {
        std::vector<Vertex> all = a;
        all.insert(all.end(), b.begin(), b.end());
        all.insert(all.end(), cut.begin(), cut.end());
        if (a.empty() || b.empty()) return fail("empty_side");
        if (!vertex_list(all, "sides_overlap")) return;
        if (static_cast<int>(all.size()) != g_.n()) return fail("sides_not_covering");
        for (Vertex x : a)
            for (Vertex y : b)
                if (g_.has_edge(x, y)) return fail("separation_crossed", edge_text(Edge(x, y)));
    }

    void check(const SpanTree& t) {
        if (!expect_kind({K::Connected})) return;
        const int n = g_.n();
        if (static_cast<int>(t.parent.size()) != n || static_cast<int>(t.depth.size()) != n || !valid_vertex(g_, t.root)) {
            return fail("tree_not_spanning");
        }
        if (t.parent[t.root] != -1 || t.depth[t.root] != 0) return fail("tree_bad_root");
        for (Vertex v = 0; v < n; ++v) {
            if (v == t.root) continue;
            Vertex p = t.parent[v];
            if (!valid_vertex(g_, p)) return fail("tree_not_spanning", "vertex " + std::to_string(v));
            if (!g_.has_edge(v, p)) return fail("tree_edge_missing", edge_text(Edge(v, p)));
            // depth strictly decreasing towards the root rules out cycles
            if (t.depth[v] != t.depth[p] + 1) return fail("tree_depth_inconsistent", "vertex " + std::to_string(v));
        }
    }

    void check(const Partition& p) {
        if (!expect_kind({K::NotConnected})) return;
        separation(p.a, p.b, {});
    }

    void check(const VertexCut& c) {
        if (!expect_kind({K::NotKConnected})) return;
        if (static_cast<int>(c.cut.size()) > a_.k - 1) fail("cut_too_large", std::to_string(c.cut.size()));
        separation(c.a, c.b, c.cut);
    }

    void check(const Cycle& c) {
        if (!expect_kind({K::HamiltonianCycle, K::LengthKCycle, K::NotBipartite})) return;
        const auto& vs = c.vertices;
        const int len = static_cast<int>(vs.size());
        if (len < 3) return fail("cycle_too_short");
        if (!vertex_list(vs, "cycle_repeats_vertex")) return;
        for (int i = 0; i < len; ++i) {
            if (!g_.has_edge(vs[i], vs[(i + 1) % len])) return fail("cycle_edge_missing", edge_text(Edge(vs[i], vs[(i + 1) % len])));
        }
        if (a_.kind == K::HamiltonianCycle && len != g_.n()) fail("cycle_not_spanning");
        if (a_.kind == K::LengthKCycle && len != a_.k) fail("cycle_wrong_length", std::to_string(len));
        if (a_.kind == K::NotBipartite && len % 2 == 0) fail("cycle_even");
    }

    void check(const Coloring& c) {
        if (!expect_kind({K::KColorable})) return;
        if (static_cast<int>(c.colors.size()) != g_.n()) return fail("coloring_incomplete");
        for (int col : c.colors) {
            if (col < 0 || col >= a_.k) return fail("coloring_too_many_colors", std::to_string(col));
        }
        for (const Edge& e : g_.edges()) {
            if (c.colors[e.u] == c.colors[e.v]) return fail("coloring_improper", edge_text(e));
        }
    }

    void check(const MissingEdge& m) {
        if (!expect_kind({K::NotComplete})) return;
        if (!valid_vertex(g_, m.u) || !valid_vertex(g_, m.v) || m.u == m.v) return fail("missing_edge_invalid");
        if (g_.has_edge(m.u, m.v)) fail("missing_edge_present", edge_text(Edge(m.u, m.v)));
    }

    void check(const CompleteWitness&) {
        if (!expect_kind({K::Complete})) return;
        if (!g_.is_complete()) fail("graph_not_complete");
    }

    void check(const WitnessSet& s) {
        if (!expect_kind({K::Clique, K::IndependentSet, K::DominatingSet})) return;
        const SetKind want = a_.kind == K::Clique ? SetKind::Clique
                           : a_.kind == K::IndependentSet ? SetKind::Independent
                                                          : SetKind::Dominating;
        if (s.kind != want) return fail("evidence_kind_mismatch", std::string(to_string(s.kind)));
        if (static_cast<int>(s.vertices.size()) != a_.k) return fail("set_wrong_size", std::to_string(s.vertices.size()));
        if (!vertex_list(s.vertices, "set_repeats_vertex")) return;
        if (want == SetKind::Dominating) {
            if (!dominates(g_, s.vertices)) fail("set_not_dominating");
            return;
        }
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
                if (g_.has_edge(s.vertices[i], s.vertices[j]) != (want == SetKind::Clique)) {
                    return fail(want == SetKind::Clique ? "set_not_clique" : "set_not_independent",
                                edge_text(Edge(s.vertices[i], s.vertices[j])));
                }
    }

    void check(const BfsWitness& w) {
        if (!expect_kind({K::DistanceEquals, K::DiameterGreater})) return;
        const int n = g_.n();
        if (static_cast<int>(w.depth.size()) != n || static_cast<int>(w.parent.size()) != n || w.path.empty() ||
            !valid_vertex(g_, w.root)) {
            return fail("bfs_malformed");
        }
        if (w.depth[w.root] != 0) return fail("bfs_bad_root");
        for (Vertex v = 0; v < n; ++v) {
            if (w.depth[v] < 0 && w.depth[v] != kUnreached) return fail("bfs_depth_inconsistent");
            if (v != w.root && w.depth[v] == 0) return fail("bfs_bad_root");
        }
        for (const Edge& e : g_.edges()) {
            int du = w.depth[e.u], dv = w.depth[e.v];
            if ((du == kUnreached) != (dv == kUnreached) || std::abs(du - dv) > 1) {
                return fail("bfs_depth_inconsistent", edge_text(e));
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (w.depth[v] <= 0) continue;
            const auto& nb = g_.neighbors(v);
            bool has_up = std::any_of(nb.begin(), nb.end(), [&](Vertex y) { return w.depth[y] == w.depth[v] - 1; });
            if (!has_up) return fail("bfs_depth_inconsistent", "vertex " + std::to_string(v));
        }
        if (w.path.front() != w.root) return fail("bfs_path_invalid");
        for (std::size_t i = 0; i < w.path.size(); ++i) {
            Vertex x = w.path[i];
            if (!valid_vertex(g_, x) || w.depth[x] != static_cast<int>(i)) return fail("bfs_path_invalid");
            if (i > 0 && !g_.has_edge(w.path[i - 1], x)) return fail("bfs_path_invalid");
        }
        if (a_.kind == K::DistanceEquals) {
            if (w.root != a_.u || w.target() != a_.v) fail("bfs_wrong_endpoints");
            if (w.length() != a_.k) fail("bfs_wrong_length", std::to_string(w.length()));
        } else if (w.length() <= a_.k) {
            fail("bfs_too_short", std::to_string(w.length()));
        }
    }

    void check(const SparseSubgraph& s) {
        if (!expect_kind({K::KConnectedSparse})) return;
        if (s.k != a_.k) return fail("sparse_wrong_k");
        std::set<Edge> seen;
        for (const Edge& e : s.edges) {
            if (!g_.has_edge(e.u, e.v) || !seen.insert(e).second) return fail("sparse_not_subgraph", edge_text(e));
        }
        if (static_cast<long long>(s.edges.size()) > static_cast<long long>(s.k) * (g_.n() - 1)) {
            fail("sparse_too_many_edges", std::to_string(s.edges.size()));
        }
        if (!is_k_connected(g_.spanning_subgraph(s.edges), s.k)) fail("sparse_not_k_connected");
    }

    void check(const BookEmbedding& b) {
        if (!expect_kind({K::StackLeq, K::QueueLeq})) return;
        const auto want = a_.kind == K::StackLeq ? BookDiscipline::Stack : BookDiscipline::Queue;
        if (b.discipline != want) return fail("book_wrong_discipline");
        if (b.k < 1 || b.k > a_.k) return fail("book_too_many_pages", std::to_string(b.k));
        if (!is_permutation_of(b.order, g_.n())) return fail("order_not_permutation");
        std::set<Edge> seen;
        for (const PagedEdge& p : b.pages) {
            if (!g_.has_edge(p.edge.u, p.edge.v) || !seen.insert(p.edge).second) return fail("book_bad_edge", edge_text(p.edge));
            if (p.page < 0 || p.page >= b.k) return fail("page_out_of_range", edge_text(p.edge));
        }
        if (static_cast<int>(seen.size()) != g_.m()) return fail("unassigned_edge");
        std::vector<int> pos(static_cast<std::size_t>(g_.n()));
        for (int i = 0; i < g_.n(); ++i) pos[b.order[i]] = i;
        for (std::size_t i = 0; i < b.pages.size(); ++i) {
            for (std::size_t j = i + 1; j < b.pages.size(); ++j) {
                if (b.pages[i].page != b.pages[j].page) continue;
                const Edge& e = b.pages[i].edge;
                const Edge& f = b.pages[j].edge;
                int p0 = std::min(pos[e.u], pos[e.v]), p1 = std::max(pos[e.u], pos[e.v]);
                int q0 = std::min(pos[f.u], pos[f.v]), q1 = std::max(pos[f.u], pos[f.v]);
                if (arcs_conflict(p0, p1, q0, q1, b.discipline)) {
                    return fail(b.discipline == BookDiscipline::Stack ? "interleaving_arcs" : "nesting_arcs",
                                edge_text(e) + " vs " + edge_text(f));
                }
            }
        }
    }

    const Graph& g_;
    const Assertion& a_;
    Violations out_;
};

}  // namespace detail

/// Evidence-specific validity. Empty result means the evidence proves the assertion.
inline Violations verify_evidence(const Certificate& c) {
    try {
        validate(c.assertion, c.graph);
    } catch (const std::invalid_argument& e) {
        return {{"assertion_invalid", e.what()}};
    }
    return detail::EvidenceCheck(c.graph, c.assertion).run(c.evidence);
}

/// Faithfulness followed by evidence validity.
inline Violations verify(const Certificate& c) {
    Violations out = verify_faithfulness(c);
    Violations ev = verify_evidence(c);
    out.insert(out.end(), ev.begin(), ev.end());
    return out;
}

}  // namespace graphtrials
