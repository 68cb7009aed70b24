#pragma once

// Deliberately wrong certificates for soundness testing. Every mutation
// yields a certificate that the verifier or the judge must reject.

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

#include "graphtrials/errors.hpp"
#include "graphtrials/evidence.hpp"
#include "graphtrials/layout.hpp"
#include "graphtrials/verify.hpp"

namespace graphtrials {

enum class MutationKind {
    DeleteEvidenceEdge,  // edge removed from the graph, still drawn
    HideEdge,            // new edge drawn straight through a third vertex
    MarkNonEdgeCell,     // evidence mark on an empty matrix cell
    BreakParity,         // one row width flipped in a parity matrix
    RemoveCornerMark,    // closing mark of a diagonal run removed
    BookInterleave,      // an edge moved so that two arcs clash on a page
};

inline constexpr MutationKind kAllMutations[] = {
    MutationKind::DeleteEvidenceEdge, MutationKind::HideEdge,         MutationKind::MarkNonEdgeCell,
    MutationKind::BreakParity,        MutationKind::RemoveCornerMark, MutationKind::BookInterleave,
};

inline std::string_view to_string(MutationKind k) {
    switch (k) {
        case MutationKind::DeleteEvidenceEdge: return "delete_evidence_edge";
        case MutationKind::HideEdge: return "hide_edge";
        case MutationKind::MarkNonEdgeCell: return "mark_non_edge_cell";
        case MutationKind::BreakParity: return "break_parity";
        case MutationKind::RemoveCornerMark: return "remove_corner_mark";
        case MutationKind::BookInterleave: return "book_interleave";
    }
    return "";
}

/// Mutations that make sense for a layout style.
inline std::vector<MutationKind> mutations_for(LayoutStyle style) {
    switch (style) {
        case LayoutStyle::NodeLink: return {MutationKind::DeleteEvidenceEdge, MutationKind::HideEdge};
        case LayoutStyle::Matrix:
            return {MutationKind::DeleteEvidenceEdge, MutationKind::MarkNonEdgeCell, MutationKind::BreakParity,
                    MutationKind::RemoveCornerMark};
        case LayoutStyle::Book: return {MutationKind::DeleteEvidenceEdge, MutationKind::BookInterleave};
    }
    return {};
}

namespace detail {

template <class T>
const T& pick(const std::vector<T>& items, std::mt19937_64& rng) {
    return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

/// Edges the evidence visibly rests on; falls back to all graph edges.
inline std::vector<Edge> evidence_edges(const Certificate& c) {
    std::vector<Edge> out;
    if (const auto* l = std::get_if<NodeLinkLayout>(&c.layout)) {
        out = l->highlight_edges;
    } else if (const auto* l = std::get_if<MatrixLayout>(&c.layout)) {
        for (const CellMark& m : l->marks) {
            if (m.cls == MarkClass::Evidence && m.row >= 0 && m.col >= 0 &&
                m.row < static_cast<int>(l->order.size()) && m.col < static_cast<int>(l->order.size())) {
                out.emplace_back(l->order[m.row], l->order[m.col]);
            }
        }
    }
    std::erase_if(out, [&](const Edge& e) { return !c.graph.has_edge(e.u, e.v); });
    if (out.empty()) out = c.graph.edges();
    return out;
}

inline Certificate delete_evidence_edge(Certificate c, std::mt19937_64& rng) {
    auto edges = evidence_edges(c);
    if (edges.empty()) throw MutationInapplicable("graph has no edges");
    c.graph = c.graph.without_edge(pick(edges, rng));
    return c;
}

inline Certificate hide_edge(Certificate c, std::mt19937_64& rng) {
    auto* l = std::get_if<NodeLinkLayout>(&c.layout);
    if (!l) throw MutationInapplicable("hide_edge needs a node-link layout");
    const int n = c.graph.n();
    std::vector<Edge> non_edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!c.graph.has_edge(a, b)) non_edges.emplace_back(a, b);
    if (non_edges.empty() || n < 3) throw MutationInapplicable("no room for a hidden edge");
    // prefer the scenario of an edge between both sides hidden behind a cut vertex
    Edge hidden = pick(non_edges, rng);
    Vertex behind = -1;
    if (const auto* cut = std::get_if<VertexCut>(&c.evidence); cut && !cut->cut.empty()) {
        std::vector<Edge> across;
        for (const Edge& e : non_edges) {
            bool ua = std::count(cut->a.begin(), cut->a.end(), e.u) > 0, va = std::count(cut->a.begin(), cut->a.end(), e.v) > 0;
            bool ub = std::count(cut->b.begin(), cut->b.end(), e.u) > 0, vb = std::count(cut->b.begin(), cut->b.end(), e.v) > 0;
            if ((ua && vb) || (ub && va)) across.push_back(e);
        }
        if (!across.empty()) {
            hidden = pick(across, rng);
            behind = pick(cut->cut, rng);
        }
    }
    if (behind < 0) {
        std::vector<Vertex> others;
        for (Vertex x = 0; x < n; ++x) {
            if (x != hidden.u && x != hidden.v) others.push_back(x);
        }
        behind = pick(others, rng);
    }
    c.graph = c.graph.with_edge(hidden);
    l->edges.push_back(hidden);
    std::sort(l->edges.begin(), l->edges.end());
    l->positions[behind] = snap(0.5 * (l->positions[hidden.u] + l->positions[hidden.v]));
    return c;
}

inline Certificate mark_non_edge_cell(Certificate c, std::mt19937_64& rng) {
    auto* l = std::get_if<MatrixLayout>(&c.layout);
    if (!l) throw MutationInapplicable("mark_non_edge_cell needs a matrix layout");
    const int n = static_cast<int>(l->order.size());
    std::vector<CellMark> empty;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!c.graph.has_edge(l->order[i], l->order[j])) empty.push_back({i, j, MarkClass::Evidence});
    if (empty.empty()) throw MutationInapplicable("matrix has no empty cell");
    l->marks.push_back(pick(empty, rng));
    std::sort(l->marks.begin(), l->marks.end());
    return c;
}

/// Closing column of the marked diagonal run, or -1.
inline int closing_index(const MatrixLayout& l) {
    auto marked = [&](int i, int j) {
        return std::any_of(l.marks.begin(), l.marks.end(), [&](const CellMark& m) {
            return m.cls == MarkClass::Evidence && m.row == i && m.col == j;
        });
    };
    int run = 0;
    while (run + 1 < static_cast<int>(l.order.size()) && marked(run, run + 1)) ++run;
    return run >= 2 && marked(0, run) ? run : -1;
}

inline Certificate break_parity(Certificate c) {
    auto* l = std::get_if<MatrixLayout>(&c.layout);
    if (!l || !std::holds_alternative<Cycle>(c.evidence)) throw MutationInapplicable("break_parity needs a cycle matrix");
    const bool uniform = std::all_of(l->widths.begin(), l->widths.end(), [&](int w) { return w == l->widths.front(); });
    const int close = closing_index(*l);
    if (uniform || close < 0) throw MutationInapplicable("matrix has no parity widths");
    int& w = l->widths[close];
    w = w == kThickWidth ? kThinWidth : kThickWidth;
    return c;
}

inline Certificate remove_corner_mark(Certificate c) {
    auto* l = std::get_if<MatrixLayout>(&c.layout);
    if (!l || !std::holds_alternative<Cycle>(c.evidence)) {
        throw MutationInapplicable("remove_corner_mark needs a cycle matrix");
    }
    const int close = closing_index(*l);
    if (close < 0) throw MutationInapplicable("matrix has no closing mark");
    std::erase_if(l->marks, [&](const CellMark& m) { return m.row == 0 && m.col == close; });
    return c;
}

inline Certificate book_interleave(Certificate c, std::mt19937_64& rng) {
    auto* l = std::get_if<BookLayout>(&c.layout);
    auto* ev = std::get_if<BookEmbedding>(&c.evidence);
    if (!l || !ev) throw MutationInapplicable("book_interleave needs a book certificate");
    const int n = static_cast<int>(l->order.size());
    auto clash_moves = [&](const std::vector<Vertex>& order) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::vector<std::pair<std::size_t, int>> moves;  // (edge index, target page)
        for (std::size_t i = 0; i < l->edges.size(); ++i) {
            for (std::size_t j = 0; j < l->edges.size(); ++j) {
                if (i == j) continue;
                const Edge& e = l->edges[i].edge;
                const Edge& f = l->edges[j].edge;
                if (arcs_conflict(std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v]), std::min(pos[f.u], pos[f.v]),
                                  std::max(pos[f.u], pos[f.v]), l->discipline)) {
                    moves.emplace_back(i, l->edges[j].page);
                }
            }
        }
        return moves;
    };
    auto moves = clash_moves(l->order);
    if (moves.empty()) {
        // no clashing pair under this spine: reorder the spine until one appears
        std::vector<Vertex> order = l->order;
        for (int attempt = 0; attempt < 64 && moves.empty(); ++attempt) {
            std::shuffle(order.begin(), order.end(), rng);
            moves = clash_moves(order);
        }
        if (moves.empty()) throw MutationInapplicable("no two arcs can clash");
        l->order = order;
    }
    auto [index, page] = pick(moves, rng);
    l->edges[index].page = page;
    ev->order = l->order;
    ev->pages = l->edges;
    return c;
}

}  // namespace detail

/// Applies `kind` with randomness from `rng`. Throws MutationInapplicable.
inline Certificate mutate_certificate(const Certificate& c, MutationKind kind, std::mt19937_64& rng) {
    switch (kind) {
        case MutationKind::DeleteEvidenceEdge: return detail::delete_evidence_edge(c, rng);
        case MutationKind::HideEdge: return detail::hide_edge(c, rng);
        case MutationKind::MarkNonEdgeCell: return detail::mark_non_edge_cell(c, rng);
        case MutationKind::BreakParity: return detail::break_parity(c);
        case MutationKind::RemoveCornerMark: return detail::remove_corner_mark(c);
        case MutationKind::BookInterleave: return detail::book_interleave(c, rng);
    }
    throw MutationInapplicable("unknown mutation");
}

}  // namespace graphtrials
