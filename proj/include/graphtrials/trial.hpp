#pragma once

// The judge: validates an assertion from the mental model alone, counting one
// observation per inspected component. Any doubt means "not convinced".

#include <string>
#include <string_view>
#include <vector>

#include "graphtrials/gist.hpp"
#include "graphtrials/graph.hpp"
#include "graphtrials/verify.hpp"

namespace graphtrials {

struct Verdict {
    bool convinced = false;
    int observations = 0;
    std::string complexity_class;
    std::vector<std::string> reasons;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Perceptual complexity of checking each assertion from its certificate.
inline std::string_view complexity_class(AssertionKind kind) {
    using K = AssertionKind;
    switch (kind) {
        case K::Connected: return "O(n)";
        case K::NotConnected: return "O(1)";
        case K::NotKConnected: return "O(k)";
        case K::KConnectedSparse: return "O(kn)";
        case K::HamiltonianCycle: return "O(1)";
        case K::LengthKCycle: return "O(k)";
        case K::NotBipartite: return "O(1)";
        case K::KColorable: return "O(k)";
        case K::Complete: return "O(1)";
        case K::NotComplete: return "O(1)";
        case K::Clique: return "O(k)";
        case K::IndependentSet: return "O(k)";
        case K::DominatingSet: return "O(n)";
        case K::DistanceEquals: return "O(k)";
        case K::DiameterGreater: return "O(k)";
        case K::StackLeq: return "O(n+m)";
        case K::QueueLeq: return "O(n+m)";
    }
    return "";
}

/// As above, except that a cut of at most one vertex (k <= 2) is seen at a
/// glance like a disconnection.
inline std::string_view complexity_class(const Assertion& a) {
    if (a.kind == AssertionKind::NotKConnected && a.k <= 2) return "O(1)";
    return complexity_class(a.kind);
}

namespace detail {

class JudgeScript {
public:
    JudgeScript(const Assertion& a, const MentalModel& m) : a_(a), m_(m) {}

    Verdict run() {
        using K = AssertionKind;
        switch (a_.kind) {
            case K::Connected: connected(); break;
            case K::NotConnected: separated(0); break;
            case K::NotKConnected: separated(a_.k - 1); break;
            case K::KConnectedSparse: sparse(); break;
            case K::HamiltonianCycle: hamiltonian(); break;
            case K::LengthKCycle: length_cycle(); break;
            case K::NotBipartite: odd_cycle(); break;
            case K::KColorable: color_blocks(); break;
            case K::Complete: require(first<gist::FullGrid>() != nullptr, "gist_absent:full_grid"); break;
            case K::NotComplete: require(first<gist::MissingCell>() != nullptr, "gist_absent:missing_cell"); break;
            case K::Clique: sized_block<gist::FilledBlock>("filled_block"); break;
            case K::IndependentSet: sized_block<gist::EmptyBlock>("empty_block"); break;
            case K::DominatingSet: domination(); break;
            case K::DistanceEquals:
            case K::DiameterGreater: distance(); break;
            case K::StackLeq: pages(true); break;
            case K::QueueLeq: pages(false); break;
        }
        v_.convinced = v_.reasons.empty();
        v_.complexity_class = std::string(complexity_class(a_));
        return v_;
    }

private:
    /// Looks at the first component of type T; one observation.
    template <class T>
    const T* first() {
        ++v_.observations;
        for (const Gist& g : m_.components) {
            if (const T* t = std::get_if<T>(&g)) return t;
        }
        return nullptr;
    }

    template <class T>
    std::vector<const T*> all() {
        std::vector<const T*> out;
        for (const Gist& g : m_.components) {
            if (const T* t = std::get_if<T>(&g)) out.push_back(t);
        }
        return out;
    }

    bool require(bool ok, std::string reason) {
        if (!ok) v_.reasons.push_back(std::move(reason));
        return ok;
    }

    void connected() {
        const auto* tree = first<gist::HighlightedTree>();
        if (!require(tree != nullptr, "gist_absent:highlighted_tree")) return;
        if (!require(tree->spanning && tree->crossing_free, "tree_not_spanning")) return;
        // coverage sweep, one vertex at a time
        int covered = 0;
        for (int size : tree->level_sizes) covered += size;
        v_.observations += m_.canvas.vertices;
        require(covered == m_.canvas.vertices && tree->uncovered == 0, "vertex_uncovered");
    }

    void separated(int max_strip) {
        auto groups = all<gist::SeparatedGroup>();
        v_.observations += 2;
        if (!require(groups.size() >= 2, "gist_absent:separated_groups")) return;
        const auto* strip = first<gist::StripVertices>();
        int count = strip ? strip->count : 0;
        v_.observations += count;
        require(count <= max_strip, "strip_too_large");
    }

    void sparse() {
        const auto* sub = first<gist::HighlightedSubgraph>();
        if (!require(sub != nullptr, "gist_absent:highlighted_subgraph")) return;
        v_.observations += m_.canvas.vertices + sub->edges - 1;
        require(sub->vertices == m_.canvas.vertices, "subgraph_not_spanning");
        require(sub->connectivity >= a_.k, "subgraph_not_k_connected");
        require(static_cast<long long>(sub->edges) <= static_cast<long long>(a_.k) * (m_.canvas.vertices - 1),
                "subgraph_not_sparse");
    }

    /// Diagonal run and its closing cell; returns the cycle length or 0.
    int matrix_cycle() {
        const auto* run = first<gist::DiagonalRun>();
        if (!run) return 0;
        const auto* closing = first<gist::CornerCellPair>();
        if (closing) return run->full ? run->length + 1 : 0;
        for (const auto* c : all<gist::ClosingCell>()) {
            if (c->index == run->length) return run->length + 1;
        }
        return 0;
    }

    void hamiltonian() {
        if (const auto* cycle = first<gist::HighlightedConvexCycle>()) {
            ++v_.observations;
            require(cycle->spanning, "cycle_not_spanning");
            return;
        }
        const auto* run = first<gist::DiagonalRun>();
        if (!require(run != nullptr, "gist_absent:diagonal_run")) return;
        if (!require(run->full, "diagonal_run_incomplete")) return;
        require(first<gist::CornerCellPair>() != nullptr, "gist_absent:corner_cells");
        v_.observations = 2;
    }

    void length_cycle() {
        int length = 0;
        if (const auto* cycle = first<gist::HighlightedConvexCycle>()) {
            length = cycle->length;
        } else {
            length = matrix_cycle();
            v_.observations = 1;
        }
        if (!require(length > 0, "gist_absent:cycle")) return;
        v_.observations += a_.k;  // count the cycle vertices
        require(length == a_.k, "cycle_wrong_length");
    }

    void odd_cycle() {
        if (first<gist::HighlightedConvexCycle>()) {
            const auto* top = first<gist::TopmostSingleton>();
            if (!require(top != nullptr, "gist_absent:topmost_singleton")) return;
            require(top->unique_top && !top->unique_bottom, "cycle_not_odd");
            return;
        }
        v_.observations = 0;
        const auto* run = first<gist::DiagonalRun>();
        if (!require(run != nullptr, "gist_absent:diagonal_run")) return;
        const auto* cell = first<gist::MarkedCell>();
        if (!require(cell != nullptr && cell->index == run->length, "gist_absent:marked_cell")) return;
        require(cell->alternating, "widths_not_alternating");
        require(cell->square, "closing_cell_not_square");
    }

    void color_blocks() {
        auto blocks = all<gist::EmptyBlock>();
        v_.observations += static_cast<int>(blocks.size()) + 1;
        if (!require(!blocks.empty(), "gist_absent:empty_block")) return;
        int next = 0;
        for (const auto* b : blocks) {
            if (b->begin != next) break;
            next = b->end;
        }
        require(next == m_.canvas.vertices, "blocks_not_covering");
        require(static_cast<int>(blocks.size()) <= a_.k, "too_many_blocks");
    }

    template <class Block>
    void sized_block(const char* name) {
        const Block* found = nullptr;
        ++v_.observations;
        for (const auto* b : all<Block>()) {
            if (b->end - b->begin == a_.k) found = b;
        }
        if (!require(found != nullptr, std::string("gist_absent:") + name)) return;
        v_.observations += a_.k;
    }

    void domination() {
        const auto* rows = first<gist::DominationRows>();
        if (!require(rows != nullptr, "gist_absent:domination_rows")) return;
        v_.observations += m_.canvas.vertices;
        require(rows->set_size == a_.k, "set_wrong_size");
        require(rows->covered == rows->rows && rows->rows == m_.canvas.vertices - rows->set_size, "row_not_dominated");
    }

    void distance() {
        const auto* path = first<gist::HighlightedPath>();
        if (!require(path != nullptr, "gist_absent:highlighted_path")) return;
        ++v_.observations;  // the band of the path start
        if (!require(path->descending && path->edges_span_one_band, "bands_inconsistent")) return;
        if (a_.kind == AssertionKind::DistanceEquals) {
            v_.observations += a_.k;
            require(path->from == a_.u && path->to == a_.v, "path_wrong_endpoints");
            require(path->length == a_.k, "path_wrong_length");
        } else {
            v_.observations += std::min(path->length, a_.k + 1);
            require(path->length > a_.k, "path_too_short");
        }
    }

    void pages(bool stack) {
        auto panels = all<gist::PagePanel>();
        int arcs = 0;
        v_.observations += static_cast<int>(panels.size()) + 1;
        if (!require(!panels.empty(), "gist_absent:page_panel")) return;
        for (const auto* p : panels) {
            arcs += p->arcs;
            v_.observations += p->arcs;
            require(stack ? p->interleave_free : p->nesting_free, stack ? "interleaving_arcs" : "nesting_arcs");
        }
        require(static_cast<int>(panels.size()) <= a_.k, "too_many_pages");
        require(arcs == m_.canvas.edges, "arcs_not_covering");
    }

    const Assertion& a_;
    const MentalModel& m_;
    Verdict v_;
};

}  // namespace detail

/// Verdict from the assertion and the mental model only.
inline Verdict judge(const Assertion& a, const MentalModel& m) { return detail::JudgeScript(a, m).run(); }

/// Full trial: the judge only sits if the defense found no violation.
inline Verdict judge(const Certificate& c, const MentalModel& m) {
    Violations violations = verify(c);
    if (!violations.empty()) {
        Verdict v;
        v.complexity_class = std::string(complexity_class(c.assertion));
        for (const auto& x : violations) v.reasons.push_back("unverified:" + x.code);
        return v;
    }
    return judge(c.assertion, m);
}

/// Extraction plus judgement; an unreadable gist is a failed trial.
inline Verdict try_certificate(const Certificate& c) {
    MentalModel m;
    try {
        m = extract_mental_model(c.layout);
    } catch (const UnrecognizedGist&) {
        Verdict v;
        v.complexity_class = std::string(complexity_class(c.assertion));
        v.reasons.push_back("gist_unrecognized");
        return v;
    }
    return judge(c, m);
}

}  // namespace graphtrials
