#pragma once

// The prosecution: gathers evidence for an assertion, draws the certificate
// and checks it against the defense and the judge before handing it over.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphtrials/errors.hpp"
#include "graphtrials/evidence.hpp"
#include "graphtrials/layout.hpp"
#include "graphtrials/trial.hpp"
#include "graphtrials/verify.hpp"

namespace graphtrials {

/// Styles with a certificate construction, default first.
inline std::vector<LayoutStyle> supported_styles(AssertionKind kind) {
    using K = AssertionKind;
    using S = LayoutStyle;
    switch (kind) {
        case K::HamiltonianCycle:
        case K::LengthKCycle:
        case K::NotBipartite: return {S::NodeLink, S::Matrix};
        case K::KColorable:
        case K::Complete:
        case K::NotComplete:
        case K::Clique:
        case K::IndependentSet:
        case K::DominatingSet: return {S::Matrix};
        case K::StackLeq:
        case K::QueueLeq: return {S::Book};
        default: return {S::NodeLink};
    }
}

inline LayoutStyle default_style(AssertionKind kind) { return supported_styles(kind).front(); }

/// Exact evidence search. Throws NoEvidence when the assertion is false and
/// SearchBudgetExceeded when an exponential search runs out of budget.
inline Evidence find_evidence(const Graph& g, const Assertion& a, SearchBudget budget = SearchBudget::from_environment()) {
    using K = AssertionKind;
    validate(a, g);
    switch (a.kind) {
        case K::Connected: {
            auto ev = connectivity_evidence(g);
            if (auto* t = std::get_if<SpanTree>(&ev)) return *t;
            throw NoEvidence("graph is disconnected");
        }
        case K::NotConnected: {
            auto ev = connectivity_evidence(g);
            if (auto* p = std::get_if<Partition>(&ev)) return *p;
            throw NoEvidence("graph is connected");
        }
        case K::NotKConnected: return cut_set_evidence(g, a.k);
        case K::KConnectedSparse: return sparsify_k_connected(g, a.k);
        case K::HamiltonianCycle: return cycle_evidence(g, CycleKind::Hamiltonian, 0, budget);
        case K::LengthKCycle: return cycle_evidence(g, CycleKind::Length, a.k, budget);
        case K::NotBipartite: return cycle_evidence(g, CycleKind::Odd, 0, budget);
        case K::KColorable: return coloring_evidence(g, a.k, budget);
        case K::Complete: {
            auto ev = completeness_evidence(g);
            if (std::holds_alternative<CompleteWitness>(ev)) return CompleteWitness{};
            throw NoEvidence("graph is not complete");
        }
        case K::NotComplete: {
            auto ev = completeness_evidence(g);
            if (auto* m = std::get_if<MissingEdge>(&ev)) return *m;
            throw NoEvidence("graph is complete");
        }
        case K::Clique: return witness_set_evidence(g, SetKind::Clique, a.k, budget);
        case K::IndependentSet: return witness_set_evidence(g, SetKind::Independent, a.k, budget);
        case K::DominatingSet: return witness_set_evidence(g, SetKind::Dominating, a.k, budget);
        case K::DistanceEquals: {
            auto w = distance_pair_evidence(g, a.u, a.v);
            if (w.length() != a.k) throw NoEvidence("distance is " + std::to_string(w.length()));
            return w;
        }
        case K::DiameterGreater: {
            auto w = distance_deepest_evidence(g);
            if (w.length() <= a.k) throw NoEvidence("no distance exceeds " + std::to_string(a.k));
            return w;
        }
        case K::StackLeq: return book_evidence(g, a.k, BookDiscipline::Stack, budget);
        case K::QueueLeq: return book_evidence(g, a.k, BookDiscipline::Queue, budget);
    }
    throw NoEvidence("unknown assertion");
}

/// Draws the certificate for `ev` in `style`. Throws std::invalid_argument
/// when the style has no construction for the assertion.
inline Layout synthesize_layout(const Graph& g, const Assertion& a, const Evidence& ev, LayoutStyle style) {
    auto styles = supported_styles(a.kind);
    if (std::find(styles.begin(), styles.end(), style) == styles.end()) {
        throw std::invalid_argument("no " + std::string(to_string(style)) + " certificate for " +
                                    std::string(to_string(a.kind)));
    }
    if (style == LayoutStyle::Matrix) return matrix_certificate_order(g, ev, a.kind == AssertionKind::NotBipartite);
    if (style == LayoutStyle::Book) {
        if (const auto* b = std::get_if<BookEmbedding>(&ev)) return book_layout(g, *b);
        throw std::invalid_argument("book certificate needs a book embedding");
    }
    return std::visit(
        [&](const auto& w) -> Layout {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, SpanTree>) return radial_tree_layout(g, w);
            else if constexpr (std::is_same_v<W, Partition> || std::is_same_v<W, VertexCut>) return separation_layout(g, w);
            else if constexpr (std::is_same_v<W, Cycle>) return cycle_outer_layout(g, w);
            else if constexpr (std::is_same_v<W, BfsWitness>) return level_layout(g, w);
            else if constexpr (std::is_same_v<W, SparseSubgraph>) return sparse_subgraph_layout(g, w);
            else throw std::invalid_argument("evidence has no node-link certificate");
        },
        ev);
}

struct ProveResult {
    Certificate certificate;
    Violations violations;
    Verdict verdict;
    bool ok() const { return violations.empty() && verdict.convinced; }
};

/// Builds a certificate from given evidence and runs the trial on it.
inline ProveResult certify(const Graph& g, const Assertion& a, Evidence ev, std::optional<LayoutStyle> style = std::nullopt) {
    ProveResult r;
    r.certificate.graph = g;
    r.certificate.assertion = a;
    r.certificate.layout = synthesize_layout(g, a, ev, style.value_or(default_style(a.kind)));
    r.certificate.evidence = std::move(ev);
    r.violations = verify(r.certificate);
    r.verdict = try_certificate(r.certificate);
    return r;
}

namespace detail {

inline bool drawing_readable(const Graph& g, const Assertion& a, const Evidence& ev, LayoutStyle style) {
    auto layout = synthesize_layout(g, a, ev, style);
    const auto* l = std::get_if<NodeLinkLayout>(&layout);
    return !l || geometry_ok(l->positions, l->edges);
}

/// Node-link drawings are fixed constructions over the evidence, so when one
/// is unreadable an equally valid witness may draw better: a breadth-first
/// tree with another root or other parents, the cycle read from another
/// vertex, or another cycle of the same length.
inline Evidence readable_evidence(const Graph& g, const Assertion& a, Evidence ev, LayoutStyle style,
                                  SearchBudget budget) {
    if (style != LayoutStyle::NodeLink || drawing_readable(g, a, ev, style)) return ev;
    if (const auto* tree = std::get_if<SpanTree>(&ev)) {
        // every root with first-found parents, then parents drawn at random
        // among the neighbours one level up, at most kAlternatives trees
        constexpr int kVariants = 8, kAlternatives = 64;
        std::mt19937_64 rng(g.n());
        int tried = 0;
        for (int variant = 0; variant < kVariants; ++variant) {
            for (Vertex root = 0; root < g.n() && tried < kAlternatives; ++root) {
                if (variant == 0 && root == tree->root) continue;
                ++tried;
                SpanTree other{root, {}, {}};
                other.depth = bfs_distances(g, root, &other.parent);
                for (Vertex x = 0; x < g.n() && variant > 0; ++x) {
                    std::vector<Vertex> up;
                    for (Vertex y : g.neighbors(x)) {
                        if (other.depth[y] + 1 == other.depth[x]) up.push_back(y);
                    }
                    if (!up.empty()) other.parent[x] = up[rng() % up.size()];
                }
                if (drawing_readable(g, a, other, style)) return other;
            }
        }
    } else if (const auto* cycle = std::get_if<Cycle>(&ev)) {
        // the same cycle from another start, in either direction
        const auto& c = cycle->vertices;
        for (int reverse = 0; reverse < 2; ++reverse) {
            for (std::size_t start = 0; start < c.size(); ++start) {
                if (reverse == 0 && start == 0) continue;
                Cycle other;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    other.vertices.push_back(reverse ? c[(start + c.size() - i) % c.size()] : c[(start + i) % c.size()]);
                }
                if (drawing_readable(g, a, other, style)) return other;
            }
        }
    }
    if (a.kind == AssertionKind::LengthKCycle) {
        constexpr int kAlternatives = 64;
        int tried = 0;
        std::optional<Cycle> found;
        try {
            for_each_cycle(g, a.k, budget, [&](const std::vector<Vertex>& path) {
                Cycle c{path};
                if (drawing_readable(g, a, c, style)) found = std::move(c);
                return found || ++tried >= kAlternatives;
            });
        } catch (const SearchBudgetExceeded&) {
        }
        if (found) return *found;
    }
    return ev;
}

}  // namespace detail

/// Evidence search, drawing and self-check.
inline ProveResult prove(const Graph& g, const Assertion& a, std::optional<LayoutStyle> style = std::nullopt,
                         SearchBudget budget = SearchBudget::from_environment()) {
    const LayoutStyle drawn = style.value_or(default_style(a.kind));
    Evidence ev = detail::readable_evidence(g, a, find_evidence(g, a, budget), drawn, budget);
    return certify(g, a, std::move(ev), style);
}

}  // namespace graphtrials
