#pragma once

// Witness extraction: exact algorithms that produce the combinatorial object
// proving an assertion. Ties are always broken by ascending vertex id so the
// same input yields the same witness.

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "graphtrials/connectivity.hpp"
#include "graphtrials/graph.hpp"

namespace graphtrials {

// ---------------------------------------------------------------------------
// Witness types

struct SpanTree {
    Vertex root = 0;
    std::vector<Vertex> parent;  // -1 for the root
    std::vector<int> depth;
    friend bool operator==(const SpanTree&, const SpanTree&) = default;
};

/// Two vertex sets with no edge between them; `a` is the smaller side.
struct Partition {
    std::vector<Vertex> a, b;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Removing `cut` separates `a` from `b`; a, b and cut cover all vertices.
struct VertexCut {
    std::vector<Vertex> cut, a, b;
    friend bool operator==(const VertexCut&, const VertexCut&) = default;
};

/// Simple cycle as a vertex sequence; the closing edge is implicit.
struct Cycle {
    std::vector<Vertex> vertices;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct Coloring {
    int k = 0;
    std::vector<int> colors;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct MissingEdge {
    Vertex u = 0, v = 0;
    friend bool operator==(const MissingEdge&, const MissingEdge&) = default;
};

struct CompleteWitness {
    friend bool operator==(const CompleteWitness&, const CompleteWitness&) = default;
};

enum class SetKind { Clique, Independent, Dominating };

struct WitnessSet {
    SetKind kind = SetKind::Clique;
    std::vector<Vertex> vertices;
    friend bool operator==(const WitnessSet&, const WitnessSet&) = default;
};

/// BFS layering from `root` plus a shortest path root -> path.back().
struct BfsWitness {
    Vertex root = 0;
    std::vector<int> depth;      // kUnreached for other components
    std::vector<Vertex> parent;  // BFS tree, -1 for root / unreached
    std::vector<Vertex> path;
    Vertex target() const { return path.back(); }
    int length() const { return static_cast<int>(path.size()) - 1; }
    friend bool operator==(const BfsWitness&, const BfsWitness&) = default;
};

struct SparseSubgraph {
    int k = 0;
    std::vector<Edge> edges;
    friend bool operator==(const SparseSubgraph&, const SparseSubgraph&) = default;
};

enum class BookDiscipline { Stack, Queue };

struct PagedEdge {
    Edge edge;
    int page = 0;
    friend auto operator<=>(const PagedEdge&, const PagedEdge&) = default;
};

struct BookEmbedding {
    int k = 0;
    BookDiscipline discipline = BookDiscipline::Stack;
    std::vector<Vertex> order;     // spine, left to right
    std::vector<PagedEdge> pages;  // sorted by edge
    friend bool operator==(const BookEmbedding&, const BookEmbedding&) = default;
};

using Evidence = std::variant<SpanTree, Partition, VertexCut, Cycle, Coloring, MissingEdge, CompleteWitness,
                              WitnessSet, BfsWitness, SparseSubgraph, BookEmbedding>;

inline std::string_view evidence_tag(const Evidence& ev) {
    static constexpr std::string_view tags[] = {"span_tree",   "partition", "vertex_cut",  "cycle",
                                                "coloring",    "missing_edge", "complete", "witness_set",
                                                "bfs",         "sparse_subgraph", "book_embedding"};
    return tags[ev.index()];
}

inline std::string_view to_string(SetKind kind) {
    switch (kind) {
        case SetKind::Clique: return "clique";
        case SetKind::Independent: return "independent";
        case SetKind::Dominating: return "dominating";
    }
    return "";
}

inline std::string_view to_string(BookDiscipline d) { return d == BookDiscipline::Stack ? "stack" : "queue"; }

// ---------------------------------------------------------------------------

inline constexpr long long kDefaultSearchBudget = 10'000'000;

/// Node budget for exponential searches. Reads GRAPHTRIALS_BUDGET when asked.
class SearchBudget {
public:
    explicit SearchBudget(long long limit = kDefaultSearchBudget) : limit_(limit) {}

    static SearchBudget from_environment() {
        if (const char* env = std::getenv("GRAPHTRIALS_BUDGET")) {
            char* end = nullptr;
            long long value = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && value > 0) return SearchBudget(value);
        }
        return SearchBudget();
    }

    void tick() {
        if (++used_ > limit_) throw SearchBudgetExceeded("search exceeded budget of " + std::to_string(limit_) + " nodes");
    }

    long long used() const noexcept { return used_; }
    long long limit() const noexcept { return limit_; }

private:
    long long limit_;
    long long used_ = 0;
};

// ---------------------------------------------------------------------------
// Connectivity

namespace detail {

inline Partition smallest_component_partition(const Graph& g, const std::vector<std::vector<Vertex>>& comps) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if (comps[i].size() < comps[best].size()) best = i;
    }
    Partition p;
    p.a = comps[best];
    for (Vertex x = 0; x < g.n(); ++x) {
        if (!std::binary_search(p.a.begin(), p.a.end(), x)) p.b.push_back(x);
    }
    return p;
}

}  // namespace detail

inline std::variant<SpanTree, Partition> connectivity_evidence(const Graph& g) {
    std::vector<Vertex> parent;
    auto depth = bfs_distances(g, 0, &parent);
    if (std::find(depth.begin(), depth.end(), kUnreached) == depth.end()) {
        return SpanTree{0, std::move(parent), std::move(depth)};
    }
    return detail::smallest_component_partition(g, components(g));
}

/// A separating set of at most k-1 vertices. Disconnected graphs yield an empty cut.
inline VertexCut cut_set_evidence(const Graph& g, int k) {
    auto comps = components(g);
    if (comps.size() > 1) {
        auto p = detail::smallest_component_partition(g, comps);
        return VertexCut{{}, std::move(p.a), std::move(p.b)};
    }
    auto sep = minimum_vertex_separator(g);
    if (!sep || static_cast<int>(sep->cut.size()) > k - 1) {
        throw NoEvidence("graph is " + std::to_string(k) + "-connected");
    }
    std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
    for (Vertex c : sep->cut) removed[c] = true;
    VertexCut out;
    out.cut = sep->cut;
    for (const auto& comp : components(g, &removed)) {
        if (std::binary_search(comp.begin(), comp.end(), sep->s)) out.a = comp;
    }
    for (Vertex x = 0; x < g.n(); ++x) {
        if (!removed[x] && !std::binary_search(out.a.begin(), out.a.end(), x)) out.b.push_back(x);
    }
    return out;
}

/// Union of the first k forests of a scan-first-search forest decomposition
/// (maximum-adjacency order, ties by smallest id).
inline SparseSubgraph sparsify_k_connected(const Graph& g, int k) {
    if (!is_k_connected(g, k)) throw NotKConnected("graph is not " + std::to_string(k) + "-connected");
    const int n = g.n();
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    std::vector<bool> scanned(static_cast<std::size_t>(n), false);
    SparseSubgraph out{k, {}};
    for (int step = 0; step < n; ++step) {
        Vertex x = -1;
        for (Vertex y = 0; y < n; ++y) {
            if (!scanned[y] && (x < 0 || rank[y] > rank[x])) x = y;
        }
        scanned[x] = true;
        for (Vertex y : g.neighbors(x)) {
            if (scanned[y]) continue;
            // edge (x,y) lands in forest rank[y] + 1
            if (rank[y] + 1 <= k) out.edges.emplace_back(x, y);
            ++rank[y];
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// ---------------------------------------------------------------------------
// Cycles

enum class CycleKind { Hamiltonian, Length, Odd };

namespace detail {

/// Calls `visit` on each closed path of `target_len` vertices from path[0]
/// through vertices >= min_vertex until it returns true.
template <class Visit>
bool extend_path(const Graph& g, std::vector<Vertex>& path, std::vector<bool>& used, int target_len,
                 Vertex min_vertex, SearchBudget& budget, Visit&& visit) {
    budget.tick();
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == target_len) return g.has_edge(last, path.front()) && visit(path);
    for (Vertex y : g.neighbors(last)) {
        if (used[y] || y < min_vertex) continue;
        used[y] = true;
        path.push_back(y);
        if (extend_path(g, path, used, target_len, min_vertex, budget, visit)) return true;
        path.pop_back();
        used[y] = false;
    }
    return false;
}

inline std::optional<Cycle> shortest_odd_cycle(const Graph& g) {
    std::optional<Cycle> best;
    for (Vertex r = 0; r < g.n(); ++r) {
        std::vector<Vertex> parent;
        auto dist = bfs_distances(g, r, &parent);
        for (const Edge& e : g.edges()) {
            if (dist[e.u] == kUnreached || dist[e.u] != dist[e.v]) continue;
            int len = 2 * dist[e.u] + 1;
            if (best && static_cast<int>(best->vertices.size()) <= len) continue;
            // climb both branches to their meeting point
            std::vector<Vertex> left{e.u}, right{e.v};
            while (left.back() != right.back()) {
                left.push_back(parent[left.back()]);
                right.push_back(parent[right.back()]);
            }
            if (static_cast<int>(left.size() + right.size()) - 1 != len) continue;
            Cycle c;
            c.vertices.assign(left.rbegin(), left.rend());
            for (std::size_t i = 0; i + 1 < right.size(); ++i) c.vertices.push_back(right[i]);
            best = std::move(c);
        }
    }
    return best;
}

}  // namespace detail

/// Cycles of `target` vertices, each starting at its smallest vertex (only
/// vertex 0 when the cycle is Hamiltonian), handed to `visit` until it
/// returns true. Returns whether it did.
template <class Visit>
bool for_each_cycle(const Graph& g, int target, SearchBudget& budget, Visit&& visit) {
    if (target < 3 || target > g.n()) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
    const Vertex last_start = target == g.n() ? 0 : g.n() - target;
    for (Vertex s = 0; s <= last_start; ++s) {
        std::vector<Vertex> path{s};
        used[s] = true;
        if (detail::extend_path(g, path, used, target, s, budget, visit)) return true;
        used[s] = false;
    }
    return false;
}

/// `length` is only read for CycleKind::Length.
inline Cycle cycle_evidence(const Graph& g, CycleKind kind, int length = 0,
                            SearchBudget budget = SearchBudget::from_environment()) {
    if (kind == CycleKind::Odd) {
        if (auto c = detail::shortest_odd_cycle(g)) return *c;
        throw NoEvidence("graph has no odd cycle");
    }
    Cycle found;
    const int target = kind == CycleKind::Hamiltonian ? g.n() : length;
    if (!for_each_cycle(g, target, budget, [&](const std::vector<Vertex>& path) {
            found.vertices = path;
            return true;
        })) {
        throw NoEvidence("no cycle of the requested length");
    }
    return found;
}

// ---------------------------------------------------------------------------
// Colouring

namespace detail {

inline bool color_from(const Graph& g, std::vector<int>& color, Vertex x, int k, int used, SearchBudget& budget) {
    budget.tick();
    if (x == g.n()) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (Vertex y : g.neighbors(x)) {
            if (y < x && color[y] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[x] = c;
        if (color_from(g, color, x + 1, k, std::max(used, c + 1), budget)) return true;
    }
    color[x] = -1;
    return false;
}

}  // namespace detail

/// Proper colouring with classes renumbered by descending size, ties by smallest member.
inline Coloring coloring_evidence(const Graph& g, int k, SearchBudget budget = SearchBudget::from_environment()) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    if (!detail::color_from(g, color, 0, k, 0, budget)) {
        throw NoEvidence("graph is not " + std::to_string(k) + "-colorable");
    }
    const int used = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> size(static_cast<std::size_t>(used), 0), first(static_cast<std::size_t>(used), g.n());
    for (Vertex x = 0; x < g.n(); ++x) {
        ++size[color[x]];
        first[color[x]] = std::min(first[color[x]], x);
    }
    std::vector<int> classes(static_cast<std::size_t>(used));
    std::iota(classes.begin(), classes.end(), 0);
    std::sort(classes.begin(), classes.end(), [&](int a, int b) {
        return size[a] != size[b] ? size[a] > size[b] : first[a] < first[b];
    });
    std::vector<int> relabel(static_cast<std::size_t>(used));
    for (int i = 0; i < used; ++i) relabel[classes[i]] = i;
    for (int& c : color) c = relabel[c];
    return Coloring{k, std::move(color)};
}

// ---------------------------------------------------------------------------

inline std::variant<MissingEdge, CompleteWitness> completeness_evidence(const Graph& g) {
    for (Vertex a = 0; a < g.n(); ++a) {
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (!g.has_edge(a, b)) return MissingEdge{a, b};
        }
    }
    return CompleteWitness{};
}

namespace detail {

inline bool dominates(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<bool> covered(static_cast<std::size_t>(g.n()), false);
    for (Vertex s : set) {
        covered[s] = true;
        for (Vertex y : g.neighbors(s)) covered[y] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

inline bool next_set(const Graph& g, SetKind kind, std::vector<Vertex>& chosen, Vertex from, int k,
                     SearchBudget& budget) {
    budget.tick();
    if (static_cast<int>(chosen.size()) == k) return kind != SetKind::Dominating || dominates(g, chosen);
    const int need = k - static_cast<int>(chosen.size());
    for (Vertex x = from; x + need <= g.n(); ++x) {
        bool ok = true;
        if (kind != SetKind::Dominating) {
            for (Vertex c : chosen) {
                if (g.has_edge(c, x) != (kind == SetKind::Clique)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        chosen.push_back(x);
        if (next_set(g, kind, chosen, x + 1, k, budget)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

/// Lexicographically smallest vertex set of size exactly k with the property.
inline WitnessSet witness_set_evidence(const Graph& g, SetKind kind, int k,
                                       SearchBudget budget = SearchBudget::from_environment()) {
    std::vector<Vertex> chosen;
    if (k <= g.n() && detail::next_set(g, kind, chosen, 0, k, budget)) return WitnessSet{kind, std::move(chosen)};
    throw NoEvidence("no " + std::string(to_string(kind)) + " set of size " + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Distances

namespace detail {

inline BfsWitness bfs_witness(const Graph& g, Vertex root, Vertex target) {
    BfsWitness w;
    w.root = root;
    w.depth = bfs_distances(g, root, &w.parent);
    if (w.depth[target] == kUnreached) throw NoEvidence("target is unreachable from root");
    for (Vertex x = target; x != -1; x = w.parent[x]) w.path.push_back(x);
    std::reverse(w.path.begin(), w.path.end());
    return w;
}

}  // namespace detail

inline BfsWitness distance_pair_evidence(const Graph& g, Vertex u, Vertex v) { return detail::bfs_witness(g, u, v); }

/// The deepest BFS tree over all roots (ties: smallest root, then smallest deepest vertex).
inline BfsWitness distance_deepest_evidence(const Graph& g) {
    Vertex best_root = 0, best_target = 0;
    int best_depth = -1;
    for (Vertex r = 0; r < g.n(); ++r) {
        auto d = bfs_distances(g, r);
        for (Vertex x = 0; x < g.n(); ++x) {
            if (d[x] > best_depth) {
                best_depth = d[x];
                best_root = r;
                best_target = x;
            }
        }
    }
    return detail::bfs_witness(g, best_root, best_target);
}

// ---------------------------------------------------------------------------
// Book embeddings

/// Two spine intervals [a,b] and [c,d] (a<b, c<d, positions) clash under the discipline.
inline bool arcs_conflict(int a, int b, int c, int d, BookDiscipline discipline) {
    if (discipline == BookDiscipline::Stack) return (a < c && c < b && b < d) || (c < a && a < d && d < b);
    return (a < c && d < b) || (c < a && b < d);
}

namespace detail {

class BookSearch {
public:
    BookSearch(const Graph& g, int k, BookDiscipline discipline, SearchBudget& budget)
        : g_(g), k_(k), discipline_(discipline), budget_(budget), pos_(static_cast<std::size_t>(g.n()), -1) {}

    std::optional<BookEmbedding> run() {
        if (place(0)) {
            BookEmbedding out{k_, discipline_, order_, {}};
            for (const auto& [e, p] : assigned_) out.pages.push_back(PagedEdge{e, p});
            std::sort(out.pages.begin(), out.pages.end());
            return out;
        }
        return std::nullopt;
    }

private:
    bool place(int index) {
        budget_.tick();
        if (index == g_.n()) return true;
        for (Vertex x = 0; x < g_.n(); ++x) {
            if (pos_[x] != -1) continue;
            // circular symmetry of stack layouts: vertex 0 may start the spine
            if (index == 0 && discipline_ == BookDiscipline::Stack && x != 0) break;
            pos_[x] = index;
            order_.push_back(x);
            std::vector<Edge> fresh;
            for (Vertex y : g_.neighbors(x)) {
                if (pos_[y] != -1 && y != x) fresh.emplace_back(x, y);
            }
            if (assign(fresh, 0, index)) return true;
            order_.pop_back();
            pos_[x] = -1;
        }
        return false;
    }

    bool assign(const std::vector<Edge>& fresh, std::size_t i, int index) {
        if (i == fresh.size()) return open_edges_fit(index) && place(index + 1);
        budget_.tick();
        int used = 0;
        for (const auto& entry : assigned_) used = std::max(used, entry.second + 1);
        const int limit = std::min(k_, used + 1);
        const Edge e = fresh[i];
        const int a = std::min(pos_[e.u], pos_[e.v]), b = std::max(pos_[e.u], pos_[e.v]);
        for (int p = 0; p < limit; ++p) {
            bool ok = true;
            for (const auto& [f, q] : assigned_) {
                if (q != p) continue;
                int c = std::min(pos_[f.u], pos_[f.v]), d = std::max(pos_[f.u], pos_[f.v]);
                if (arcs_conflict(a, b, c, d, discipline_)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assigned_.emplace_back(e, p);
            if (assign(fresh, i + 1, index)) return true;
            assigned_.pop_back();
        }
        return false;
    }

    /// Every edge from a placed vertex to a later one still has a page: its
    /// right end comes after all placed vertices, so some clashes are certain.
    bool open_edges_fit(int index) const {
        int used = 0;
        for (const auto& entry : assigned_) used = std::max(used, entry.second + 1);
        if (used < k_) return true;
        for (int a = 0; a <= index; ++a) {
            const Vertex x = order_[a];
            bool open = false;
            for (Vertex y : g_.neighbors(x)) open = open || pos_[y] == -1;
            if (!open) continue;
            std::vector<bool> blocked(static_cast<std::size_t>(k_), false);
            for (const auto& [f, q] : assigned_) {
                const int c = std::min(pos_[f.u], pos_[f.v]), d = std::max(pos_[f.u], pos_[f.v]);
                const bool clash = discipline_ == BookDiscipline::Stack ? c < a && a < d : a < c;
                if (clash) blocked[q] = true;
            }
            if (std::find(blocked.begin(), blocked.end(), false) == blocked.end()) return false;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    BookDiscipline discipline_;
    SearchBudget& budget_;
    std::vector<int> pos_;
    std::vector<Vertex> order_;
    std::vector<std::pair<Edge, int>> assigned_;
};

}  // namespace detail

/// Exact search for a k-page stack or queue layout. Evidence for these kinds is
/// normally supplied by the caller; this search is exponential and budgeted.
inline BookEmbedding book_evidence(const Graph& g, int k, BookDiscipline discipline,
                                   SearchBudget budget = SearchBudget::from_environment()) {
    // edge bounds of k-page books (Bernhart-Kainen) and k-queue layouts (Heath-Rosenberg)
    const long long n = g.n(), m = g.m(), kk = k;
    const bool too_dense = discipline == BookDiscipline::Stack ? n >= 3 && m > (kk + 1) * n - 3 * kk
                                                               : n >= 2 * kk && m > 2 * kk * n - kk * (2 * kk + 1);
    if (too_dense) {
        throw NoEvidence("no " + std::to_string(k) + "-page " + std::string(to_string(discipline)) + " layout (" +
                         std::to_string(m) + " edges exceed the page bound)");
    }
    detail::BookSearch search(g, k, discipline, budget);
    if (auto out = search.run()) return *out;
    throw NoEvidence("no " + std::to_string(k) + "-page " + std::string(to_string(discipline)) + " layout");
}

}  // namespace graphtrials
