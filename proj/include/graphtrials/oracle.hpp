#pragma once

// Exhaustive ground truth for every assertion kind. These routines share no
// code with the evidence searches so each can check the other. NP-hard kinds
// are size-gated and throw OracleLimitExceeded beyond the gate.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "graphtrials/graph.hpp"

namespace graphtrials::oracle {

inline constexpr int kSubsetGate = 20;
inline constexpr int kDpGate = 16;
inline constexpr int kPermutationGate = 9;
inline constexpr int kColoringGate = 14;

namespace detail {

inline void gate(bool ok, const char* what) {
    if (!ok) throw OracleLimitExceeded(what);
}

inline int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

inline bool connected_union_find(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    std::iota(parent.begin(), parent.end(), 0);
    int groups = g.n();
    for (const Edge& e : g.edges()) {
        int a = find(parent, e.u), b = find(parent, e.v);
        if (a != b) {
            parent[a] = b;
            --groups;
        }
    }
    return groups == 1;
}

/// Parity union-find: returns true if an odd cycle exists.
inline bool has_odd_cycle(const Graph& g) {
    const int n = g.n();
    std::vector<int> parent(static_cast<std::size_t>(2 * n));
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : g.edges()) {
        // u even-side joins v odd-side and vice versa.
        parent[find(parent, e.u)] = find(parent, e.v + n);
        parent[find(parent, e.u + n)] = find(parent, e.v);
    }
    for (int x = 0; x < n; ++x) {
        if (find(parent, x) == find(parent, x + n)) return true;
    }
    return false;
}

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.n();
    constexpr int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline bool disconnected_without(const Graph& g, std::uint32_t removed) {
    const int n = g.n();
    int start = -1, remaining = 0;
    for (int x = 0; x < n; ++x) {
        if (!(removed >> x & 1u)) {
            ++remaining;
            if (start < 0) start = x;
        }
    }
    if (remaining < 2) return false;
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y) {
            if (!g.has_edge(x, y) || (removed >> y & 1u) || (seen >> y & 1u)) continue;
            seen |= 1u << y;
            ++count;
            stack.push_back(y);
        }
    }
    return count < remaining;
}

/// Some vertex set of size <= max_size leaves >= 2 components.
inline bool has_small_separator(const Graph& g, int max_size) {
    gate(g.n() <= kSubsetGate, "separator oracle limited to n <= 20");
    const std::uint32_t full = 1u << g.n();
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (std::popcount(mask) > max_size) continue;
        if (disconnected_without(g, mask)) return true;
    }
    return false;
}

/// Held-Karp reachability over subsets.
inline bool hamiltonian_dp(const Graph& g) {
    const int n = g.n();
    if (n < 3) return false;
    gate(n <= kDpGate, "hamiltonian oracle limited to n <= 16");
    const std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> ends(full, 0);  // bit v: a path 0 -> v covers mask
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (!(mask & 1u) || !ends[mask]) continue;
        for (int v = 0; v < n; ++v) {
            if (!(ends[mask] >> v & 1u)) continue;
            for (int w = 0; w < n; ++w) {
                if (!(mask >> w & 1u) && g.has_edge(v, w)) ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    for (int v = 1; v < n; ++v) {
        if ((ends[full - 1] >> v & 1u) && g.has_edge(v, 0)) return true;
    }
    return false;
}

/// A simple cycle on exactly k vertices, via subset DP anchored at the minimum vertex.
inline bool k_cycle_dp(const Graph& g, int k) {
    const int n = g.n();
    if (k < 3 || k > n) return false;
    gate(n <= kDpGate, "cycle oracle limited to n <= 16");
    const std::uint32_t full = 1u << n;
    for (int s = 0; s < n; ++s) {
        std::vector<std::uint32_t> ends(full, 0);
        ends[1u << s] = 1u << s;
        for (std::uint32_t mask = 1u << s; mask < full; ++mask) {
            if (!ends[mask] || (mask & ((1u << s) - 1))) continue;
            int size = std::popcount(mask);
            for (int v = 0; v < n; ++v) {
                if (!(ends[mask] >> v & 1u)) continue;
                if (size == k) {
                    if (g.has_edge(v, s)) return true;
                    continue;
                }
                for (int w = s + 1; w < n; ++w) {
                    if (!(mask >> w & 1u) && g.has_edge(v, w)) ends[mask | (1u << w)] |= 1u << w;
                }
            }
        }
    }
    return false;
}

/// Enumerates set partitions into at most k classes (restricted growth strings).
inline bool k_colorable_enum(const Graph& g, int k) {
    const int n = g.n();
    if (k >= n) return true;
    gate(n <= kColoringGate, "coloring oracle limited to n <= 14");
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (color[e.u] == color[e.v]) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
        // next restricted growth string with values < k
        int i = n - 1;
        while (i > 0) {
            int limit = std::min(k - 1, prefix_max[i - 1] + 1);
            if (color[i] < limit) break;
            --i;
        }
        if (i == 0) return false;
        ++color[i];
        prefix_max[i] = std::max(prefix_max[i - 1], color[i]);
        for (int j = i + 1; j < n; ++j) {
            color[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

enum class SetPredicate { Clique, Independent, Dominating };

inline bool set_exists(const Graph& g, int k, SetPredicate kind) {
    const int n = g.n();
    if (k > n) return false;
    gate(n <= kSubsetGate, "set oracle limited to n <= 20");
    const std::uint32_t full = 1u << n;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (std::popcount(mask) != k) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            bool in_a = mask >> a & 1u;
            if (kind == SetPredicate::Dominating) {
                if (in_a) continue;
                bool dominated = false;
                for (int b = 0; b < n; ++b) dominated |= (mask >> b & 1u) && g.has_edge(a, b);
                ok = dominated;
                continue;
            }
            if (!in_a) continue;
            for (int b = a + 1; b < n && ok; ++b) {
                if (!(mask >> b & 1u)) continue;
                ok = (kind == SetPredicate::Clique) == g.has_edge(a, b);
            }
        }
        if (ok) return true;
    }
    return false;
}

/// Every spine order (up to reversal, and rotation for stacks), then an exact page colouring of the
/// conflict graph of that order.
inline bool book_exists(const Graph& g, int k, bool queue) {
    const int n = g.n();
    gate(n <= kPermutationGate, "book oracle limited to n <= 9");
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return true;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> conflicts(static_cast<std::size_t>(m));
    std::vector<int> page(static_cast<std::size_t>(m)), seq(static_cast<std::size_t>(m)), rank(static_cast<std::size_t>(m));
    // stack crossings only depend on the circular order, so vertex 0 can lead
    const auto first = queue ? order.begin() : order.begin() + 1;
    do {
        if (n > 1 && *first > order.back()) continue;
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        for (auto& c : conflicts) c.clear();
        for (int i = 0; i < m; ++i) {
            int a = std::min(pos[edges[i].u], pos[edges[i].v]);
            int b = std::max(pos[edges[i].u], pos[edges[i].v]);
            for (int j = i + 1; j < m; ++j) {
                int c = std::min(pos[edges[j].u], pos[edges[j].v]);
                int d = std::max(pos[edges[j].u], pos[edges[j].v]);
                bool clash = queue ? ((a < c && d < b) || (c < a && b < d))
                                   : ((a < c && c < b && b < d) || (c < a && a < d && d < b));
                if (clash) {
                    conflicts[i].push_back(j);
                    conflicts[j].push_back(i);
                }
            }
        }
        // plain backtracking colouring of the conflict graph, most
        // conflicted edges first; rank[e] is the step at which e is coloured
        std::iota(seq.begin(), seq.end(), 0);
        std::stable_sort(seq.begin(), seq.end(), [&](int x, int y) { return conflicts[x].size() > conflicts[y].size(); });
        for (int i = 0; i < m; ++i) rank[seq[i]] = i;
        std::fill(page.begin(), page.end(), -1);
        int idx = 0;
        while (idx >= 0 && idx < m) {
            const int e = seq[idx];
            int p = page[e] + 1;
            // pages are interchangeable: each step opens at most one new page
            int open = 0;
            for (int j = 0; j < idx; ++j) open = std::max(open, page[seq[j]] + 1);
            const int limit = std::min(k, open + 1);
            for (; p < limit; ++p) {
                bool free = true;
                for (int j : conflicts[e]) free &= !(rank[j] < idx && page[j] == p);
                if (free) break;
            }
            if (p < limit) {
                page[e] = p;
                ++idx;
            } else {
                page[e] = -1;
                --idx;
            }
        }
        if (idx == m) return true;
    } while (std::next_permutation(first, order.end()));
    return false;
}

}  // namespace detail

/// Brute-force truth of `a` on `g`. Throws OracleLimitExceeded above the size gates.
inline bool check(const Graph& g, const Assertion& a) {
    using K = AssertionKind;
    validate(a, g);
    switch (a.kind) {
        case K::Connected: return detail::connected_union_find(g);
        case K::NotConnected: return !detail::connected_union_find(g);
        case K::NotKConnected: return detail::has_small_separator(g, a.k - 1);
        case K::KConnectedSparse: return g.n() > a.k && !detail::has_small_separator(g, a.k - 1);
        case K::HamiltonianCycle: return detail::hamiltonian_dp(g);
        case K::LengthKCycle: return detail::k_cycle_dp(g, a.k);
        case K::NotBipartite: return detail::has_odd_cycle(g);
        case K::KColorable: return detail::k_colorable_enum(g, a.k);
        case K::Complete: return g.is_complete();
        case K::NotComplete: return !g.is_complete();
        case K::Clique: return detail::set_exists(g, a.k, detail::SetPredicate::Clique);
        case K::IndependentSet: return detail::set_exists(g, a.k, detail::SetPredicate::Independent);
        case K::DominatingSet: return detail::set_exists(g, a.k, detail::SetPredicate::Dominating);
        case K::DistanceEquals: {
            auto d = detail::floyd_warshall(g);
            return d[a.u][a.v] == a.k;
        }
        case K::DiameterGreater: {
            auto d = detail::floyd_warshall(g);
            for (const auto& row : d)
                for (int x : row)
                    if (x < (1 << 28) && x > a.k) return true;
            return false;
        }
        case K::StackLeq: return detail::book_exists(g, a.k, false);
        case K::QueueLeq: return detail::book_exists(g, a.k, true);
    }
    return false;
}

/// Brute-force k-connectivity (subset enumeration), for cross-checking the flow route.
inline bool k_connected(const Graph& g, int k) {
    return g.n() > k && !detail::has_small_separator(g, k - 1);
}

}  // namespace graphtrials::oracle
