#pragma once

// Shared fixtures for the test binaries: graph generators, an isomorphism-class
// enumeration of small graphs and the parameter sweep per assertion kind.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "graphtrials/graph.hpp"

namespace gt_test {

using graphtrials::Assertion;
using graphtrials::AssertionKind;
using graphtrials::Edge;
using graphtrials::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

/// Random labelled tree (each vertex picks an earlier parent) plus extra edges.
inline Graph random_connected_graph(int n, double extra, std::mt19937_64& rng) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::set<Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.emplace(label[i], label[pick(rng)]);
    }
    std::bernoulli_distribution coin(extra);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) edges.emplace(a, b);
    return Graph(n, {edges.begin(), edges.end()});
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.n(), std::move(edges));
}

namespace detail {

using Bits = std::uint32_t;  // upper triangle, n <= 8

inline int bit(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

inline Bits encode(int n, const std::vector<std::vector<bool>>& adj, const std::vector<int>& perm) {
    Bits code = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (adj[perm[a]][perm[b]]) code |= Bits{1} << bit(n, a, b);
    return code;
}

/// Smallest code over relabellings that list vertices by non-increasing degree.
inline Bits canonical(int n, const std::vector<std::vector<bool>>& adj) {
    std::vector<int> deg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) deg[a] += adj[a][b];
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return deg[x] != deg[y] ? deg[x] > deg[y] : x < y; });
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg[perm[j]] == deg[perm[i]]) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    Bits best = ~Bits{0};
    // odometer over permutations within each equal-degree run
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == runs.size()) {
            best = std::min(best, encode(n, adj, perm));
            return;
        }
        auto [lo, hi] = runs[r];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            self(self, r + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

}  // namespace detail

/// One representative per isomorphism class for every n in [1, max_n]
/// (1, 2, 4, 11, 34, 156, 1044 graphs for n = 1..7).
inline std::vector<Graph> nonisomorphic_graphs(int max_n) {
    std::vector<Graph> out;
    std::vector<std::vector<std::vector<bool>>> level{{{false}}};
    out.emplace_back(1, std::vector<Edge>{});
    for (int n = 2; n <= max_n; ++n) {
        std::set<detail::Bits> seen;
        std::vector<std::vector<std::vector<bool>>> next;
        for (const auto& base : level) {
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
                for (int a = 0; a < n - 1; ++a)
                    for (int b = 0; b < n - 1; ++b) adj[a][b] = base[a][b];
                for (int a = 0; a < n - 1; ++a)
                    if (mask >> a & 1) adj[a][n - 1] = adj[n - 1][a] = true;
                if (seen.insert(detail::canonical(n, adj)).second) next.push_back(std::move(adj));
            }
        }
        for (const auto& adj : next) {
            std::vector<Edge> edges;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (adj[a][b]) edges.emplace_back(a, b);
            out.emplace_back(n, std::move(edges));
        }
        level = std::move(next);
    }
    return out;
}

/// Every parameter choice worth asking about `kind` on `g`.
inline std::vector<Assertion> sweep(const Graph& g, AssertionKind kind) {
    using K = AssertionKind;
    const int n = g.n();
    std::vector<Assertion> out;
    const auto& row = graphtrials::info(kind);
    if (row.uses_pair) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int k = 1; k < n; ++k) out.push_back({kind, k, u, v});
    } else if (row.uses_k) {
        int top = n + 1;
        if (kind == K::StackLeq || kind == K::QueueLeq) top = std::min(top, 4);
        for (int k = 1; k <= top; ++k) out.push_back({kind, k, 0, 0});
    } else {
        out.push_back({kind, 0, 0, 0});
    }
    return out;
}

}  // namespace gt_test
