#pragma once

#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "graphtrials/graph.hpp"

namespace graphtrials {

/// Unit-capacity max-flow on the vertex-split network of a graph.
/// Vertex x becomes in(x) = 2x and out(x) = 2x+1 joined by an arc of
/// capacity 1 (unbounded for the terminals); each edge {a,b} becomes
/// out(a)->in(b) and out(b)->in(a) with unbounded capacity.
class VertexSplitFlow {
public:
    VertexSplitFlow(const Graph& g, Vertex s, Vertex t) : g_(g), s_(s), t_(t) {
        const int nodes = 2 * g.n();
        head_.assign(static_cast<std::size_t>(nodes), -1);
        for (Vertex x = 0; x < g.n(); ++x) {
            int cap = (x == s || x == t) ? kInf : 1;
            add_arc(in(x), out(x), cap);
        }
        for (const Edge& e : g.edges()) {
            add_arc(out(e.u), in(e.v), kInf);
            add_arc(out(e.v), in(e.u), kInf);
        }
    }

    /// Augments until `limit` paths are found or none remain. Returns the flow value.
    int run(int limit = std::numeric_limits<int>::max()) {
        while (flow_ < limit && augment()) ++flow_;
        return flow_;
    }

    /// Minimum s-t vertex separator; valid after run() without a limit.
    std::vector<Vertex> separator() const {
        auto reach = residual_reach();
        std::vector<Vertex> cut;
        for (Vertex x = 0; x < g_.n(); ++x) {
            if (x != s_ && x != t_ && reach[in(x)] && !reach[out(x)]) cut.push_back(x);
        }
        return cut;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    static int in(Vertex x) { return 2 * x; }
    static int out(Vertex x) { return 2 * x + 1; }

    void add_arc(int a, int b, int cap) {
        to_.push_back(b);
        cap_.push_back(cap);
        next_.push_back(head_[a]);
        head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a);
        cap_.push_back(0);
        next_.push_back(head_[b]);
        head_[b] = static_cast<int>(to_.size()) - 1;
    }

    bool augment() {
        std::vector<int> via(head_.size(), -1);
        std::vector<bool> seen(head_.size(), false);
        std::deque<int> queue{out(s_)};
        seen[out(s_)] = true;
        while (!queue.empty() && !seen[in(t_)]) {
            int x = queue.front();
            queue.pop_front();
            for (int a = head_[x]; a != -1; a = next_[a]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = true;
                    via[to_[a]] = a;
                    queue.push_back(to_[a]);
                }
            }
        }
        if (!seen[in(t_)]) return false;
        for (int x = in(t_); x != out(s_);) {
            int a = via[x];
            cap_[a] -= 1;
            cap_[a ^ 1] += 1;
            x = to_[a ^ 1];
        }
        return true;
    }

    std::vector<bool> residual_reach() const {
        std::vector<bool> seen(head_.size(), false);
        std::deque<int> queue{out(s_)};
        seen[out(s_)] = true;
        seen[in(s_)] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int a = head_[x]; a != -1; a = next_[a]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = true;
                    queue.push_back(to_[a]);
                }
            }
        }
        return seen;
    }

    const Graph& g_;
    Vertex s_;
    Vertex t_;
    int flow_ = 0;
    std::vector<int> head_, to_, cap_, next_;
};

/// Smallest vertex set separating some non-adjacent pair, scanning pairs in
/// lexicographic order and keeping the first strictly smaller cut.
/// Empty optional for complete graphs (no separator exists).
struct SeparatorResult {
    std::vector<Vertex> cut;
    Vertex s = 0;
    Vertex t = 0;
};

inline std::optional<SeparatorResult> minimum_vertex_separator(const Graph& g) {
    std::optional<SeparatorResult> best;
    for (Vertex s = 0; s < g.n(); ++s) {
        for (Vertex t = s + 1; t < g.n(); ++t) {
            if (g.has_edge(s, t)) continue;
            VertexSplitFlow flow(g, s, t);
            int limit = best ? static_cast<int>(best->cut.size()) : std::numeric_limits<int>::max();
            if (flow.run(limit) >= limit) continue;
            best = SeparatorResult{flow.separator(), s, t};
            if (best->cut.empty()) return best;
        }
    }
    return best;
}

/// Exact k-connectivity: n > k and no separator with fewer than k vertices.
inline bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    if (g.n() <= k) return false;
    for (Vertex s = 0; s < g.n(); ++s) {
        for (Vertex t = s + 1; t < g.n(); ++t) {
            if (g.has_edge(s, t)) continue;
            VertexSplitFlow flow(g, s, t);
            if (flow.run(k) < k) return false;
        }
    }
    return true;
}

}  // namespace graphtrials
