#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphtrials/errors.hpp"

namespace graphtrials {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 1) {
            throw std::invalid_argument("graph needs at least one vertex");
        }
        for (const Edge& e : edges_) {
            if (e.u == e.v) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            }
            if (e.u < 0 || e.v >= n_) {
                throw std::invalid_argument("edge endpoint out of range");
            }
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw std::invalid_argument("duplicate edge");
        }
        adjacency_.assign(static_cast<std::size_t>(n_), {});
        matrix_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        for (const Edge& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
            matrix_[index(e.u, e.v)] = 1;
            matrix_[index(e.v, e.u)] = 1;
        }
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end());
        }
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
        return matrix_[index(a, b)] != 0;
    }

    bool is_complete() const {
        return static_cast<long long>(m()) == static_cast<long long>(n_) * (n_ - 1) / 2;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    /// Copy with an extra edge; throws if it already exists.
    Graph with_edge(Edge e) const {
        auto edges = edges_;
        edges.push_back(e);
        return Graph(n_, std::move(edges));
    }

    Graph without_edge(Edge e) const {
        auto edges = edges_;
        std::erase(edges, e);
        return Graph(n_, std::move(edges));
    }

    /// Subgraph on the same vertex set with only the listed edges.
    Graph spanning_subgraph(std::vector<Edge> edges) const { return Graph(n_, std::move(edges)); }

private:
    std::size_t index(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint8_t> matrix_;
};

// ---------------------------------------------------------------------------
// Edge-list text format: "n m", then m lines "u v". '#' starts a comment line.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<long long> to_int(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') {
            lines.emplace_back(line_no, line);
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (lines.empty()) throw ParseError(1, "missing header 'n m'");

    auto header = detail::split_ws(lines[0].second);
    if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
    auto n = detail::to_int(header[0]);
    auto m = detail::to_int(header[1]);
    if (!n || !m || *n < 1 || *m < 0) throw ParseError(lines[0].first, "invalid header counts");
    if (static_cast<long long>(lines.size()) - 1 != *m) {
        std::size_t where = lines.size() > static_cast<std::size_t>(*m) + 1 ? lines[*m + 1].first : line_no;
        throw ParseError(where, "expected " + std::to_string(*m) + " edge lines, found " +
                                    std::to_string(lines.size() - 1));
    }

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, std::size_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [ln, line] = lines[i];
        auto tok = detail::split_ws(line);
        if (tok.size() != 2) throw ParseError(ln, "edge line must be 'u v'");
        auto a = detail::to_int(tok[0]);
        auto b = detail::to_int(tok[1]);
        if (!a || !b || *a < 0 || *b < 0) throw ParseError(ln, "malformed vertex id");
        if (*a >= *n || *b >= *n) throw ParseError(ln, "endpoint out of range");
        if (*a == *b) throw ParseError(ln, "self-loop");
        Edge e(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
        seen.emplace_back(e, ln);
        edges.push_back(e);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first) {
            throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate edge");
        }
    }
    return Graph(static_cast<int>(*n), std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Traversal helpers shared by evidence, oracles and the verifier.

inline constexpr int kUnreached = -1;

/// BFS distances from `root`, neighbors visited in ascending id order.
/// `parent` (if given) receives the BFS tree parent, -1 for root/unreached.
inline std::vector<int> bfs_distances(const Graph& g, Vertex root, std::vector<Vertex>* parent = nullptr) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreached);
    if (parent) parent->assign(static_cast<std::size_t>(g.n()), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] == kUnreached) {
                dist[y] = dist[x] + 1;
                if (parent) (*parent)[y] = x;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const std::vector<bool>* removed = nullptr) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] != -1 || (removed && (*removed)[s])) continue;
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (comp[y] == -1 && !(removed && (*removed)[y])) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

// ---------------------------------------------------------------------------

enum class AssertionKind {
    Connected,
    NotConnected,
    NotKConnected,
    KConnectedSparse,
    HamiltonianCycle,
    LengthKCycle,
    NotBipartite,
    KColorable,
    Complete,
    NotComplete,
    Clique,
    IndependentSet,
    DominatingSet,
    DistanceEquals,
    DiameterGreater,
    StackLeq,
    QueueLeq,
};

inline constexpr AssertionKind kAllAssertionKinds[] = {
    AssertionKind::Connected,      AssertionKind::NotConnected,     AssertionKind::NotKConnected,
    AssertionKind::KConnectedSparse, AssertionKind::HamiltonianCycle, AssertionKind::LengthKCycle,
    AssertionKind::NotBipartite,   AssertionKind::KColorable,       AssertionKind::Complete,
    AssertionKind::NotComplete,    AssertionKind::Clique,           AssertionKind::IndependentSet,
    AssertionKind::DominatingSet,  AssertionKind::DistanceEquals,   AssertionKind::DiameterGreater,
    AssertionKind::StackLeq,       AssertionKind::QueueLeq,
};

struct AssertionInfo {
    AssertionKind kind;
    std::string_view name;  // CLI / JSON spelling
    bool uses_k;
    bool uses_pair;
};

inline constexpr AssertionInfo kAssertionTable[] = {
    {AssertionKind::Connected, "connected", false, false},
    {AssertionKind::NotConnected, "not-connected", false, false},
    {AssertionKind::NotKConnected, "not-k-connected", true, false},
    {AssertionKind::KConnectedSparse, "k-connected", true, false},
    {AssertionKind::HamiltonianCycle, "hamiltonian", false, false},
    {AssertionKind::LengthKCycle, "k-cycle", true, false},
    {AssertionKind::NotBipartite, "not-bipartite", false, false},
    {AssertionKind::KColorable, "k-colorable", true, false},
    {AssertionKind::Complete, "complete", false, false},
    {AssertionKind::NotComplete, "not-complete", false, false},
    {AssertionKind::Clique, "clique", true, false},
    {AssertionKind::IndependentSet, "independent-set", true, false},
    {AssertionKind::DominatingSet, "dominating-set", true, false},
    {AssertionKind::DistanceEquals, "distance", true, true},
    {AssertionKind::DiameterGreater, "diameter-greater", true, false},
    {AssertionKind::StackLeq, "stack-number", true, false},
    {AssertionKind::QueueLeq, "queue-number", true, false},
};

inline const AssertionInfo& info(AssertionKind kind) {
    for (const auto& row : kAssertionTable) {
        if (row.kind == kind) return row;
    }
    throw std::logic_error("unknown assertion kind");
}

inline std::string_view to_string(AssertionKind kind) { return info(kind).name; }

inline std::optional<AssertionKind> assertion_kind_from_string(std::string_view name) {
    for (const auto& row : kAssertionTable) {
        if (row.name == name) return row.kind;
    }
    return std::nullopt;
}

/// A boolean claim about a graph. Parameters not used by the kind stay 0.
struct Assertion {
    AssertionKind kind = AssertionKind::Connected;
    int k = 0;
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Assertion&, const Assertion&) = default;
};

/// Throws std::invalid_argument when parameters are out of range for `g`.
inline void validate(const Assertion& a, const Graph& g) {
    const auto& row = info(a.kind);
    if (row.uses_k && a.k < 1) throw std::invalid_argument("k must be >= 1");
    if (row.uses_pair && (a.u < 0 || a.v < 0 || a.u >= g.n() || a.v >= g.n())) {
        throw std::invalid_argument("u, v must be vertices of the graph");
    }
}

inline std::string describe(const Assertion& a) {
    std::string s(to_string(a.kind));
    const auto& row = info(a.kind);
    if (row.uses_pair) s += "(u=" + std::to_string(a.u) + ",v=" + std::to_string(a.v) + ")";
    if (row.uses_k) s += "[k=" + std::to_string(a.k) + "]";
    return s;
}

}  // namespace graphtrials
