// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance 2 7             run a subset
//   acceptance --regenerate    rewrite the golden corpus, then exit

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "graphtrials/graphtrials.hpp"
#include "support.hpp"

namespace gt = graphtrials;
using gt::Assertion;
using gt::AssertionKind;
using gt::Edge;
using gt::Graph;
using gt::LayoutStyle;
using gt::Point;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int decimals = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

// ---------------------------------------------------------------------------
// plain geometry, kept apart from the library's own predicates

double seg_point(Point p, Point a, Point b) {
    const double dx = b.x - a.x, dy = b.y - a.y, len2 = dx * dx + dy * dy;
    double t = len2 == 0 ? 0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double turn(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool proper_cross(Point a, Point b, Point c, Point d) {
    const double d1 = turn(a, b, c), d2 = turn(a, b, d), d3 = turn(c, d, a), d4 = turn(c, d, b);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double seg_seg(Point a, Point b, Point c, Point d) {
    if (proper_cross(a, b, c, d)) return 0;
    return std::min({seg_point(a, c, d), seg_point(b, c, d), seg_point(c, a, b), seg_point(d, a, b)});
}

bool in_triangle(Point p, Point a, Point b, Point c) {
    const double s1 = turn(a, b, p), s2 = turn(b, c, p), s3 = turn(c, a, p);
    const bool neg = s1 < 0 || s2 < 0 || s3 < 0, pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(neg && pos);
}

bool in_hull(Point p, const std::vector<Point>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k)
                if (std::abs(turn(s[i], s[j], s[k])) > 0 && in_triangle(p, s[i], s[j], s[k])) return true;
    return false;
}

/// Distance between the convex hulls of two point sets (0 if they meet).
double hull_gap(const std::vector<Point>& a, const std::vector<Point>& b) {
    for (Point p : a)
        if (in_hull(p, b)) return 0;
    for (Point p : b)
        if (in_hull(p, a)) return 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = k; l < b.size(); ++l) best = std::min(best, seg_seg(a[i], a[j], b[k], b[l]));
    return best;
}

double diagonal(const std::vector<Point>& pts) {
    double lx = pts[0].x, hx = lx, ly = pts[0].y, hy = ly;
    for (Point p : pts) {
        lx = std::min(lx, p.x), hx = std::max(hx, p.x), ly = std::min(ly, p.y), hy = std::max(hy, p.y);
    }
    return std::hypot(hx - lx, hy - ly);
}

double min_separation(const std::vector<Point>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
    return best;
}

bool separated(const std::vector<Point>& pts) { return pts.size() < 2 || min_separation(pts) >= 0.02 * diagonal(pts); }

int highlighted_crossings(const gt::NodeLinkLayout& l) {
    int count = 0;
    const auto& h = l.highlight_edges;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            const Edge e = h[i], f = h[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            count += proper_cross(l.positions[e.u], l.positions[e.v], l.positions[f.u], l.positions[f.v]);
        }
    return count;
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i], syy += y[i] * y[i];
    }
    const double cov = sxy - sx * sy / n, vx = sxx - sx * sx / n, vy = syy - sy * sy / n;
    if (vy == 0) return 1;
    return cov * cov / (vx * vy);
}

// ---------------------------------------------------------------------------

/// Criteria 1 and 3 share one sweep.
struct SweepTally {
    long cases = 0, mismatches = 0, budget = 0, emitted = 0, incomplete = 0;
    std::vector<std::string> examples;

    void run(const Graph& g, const Assertion& a) {
        ++cases;
        const bool truth = gt::oracle::check(g, a);
        bool proved = false;
        try {
            auto r = gt::prove(g, a);
            proved = true;
            ++emitted;
            if (!r.ok()) {
                ++incomplete;
                note("self-check " + gt::describe(a) + " on " + gt::serialize_graph(g));
            }
        } catch (const gt::NoEvidence&) {
        } catch (const gt::SearchBudgetExceeded&) {
            ++budget;
        }
        if (proved != truth) {
            ++mismatches;
            note("prove=" + std::to_string(proved) + " oracle=" + std::to_string(truth) + " " + gt::describe(a));
        }
    }

    void note(std::string s) {
        if (examples.size() < 5) examples.push_back(std::move(s));
    }
};

SweepTally g_sweep;
bool g_sweep_done = false;
double g_sweep_seconds = 0;

void run_sweep() {
    if (g_sweep_done) return;
    const auto t0 = Clock::now();
    const auto graphs = gt_test::nonisomorphic_graphs(7);
    for (AssertionKind kind : gt::kAllAssertionKinds) {
        for (const Graph& g : graphs)
            for (const Assertion& a : gt_test::sweep(g, kind)) g_sweep.run(g, a);
        std::mt19937_64 rng(0xC0FFEE + static_cast<int>(kind));
        const bool book = kind == AssertionKind::StackLeq || kind == AssertionKind::QueueLeq;
        std::uniform_int_distribution<int> size(1, book ? gt::oracle::kPermutationGate : 12);
        std::uniform_real_distribution<double> density(0.1, 0.9);
        for (int done = 0; done < 500;) {
            Graph g = gt_test::random_graph(size(rng), density(rng), rng);
            auto choices = gt_test::sweep(g, kind);
            if (choices.empty()) continue;
            g_sweep.run(g, pick(choices, rng));
            ++done;
        }
    }
    g_sweep_seconds = seconds_since(t0);
    g_sweep_done = true;
}

Outcome criterion1() {
    run_sweep();
    const auto& s = g_sweep;
    Outcome o;
    o.pass = s.mismatches == 0 && s.budget == 0 && g_sweep_seconds < 300;
    o.detail = std::to_string(s.cases) + " cases (all graphs n<=7 + 500 random per kind), " + std::to_string(s.mismatches) +
               " mismatches, " + std::to_string(s.budget) + " budget overruns, " + fixed(g_sweep_seconds, 1) + "s";
    for (const auto& e : s.examples) o.detail += "\n      " + e;
    return o;
}

Outcome criterion3() {
    run_sweep();
    Outcome o;
    o.pass = g_sweep.incomplete == 0 && g_sweep.emitted > 0;
    o.detail = std::to_string(g_sweep.emitted) + " certificates emitted, " + std::to_string(g_sweep.incomplete) +
               " failed verify or judge";
    return o;
}

// ---------------------------------------------------------------------------

Outcome criterion2() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::vector<AssertionKind> kinds(std::begin(gt::kAllAssertionKinds), std::end(gt::kAllAssertionKinds));
    for (LayoutStyle style : {LayoutStyle::NodeLink, LayoutStyle::Matrix, LayoutStyle::Book}) {
        std::vector<AssertionKind> usable;
        for (AssertionKind k : kinds) {
            auto styles = gt::supported_styles(k);
            if (std::find(styles.begin(), styles.end(), style) != styles.end()) usable.push_back(k);
        }
        const auto mutations = gt::mutations_for(style);
        std::map<gt::MutationKind, int> per_kind;
        int produced = 0, convicted = 0;
        std::string first_conviction;
        const int top = style == LayoutStyle::Book ? 8 : 10;
        while (produced < 1000) {
            const AssertionKind kind = pick(usable, rng);
            Graph g = gt_test::random_graph(std::uniform_int_distribution<int>(3, top)(rng),
                                            std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
            auto choices = gt_test::sweep(g, kind);
            if (choices.empty()) continue;
            gt::ProveResult r;
            try {
                r = gt::prove(g, pick(choices, rng), style);
            } catch (const gt::Error&) {
                continue;
            }
            if (!r.ok()) continue;
            const gt::MutationKind mk = pick(mutations, rng);
            gt::Certificate bad;
            try {
                bad = gt::mutate_certificate(r.certificate, mk, rng);
            } catch (const gt::MutationInapplicable&) {
                continue;
            }
            ++produced;
            ++per_kind[mk];
            if (!gt::verify(bad).empty()) continue;
            if (gt::try_certificate(bad).convinced) {
                ++convicted;
                if (first_conviction.empty()) {
                    first_conviction = std::string(gt::to_string(mk)) + " on " + gt::describe(r.certificate.assertion);
                }
            }
        }
        o.pass = o.pass && convicted == 0;
        o.detail += std::string(o.detail.empty() ? "" : "; ") + std::string(gt::to_string(style)) + ": " +
                    std::to_string(produced) + " mutants, " + std::to_string(convicted) + " convicted (";
        bool first = true;
        for (auto [mk, count] : per_kind) {
            o.detail += std::string(first ? "" : " ") + std::string(gt::to_string(mk)) + "=" + std::to_string(count);
            first = false;
        }
        o.detail += ")";
        if (!first_conviction.empty()) o.detail += " first: " + first_conviction;
    }
    return o;
}

// ---------------------------------------------------------------------------

/// Growth families for the observation fit: graph for a size n, and its assertion.
struct Family {
    std::string label;
    AssertionKind kind;
    LayoutStyle style;
    std::function<std::pair<Graph, Assertion>(int)> make;
};

Outcome criterion4() {
    using K = AssertionKind;
    Outcome o;
    // perceptual complexity column of the overview tables
    const std::map<K, std::string> table = {
        {K::Connected, "O(n)"},        {K::NotConnected, "O(1)"},    {K::NotKConnected, "O(k)"},
        {K::KConnectedSparse, "O(kn)"}, {K::HamiltonianCycle, "O(1)"}, {K::LengthKCycle, "O(k)"},
        {K::NotBipartite, "O(1)"},     {K::KColorable, "O(k)"},      {K::Complete, "O(1)"},
        {K::NotComplete, "O(1)"},      {K::Clique, "O(k)"},          {K::IndependentSet, "O(k)"},
        {K::DominatingSet, "O(n)"},    {K::DistanceEquals, "O(k)"},  {K::DiameterGreater, "O(k)"},
        {K::StackLeq, "O(n+m)"},       {K::QueueLeq, "O(n+m)"},
    };
    int rows = 0, row_mismatch = 0;
    for (K kind : gt::kAllAssertionKinds) {
        ++rows;
        if (std::string(gt::complexity_class(kind)) != table.at(kind)) {
            ++row_mismatch;
            o.detail += " row " + std::string(gt::to_string(kind)) + " differs;";
        }
    }
    // the "not (2-)connected" row covers a single cut vertex
    if (gt::complexity_class(Assertion{K::NotKConnected, 2}) != std::string("O(1)")) {
        ++row_mismatch;
        o.detail += " cut-vertex row differs;";
    }

    // chords and pendants kept away from the cycle so that no vertex sits on an edge
    auto cycle_with_diameter = [](int n) {
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        e.emplace_back(0, n / 2);
        return Graph(n, e);
    };
    auto odd_cycle = [](int n) {
        const int len = n % 2 == 1 ? n : n - 1;
        std::vector<Edge> e;
        for (int i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
        if (len < n) e.emplace_back(0, n - 1);
        return Graph(n, e);
    };
    auto two_cycles = [](int n, bool shared) {
        // two cycles, disjoint or glued at one vertex
        const int a = n / 2, b = n - a + (shared ? 1 : 0);
        std::vector<Edge> e;
        for (int i = 0; i < a; ++i) e.emplace_back(i, (i + 1) % a);
        const int base = shared ? a - 1 : a;
        for (int i = 0; i < b - 1; ++i) e.emplace_back(base + i, base + i + 1);
        e.emplace_back(base + b - 1, base);
        return Graph(n, e);
    };
    const std::vector<Family> constant = {
        {"not-connected", K::NotConnected, LayoutStyle::NodeLink,
         [&](int n) { return std::pair{two_cycles(n, false), Assertion{K::NotConnected}}; }},
        {"cut-vertex", K::NotKConnected, LayoutStyle::NodeLink,
         [&](int n) { return std::pair{two_cycles(n, true), Assertion{K::NotKConnected, 2}}; }},
        {"hamiltonian/nodelink", K::HamiltonianCycle, LayoutStyle::NodeLink,
         [&](int n) { return std::pair{cycle_with_diameter(n), Assertion{K::HamiltonianCycle}}; }},
        {"hamiltonian/matrix", K::HamiltonianCycle, LayoutStyle::Matrix,
         [&](int n) { return std::pair{cycle_with_diameter(n), Assertion{K::HamiltonianCycle}}; }},
        {"not-bipartite/nodelink", K::NotBipartite, LayoutStyle::NodeLink,
         [&](int n) { return std::pair{odd_cycle(n), Assertion{K::NotBipartite}}; }},
        {"not-bipartite/matrix", K::NotBipartite, LayoutStyle::Matrix,
         [&](int n) { return std::pair{odd_cycle(n), Assertion{K::NotBipartite}}; }},
        {"complete", K::Complete, LayoutStyle::Matrix,
         [&](int n) { return std::pair{gt_test::complete_graph(n), Assertion{K::Complete}}; }},
        {"not-complete", K::NotComplete, LayoutStyle::Matrix,
         [&](int n) { return std::pair{gt_test::complete_graph(n).without_edge({1, n - 1}), Assertion{K::NotComplete}}; }},
    };
    std::mt19937_64 rng(77);
    const std::vector<Family> linear = {
        {"connected", K::Connected, LayoutStyle::NodeLink,
         [&](int n) { return std::pair{gt_test::random_connected_graph(n, 0.0, rng), Assertion{K::Connected}}; }},
        {"dominating-set", K::DominatingSet, LayoutStyle::Matrix,
         [&](int n) {
             Graph g = gt_test::random_graph(n, 0.1, rng);
             std::vector<Edge> e = g.edges();
             for (int v = 1; v < n; ++v)
                 if (!g.has_edge(0, v)) e.emplace_back(0, v);
             return std::pair{Graph(n, e), Assertion{K::DominatingSet, 1}};
         }},
    };

    auto observations = [&](const Family& f, int n, std::string& why) -> std::optional<double> {
        auto [g, a] = f.make(n);
        auto r = gt::prove(g, a, f.style);
        if (!r.ok()) {
            why = f.label + " n=" + std::to_string(n) + " not convinced";
            return std::nullopt;
        }
        if (r.verdict.complexity_class != std::string(gt::complexity_class(a))) why = f.label + " verdict class differs";
        return static_cast<double>(r.verdict.observations);
    };

    std::string constants, fits;
    bool growth_ok = true;
    for (const auto& f : constant) {
        std::set<double> seen;
        for (int n = 6; n <= 60; ++n) {
            std::string why;
            auto obs = observations(f, n, why);
            if (!why.empty()) {
                growth_ok = false;
                o.detail += " " + why + ";";
            }
            if (obs) seen.insert(*obs);
        }
        growth_ok = growth_ok && seen.size() == 1;
        constants += " " + f.label + "=" + (seen.size() == 1 ? fixed(*seen.begin(), 0) : "varies");
    }
    for (const auto& f : linear) {
        std::vector<double> xs, ys;
        for (int n = 6; n <= 60; ++n) {
            std::string why;
            auto obs = observations(f, n, why);
            if (!why.empty()) {
                growth_ok = false;
                o.detail += " " + why + ";";
            }
            if (obs) xs.push_back(n), ys.push_back(*obs);
        }
        const double r2 = r_squared(xs, ys);
        growth_ok = growth_ok && r2 >= 0.99;
        fits += " " + f.label + " R2=" + fixed(r2, 4);
    }
    o.pass = row_mismatch == 0 && growth_ok;
    o.detail = std::to_string(rows) + "/" + std::to_string(rows) + " kinds checked, " + std::to_string(row_mismatch) +
               " class mismatches; constant n=6..60:" + constants + "; linear:" + fits + o.detail;
    return o;
}

// ---------------------------------------------------------------------------

Outcome criterion5() {
    Outcome o;
    int ham_bad = 0, bip_bad = 0, parity_bad = 0;
    std::string why;
    for (int n = 5; n <= 50; ++n) {
        auto r = gt::prove(gt_test::cycle_graph(n), {AssertionKind::HamiltonianCycle}, LayoutStyle::Matrix);
        const auto* m = std::get_if<gt::MatrixLayout>(&r.certificate.layout);
        std::set<std::pair<int, int>> expected, marks;
        for (int i = 0; i + 1 < n; ++i) expected.emplace(i, i + 1);
        expected.emplace(0, n - 1);
        bool ok = r.ok() && m;
        if (ok) {
            for (const auto& c : m->marks) {
                ok = ok && c.cls == gt::MarkClass::Evidence;
                marks.emplace(std::min(c.row, c.col), std::max(c.row, c.col));
            }
            auto model = gt::extract_mental_model(r.certificate.layout);
            ok = ok && marks == expected && model.components.size() == 2 &&
                 std::holds_alternative<gt::gist::DiagonalRun>(model.components[0]) &&
                 std::get<gt::gist::DiagonalRun>(model.components[0]).length == n - 1 &&
                 std::holds_alternative<gt::gist::CornerCellPair>(model.components[1]);
        }
        if (!ok && ++ham_bad == 1) why += " hamiltonian n=" + std::to_string(n) + ";";
    }

    std::mt19937_64 rng(5);
    std::vector<Graph> bipartite = {gt_test::cycle_graph(6), gt_test::cycle_graph(10),
                                    Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})};
    while (bipartite.size() < 40) {
        const int n = std::uniform_int_distribution<int>(2, 14)(rng);
        std::vector<int> side(n);
        for (auto& s : side) s = std::bernoulli_distribution(0.5)(rng);
        std::vector<Edge> e;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (side[a] != side[b] && std::bernoulli_distribution(0.5)(rng)) e.emplace_back(a, b);
        if (!e.empty()) bipartite.emplace_back(n, e);
    }
    for (const Graph& g : bipartite) {
        auto r = gt::prove(g, {AssertionKind::KColorable, 2}, LayoutStyle::Matrix);
        const auto* m = std::get_if<gt::MatrixLayout>(&r.certificate.layout);
        bool ok = r.ok() && m && m->blocks.size() == 2;
        if (ok) {
            // the two diagonal blocks tile the order and hold no edge
            std::vector<int> at(g.n());
            for (int i = 0; i < g.n(); ++i) at[m->order[i]] = i;
            ok = m->blocks[0].begin == 0 && m->blocks[0].end == m->blocks[1].begin && m->blocks[1].end == g.n();
            for (const Edge& e : g.edges()) {
                for (const auto& b : m->blocks) {
                    const bool inside = at[e.u] >= b.begin && at[e.u] < b.end && at[e.v] >= b.begin && at[e.v] < b.end;
                    ok = ok && !inside;
                }
            }
            int empty = 0;
            for (const auto& t : gt::extract_mental_model(r.certificate.layout).components)
                empty += std::holds_alternative<gt::gist::EmptyBlock>(t);
            ok = ok && empty == 2;
        }
        if (!ok && ++bip_bad == 1) why += " bipartite " + gt::serialize_graph(g) + ";";
    }

    for (int len = 3; len <= 21; ++len) {
        Graph g = gt_test::cycle_graph(len);
        gt::Cycle cyc;
        for (int i = 0; i < len; ++i) cyc.vertices.push_back(i);
        gt::MatrixLayout m = gt::matrix_certificate_order(g, cyc, true);
        bool alternating = true;
        for (int i = 0; i + 1 < len; ++i) alternating = alternating && m.widths[i] != m.widths[i + 1];
        const bool square = m.widths[0] == m.widths[len - 1];
        bool closing_marked = false;
        for (const auto& c : m.marks) closing_marked = closing_marked || (c.row == 0 && c.col == len - 1);
        const bool odd = len % 2 == 1;
        bool gist_ok = false;
        for (const auto& t : gt::extract_mental_model(m).components) {
            if (const auto* mc = std::get_if<gt::gist::MarkedCell>(&t)) gist_ok = mc->square == odd;
        }
        if (!(alternating && closing_marked && square == odd && gist_ok) && ++parity_bad == 1) {
            why += " parity length " + std::to_string(len) + ";";
        }
    }
    o.pass = ham_bad + bip_bad + parity_bad == 0;
    o.detail = "hamiltonian C5..C50 " + std::to_string(46 - ham_bad) + "/46, bipartite two empty blocks " +
               std::to_string(bipartite.size() - bip_bad) + "/" + std::to_string(bipartite.size()) +
               ", parity closing cell square iff odd " + std::to_string(19 - parity_bad) + "/19" + why;
    return o;
}

// ---------------------------------------------------------------------------

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    int radial = 0, crossing_layouts = 0, radial_sep = 0, max_n = 0, first_crowded = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 200)(rng);
        max_n = std::max(max_n, n);
        Graph g = gt_test::random_connected_graph(n, 2.0 / n, rng);
        auto ev = std::get<gt::SpanTree>(gt::find_evidence(g, {AssertionKind::Connected}));
        auto l = gt::radial_tree_layout(g, ev);
        ++radial;
        crossing_layouts += highlighted_crossings(l) > 0;
        const bool ok = separated(l.positions);
        radial_sep += ok;
        if (!ok && (first_crowded == 0 || n < first_crowded)) first_crowded = n;
    }

    int sep_layouts = 0, gap_ok = 0, sep_sep = 0;
    for (int tries = 0; sep_layouts < 200; ++tries) {
        const int n = std::uniform_int_distribution<int>(2, 20)(rng);
        Graph g = gt_test::random_graph(n, std::uniform_real_distribution<double>(0.05, 0.6)(rng), rng);
        std::vector<gt::Vertex> a, b;
        gt::NodeLinkLayout l;
        try {
            if (tries % 2 == 0) {
                auto ev = std::get<gt::Partition>(gt::find_evidence(g, {AssertionKind::NotConnected}));
                l = gt::separation_layout(g, ev), a = ev.a, b = ev.b;
            } else {
                auto ev = std::get<gt::VertexCut>(
                    gt::find_evidence(g, {AssertionKind::NotKConnected, std::uniform_int_distribution<int>(1, 4)(rng)}));
                l = gt::separation_layout(g, ev), a = ev.a, b = ev.b;
            }
        } catch (const gt::NoEvidence&) {
            continue;
        }
        ++sep_layouts;
        std::vector<Point> pa, pb;
        for (auto v : a) pa.push_back(l.positions[v]);
        for (auto v : b) pb.push_back(l.positions[v]);
        gap_ok += hull_gap(pa, pb) >= 0.02 * diagonal(l.positions);
        sep_sep += separated(l.positions);
    }

    // every other node-link construction on random instances
    int other = 0, other_sep = 0;
    const std::vector<AssertionKind> others = {AssertionKind::HamiltonianCycle, AssertionKind::LengthKCycle,
                                               AssertionKind::NotBipartite,     AssertionKind::DistanceEquals,
                                               AssertionKind::DiameterGreater,  AssertionKind::KConnectedSparse};
    while (other < 300) {
        const AssertionKind kind = pick(others, rng);
        Graph g = gt_test::random_graph(std::uniform_int_distribution<int>(3, 12)(rng),
                                        std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
        auto choices = gt_test::sweep(g, kind);
        if (choices.empty()) continue;
        try {
            const Assertion a = pick(choices, rng);
            auto l = std::get<gt::NodeLinkLayout>(gt::synthesize_layout(g, a, gt::find_evidence(g, a), LayoutStyle::NodeLink));
            ++other;
            other_sep += separated(l.positions);
        } catch (const gt::Error&) {
        }
    }
    o.pass = crossing_layouts == 0 && gap_ok == sep_layouts && radial_sep == radial && sep_sep == sep_layouts &&
             other_sep == other;
    o.detail = "radial (n<=" + std::to_string(max_n) + "): " + std::to_string(radial - crossing_layouts) + "/" +
               std::to_string(radial) + " crossing-free, " + std::to_string(radial_sep) + "/" + std::to_string(radial) +
               " meet vertex separation" +
               (first_crowded ? " (smallest crowded n=" + std::to_string(first_crowded) + ")" : std::string()) +
               "; separation: hull gap " + std::to_string(gap_ok) + "/" +
               std::to_string(sep_layouts) + ", vertex separation " + std::to_string(sep_sep) + "/" +
               std::to_string(sep_layouts) + "; cycle/level/sparse: vertex separation " + std::to_string(other_sep) +
               "/" + std::to_string(other);
    return o;
}

// ---------------------------------------------------------------------------

gt::NodeLinkLayout drawing(const Graph& g, std::vector<Point> pts) {
    gt::NodeLinkLayout l;
    l.positions = std::move(pts);
    l.edges = g.edges();
    return l;
}

Outcome criterion7() {
    Outcome o;
    const double eps = 1e-9;
    int fixtures = 0, fixture_bad = 0;
    auto expect = [&](const char* what, std::optional<double> got, double want) {
        ++fixtures;
        if (!got || std::abs(*got - want) > eps) {
            ++fixture_bad;
            o.detail += std::string(" ") + what + "=" + (got ? fixed(*got, 12) : "N/A") + ";";
        }
    };
    {
        Graph g(2, {{0, 1}});
        expect("edge st", gt::compute_metrics(drawing(g, {{0.3, -1.7}, {2.9, 4.1}}), g).st, 0.0);
    }
    {
        Graph g(3, {{0, 1}, {1, 2}});
        auto r = gt::compute_metrics(drawing(g, {{0, 0}, {1, 0}, {2, 0}}), g);
        expect("P3 st", r.st, 0.0);
        expect("P3 el", r.el, 1.0);
        expect("P3 an", r.an, 180.0);
    }
    const std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    {
        Graph c4 = gt_test::cycle_graph(4);
        auto r = gt::compute_metrics(drawing(c4, square), c4);
        expect("C4 ar", r.ar, 1.0);
        expect("C4 el", r.el, 1.0);
        expect("C4 nr", r.nr, 1.0 / std::sqrt(2.0));
        expect("C4 an", r.an, 90.0);
        expect("C4 cn", r.cn, 0.0);
        ++fixtures;
        if (r.cr) ++fixture_bad, o.detail += " C4 cr present;";
    }
    {
        Graph k4 = gt_test::complete_graph(4);
        auto r = gt::compute_metrics(drawing(k4, square), k4);
        expect("K4 cn", r.cn, 1.0);
        expect("K4 cr", r.cr, 90.0);
    }
    {
        Graph k3 = gt_test::complete_graph(3);
        auto r = gt::compute_metrics(drawing(k3, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}), k3);
        expect("K3 ji", r.ji, 1.0);
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-5, 5);
    int invariant = 0, cn_affine = 0;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        Graph g = gt_test::random_graph(std::uniform_int_distribution<int>(3, 12)(rng), 0.4, rng);
        std::vector<Point> pts;
        for (int v = 0; v < g.n(); ++v) pts.push_back({coord(rng), coord(rng)});
        const double theta = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
        const double scale = std::exp(std::uniform_real_distribution<double>(std::log(0.1), std::log(10.0))(rng));
        const Point shift{coord(rng) * 20, coord(rng) * 20};
        std::vector<Point> moved, sheared;
        const double a = std::uniform_real_distribution<double>(0.5, 2)(rng), b = coord(rng) * 0.3, c = coord(rng) * 0.3,
                     d = std::uniform_real_distribution<double>(0.5, 2)(rng);
        for (Point p : pts) {
            moved.push_back({scale * (std::cos(theta) * p.x - std::sin(theta) * p.y) + shift.x,
                             scale * (std::sin(theta) * p.x + std::cos(theta) * p.y) + shift.y});
            sheared.push_back({a * p.x + b * p.y + shift.x, c * p.x + d * p.y + shift.y});
        }
        auto r0 = gt::compute_metrics(drawing(g, pts), g), r1 = gt::compute_metrics(drawing(g, moved), g);
        auto same = [&](std::optional<double> x, std::optional<double> y) {
            if (x.has_value() != y.has_value()) return false;
            return !x || std::abs(*x - *y) <= eps * std::max(1.0, std::abs(*x));
        };
        const bool ok = same(r0.st, r1.st) && same(r0.ji, r1.ji) && same(r0.el, r1.el) && same(r0.nr, r1.nr) &&
                        same(r0.ar, r1.ar) && same(r0.cr, r1.cr) && same(r0.an, r1.an) && r0.cn == r1.cn;
        invariant += ok;
        if (!ok && first.empty()) first = " first variant layout #" + std::to_string(i);
        cn_affine += gt::compute_metrics(drawing(g, sheared), g).cn == r0.cn;
    }
    o.pass = fixture_bad == 0 && invariant == 100 && cn_affine == 100;
    o.detail = std::to_string(fixtures - fixture_bad) + "/" + std::to_string(fixtures) +
               " analytic fixtures within 1e-9; similarity invariance " + std::to_string(invariant) +
               "/100; cn under affine maps " + std::to_string(cn_affine) + "/100" + first + o.detail;
    return o;
}

// ---------------------------------------------------------------------------

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    int graphs = 0, ok = 0, rejected_draws = 0;
    while (graphs < 100) {
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        const int n = std::uniform_int_distribution<int>(k + 1, 12)(rng);
        Graph g = gt_test::random_graph(n, std::uniform_real_distribution<double>(0.3, 1.0)(rng), rng);
        if (!gt::oracle::k_connected(g, k)) {
            ++rejected_draws;
            continue;
        }
        ++graphs;
        auto s = gt::sparsify_k_connected(g, k);
        bool subset = true;
        for (const Edge& e : s.edges) subset = subset && g.has_edge(e.u, e.v);
        const bool small = static_cast<int>(s.edges.size()) <= k * (n - 1);
        ok += subset && small && gt::oracle::k_connected(g.spanning_subgraph(s.edges), k);
    }
    o.pass = ok == graphs;
    o.detail = std::to_string(ok) + "/" + std::to_string(graphs) +
               " sparsified graphs within k(n-1) edges and still k-connected (brute force; " +
               std::to_string(rejected_draws) + " draws were not k-connected)";
    return o;
}

// ---------------------------------------------------------------------------

std::filesystem::path golden_dir() { return GRAPHTRIALS_GOLDEN_DIR; }

std::pair<std::string, std::string> render_case(const gt_test::GoldenCase& c) {
    auto r = gt::prove(c.graph, c.assertion, c.style);
    if (!r.ok()) throw std::runtime_error(c.name + " failed its self-check");
    gt::CertificateDocument doc{r.certificate, "golden " + c.name};
    return {gt::write_certificate(doc), gt::render_svg(r.certificate)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion9() {
    Outcome o;
    int files = 0, identical = 0, stable = 0;
    for (const auto& c : gt_test::golden_cases()) {
        auto first = render_case(c), second = render_case(c);
        stable += first == second;
        // and back through the parser
        auto reparsed = gt::write_certificate(gt::read_certificate(first.first));
        stable += reparsed == first.first;
        for (auto [ext, text] : {std::pair{".json", first.first}, std::pair{".svg", first.second}}) {
            ++files;
            const auto path = golden_dir() / (c.name + ext);
            if (std::filesystem::exists(path) && slurp(path) == text) ++identical;
            else if (o.detail.size() < 200) o.detail += " differs: " + path.filename().string() + ";";
        }
    }
    o.pass = identical == files && stable == files;
    o.detail = std::to_string(identical) + "/" + std::to_string(files) + " golden files byte-identical, " +
               std::to_string(stable) + "/" + std::to_string(files) + " stable across reruns and JSON round trip" +
               o.detail;
    return o;
}

int regenerate() {
    std::filesystem::create_directories(golden_dir());
    for (const auto& c : gt_test::golden_cases()) {
        auto [json, svg] = render_case(c);
        std::ofstream(golden_dir() / (c.name + ".json"), std::ios::binary) << json;
        std::ofstream(golden_dir() / (c.name + ".svg"), std::ios::binary) << svg;
    }
    std::cout << "wrote " << gt_test::golden_cases().size() << " cases to " << golden_dir() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args[0] == "--regenerate") return regenerate();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", criterion1},
        {"soundness under mutation", criterion2},
        {"pipeline completeness", criterion3},
        {"perceptual complexity table", criterion4},
        {"matrix figure structure", criterion5},
        {"layout invariants", criterion6},
        {"metric kernels", criterion7},
        {"Nagamochi-Ibaraki sparsification", criterion8},
        {"determinism (golden corpus)", criterion9},
    };
    std::set<int> only;
    for (const auto& a : args) only.insert(std::stoi(a));

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.contains(id)) continue;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << " " << criteria[i].first << " ("
                  << fixed(seconds_since(t0), 1) << "s): " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
