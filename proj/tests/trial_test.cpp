#include <gtest/gtest.h>

#include <random>

#include "graphtrials/graphtrials.hpp"
#include "golden_cases.hpp"
#include "support.hpp"

namespace gt = graphtrials;
using gt::AssertionKind;
using gt::Graph;
using gt::LayoutStyle;

namespace {

bool has_code(const gt::Violations& vs, const std::string& code) {
    return std::any_of(vs.begin(), vs.end(), [&](const gt::Violation& v) { return v.code == code; });
}

// two triangles sharing vertex 2
const Graph kBowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
const Graph kK33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});

template <class T>
int count_of(const gt::MentalModel& m) {
    return static_cast<int>(std::count_if(m.components.begin(), m.components.end(),
                                          [](const gt::Gist& g) { return std::holds_alternative<T>(g); }));
}

template <class T>
T* first_of(gt::MentalModel& m) {
    for (auto& g : m.components) {
        if (auto* t = std::get_if<T>(&g)) return t;
    }
    return nullptr;
}

}  // namespace

TEST(Verify, RadialTreePasses) {
    auto r = gt::prove(gt_test::cycle_graph(4), {AssertionKind::Connected});
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(gt::verify(r.certificate).empty());
}

TEST(Verify, UndrawnEdgeIsMissing) {
    auto c = gt::prove(gt_test::cycle_graph(4), {AssertionKind::Connected}).certificate;
    auto edges = c.graph.edges();
    edges.push_back({0, 2});
    c.graph = Graph(4, edges);
    EXPECT_TRUE(has_code(gt::verify_faithfulness(c), "missing_edge"));
}

TEST(Verify, VertexOnForeignEdgeIsOccluded) {
    auto c = gt::prove(gt_test::cycle_graph(4), {AssertionKind::Connected}).certificate;
    auto& l = std::get<gt::NodeLinkLayout>(c.layout);
    l.positions[2] = 0.5 * (l.positions[0] + l.positions[1]);
    EXPECT_TRUE(has_code(gt::verify_faithfulness(c), "occluded_vertex"));
}

TEST(Verify, OddCyclePasses) {
    auto r = gt::prove(gt_test::cycle_graph(5), {AssertionKind::NotBipartite});
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(r.verdict.convinced);
}

TEST(Verify, TreeMissingVertexIsNotSpanning) {
    Graph c4 = gt_test::cycle_graph(4);
    gt::Certificate c{c4, {AssertionKind::Connected}, gt::SpanTree{0, {-1, 0, 1, -1}, {0, 1, 2, 0}},
                      gt::circular_layout(c4)};
    EXPECT_TRUE(has_code(gt::verify_evidence(c), "tree_not_spanning"));
}

TEST(Verify, InterleavedSpine) {
    Graph c4 = gt_test::cycle_graph(4);
    gt::BookEmbedding b{1, gt::BookDiscipline::Stack, {0, 2, 1, 3}, {{{0, 1}, 0}, {{0, 3}, 0}, {{1, 2}, 0}, {{2, 3}, 0}}};
    gt::Certificate c{c4, {AssertionKind::StackLeq, 1}, b, gt::book_layout(c4, b)};
    EXPECT_TRUE(gt::verify_faithfulness(c).empty());
    EXPECT_TRUE(has_code(gt::verify_evidence(c), "interleaving_arcs"));
}

TEST(Verify, EvidenceForAnotherAssertion) {
    Graph c4 = gt_test::cycle_graph(4);
    gt::Certificate c{c4, {AssertionKind::NotBipartite}, gt::coloring_evidence(c4, 2), gt::circular_layout(c4)};
    EXPECT_TRUE(has_code(gt::verify_evidence(c), "evidence_kind_mismatch"));
}

TEST(Gist, CutVertexGlue) {
    auto r = gt::prove(kBowtie, {AssertionKind::NotKConnected, 2});
    auto m = gt::extract_mental_model(r.certificate.layout);
    ASSERT_EQ(m.components.size(), 3u);
    EXPECT_TRUE(std::holds_alternative<gt::gist::SeparatedGroup>(m.components[0]));
    EXPECT_TRUE(std::holds_alternative<gt::gist::SeparatedGroup>(m.components[1]));
    ASSERT_TRUE(std::holds_alternative<gt::gist::StripVertices>(m.components[2]));
    EXPECT_EQ(std::get<gt::gist::StripVertices>(m.components[2]).count, 1);
}

TEST(Gist, HamiltonianMatrix) {
    auto r = gt::prove(gt_test::cycle_graph(5), {AssertionKind::HamiltonianCycle}, LayoutStyle::Matrix);
    auto m = gt::extract_mental_model(r.certificate.layout);
    ASSERT_EQ(m.components.size(), 2u);
    ASSERT_TRUE(std::holds_alternative<gt::gist::DiagonalRun>(m.components[0]));
    EXPECT_EQ(std::get<gt::gist::DiagonalRun>(m.components[0]).length, 4);
    EXPECT_TRUE(std::holds_alternative<gt::gist::CornerCellPair>(m.components[1]));
}

TEST(Gist, BipartiteMatrix) {
    auto r = gt::prove(kK33, {AssertionKind::KColorable, 2}, LayoutStyle::Matrix);
    auto m = gt::extract_mental_model(r.certificate.layout);
    EXPECT_EQ(count_of<gt::gist::EmptyBlock>(m), 2);
    EXPECT_EQ(m.components.size(), 2u);
}

TEST(Judge, CutVertexAtAGlance) {
    auto r = gt::prove(kBowtie, {AssertionKind::NotKConnected, 2});
    EXPECT_TRUE(r.verdict.convinced);
    EXPECT_EQ(r.verdict.complexity_class, "O(1)");
}

TEST(Judge, HamiltonianMatrixAtAGlance) {
    auto r = gt::prove(gt_test::cycle_graph(7), {AssertionKind::HamiltonianCycle}, LayoutStyle::Matrix);
    EXPECT_TRUE(r.verdict.convinced);
    EXPECT_EQ(r.verdict.complexity_class, "O(1)");
}

TEST(Judge, UncoveredTreeVertex) {
    auto r = gt::prove(gt_test::cycle_graph(6), {AssertionKind::Connected});
    auto m = gt::extract_mental_model(r.certificate.layout);
    EXPECT_TRUE(gt::judge(r.certificate.assertion, m).convinced);
    auto* tree = first_of<gt::gist::HighlightedTree>(m);
    ASSERT_NE(tree, nullptr);
    tree->uncovered = 1;
    EXPECT_FALSE(gt::judge(r.certificate.assertion, m).convinced);
}

TEST(Judge, TreeSweepGrowsWithSize) {
    std::mt19937_64 rng(8);
    Graph g = gt_test::random_connected_graph(20, 0.0, rng);
    auto r = gt::prove(g, {AssertionKind::Connected});
    EXPECT_TRUE(r.verdict.convinced);
    EXPECT_GE(r.verdict.observations, 20);
}

TEST(Judge, ConstantWorkForDisconnection) {
    std::vector<int> seen;
    for (int n : {4, 10, 30}) {
        std::vector<gt::Edge> edges;
        for (int v = 0; v + 1 < n; ++v) {
            if (v + 1 != n / 2) edges.push_back({v, v + 1});
        }
        auto r = gt::prove(Graph(n, edges), {AssertionKind::NotConnected});
        EXPECT_TRUE(r.verdict.convinced);
        seen.push_back(r.verdict.observations);
    }
    EXPECT_EQ(seen[0], seen[1]);
    EXPECT_EQ(seen[1], seen[2]);
}

TEST(Judge, SameTokensSameVerdict) {
    const gt::Assertion a{AssertionKind::HamiltonianCycle};
    auto first = gt::prove(gt_test::cycle_graph(6), a, LayoutStyle::Matrix);
    auto second = gt::prove(gt_test::relabel(gt_test::cycle_graph(6), {3, 5, 0, 2, 4, 1}), a, LayoutStyle::Matrix);
    auto m1 = gt::extract_mental_model(first.certificate.layout);
    auto m2 = gt::extract_mental_model(second.certificate.layout);
    ASSERT_EQ(m1.components, m2.components);
    auto v1 = gt::judge(a, m1), v2 = gt::judge(a, m2);
    EXPECT_EQ(v1.convinced, v2.convinced);
    EXPECT_EQ(v1.observations, v2.observations);
}

TEST(Mutation, HiddenEdgeBehindCutVertex) {
    auto c = gt::prove(kBowtie, {AssertionKind::NotKConnected, 2}).certificate;
    std::mt19937_64 rng(1);
    auto bad = gt::mutate_certificate(c, gt::MutationKind::HideEdge, rng);
    EXPECT_EQ(bad.graph.m(), c.graph.m() + 1);
    EXPECT_TRUE(has_code(gt::verify_faithfulness(bad), "occluded_vertex"));
    EXPECT_FALSE(gt::try_certificate(bad).convinced);
}

TEST(Mutation, MissingCornerMark) {
    auto c = gt::prove(gt_test::cycle_graph(5), {AssertionKind::HamiltonianCycle}, LayoutStyle::Matrix).certificate;
    std::mt19937_64 rng(1);
    auto bad = gt::mutate_certificate(c, gt::MutationKind::RemoveCornerMark, rng);
    EXPECT_EQ(count_of<gt::gist::CornerCellPair>(gt::extract_mental_model(bad.layout)), 0);
    EXPECT_FALSE(gt::try_certificate(bad).convinced);
}

TEST(Mutation, MarkedEmptyCell) {
    auto c = gt::prove(gt_test::cycle_graph(5), {AssertionKind::HamiltonianCycle}, LayoutStyle::Matrix).certificate;
    std::mt19937_64 rng(1);
    auto bad = gt::mutate_certificate(c, gt::MutationKind::MarkNonEdgeCell, rng);
    EXPECT_TRUE(has_code(gt::verify_faithfulness(bad), "evidence_mark_on_non_edge"));
}

TEST(Mutation, InapplicableIsReported) {
    auto c = gt::prove(gt_test::cycle_graph(5), {AssertionKind::Connected}).certificate;
    std::mt19937_64 rng(1);
    EXPECT_THROW(gt::mutate_certificate(c, gt::MutationKind::BreakParity, rng), gt::MutationInapplicable);
}

TEST(Mutation, NeverConvinces) {
    std::mt19937_64 rng(77);
    int applied = 0;
    for (const auto& gc : gt_test::golden_cases()) {
        auto c = gt::prove(gc.graph, gc.assertion, gc.style).certificate;
        for (gt::MutationKind kind : gt::mutations_for(gt::style_of(c.layout))) {
            for (int i = 0; i < 4; ++i) {
                try {
                    auto bad = gt::mutate_certificate(c, kind, rng);
                    ++applied;
                    EXPECT_FALSE(gt::try_certificate(bad).convinced) << gc.name << " " << gt::to_string(kind);
                } catch (const gt::MutationInapplicable&) {
                }
            }
        }
    }
    EXPECT_GT(applied, 50);
}

TEST(Pipeline, ConvincesOnSmallGraphs) {
    for (const Graph& g : gt_test::nonisomorphic_graphs(5)) {
        for (AssertionKind kind : gt::kAllAssertionKinds) {
            for (const gt::Assertion& a : gt_test::sweep(g, kind)) {
                if (!gt::oracle::check(g, a)) continue;
                for (LayoutStyle style : gt::supported_styles(kind)) {
                    auto r = gt::prove(g, a, style);
                    EXPECT_TRUE(r.violations.empty()) << gt::describe(a) << " on " << gt::serialize_graph(g);
                    EXPECT_TRUE(r.verdict.convinced) << gt::describe(a) << " on " << gt::serialize_graph(g);
                }
            }
        }
    }
}
