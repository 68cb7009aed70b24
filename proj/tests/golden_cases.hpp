#pragma once

// The golden corpus: fixed inputs whose certificate JSON and SVG are stored
// byte for byte under tests/golden.

#include <optional>
#include <string>
#include <vector>

#include "graphtrials/graphtrials.hpp"
#include "support.hpp"

namespace gt_test {

struct GoldenCase {
    std::string name;
    Graph graph;
    Assertion assertion;
    std::optional<graphtrials::LayoutStyle> style;
};

inline Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(edges));
}

inline std::vector<GoldenCase> golden_cases() {
    using K = AssertionKind;
    using S = graphtrials::LayoutStyle;
    const Graph c5 = cycle_graph(5), c6 = cycle_graph(6), k4 = complete_graph(4);
    const Graph p3(3, {{0, 1}, {1, 2}});
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    const Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const Graph c5_chord(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
    const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const Graph wheel(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    return {
        {"c5_connected", c5, {K::Connected}, std::nullopt},
        {"petersen_connected", petersen(), {K::Connected}, std::nullopt},
        {"triangles_not_connected", triangles, {K::NotConnected}, std::nullopt},
        {"p3_cut_vertex", p3, {K::NotKConnected, 2}, std::nullopt},
        {"bowtie_cut_vertex", bowtie, {K::NotKConnected, 2}, std::nullopt},
        {"k23_not_3_connected", k23, {K::NotKConnected, 3}, std::nullopt},
        {"wheel_3_connected_sparse", wheel, {K::KConnectedSparse, 3}, std::nullopt},
        {"c5_hamiltonian_nodelink", c5, {K::HamiltonianCycle}, S::NodeLink},
        {"c5_hamiltonian_matrix", c5, {K::HamiltonianCycle}, S::Matrix},
        {"k4_hamiltonian_nodelink", k4, {K::HamiltonianCycle}, S::NodeLink},
        {"wheel_4_cycle", wheel, {K::LengthKCycle, 4}, std::nullopt},
        {"c5_odd_cycle_nodelink", c5, {K::NotBipartite}, S::NodeLink},
        {"c5_odd_cycle_matrix", c5, {K::NotBipartite}, S::Matrix},
        {"c5_chord_odd_cycle", c5_chord, {K::NotBipartite}, S::NodeLink},
        {"k33_2_colorable", k33, {K::KColorable, 2}, std::nullopt},
        {"petersen_3_colorable", petersen(), {K::KColorable, 3}, std::nullopt},
        {"k4_complete", k4, {K::Complete}, std::nullopt},
        {"c5_not_complete", c5, {K::NotComplete}, std::nullopt},
        {"wheel_clique_3", wheel, {K::Clique, 3}, std::nullopt},
        {"petersen_independent_4", petersen(), {K::IndependentSet, 4}, std::nullopt},
        {"star_dominating_1", star, {K::DominatingSet, 1}, std::nullopt},
        {"p4_distance_3", p4, {K::DistanceEquals, 3, 0, 3}, std::nullopt},
        {"c6_diameter_greater_2", c6, {K::DiameterGreater, 2}, std::nullopt},
        {"c6_stack_1", c6, {K::StackLeq, 1}, std::nullopt},
        {"k4_stack_2", k4, {K::StackLeq, 2}, std::nullopt},
        {"wheel_queue_2", wheel, {K::QueueLeq, 2}, std::nullopt},
    };
}

}  // namespace gt_test
