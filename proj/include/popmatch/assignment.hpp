#pragma once

#include <cstdint>
#include <vector>

#include "popmatch/types.hpp"

namespace popmatch {

/// Bipartite graph of real vertices with one private dummy partner per real
/// vertex. Real edges carry integer weights; each (vertex, dummy) edge does
/// too. A "perfect" matching covers every real vertex, either by a real
/// edge or by falling back to its own dummy; one always exists.
struct WeightedAugmentedGraph {
    struct Edge {
        int left, right;
        long long weight;
    };

    int n_left = 0, n_right = 0;
    std::vector<Edge> real_edges;
    std::vector<long long> left_dummy_weight;   // weight of (left v, its dummy)
    std::vector<long long> right_dummy_weight;  // weight of (right v, its dummy)
};

/// Result of the assignment solve. left_to_right[u] is the real partner of
/// left vertex u, or -1 when u takes its dummy; analogously right_to_left.
/// The weight of the optimum is unique even when the matching is not.
struct AssignmentResult {
    std::vector<int> left_to_right;
    std::vector<int> right_to_left;
    long long weight = 0;
};

/// Maximum-weight perfect matching of the augmented graph, solved as a
/// square (n_left + n_right) assignment problem by a primal-dual method in
/// integer arithmetic: rows are real left vertices plus the dummies of the
/// right side, columns are real right vertices plus the dummies of the left
/// side, and unused dummies pair off at weight zero.
AssignmentResult max_weight_perfect_matching(const WeightedAugmentedGraph& g);

}  // namespace popmatch
