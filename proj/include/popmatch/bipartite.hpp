#pragma once

#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"
#include "popmatch/types.hpp"

namespace popmatch {

/// Plain bipartite graph view used by the matching primitives. `adj` maps
/// each left vertex to its right neighbours, ascending.
struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::vector<int>> adj;

    static BipartiteGraph from_instance(const PreferenceInstance& inst);
    static BipartiteGraph from_edges(int n_left, int n_right,
                                     const std::vector<std::pair<int, int>>& edges);

    std::vector<std::vector<int>> right_adj() const;
};

/// Maximum-cardinality matching via repeated augmenting-path phases
/// (Hopcroft-Karp). Deterministic for a fixed vertex order.
Matching maximum_matching(const BipartiteGraph& g);

enum class DMLabel { Even, Odd, Unreachable };

/// Even/odd/unreachable classification of all vertices with respect to
/// maximum matchings; identical for every maximum matching of the graph.
struct DMLabels {
    std::vector<DMLabel> left, right;

    DMLabel of(VertexId v) const {
        return v.side == Side::Agent ? left[v.index] : right[v.index];
    }
    int count(DMLabel l) const {
        int c = 0;
        for (auto x : left) c += x == l;
        for (auto x : right) c += x == l;
        return c;
    }
};

/// Labels every vertex Even (even-length alternating path from some
/// unmatched vertex), Odd, or Unreachable. Throws std::invalid_argument
/// when `m` is not a maximum matching of `g`.
DMLabels dm_decomposition(const BipartiteGraph& g, const Matching& m);

/// Which parities of alternating paths from the given unmatched sources
/// reach each vertex.
struct ParityReach {
    struct Flags {
        bool even = false, odd = false;
    };
    std::vector<Flags> left, right;

    Flags of(VertexId v) const {
        return v.side == Side::Agent ? left[v.index] : right[v.index];
    }
};

/// Alternating-path reachability from `sources` (which must be unmatched in
/// `m`; throws std::invalid_argument otherwise). `m` need not be maximum.
ParityReach alternating_reachable(const BipartiteGraph& g, const Matching& m,
                                  const std::vector<VertexId>& sources);

}  // namespace popmatch
