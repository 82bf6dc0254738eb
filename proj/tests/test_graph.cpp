#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "popmatch/assignment.hpp"
#include "popmatch/bipartite.hpp"
#include "testutil.hpp"

using namespace popmatch;
using testutil::Rng;

namespace {

BipartiteGraph graph(int nl, int nr, const std::vector<std::pair<int, int>>& edges) {
    return BipartiteGraph::from_edges(nl, nr, edges);
}

// Brute-force maximum matching size by recursion over left vertices.
int brute_max_matching(const BipartiteGraph& g) {
    std::vector<char> used(static_cast<std::size_t>(g.n_right), 0);
    std::function<int(int)> rec = [&](int u) -> int {
        if (u == g.n_left) return 0;
        int best = rec(u + 1);
        for (int v : g.adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            best = std::max(best, 1 + rec(u + 1));
            used[v] = 0;
        }
        return best;
    };
    return rec(0);
}

// Brute-force optimum of the augmented assignment: every real vertex gets a
// real partner or its dummy.
long long brute_augmented_optimum(const WeightedAugmentedGraph& g) {
    std::vector<std::vector<std::pair<int, long long>>> adj(static_cast<std::size_t>(g.n_left));
    for (const auto& e : g.real_edges) adj[e.left].push_back({e.right, e.weight});
    std::vector<char> used(static_cast<std::size_t>(g.n_right), 0);
    std::function<long long(int)> rec = [&](int u) -> long long {
        if (u == g.n_left) {
            long long w = 0;
            for (int r = 0; r < g.n_right; ++r)
                if (!used[r]) w += g.right_dummy_weight[r];
            return w;
        }
        long long best = g.left_dummy_weight[u] + rec(u + 1);
        for (auto [v, w] : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            best = std::max(best, w + rec(u + 1));
            used[v] = 0;
        }
        return best;
    };
    return rec(0);
}

BipartiteGraph random_graph(Rng& rng, int nl, int nr, double density) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nr; ++v)
            if (rng.chance(density)) edges.emplace_back(u, v);
    return graph(nl, nr, edges);
}

}  // namespace

TEST_CASE("maximum_matching: edge cases") {
    CHECK(maximum_matching(graph(0, 0, {})).size() == 0);
    CHECK(maximum_matching(graph(2, 3, {})).size() == 0);
    CHECK(maximum_matching(graph(1, 1, {{0, 0}})).size() == 1);
    CHECK(maximum_matching(graph(2, 1, {{0, 0}, {1, 0}})).size() == 1);
}

TEST_CASE("maximum_matching equals brute force on random graphs") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        int nl = 1 + rng.below(6), nr = 1 + rng.below(6);
        auto g = random_graph(rng, nl, nr, 0.2 + 0.1 * rng.below(7));
        auto m = maximum_matching(g);
        CHECK(m.size() == brute_max_matching(g));
        // it is a matching over existing edges
        for (int u = 0; u < nl; ++u) {
            int v = m.job_of(u);
            if (v >= 0)
                CHECK(std::binary_search(g.adj[u].begin(), g.adj[u].end(), v));
        }
    }
}

TEST_CASE("dm_decomposition: frozen small cases") {
    // two agents compete for one job
    auto g = graph(2, 1, {{0, 0}, {1, 0}});
    auto m = Matching(2, 1);
    m.add(0, 0);
    auto labels = dm_decomposition(g, m);
    CHECK(labels.left[0] == DMLabel::Even);
    CHECK(labels.left[1] == DMLabel::Even);
    CHECK(labels.right[0] == DMLabel::Odd);

    // perfect matching on one edge: both unreachable
    auto g2 = graph(1, 1, {{0, 0}});
    auto m2 = Matching(1, 1);
    m2.add(0, 0);
    auto labels2 = dm_decomposition(g2, m2);
    CHECK(labels2.left[0] == DMLabel::Unreachable);
    CHECK(labels2.right[0] == DMLabel::Unreachable);

    // isolated unmatched vertex is even
    auto g3 = graph(1, 1, {});
    auto labels3 = dm_decomposition(g3, Matching(1, 1));
    CHECK(labels3.left[0] == DMLabel::Even);
    CHECK(labels3.right[0] == DMLabel::Even);
}

TEST_CASE("dm_decomposition rejects non-maximum matchings") {
    auto g = graph(1, 1, {{0, 0}});
    CHECK_THROWS_AS(dm_decomposition(g, Matching(1, 1)), std::invalid_argument);
}

TEST_CASE("dm labels: lemma properties on random graphs") {
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        int nl = 1 + rng.below(6), nr = 1 + rng.below(6);
        auto g = random_graph(rng, nl, nr, 0.2 + 0.1 * rng.below(7));
        auto m = maximum_matching(g);
        auto labels = dm_decomposition(g, m);

        // size |M| = |O| + |U|/2
        int odd = labels.count(DMLabel::Odd);
        int unreachable = labels.count(DMLabel::Unreachable);
        CHECK(2 * m.size() == 2 * odd + unreachable);

        // O and U vertices are matched; O matches E, U matches U
        for (int u = 0; u < nl; ++u) {
            if (labels.left[u] == DMLabel::Even) continue;
            REQUIRE(m.agent_matched(u));
            auto partner = labels.right[m.job_of(u)];
            if (labels.left[u] == DMLabel::Odd) CHECK(partner == DMLabel::Even);
            if (labels.left[u] == DMLabel::Unreachable) CHECK(partner == DMLabel::Unreachable);
        }

        // no edge between Even and Even-or-Unreachable
        for (int u = 0; u < nl; ++u)
            for (int v : g.adj[u])
                if (labels.left[u] == DMLabel::Even)
                    CHECK(labels.right[v] == DMLabel::Odd);
    }
}

TEST_CASE("dm labels are invariant under the choice of maximum matching") {
    Rng rng(303);
    for (int trial = 0; trial < 120; ++trial) {
        int nl = 1 + rng.below(5), nr = 1 + rng.below(5);
        auto g = random_graph(rng, nl, nr, 0.3 + 0.1 * rng.below(6));
        auto m = maximum_matching(g);
        auto labels = dm_decomposition(g, m);

        // a different maximum matching via randomly permuted vertex order
        std::vector<int> lperm(static_cast<std::size_t>(nl)), rperm(static_cast<std::size_t>(nr));
        for (int i = 0; i < nl; ++i) lperm[i] = i;
        for (int i = 0; i < nr; ++i) rperm[i] = i;
        rng.shuffle(lperm);
        rng.shuffle(rperm);
        std::vector<int> rinv(static_cast<std::size_t>(nr));
        for (int i = 0; i < nr; ++i) rinv[rperm[i]] = i;
        BipartiteGraph pg;
        pg.n_left = nl;
        pg.n_right = nr;
        pg.adj.resize(static_cast<std::size_t>(nl));
        for (int u = 0; u < nl; ++u)
            for (int v : g.adj[u]) pg.adj[lperm[u]].push_back(rinv[v]);
        for (auto& a : pg.adj) std::sort(a.begin(), a.end());
        auto pm = maximum_matching(pg);
        Matching m2(nl, nr);
        for (int u = 0; u < nl; ++u)
            if (pm.job_of(lperm[u]) >= 0) m2.add(u, rperm[pm.job_of(lperm[u])]);

        auto labels2 = dm_decomposition(g, m2);
        CHECK(labels.left == labels2.left);
        CHECK(labels.right == labels2.right);
    }
}

TEST_CASE("alternating_reachable agrees with exhaustive path enumeration") {
    Rng rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        auto inst = testutil::random_instance(rng, {Model::OneSided, 1}, 1 + rng.below(3),
                                              1 + rng.below(3));
        auto g = BipartiteGraph::from_instance(inst);
        // random (not necessarily maximum) matching: take a maximum matching
        // of a random subgraph
        auto sub = random_graph(rng, g.n_left, g.n_right, 0.4);
        std::vector<std::vector<int>> inter(static_cast<std::size_t>(g.n_left));
        for (int u = 0; u < g.n_left; ++u)
            for (int v : sub.adj[u])
                if (std::binary_search(g.adj[u].begin(), g.adj[u].end(), v))
                    inter[u].push_back(v);
        BipartiteGraph subg{g.n_left, g.n_right, inter};
        auto m = maximum_matching(subg);

        std::vector<VertexId> sources;
        for (int u = 0; u < g.n_left; ++u)
            if (!m.agent_matched(u)) sources.push_back(agent_id(u));
        for (int v = 0; v < g.n_right; ++v)
            if (!m.job_matched(v)) sources.push_back(job_id(v));

        auto fast = alternating_reachable(g, m, sources);
        auto brute = testutil::brute_alternating_paths(inst, m, sources);
        for (int u = 0; u < g.n_left; ++u) {
            CHECK(fast.left[u].even == brute.left[u].first);
            CHECK(fast.left[u].odd == brute.left[u].second);
        }
        for (int v = 0; v < g.n_right; ++v) {
            CHECK(fast.right[v].even == brute.right[v].first);
            CHECK(fast.right[v].odd == brute.right[v].second);
        }
    }
}

TEST_CASE("alternating_reachable validates sources") {
    auto g = graph(1, 1, {{0, 0}});
    Matching m(1, 1);
    m.add(0, 0);
    CHECK_THROWS_AS(alternating_reachable(g, m, {agent_id(0)}), std::invalid_argument);
}

TEST_CASE("assignment: trivial cases") {
    WeightedAugmentedGraph g;
    g.n_left = 2;
    g.n_right = 1;
    g.left_dummy_weight = {0, 0};
    g.right_dummy_weight = {0};
    CHECK(max_weight_perfect_matching(g).weight == 0);

    g.real_edges.push_back({0, 0, 1});
    auto r = max_weight_perfect_matching(g);
    CHECK(r.weight == 1);
    CHECK(r.left_to_right[0] == 0);
    CHECK(r.left_to_right[1] == -1);
}

TEST_CASE("assignment optimum equals brute force on random augmented graphs") {
    Rng rng(505);
    for (int trial = 0; trial < 300; ++trial) {
        WeightedAugmentedGraph g;
        g.n_left = 1 + rng.below(6);
        g.n_right = 1 + rng.below(6);
        for (int u = 0; u < g.n_left; ++u)
            for (int v = 0; v < g.n_right; ++v)
                if (rng.chance(0.5))
                    g.real_edges.push_back({u, v, static_cast<long long>(rng.below(5)) - 2});
        for (int u = 0; u < g.n_left; ++u)
            g.left_dummy_weight.push_back(rng.below(3) - 1);
        for (int v = 0; v < g.n_right; ++v)
            g.right_dummy_weight.push_back(rng.below(3) - 1);

        auto r = max_weight_perfect_matching(g);
        CHECK(r.weight == brute_augmented_optimum(g));

        // the reported matching attains the reported weight
        long long check = 0;
        std::vector<char> rused(static_cast<std::size_t>(g.n_right), 0);
        for (int u = 0; u < g.n_left; ++u) {
            int v = r.left_to_right[u];
            if (v < 0) {
                check += g.left_dummy_weight[u];
                continue;
            }
            long long best = std::numeric_limits<long long>::min();
            for (const auto& e : g.real_edges)
                if (e.left == u && e.right == v) best = std::max(best, e.weight);
            REQUIRE(best != std::numeric_limits<long long>::min());
            check += best;
            rused[v] = 1;
        }
        for (int v = 0; v < g.n_right; ++v)
            if (!rused[v]) check += g.right_dummy_weight[v];
        CHECK(check == r.weight);
    }
}
