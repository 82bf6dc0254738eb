#include "popmatch/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace popmatch {

BipartiteGraph BipartiteGraph::from_instance(const PreferenceInstance& inst) {
    BipartiteGraph g;
    g.n_left = inst.n_agents();
    g.n_right = inst.n_jobs();
    g.adj.resize(inst.n_agents());
    for (int a = 0; a < inst.n_agents(); ++a) g.adj[a] = inst.neighbors(agent_id(a));
    return g;
}

BipartiteGraph BipartiteGraph::from_edges(int n_left, int n_right,
                                          const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g;
    g.n_left = n_left;
    g.n_right = n_right;
    g.adj.resize(static_cast<std::size_t>(n_left));
    for (auto [u, v] : edges) g.adj[u].push_back(v);
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

std::vector<std::vector<int>> BipartiteGraph::right_adj() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n_right));
    for (int u = 0; u < n_left; ++u)
        for (int v : adj[u]) r[v].push_back(u);
    return r;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// One Hopcroft-Karp phase: BFS layers from free left vertices, then
// vertex-disjoint augmentations along shortest paths.
struct HopcroftKarp {
    const BipartiteGraph& g;
    std::vector<int>& match_l;
    std::vector<int>& match_r;
    std::vector<int> dist;

    bool bfs() {
        std::deque<int> q;
        dist.assign(static_cast<std::size_t>(g.n_left), kInf);
        for (int u = 0; u < g.n_left; ++u)
            if (match_l[u] < 0) {
                dist[u] = 0;
                q.push_back(u);
            }
        bool reachable_free = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.adj[u]) {
                int w = match_r[v];
                if (w < 0) {
                    reachable_free = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int v : g.adj[u]) {
            int w = match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
    std::vector<int> match_l(static_cast<std::size_t>(g.n_left), -1);
    std::vector<int> match_r(static_cast<std::size_t>(g.n_right), -1);
    HopcroftKarp hk{g, match_l, match_r, {}};
    while (hk.bfs()) {
        for (int u = 0; u < g.n_left; ++u)
            if (match_l[u] < 0) hk.dfs(u);
    }
    Matching m(g.n_left, g.n_right);
    for (int u = 0; u < g.n_left; ++u)
        if (match_l[u] >= 0) m.add(u, match_l[u]);
    return m;
}

DMLabels dm_decomposition(const BipartiteGraph& g, const Matching& m) {
    if (m.size() != maximum_matching(g).size())
        throw std::invalid_argument("dm_decomposition requires a maximum matching");

    DMLabels labels;
    labels.left.assign(static_cast<std::size_t>(g.n_left), DMLabel::Unreachable);
    labels.right.assign(static_cast<std::size_t>(g.n_right), DMLabel::Unreachable);
    auto radj = g.right_adj();

    // Alternating BFS from all unmatched vertices; with a maximum matching
    // each vertex settles at one label.
    std::deque<VertexId> q;
    for (int u = 0; u < g.n_left; ++u)
        if (!m.agent_matched(u)) {
            labels.left[u] = DMLabel::Even;
            q.push_back(agent_id(u));
        }
    for (int v = 0; v < g.n_right; ++v)
        if (!m.job_matched(v)) {
            labels.right[v] = DMLabel::Even;
            q.push_back(job_id(v));
        }

    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        if (x.side == Side::Agent) {
            for (int v : g.adj[x.index]) {
                if (m.job_of(x.index) == v) continue;
                if (labels.right[v] != DMLabel::Unreachable) continue;
                labels.right[v] = DMLabel::Odd;
                int w = m.agent_of(v);
                if (w >= 0 && labels.left[w] == DMLabel::Unreachable) {
                    labels.left[w] = DMLabel::Even;
                    q.push_back(agent_id(w));
                }
            }
        } else {
            for (int u : radj[x.index]) {
                if (m.agent_of(x.index) == u) continue;
                if (labels.left[u] != DMLabel::Unreachable) continue;
                labels.left[u] = DMLabel::Odd;
                int w = m.job_of(u);
                if (w >= 0 && labels.right[w] == DMLabel::Unreachable) {
                    labels.right[w] = DMLabel::Even;
                    q.push_back(job_id(w));
                }
            }
        }
    }
    return labels;
}

ParityReach alternating_reachable(const BipartiteGraph& g, const Matching& m,
                                  const std::vector<VertexId>& sources) {
    ParityReach reach;
    reach.left.assign(static_cast<std::size_t>(g.n_left), {});
    reach.right.assign(static_cast<std::size_t>(g.n_right), {});
    auto radj = g.right_adj();

    std::deque<std::pair<VertexId, bool>> q;  // (vertex, even parity)
    for (VertexId s : sources) {
        if (m.matched(s))
            throw std::invalid_argument("alternating_reachable sources must be unmatched");
        auto& f = s.side == Side::Agent ? reach.left[s.index] : reach.right[s.index];
        if (!f.even) {
            f.even = true;
            q.emplace_back(s, true);
        }
    }

    auto visit = [&](VertexId v, bool even) {
        auto& f = v.side == Side::Agent ? reach.left[v.index] : reach.right[v.index];
        bool& bit = even ? f.even : f.odd;
        if (!bit) {
            bit = true;
            q.emplace_back(v, even);
        }
    };

    while (!q.empty()) {
        auto [x, even] = q.front();
        q.pop_front();
        if (even) {
            // continue along non-matching edges
            if (x.side == Side::Agent) {
                for (int v : g.adj[x.index])
                    if (m.job_of(x.index) != v) visit(job_id(v), false);
            } else {
                for (int u : radj[x.index])
                    if (m.agent_of(x.index) != u) visit(agent_id(u), false);
            }
        } else {
            // continue along the matching edge
            if (auto p = m.partner(x)) visit(*p, true);
        }
    }
    return reach;
}

}  // namespace popmatch
