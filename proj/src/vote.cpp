#include "popmatch/vote.hpp"

#include <algorithm>

namespace popmatch {

namespace detail {

int vote_fast(const PreferenceInstance& inst, VertexId v, int x, int y) {
    if (x == y) return 0;
    if (v.side == Side::Job) {
        switch (inst.model().model) {
            case Model::OneSided:
                return 0;
            case Model::TwoSidedOneTie:
                // Only saturation matters; both-matched and both-unmatched
                // abstain.
                if (x >= 0 && y < 0) return 1;
                if (x < 0 && y >= 0) return -1;
                return 0;
            case Model::TwoSidedTies:
                break;  // fall through to rank comparison
        }
    }
    // Rank comparison with "unmatched" as worst.
    if (x < 0) return -1;  // y >= 0 here since x != y
    if (y < 0) return 1;
    const Side other = v.side == Side::Agent ? Side::Job : Side::Agent;
    const int rx = inst.rank_of(v, VertexId{other, x});
    const int ry = inst.rank_of(v, VertexId{other, y});
    if (rx < ry) return 1;
    if (rx > ry) return -1;
    return 0;
}

}  // namespace detail

int vote(const PreferenceInstance& inst, VertexId v, std::optional<VertexId> x,
         std::optional<VertexId> y) {
    auto checked_index = [&](const std::optional<VertexId>& u) -> int {
        if (!u) return -1;
        const auto& adj = inst.neighbors(v);
        if (u->side == v.side || !std::binary_search(adj.begin(), adj.end(), u->index))
            throw std::invalid_argument("vote: not a neighbour of '" + inst.name(v) + "'");
        return u->index;
    };
    const int xi = checked_index(x);
    const int yi = checked_index(y);
    return detail::vote_fast(inst, v, xi, yi);
}

int popularity_margin(const PreferenceInstance& inst, const Matching& m,
                      const Matching& m_prime) {
    int delta = 0;
    for (int a = 0; a < inst.n_agents(); ++a)
        delta += detail::vote_fast(inst, agent_id(a), m.job_of(a), m_prime.job_of(a));
    for (int j = 0; j < inst.n_jobs(); ++j)
        delta += detail::vote_fast(inst, job_id(j), m.agent_of(j), m_prime.agent_of(j));
    return delta;
}

}  // namespace popmatch
