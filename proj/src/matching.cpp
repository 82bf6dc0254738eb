#include "popmatch/matching.hpp"

namespace popmatch {

Matching Matching::from_pairs(const PreferenceInstance& inst,
                              const std::vector<std::pair<int, int>>& pairs) {
    Matching m(inst.n_agents(), inst.n_jobs());
    for (auto [a, j] : pairs) {
        if (a < 0 || a >= inst.n_agents() || j < 0 || j >= inst.n_jobs())
            throw std::invalid_argument("matching pair out of range");
        if (!inst.has_edge(a, j))
            throw std::invalid_argument("matching pair (" + inst.agent_names()[a] + ", " +
                                        inst.job_names()[j] + ") is not an edge");
        if (m.agent_matched(a) || m.job_matched(j))
            throw std::invalid_argument("vertex matched twice");
        m.add(a, j);
    }
    return m;
}

bool Matching::valid_for(const PreferenceInstance& inst) const {
    if (n_agents() != inst.n_agents() || n_jobs() != inst.n_jobs()) return false;
    for (int a = 0; a < n_agents(); ++a) {
        int j = agent_to_job_[a];
        if (j < 0) continue;
        if (j >= inst.n_jobs() || !inst.has_edge(a, j) || job_to_agent_[j] != a) return false;
    }
    for (int j = 0; j < n_jobs(); ++j) {
        int a = job_to_agent_[j];
        if (a >= 0 && agent_to_job_[a] != j) return false;
    }
    return true;
}

}  // namespace popmatch
