#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/types.hpp"

namespace popmatch {

/// A matching: disjoint agent-job pairs with O(1) partner lookup on both
/// sides. Unmatched is represented by -1 internally and nullopt at the API.
class Matching {
  public:
    Matching() = default;
    Matching(int n_agents, int n_jobs)
        : agent_to_job_(static_cast<std::size_t>(n_agents), -1),
          job_to_agent_(static_cast<std::size_t>(n_jobs), -1) {}

    /// Validated construction: every pair must be an edge of `inst` and no
    /// vertex may appear twice. Throws std::invalid_argument otherwise.
    static Matching from_pairs(const PreferenceInstance& inst,
                               const std::vector<std::pair<int, int>>& pairs);

    int n_agents() const { return static_cast<int>(agent_to_job_.size()); }
    int n_jobs() const { return static_cast<int>(job_to_agent_.size()); }

    int job_of(int agent) const { return agent_to_job_[agent]; }
    int agent_of(int job) const { return job_to_agent_[job]; }
    bool agent_matched(int agent) const { return agent_to_job_[agent] >= 0; }
    bool job_matched(int job) const { return job_to_agent_[job] >= 0; }

    std::optional<VertexId> partner(VertexId v) const {
        if (v.side == Side::Agent) {
            int j = agent_to_job_[v.index];
            return j < 0 ? std::nullopt : std::optional<VertexId>(job_id(j));
        }
        int a = job_to_agent_[v.index];
        return a < 0 ? std::nullopt : std::optional<VertexId>(agent_id(a));
    }
    bool matched(VertexId v) const { return partner(v).has_value(); }
    bool contains(int agent, int job) const { return agent_to_job_[agent] == job; }

    void add(int agent, int job) {
        agent_to_job_[agent] = job;
        job_to_agent_[job] = agent;
    }
    void remove(int agent) {
        int j = agent_to_job_[agent];
        if (j >= 0) {
            agent_to_job_[agent] = -1;
            job_to_agent_[j] = -1;
        }
    }

    int size() const {
        int s = 0;
        for (int j : agent_to_job_)
            if (j >= 0) ++s;
        return s;
    }

    /// Pairs as (agent, job), ascending by agent.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_agents(); ++a)
            if (agent_to_job_[a] >= 0) out.emplace_back(a, agent_to_job_[a]);
        return out;
    }

    bool valid_for(const PreferenceInstance& inst) const;

    friend bool operator==(const Matching&, const Matching&) = default;

  private:
    std::vector<int> agent_to_job_, job_to_agent_;
};

}  // namespace popmatch
