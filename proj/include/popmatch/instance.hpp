#pragma once

#include <optional>
#include <string>
#include <vector>

#include "popmatch/types.hpp"

namespace popmatch {

/// The single differing agent between two instances, with its preference
/// order in each. Both instances agree on everything else and the agent's
/// neighbour set is the same in both.
struct PerturbationDiff {
    VertexId agent;
    PreferenceList order_first;
    PreferenceList order_second;
};

/// A bipartite preference instance: agents and jobs with ranked (possibly
/// tied) preference lists over their neighbours, plus a model tag.
///
/// Instances are immutable after construction; perturbing an agent's list
/// produces a new instance.
class PreferenceInstance {
  public:
    /// Builds and validates an instance. The edge set is derived from the
    /// agents' preference lists. `job_prefs` must be supplied exactly when
    /// the model is TwoSidedTies, and must then cover each job's induced
    /// neighbour set; for TwoSidedOneTie the single all-neighbours tie is
    /// synthesized, and for OneSided jobs carry no preference data.
    ///
    /// Throws std::invalid_argument on any violated invariant.
    static PreferenceInstance create(ModelTag model,
                                     std::vector<std::string> agent_names,
                                     std::vector<std::string> job_names,
                                     std::vector<PreferenceList> agent_prefs,
                                     std::vector<PreferenceList> job_prefs = {});

    int n_agents() const { return static_cast<int>(agent_names_.size()); }
    int n_jobs() const { return static_cast<int>(job_names_.size()); }
    int n_vertices() const { return n_agents() + n_jobs(); }
    int n_edges() const { return n_edges_; }
    const ModelTag& model() const { return model_; }

    const std::string& name(VertexId v) const {
        return v.side == Side::Agent ? agent_names_[v.index] : job_names_[v.index];
    }
    const std::vector<std::string>& agent_names() const { return agent_names_; }
    const std::vector<std::string>& job_names() const { return job_names_; }
    std::optional<VertexId> find_vertex(const std::string& name) const;

    /// Neighbour indices on the opposite side, ascending.
    const std::vector<int>& neighbors(VertexId v) const {
        return v.side == Side::Agent ? agent_adj_[v.index] : job_adj_[v.index];
    }
    bool has_edge(int agent, int job) const;
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    /// Preference list of a vertex. Jobs in a OneSided instance have none
    /// (throws std::invalid_argument); jobs in TwoSidedOneTie expose their
    /// synthesized single-tie list.
    const PreferenceList& prefs(VertexId v) const;
    bool has_prefs(VertexId v) const {
        return v.side == Side::Agent || model_.model != Model::OneSided;
    }

    /// 0-based tie-group position of `u` in v's list, or -1 if not a
    /// neighbour. Lower is better.
    int rank_of(VertexId v, VertexId u) const;

    /// New instance with `agent`'s list replaced. The new list must rank
    /// exactly the same neighbour set.
    PreferenceInstance with_agent_prefs(int agent, PreferenceList prefs) const;

    /// All edges as (agent index, job index), lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool same_structure(const PreferenceInstance& other) const;

    friend bool operator==(const PreferenceInstance&, const PreferenceInstance&) = default;

  private:
    PreferenceInstance() = default;

    ModelTag model_;
    std::vector<std::string> agent_names_, job_names_;
    std::vector<std::vector<int>> agent_adj_, job_adj_;
    std::vector<PreferenceList> agent_prefs_, job_prefs_;
    // rank_of lookup: per vertex, group position aligned with the sorted
    // adjacency list.
    std::vector<std::vector<int>> agent_rank_, job_rank_;
    int n_edges_ = 0;
};

/// Identifies the single-agent difference between two instances.
/// Returns nullopt when the instances are identical. Throws
/// PerturbationError when they differ structurally (vertex sets, edges,
/// model, any job list) or in two or more agents' lists.
std::optional<PerturbationDiff> diff_instances(const PreferenceInstance& first,
                                               const PreferenceInstance& second);

}  // namespace popmatch
