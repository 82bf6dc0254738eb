#include "popmatch/instance.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace popmatch {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c == '#' || c == ':' || c == '[' || c == ']' || c == '>' || c == ',' ||
            std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

}  // namespace

PreferenceInstance PreferenceInstance::create(ModelTag model,
                                              std::vector<std::string> agent_names,
                                              std::vector<std::string> job_names,
                                              std::vector<PreferenceList> agent_prefs,
                                              std::vector<PreferenceList> job_prefs) {
    PreferenceInstance inst;
    inst.model_ = model;

    const int na = static_cast<int>(agent_names.size());
    const int nj = static_cast<int>(job_names.size());

    // Tie groups are sets; keep them in index order so equality and
    // serialization are canonical.
    auto normalize = [](std::vector<PreferenceList>& lists) {
        for (auto& list : lists)
            for (auto& group : list.groups) std::sort(group.begin(), group.end());
    };
    normalize(agent_prefs);
    normalize(job_prefs);

    std::unordered_set<std::string> seen;
    for (const auto& n : agent_names) {
        require(valid_name(n), "invalid vertex name '" + n + "'");
        require(seen.insert(n).second, "duplicate vertex name '" + n + "'");
    }
    for (const auto& n : job_names) {
        require(valid_name(n), "invalid vertex name '" + n + "'");
        require(seen.insert(n).second, "duplicate vertex name '" + n + "'");
    }

    require(static_cast<int>(agent_prefs.size()) == na,
            "need one preference list per agent");
    if (model.model == Model::TwoSidedTies) {
        require(static_cast<int>(job_prefs.size()) == nj,
                "two-sided-ties instances need one preference list per job");
        require(model.tie_cap >= 1, "tie cap must be at least 1");
    } else {
        require(job_prefs.empty(), "job preference lists are only valid for two-sided-ties");
    }

    // Derive adjacency from the agents' lists and validate group structure.
    inst.agent_adj_.assign(na, {});
    inst.job_adj_.assign(nj, {});
    for (int a = 0; a < na; ++a) {
        std::set<int> nbrs;
        for (const auto& group : agent_prefs[a].groups) {
            require(!group.empty(), "empty tie group in list of '" + agent_names[a] + "'");
            for (VertexId v : group) {
                require(v.side == Side::Job && v.index >= 0 && v.index < nj,
                        "agent list of '" + agent_names[a] + "' ranks a non-job");
                require(nbrs.insert(v.index).second,
                        "duplicate entry in list of '" + agent_names[a] + "'");
            }
        }
        if (model.model != Model::TwoSidedTies)
            require(agent_prefs[a].strict(),
                    "agent '" + agent_names[a] + "' has ties, not allowed in this model");
        else
            require(agent_prefs[a].max_group_size() <= model.tie_cap,
                    "tie longer than declared cap in list of '" + agent_names[a] + "'");
        inst.agent_adj_[a].assign(nbrs.begin(), nbrs.end());
        for (int j : nbrs) inst.job_adj_[j].push_back(a);
        inst.n_edges_ += static_cast<int>(nbrs.size());
    }
    for (auto& adj : inst.job_adj_) std::sort(adj.begin(), adj.end());

    inst.agent_prefs_ = std::move(agent_prefs);

    switch (model.model) {
        case Model::OneSided:
            break;  // jobs carry no preference data
        case Model::TwoSidedOneTie:
            // One big tie per job over all its neighbours.
            inst.job_prefs_.resize(nj);
            for (int j = 0; j < nj; ++j) {
                if (inst.job_adj_[j].empty()) continue;
                auto& g = inst.job_prefs_[j].groups.emplace_back();
                for (int a : inst.job_adj_[j]) g.push_back(agent_id(a));
            }
            break;
        case Model::TwoSidedTies:
            for (int j = 0; j < nj; ++j) {
                std::set<int> nbrs;
                for (const auto& group : job_prefs[j].groups) {
                    require(!group.empty(), "empty tie group in list of '" + job_names[j] + "'");
                    require(static_cast<int>(group.size()) <= model.tie_cap,
                            "tie longer than declared cap in list of '" + job_names[j] + "'");
                    for (VertexId v : group) {
                        require(v.side == Side::Agent && v.index >= 0 && v.index < na,
                                "job list of '" + job_names[j] + "' ranks a non-agent");
                        require(nbrs.insert(v.index).second,
                                "duplicate entry in list of '" + job_names[j] + "'");
                    }
                }
                require(std::equal(nbrs.begin(), nbrs.end(), inst.job_adj_[j].begin(),
                                   inst.job_adj_[j].end()),
                        "job list of '" + job_names[j] +
                            "' does not cover exactly its neighbour set");
            }
            inst.job_prefs_ = std::move(job_prefs);
            break;
    }

    inst.agent_names_ = std::move(agent_names);
    inst.job_names_ = std::move(job_names);

    // Rank tables aligned with the sorted adjacency lists.
    auto build_ranks = [](const std::vector<std::vector<int>>& adj,
                          const std::vector<PreferenceList>& prefs,
                          std::vector<std::vector<int>>& out) {
        out.assign(adj.size(), {});
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (v >= prefs.size()) continue;
            out[v].assign(adj[v].size(), -1);
            int pos = 0;
            for (const auto& group : prefs[v].groups) {
                for (VertexId u : group) {
                    auto it = std::lower_bound(adj[v].begin(), adj[v].end(), u.index);
                    out[v][static_cast<std::size_t>(it - adj[v].begin())] = pos;
                }
                ++pos;
            }
        }
    };
    build_ranks(inst.agent_adj_, inst.agent_prefs_, inst.agent_rank_);
    build_ranks(inst.job_adj_, inst.job_prefs_, inst.job_rank_);

    return inst;
}

std::optional<VertexId> PreferenceInstance::find_vertex(const std::string& name) const {
    for (int a = 0; a < n_agents(); ++a)
        if (agent_names_[a] == name) return agent_id(a);
    for (int j = 0; j < n_jobs(); ++j)
        if (job_names_[j] == name) return job_id(j);
    return std::nullopt;
}

bool PreferenceInstance::has_edge(int agent, int job) const {
    const auto& adj = agent_adj_[agent];
    return std::binary_search(adj.begin(), adj.end(), job);
}

const PreferenceList& PreferenceInstance::prefs(VertexId v) const {
    if (v.side == Side::Agent) return agent_prefs_[v.index];
    if (model_.model == Model::OneSided)
        throw std::invalid_argument("jobs have no preference data in the one-sided model");
    return job_prefs_[v.index];
}

int PreferenceInstance::rank_of(VertexId v, VertexId u) const {
    const auto& adj = neighbors(v);
    auto it = std::lower_bound(adj.begin(), adj.end(), u.index);
    if (it == adj.end() || *it != u.index) return -1;
    const auto& ranks = v.side == Side::Agent ? agent_rank_[v.index] : job_rank_[v.index];
    if (ranks.empty()) return -1;  // one-sided job
    return ranks[static_cast<std::size_t>(it - adj.begin())];
}

PreferenceInstance PreferenceInstance::with_agent_prefs(int agent, PreferenceList prefs) const {
    std::set<int> nbrs;
    for (const auto& g : prefs.groups)
        for (VertexId v : g) {
            if (v.side != Side::Job) throw std::invalid_argument("agent list must rank jobs");
            nbrs.insert(v.index);
        }
    if (!std::equal(nbrs.begin(), nbrs.end(), agent_adj_[agent].begin(), agent_adj_[agent].end()))
        throw std::invalid_argument("perturbed list must keep the agent's neighbour set");

    auto new_prefs = agent_prefs_;
    new_prefs[agent] = std::move(prefs);
    return create(model_, agent_names_, job_names_, std::move(new_prefs), job_prefs_);
}

std::vector<std::pair<int, int>> PreferenceInstance::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_edges_));
    for (int a = 0; a < n_agents(); ++a)
        for (int j : agent_adj_[a]) out.emplace_back(a, j);
    return out;
}

bool PreferenceInstance::same_structure(const PreferenceInstance& other) const {
    return model_ == other.model_ && agent_names_ == other.agent_names_ &&
           job_names_ == other.job_names_ && agent_adj_ == other.agent_adj_;
}

std::optional<PerturbationDiff> diff_instances(const PreferenceInstance& first,
                                               const PreferenceInstance& second) {
    if (!first.same_structure(second))
        throw PerturbationError("instances differ in vertices, edges, or model");
    for (int j = 0; j < first.n_jobs(); ++j) {
        if (first.model().model == Model::OneSided) break;
        if (first.prefs(job_id(j)) != second.prefs(job_id(j)))
            throw PerturbationError("instances differ in a job's preference list");
    }
    std::optional<PerturbationDiff> diff;
    for (int a = 0; a < first.n_agents(); ++a) {
        const auto& p1 = first.prefs(agent_id(a));
        const auto& p2 = second.prefs(agent_id(a));
        if (p1 == p2) continue;
        if (diff)
            throw PerturbationError("instances differ in more than one agent's list");
        diff = PerturbationDiff{agent_id(a), p1, p2};
    }
    return diff;
}

}  // namespace popmatch
