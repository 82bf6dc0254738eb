#include "popmatch/onesided.hpp"

#include <algorithm>

#include "popmatch/bipartite.hpp"

namespace popmatch {

FRStructure fr_structure(const PreferenceInstance& inst) {
    if (inst.model().model != Model::OneSided)
        throw std::invalid_argument("fr_structure requires the one-sided model");

    FRStructure fr;
    fr.f.assign(static_cast<std::size_t>(inst.n_agents()), -1);
    fr.r.assign(static_cast<std::size_t>(inst.n_agents()), -1);
    fr.in_f.assign(static_cast<std::size_t>(inst.n_jobs()), 0);

    for (int a = 0; a < inst.n_agents(); ++a) {
        const auto& prefs = inst.prefs(agent_id(a));
        if (!prefs.strict())
            throw std::invalid_argument("fr_structure requires strict preference lists");
        if (prefs.groups.empty()) continue;
        fr.f[a] = prefs.groups.front().front().index;
        fr.in_f[fr.f[a]] = 1;
    }
    for (int a = 0; a < inst.n_agents(); ++a) {
        for (const auto& group : inst.prefs(agent_id(a)).groups) {
            int j = group.front().index;
            if (!fr.in_f[j]) {
                fr.r[a] = j;
                break;
            }
        }
    }
    return fr;
}

FRCheck satisfies_fr_conditions(const PreferenceInstance& inst, const Matching& m) {
    auto fr = fr_structure(inst);
    if (!m.valid_for(inst)) return {false, "matching is not valid for the instance"};

    for (int j = 0; j < inst.n_jobs(); ++j) {
        if (!fr.in_f[j]) continue;
        int a = m.agent_of(j);
        if (a < 0)
            return {false, "top-choice job '" + inst.job_names()[j] + "' is unmatched"};
        if (fr.f[a] != j)
            return {false, "job '" + inst.job_names()[j] +
                               "' is matched to an agent that does not rank it first"};
    }
    for (int a = 0; a < inst.n_agents(); ++a) {
        int j = m.job_of(a);
        if (j < 0) {
            if (!fr.r_infinite(a))
                return {false, "agent '" + inst.agent_names()[a] +
                                   "' is unmatched but has a job outside F"};
            continue;
        }
        if (j != fr.f[a] && j != fr.r[a])
            return {false, "agent '" + inst.agent_names()[a] +
                               "' is matched outside its f/r pair"};
    }
    return {};
}

namespace {

// Reduced-graph solve shared by the plain, forced, and two-instance
// variants: find a matching saturating all required jobs and all required
// agents, or report that none exists. Any edge of the reduced graph
// pointing into a required job is acceptable for it (r-edges never do).
std::optional<Matching> saturate_both(int n_agents, int n_jobs,
                                      const std::vector<std::vector<int>>& adj,
                                      const std::vector<char>& required_agent,
                                      const std::vector<char>& required_job) {
    BipartiteGraph g{n_agents, n_jobs, adj};

    // M1: saturate the required jobs using only their incident edges.
    std::vector<std::vector<int>> into_required(static_cast<std::size_t>(n_agents));
    for (int a = 0; a < n_agents; ++a)
        for (int j : adj[a])
            if (required_job[j]) into_required[a].push_back(j);
    auto m1 = maximum_matching({n_agents, n_jobs, into_required});
    for (int j = 0; j < n_jobs; ++j)
        if (required_job[j] && !m1.job_matched(j)) return std::nullopt;

    // M2: saturate the required agents with any reduced edges.
    std::vector<std::vector<int>> from_required(static_cast<std::size_t>(n_agents));
    for (int a = 0; a < n_agents; ++a)
        if (required_agent[a]) from_required[a] = adj[a];
    auto m2 = maximum_matching({n_agents, n_jobs, from_required});
    for (int a = 0; a < n_agents; ++a)
        if (required_agent[a] && !m2.agent_matched(a)) return std::nullopt;

    // Merge: switch M1 along the alternating M2/M1 path of every required
    // agent M1 leaves unmatched. Components of the symmetric difference are
    // disjoint, so the switches never interfere; required jobs stay
    // saturated because paths can only end at an M1-free job or an
    // M2-free agent.
    Matching m = m1;
    for (int start = 0; start < n_agents; ++start) {
        if (!required_agent[start] || m.agent_matched(start)) continue;
        int a = start;
        while (a >= 0) {
            int j = m2.job_of(a);
            if (j < 0) break;
            int next = m.agent_of(j);
            m.remove(a);
            if (next >= 0) m.remove(next);
            m.add(a, j);
            a = next;
        }
    }
    return m;
}

struct ReducedGraph {
    std::vector<std::vector<int>> adj;
    std::vector<char> required_agent, required_job;
};

ReducedGraph single_instance_reduced(const PreferenceInstance& inst, const FRStructure& fr) {
    ReducedGraph rg;
    rg.adj.assign(static_cast<std::size_t>(inst.n_agents()), {});
    rg.required_agent.assign(static_cast<std::size_t>(inst.n_agents()), 0);
    rg.required_job = fr.in_f;
    for (int a = 0; a < inst.n_agents(); ++a) {
        if (fr.f[a] >= 0) rg.adj[a].push_back(fr.f[a]);
        if (fr.r[a] >= 0) {
            rg.adj[a].push_back(fr.r[a]);
            rg.required_agent[a] = 1;
        }
        std::sort(rg.adj[a].begin(), rg.adj[a].end());
    }
    return rg;
}

}  // namespace

std::optional<Matching> solve_one_sided(const PreferenceInstance& inst) {
    auto fr = fr_structure(inst);
    auto rg = single_instance_reduced(inst, fr);
    return saturate_both(inst.n_agents(), inst.n_jobs(), rg.adj, rg.required_agent,
                         rg.required_job);
}

std::optional<Matching> solve_one_sided_forced(const PreferenceInstance& inst, int agent,
                                               std::optional<int> job) {
    auto fr = fr_structure(inst);
    if (job) {
        if (*job != fr.f[agent] && *job != fr.r[agent])
            throw std::invalid_argument(
                "invalid forcing: job is neither the agent's f- nor r-job");
    } else if (!fr.r_infinite(agent)) {
        throw std::invalid_argument(
            "invalid forcing: agent has a job outside F and cannot stay unmatched");
    }

    auto rg = single_instance_reduced(inst, fr);
    rg.adj[agent].clear();
    rg.required_agent[agent] = 0;
    if (job) {
        rg.required_job[*job] = 0;
        for (int a = 0; a < inst.n_agents(); ++a)
            std::erase(rg.adj[a], *job);
    }
    auto m = saturate_both(inst.n_agents(), inst.n_jobs(), rg.adj, rg.required_agent,
                           rg.required_job);
    if (!m) return std::nullopt;
    if (job) m->add(agent, *job);
    return m;
}

RobustCaseTag classify_perturbation_case(const PreferenceInstance& first,
                                         const PreferenceInstance& second,
                                         const PerturbationDiff& diff, const Matching& m) {
    if (!satisfies_fr_conditions(first, m))
        throw std::invalid_argument("classification requires a matching popular in the first instance");

    auto fr1 = fr_structure(first);
    auto fr2 = fr_structure(second);
    const int a1 = diff.agent.index;
    const int assigned = m.job_of(a1);

    RobustCaseTag tag;
    tag.top_changed = fr1.f[a1] != fr2.f[a1];
    tag.assigned_top = assigned >= 0 && assigned == fr1.f[a1];
    tag.assigned_fallback = assigned >= 0 && assigned == fr1.r[a1];

    auto other_agent_covers = [&](int job) {
        // some other agent topping `job` in both instances is matched to it
        int a = m.agent_of(job);
        return a >= 0 && a != a1 && fr1.f[a] == job && fr2.f[a] == job;
    };

    if (tag.top_changed) {
        if (tag.assigned_fallback) {
            tag.condition_met = fr2.f[a1] == fr1.r[a1] ||
                                (fr1.r[a1] == fr2.r[a1] && other_agent_covers(fr2.f[a1]));
        } else if (tag.assigned_top) {
            tag.condition_met =
                fr1.f[a1] == fr2.r[a1] && other_agent_covers(fr2.f[a1]);
        }
    } else {
        if (tag.assigned_fallback)
            tag.condition_met = fr1.r[a1] == fr2.r[a1];
        else if (tag.assigned_top)
            tag.condition_met = true;  // same top on both sides keeps M popular
    }
    return tag;
}

std::optional<Matching> robust_one_sided(const PreferenceInstance& first,
                                         const PreferenceInstance& second) {
    auto diff = diff_instances(first, second);
    if (!diff) return solve_one_sided(first);

    auto fr1 = fr_structure(first);
    auto fr2 = fr_structure(second);
    const int a1 = diff->agent.index;

    // Candidate assignments for the perturbed agent: jobs acceptable to
    // both characterizations, plus staying unmatched when both allow it.
    std::vector<std::optional<int>> candidates;
    for (int j : {fr1.f[a1], fr1.r[a1]}) {
        if (j < 0) continue;
        if (j != fr2.f[a1] && j != fr2.r[a1]) continue;
        if (std::find(candidates.begin(), candidates.end(), std::optional<int>(j)) ==
            candidates.end())
            candidates.emplace_back(j);
    }
    if (fr1.r_infinite(a1) && fr2.r_infinite(a1)) candidates.emplace_back(std::nullopt);

    for (const auto& candidate : candidates) {
        // Joint reduced graph: agents other than a1 may take their common
        // top job, or their r-job when it is the same job in both
        // instances; they must be matched when either instance says so.
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(first.n_agents()));
        std::vector<char> required_agent(static_cast<std::size_t>(first.n_agents()), 0);
        std::vector<char> required_job(static_cast<std::size_t>(first.n_jobs()), 0);
        for (int j = 0; j < first.n_jobs(); ++j)
            required_job[j] = fr1.in_f[j] || fr2.in_f[j];
        if (candidate) required_job[*candidate] = 0;

        for (int a = 0; a < first.n_agents(); ++a) {
            if (a == a1) continue;
            if (fr1.f[a] >= 0) adj[a].push_back(fr1.f[a]);
            if (fr1.r[a] >= 0 && fr1.r[a] == fr2.r[a]) adj[a].push_back(fr1.r[a]);
            if (!fr1.r_infinite(a) || !fr2.r_infinite(a)) required_agent[a] = 1;
            if (candidate) std::erase(adj[a], *candidate);
            std::sort(adj[a].begin(), adj[a].end());
        }

        auto m = saturate_both(first.n_agents(), first.n_jobs(), adj, required_agent,
                               required_job);
        if (!m) continue;
        if (candidate) m->add(a1, *candidate);
        // Both characterizations hold by construction; keep the check as a
        // guard against regressions in the reduction.
        if (!satisfies_fr_conditions(first, *m) || !satisfies_fr_conditions(second, *m))
            throw std::logic_error("robust_one_sided produced a non-popular matching");
        return m;
    }
    return std::nullopt;
}

}  // namespace popmatch
