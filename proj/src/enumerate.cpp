#include "popmatch/enumerate.hpp"

namespace popmatch {

void check_brute_force_cap(const PreferenceInstance& inst, int cap) {
    if (inst.n_vertices() > cap) throw SizeLimitError(inst.n_vertices(), cap);
}

namespace {

struct Enumerator {
    const PreferenceInstance& inst;
    const std::function<bool(const Matching&)>& visit;
    Matching current;
    std::vector<char> job_used;
    std::vector<char> agent_blocked;
    bool stopped = false;

    bool agent_fixed(int a) const { return current.job_of(a) >= 0; }

    void rec(int a) {
        if (stopped) return;
        if (a == inst.n_agents()) {
            if (!visit(current)) stopped = true;
            return;
        }
        if (agent_fixed(a) || agent_blocked[a]) {
            rec(a + 1);
            return;
        }
        for (int j : inst.neighbors(agent_id(a))) {
            if (job_used[j]) continue;
            job_used[j] = 1;
            current.add(a, j);
            rec(a + 1);
            current.remove(a);
            job_used[j] = 0;
            if (stopped) return;
        }
        rec(a + 1);  // leave a unmatched
    }
};

}  // namespace

void enumerate_matchings(const PreferenceInstance& inst, const EnumerateOptions& opts,
                         const std::function<bool(const Matching&)>& visit) {
    Enumerator e{inst, visit, Matching(inst.n_agents(), inst.n_jobs()),
                 std::vector<char>(static_cast<std::size_t>(inst.n_jobs()), 0),
                 std::vector<char>(static_cast<std::size_t>(inst.n_agents()), 0)};
    for (auto [a, j] : opts.fixed_pairs) {
        e.current.add(a, j);
        e.job_used[j] = 1;
    }
    for (int a : opts.excluded_agents) e.agent_blocked[a] = 1;
    for (int j : opts.excluded_jobs) e.job_used[j] = 1;
    e.rec(0);
}

}  // namespace popmatch
