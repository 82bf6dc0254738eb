#include "popmatch/popularity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "popmatch/assignment.hpp"
#include "popmatch/vote.hpp"

namespace popmatch {

using detail::vote_fast;

EdgeLabel edge_label(const PreferenceInstance& inst, const Matching& m, int agent, int job) {
    EdgeLabel l;
    l.alpha = vote_fast(inst, agent_id(agent), job, m.job_of(agent));
    l.beta = vote_fast(inst, job_id(job), agent, m.agent_of(job));
    return l;
}

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::PathFromUnmatched: return "path-from-unmatched";
        case WitnessKind::Cycle: return "cycle";
        case WitnessKind::TwoPlusOnPath: return "two-plus-edges-on-path";
        case WitnessKind::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

// Connected component of M xor M': a path or cycle, as an ordered vertex
// sequence (for cycles, front and back are adjacent).
struct SymDiffComponent {
    std::vector<VertexId> vertices;
    bool is_cycle = false;
};

std::vector<SymDiffComponent> symmetric_difference(const Matching& m, const Matching& mp) {
    const int na = m.n_agents(), nj = m.n_jobs();
    // Per vertex, the up-to-two incident symmetric-difference partners.
    auto diff_partners = [&](VertexId v) {
        std::vector<VertexId> out;
        auto p = m.partner(v), q = mp.partner(v);
        if (p && p != q) out.push_back(*p);
        if (q && q != p) out.push_back(*q);
        return out;
    };

    std::vector<char> seen_a(static_cast<std::size_t>(na), 0), seen_j(static_cast<std::size_t>(nj), 0);
    auto seen = [&](VertexId v) -> char& {
        return v.side == Side::Agent ? seen_a[v.index] : seen_j[v.index];
    };

    std::vector<SymDiffComponent> comps;
    auto walk = [&](VertexId start) {
        SymDiffComponent comp;
        VertexId prev = start;  // sentinel: equals current on the first step
        VertexId cur = start;
        while (true) {
            comp.vertices.push_back(cur);
            seen(cur) = 1;
            auto nbrs = diff_partners(cur);
            VertexId next{Side::Agent, -1};
            bool found = false;
            for (VertexId w : nbrs) {
                if (comp.vertices.size() > 1 && w == prev) continue;
                if (w == start && comp.vertices.size() > 2) {
                    comp.is_cycle = true;
                    return comp;
                }
                if (!seen(w)) {
                    next = w;
                    found = true;
                    break;
                }
            }
            if (!found) return comp;
            prev = cur;
            cur = next;
        }
    };

    // Path endpoints first so paths are walked end-to-end, then cycles.
    for (int pass = 0; pass < 2; ++pass) {
        for (int a = 0; a < na; ++a) {
            VertexId v = agent_id(a);
            if (seen(v)) continue;
            auto d = diff_partners(v);
            if (d.empty()) continue;
            if (pass == 0 ? d.size() == 1 : true) comps.push_back(walk(v));
        }
        for (int j = 0; j < nj; ++j) {
            VertexId v = job_id(j);
            if (seen(v)) continue;
            auto d = diff_partners(v);
            if (d.empty()) continue;
            if (pass == 0 ? d.size() == 1 : true) comps.push_back(walk(v));
        }
    }
    return comps;
}

// An edge is "(1,0) or better" when its agent-side vote is +1; in the
// two-sided-one-tie model the job side never votes -1, so these are exactly
// the edges the structural conditions talk about.
bool plus_edge(const PreferenceInstance& inst, const Matching& m, int agent, int job) {
    return vote_fast(inst, agent_id(agent), job, m.job_of(agent)) == 1;
}

WitnessKind classify_components(const PreferenceInstance& inst, const Matching& m,
                                const Matching& better) {
    bool saw_path_from_unmatched = false, saw_cycle = false, saw_two_plus = false;
    for (const auto& comp : symmetric_difference(m, better)) {
        int plus = 0;
        const auto& vs = comp.vertices;
        const std::size_t n = vs.size();
        const std::size_t steps = comp.is_cycle ? n : n - 1;
        for (std::size_t i = 0; i < steps; ++i) {
            VertexId x = vs[i], y = vs[(i + 1) % n];
            VertexId a = x.side == Side::Agent ? x : y;
            VertexId j = x.side == Side::Agent ? y : x;
            if (m.job_of(a.index) == j.index) continue;  // matching edge
            if (plus_edge(inst, m, a.index, j.index)) ++plus;
        }
        if (plus == 0) continue;
        if (comp.is_cycle) {
            saw_cycle = true;
        } else {
            bool endpoint_unmatched = !m.matched(vs.front()) || !m.matched(vs.back());
            if (endpoint_unmatched) saw_path_from_unmatched = true;
            if (plus >= 2) saw_two_plus = true;
        }
    }
    if (saw_path_from_unmatched) return WitnessKind::PathFromUnmatched;
    if (saw_cycle) return WitnessKind::Cycle;
    if (saw_two_plus) return WitnessKind::TwoPlusOnPath;
    return WitnessKind::NotApplicable;
}

WitnessKind classify(const PreferenceInstance& inst, const Matching& m,
                     const Matching& better) {
    if (inst.model().model != Model::TwoSidedOneTie) return WitnessKind::NotApplicable;
    return classify_components(inst, m, better);
}

struct OracleSearch {
    const PreferenceInstance& inst;
    const Matching& m;
    Matching current;
    std::vector<char> job_used;
    long long best = std::numeric_limits<long long>::min();
    Matching best_matching;

    void run() {
        long long base = 0;
        for (int a = 0; a < inst.n_agents(); ++a)
            base += vote_fast(inst, agent_id(a), -1, m.job_of(a));
        for (int j = 0; j < inst.n_jobs(); ++j)
            base += vote_fast(inst, job_id(j), -1, m.agent_of(j));
        rec(0, base);
    }

    void rec(int a, long long delta) {
        if (a == inst.n_agents()) {
            if (delta > best) {
                best = delta;
                best_matching = current;
            }
            return;
        }
        // Assigning an agent changes the margin by at most 4.
        if (delta + 4LL * (inst.n_agents() - a) <= best) return;
        for (int j : inst.neighbors(agent_id(a))) {
            if (job_used[j]) continue;
            long long gain =
                vote_fast(inst, agent_id(a), j, m.job_of(a)) -
                vote_fast(inst, agent_id(a), -1, m.job_of(a)) +
                vote_fast(inst, job_id(j), a, m.agent_of(j)) -
                vote_fast(inst, job_id(j), -1, m.agent_of(j));
            job_used[j] = 1;
            current.add(a, j);
            rec(a + 1, delta + gain);
            current.remove(a);
            job_used[j] = 0;
        }
        rec(a + 1, delta);
    }
};

}  // namespace

PopularityResult is_popular_oracle(const PreferenceInstance& inst, const Matching& m,
                                   int cap) {
    check_brute_force_cap(inst, cap);
    if (!m.valid_for(inst)) throw std::invalid_argument("matching is not valid for instance");

    OracleSearch search{inst, m, Matching(inst.n_agents(), inst.n_jobs()),
                        std::vector<char>(static_cast<std::size_t>(inst.n_jobs()), 0),
                        std::numeric_limits<long long>::min(), Matching()};
    search.run();
    if (search.best <= 0) return std::nullopt;
    PopularityWitness w;
    w.better = search.best_matching;
    w.margin = static_cast<int>(search.best);
    w.violated = classify(inst, m, w.better);
    return w;
}

PopularityResult is_popular(const PreferenceInstance& inst, const Matching& m) {
    if (!m.valid_for(inst)) throw std::invalid_argument("matching is not valid for instance");

    WeightedAugmentedGraph g;
    g.n_left = inst.n_agents();
    g.n_right = inst.n_jobs();
    for (int a = 0; a < inst.n_agents(); ++a)
        for (int j : inst.neighbors(agent_id(a))) {
            long long w = vote_fast(inst, agent_id(a), j, m.job_of(a)) +
                          vote_fast(inst, job_id(j), a, m.agent_of(j));
            g.real_edges.push_back({a, j, w});
        }
    g.left_dummy_weight.resize(static_cast<std::size_t>(inst.n_agents()));
    g.right_dummy_weight.resize(static_cast<std::size_t>(inst.n_jobs()));
    for (int a = 0; a < inst.n_agents(); ++a)
        g.left_dummy_weight[a] = vote_fast(inst, agent_id(a), -1, m.job_of(a));
    for (int j = 0; j < inst.n_jobs(); ++j)
        g.right_dummy_weight[j] = vote_fast(inst, job_id(j), -1, m.agent_of(j));

    auto opt = max_weight_perfect_matching(g);
    if (opt.weight <= 0) return std::nullopt;

    PopularityWitness w;
    w.better = Matching(inst.n_agents(), inst.n_jobs());
    for (int a = 0; a < inst.n_agents(); ++a)
        if (opt.left_to_right[a] >= 0) w.better.add(a, opt.left_to_right[a]);
    w.margin = static_cast<int>(opt.weight);
    w.violated = classify(inst, m, w.better);
    return w;
}

namespace {

// Bounded enumeration of simple alternating paths/cycles over the labelled
// edges. Exponential in the worst case; guarded by the brute-force cap.
struct StructuralSearch {
    const PreferenceInstance& inst;
    const Matching& m;
    std::vector<char> visited_a, visited_j;
    std::vector<VertexId> path;
    std::optional<StructuralViolation> found;

    char& visited(VertexId v) {
        return v.side == Side::Agent ? visited_a[v.index] : visited_j[v.index];
    }

    bool plus(VertexId x, VertexId y) const {
        VertexId a = x.side == Side::Agent ? x : y;
        VertexId j = x.side == Side::Agent ? y : x;
        return plus_edge(inst, m, a.index, j.index);
    }

    std::vector<VertexId> nonmatching_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        const Side other = v.side == Side::Agent ? Side::Job : Side::Agent;
        for (int w : inst.neighbors(v)) {
            VertexId u{other, w};
            if (m.partner(v) == std::optional<VertexId>(u)) continue;
            out.push_back(u);
        }
        return out;
    }

    // Condition (ii): any plus edge on any alternating path from an
    // M-unmatched vertex.
    void search_from_unmatched() {
        auto try_source = [&](VertexId s) {
            if (found || m.matched(s)) return;
            path = {s};
            visited(s) = true;
            extend_unmatched(s);
            visited(s) = false;
        };
        for (int a = 0; a < inst.n_agents() && !found; ++a) try_source(agent_id(a));
        for (int j = 0; j < inst.n_jobs() && !found; ++j) try_source(job_id(j));
    }

    void extend_unmatched(VertexId v) {
        if (found) return;
        for (VertexId w : nonmatching_neighbors(v)) {
            if (visited(w)) continue;
            if (plus(v, w)) {
                path.push_back(w);
                found = StructuralViolation{WitnessKind::PathFromUnmatched, path};
                return;
            }
            auto p = m.partner(w);
            if (!p || visited(*p)) continue;
            path.push_back(w);
            path.push_back(*p);
            visited(w) = visited(*p) = true;
            extend_unmatched(*p);
            visited(w) = visited(*p) = false;
            path.pop_back();
            path.pop_back();
            if (found) return;
        }
    }

    // Condition (i): any plus edge on any alternating cycle. Every vertex
    // of an alternating cycle uses its matching edge, so we start at a
    // matched vertex, walk non-matching then matching edges, and close via
    // the start's matching partner.
    void search_cycles() {
        for (int a = 0; a < inst.n_agents() && !found; ++a) {
            VertexId s = agent_id(a);
            if (!m.matched(s)) continue;
            path = {s};
            visited(s) = true;
            extend_cycle(s, s, 0);
            visited(s) = false;
        }
    }

    void extend_cycle(VertexId start, VertexId v, int plus_count) {
        if (found) return;
        for (VertexId w : nonmatching_neighbors(v)) {
            int pc = plus_count + (plus(v, w) ? 1 : 0);
            if (w == *m.partner(start)) {
                if (pc >= 1 && path.size() >= 3) {
                    auto cyc = path;
                    cyc.push_back(w);
                    found = StructuralViolation{WitnessKind::Cycle, cyc};
                    return;
                }
                continue;
            }
            if (visited(w)) continue;
            auto p = m.partner(w);
            if (!p || visited(*p)) continue;
            path.push_back(w);
            path.push_back(*p);
            visited(w) = visited(*p) = true;
            extend_cycle(start, *p, pc);
            visited(w) = visited(*p) = false;
            path.pop_back();
            path.pop_back();
            if (found) return;
        }
    }

    // Condition (iii): two plus edges on one alternating path. Plus edges
    // are non-matching, so such a path alternates through matched vertices;
    // enumerate paths starting with a non-matching edge in both directions.
    void search_two_plus() {
        auto try_source = [&](VertexId s) {
            if (found) return;
            path = {s};
            visited(s) = true;
            extend_two_plus(s, 0);
            visited(s) = false;
        };
        for (int a = 0; a < inst.n_agents() && !found; ++a) try_source(agent_id(a));
        for (int j = 0; j < inst.n_jobs() && !found; ++j) try_source(job_id(j));
    }

    void extend_two_plus(VertexId v, int plus_count) {
        if (found) return;
        for (VertexId w : nonmatching_neighbors(v)) {
            if (visited(w)) continue;
            int pc = plus_count + (plus(v, w) ? 1 : 0);
            path.push_back(w);
            if (pc >= 2) {
                found = StructuralViolation{WitnessKind::TwoPlusOnPath, path};
                return;
            }
            auto p = m.partner(w);
            if (p && !visited(*p)) {
                path.push_back(*p);
                visited(w) = visited(*p) = true;
                extend_two_plus(*p, pc);
                visited(w) = visited(*p) = false;
                path.pop_back();
            }
            path.pop_back();
            if (found) return;
        }
    }
};

}  // namespace

std::optional<StructuralViolation> check_structural_conditions(const PreferenceInstance& inst,
                                                               const Matching& m, int cap) {
    if (inst.model().model != Model::TwoSidedOneTie)
        throw std::invalid_argument(
            "structural conditions are defined for the two-sided-one-tie model");
    check_brute_force_cap(inst, cap);
    if (!m.valid_for(inst)) throw std::invalid_argument("matching is not valid for instance");

    StructuralSearch s{inst, m,
                       std::vector<char>(static_cast<std::size_t>(inst.n_agents()), 0),
                       std::vector<char>(static_cast<std::size_t>(inst.n_jobs()), 0),
                       {},
                       std::nullopt};
    s.search_from_unmatched();
    if (!s.found) s.search_cycles();
    if (!s.found) s.search_two_plus();
    return s.found;
}

bool factor_at_most(const UnpopularityFactor& f, long long k) {
    if (f.infinite) return false;
    return f.num <= k * f.den;
}

UnpopularityReport unpopularity_factor(const PreferenceInstance& inst, const Matching& m,
                                       int cap) {
    check_brute_force_cap(inst, cap);
    if (!m.valid_for(inst)) throw std::invalid_argument("matching is not valid for instance");

    // lambda(M, N) as (num, den): phi(N,M)/phi(M,N), 1/1 when both are 0,
    // infinite when only phi(M,N) is 0.
    struct Lambda {
        bool inf;
        long long num, den;
    };
    auto lambda_of = [&](const Matching& n) -> Lambda {
        int phi_nm = 0, phi_mn = 0;
        auto tally = [&](int v) {
            if (v > 0) ++phi_nm;
            if (v < 0) ++phi_mn;
        };
        for (int a = 0; a < inst.n_agents(); ++a)
            tally(vote_fast(inst, agent_id(a), n.job_of(a), m.job_of(a)));
        for (int j = 0; j < inst.n_jobs(); ++j)
            tally(vote_fast(inst, job_id(j), n.agent_of(j), m.agent_of(j)));
        if (phi_mn == 0 && phi_nm == 0) return {false, 1, 1};
        if (phi_mn == 0) return {true, 0, 0};
        return {false, phi_nm, phi_mn};
    };
    auto greater = [](const Lambda& x, const Lambda& y) {
        if (x.inf != y.inf) return x.inf;
        if (x.inf) return false;
        return x.num * y.den > y.num * x.den;
    };

    Lambda best{false, 1, 1};
    Matching argmax = m;
    enumerate_matchings(inst, [&](const Matching& n) {
        Lambda l = lambda_of(n);
        if (greater(l, best)) {
            best = l;
            argmax = n;
        }
        return true;
    });

    UnpopularityReport report;
    if (best.inf) {
        report.factor.infinite = true;
    } else {
        long long g = std::gcd(best.num, best.den);
        report.factor.num = best.num / g;
        report.factor.den = best.den / g;
    }
    report.argmax = argmax;
    return report;
}

}  // namespace popmatch
