#pragma once

#include <optional>
#include <string>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

/// f/r structure of a strict one-sided instance: f maps each agent to its
/// top job, F is the set of all such top jobs, and r maps each agent to its
/// most preferred job outside F (-1, read "infinity", when every neighbour
/// is in F). Popular matchings are exactly the matchings that saturate F
/// along f-edges and give every agent its f- or r-job, agents with r
/// infinite being the only ones allowed to stay unmatched.
struct FRStructure {
    std::vector<int> f;        // agent -> top job, -1 for isolated agents
    std::vector<int> r;        // agent -> top non-F job, -1 = infinity
    std::vector<char> in_f;    // job -> member of F

    bool r_infinite(int agent) const { return r[agent] < 0; }
};

/// Requires a strict one-sided instance; throws std::invalid_argument
/// otherwise.
FRStructure fr_structure(const PreferenceInstance& inst);

/// Outcome of the characterization check, with a human-readable reason on
/// failure.
struct FRCheck {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Does M satisfy the popular-matching characterization of the one-sided
/// model? (Every F-job matched to an agent topping it; every agent matched
/// to its f- or r-job, or unmatched with r infinite.)
FRCheck satisfies_fr_conditions(const PreferenceInstance& inst, const Matching& m);

/// A popular matching of the instance, or nullopt when none exists.
/// Constructive: a matching of the f/r reduced graph saturating F and all
/// finite-r agents, found by merging an F-saturating with an
/// agent-saturating matching along alternating components.
std::optional<Matching> solve_one_sided(const PreferenceInstance& inst);

/// A popular matching with agent's partner forced to `job` (or forced
/// unmatched when nullopt, which requires r infinite). Throws
/// std::invalid_argument when the forcing is incompatible with the
/// characterization (job outside {f, r}).
std::optional<Matching> solve_one_sided_forced(const PreferenceInstance& inst, int agent,
                                               std::optional<int> job);

/// Diagnostic classification of a perturbation pair relative to a concrete
/// popular matching M of the first instance: which shape the pair has (did
/// the perturbed agent's top choice change; is it assigned its top or its
/// fallback) and whether the corresponding sufficient condition for M to
/// stay popular in the second instance is met. The robust decision itself
/// does not rely on this classification.
struct RobustCaseTag {
    bool top_changed = false;       // f differs across the instances
    bool assigned_top = false;      // M(agent) == f in the first instance
    bool assigned_fallback = false; // M(agent) == r in the first instance
    bool condition_met = false;     // sufficient condition of this case

    /// Shape labels: 1 = top changed, 2 = top kept; a = fallback assigned,
    /// b = top assigned ("" when the agent is unmatched).
    std::string label() const {
        if (!assigned_top && !assigned_fallback) return top_changed ? "1-" : "2-";
        return std::string(top_changed ? "1" : "2") + (assigned_top ? "b" : "a");
    }
};

/// Pre: M popular in `first` (throws std::invalid_argument otherwise);
/// diff must be a valid single-agent perturbation between the instances.
RobustCaseTag classify_perturbation_case(const PreferenceInstance& first,
                                         const PreferenceInstance& second,
                                         const PerturbationDiff& diff, const Matching& m);

/// A matching popular in both instances, or nullopt when none exists. The
/// instances must differ in at most one agent's preference order (throws
/// PerturbationError otherwise). Decides each candidate assignment of the
/// perturbed agent over a joint reduced graph that enforces both
/// instances' characterizations simultaneously.
std::optional<Matching> robust_one_sided(const PreferenceInstance& first,
                                         const PreferenceInstance& second);

}  // namespace popmatch
