#pragma once

#include <functional>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

inline constexpr int kDefaultBruteForceCap = 16;

/// Throws SizeLimitError when the instance has more than `cap` vertices.
void check_brute_force_cap(const PreferenceInstance& inst, int cap);

struct EnumerateOptions {
    /// Pairs present in every enumerated matching.
    std::vector<std::pair<int, int>> fixed_pairs;
    /// Vertices barred from being matched (beyond the fixed pairs).
    std::vector<int> excluded_agents, excluded_jobs;
};

/// Visits every matching of the instance in a fixed deterministic order
/// (agents by index; per agent each free neighbour ascending, then
/// unmatched). Enumeration stops early when the visitor returns false.
void enumerate_matchings(const PreferenceInstance& inst, const EnumerateOptions& opts,
                         const std::function<bool(const Matching&)>& visit);

inline void enumerate_matchings(const PreferenceInstance& inst,
                                const std::function<bool(const Matching&)>& visit) {
    enumerate_matchings(inst, {}, visit);
}

}  // namespace popmatch
