#pragma once

#include <optional>
#include <vector>

#include "popmatch/enumerate.hpp"
#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

/// The (alpha, beta) vote pair of a non-matching edge (a, j) relative to a
/// fixed matching M: alpha is a's vote between j and M(a), beta is j's vote
/// between a and M(j), with "unmatched" as everyone's least preferred
/// option.
struct EdgeLabel {
    int alpha = 0, beta = 0;
};

EdgeLabel edge_label(const PreferenceInstance& inst, const Matching& m, int agent, int job);

/// Which structural condition a positive witness violates, derived from the
/// component of M xor M' that carries a (1,0)-or-better edge (an edge whose
/// agent-side vote is +1). Only meaningful for the two-sided-one-tie model.
enum class WitnessKind {
    PathFromUnmatched,  // alternating path from an M-unmatched vertex
    Cycle,              // alternating cycle
    TwoPlusOnPath,      // alternating path with two such edges
    NotApplicable,
};

/// A matching beating M, with its positive margin.
struct PopularityWitness {
    Matching better;
    int margin = 0;
    WitnessKind violated = WitnessKind::NotApplicable;
};

/// nullopt means POPULAR.
using PopularityResult = std::optional<PopularityWitness>;

/// Brute force: enumerates every matching M' and maximizes Delta(M', M).
/// Returns POPULAR iff no matching has positive margin, otherwise a witness
/// attaining the maximum margin. Throws SizeLimitError beyond `cap` total
/// vertices.
PopularityResult is_popular_oracle(const PreferenceInstance& inst, const Matching& m,
                                   int cap = kDefaultBruteForceCap);

/// Polynomial verifier. Reduces popularity to a maximum-weight perfect
/// matching on the dummy-augmented graph: a real edge (a, j) weighs a's and
/// j's votes for each other against their M-partners (0 for edges of M),
/// and a vertex falling back to its dummy weighs its vote for staying
/// unmatched. M itself scores exactly 0, so M is popular iff the optimum is
/// 0; a positive optimum yields a max-margin witness.
PopularityResult is_popular(const PreferenceInstance& inst, const Matching& m);

/// A violation of the structural conditions: the offending alternating
/// path or cycle, as an ordered vertex sequence.
struct StructuralViolation {
    WitnessKind condition = WitnessKind::NotApplicable;
    std::vector<VertexId> component;
};

/// Structural popularity conditions for the two-sided-one-tie model,
/// checked by bounded enumeration of simple alternating paths and cycles
/// over the labelled edges:
///   (ii) no alternating path from an M-unmatched vertex contains a
///        (1,0)-or-better edge,
///   (i)  no alternating cycle contains one,
///   (iii) no alternating path contains two or more.
/// Searched and reported in that order; nullopt means all three hold.
///
/// These conditions are sufficient for popularity but strictly stronger:
/// popular matchings violating them exist (see the tests for pinned
/// instances), so this checker is a one-way cross-check, not a decision
/// procedure.
std::optional<StructuralViolation> check_structural_conditions(
    const PreferenceInstance& inst, const Matching& m, int cap = kDefaultBruteForceCap);

/// max_N lambda(M, N) where lambda compares the vote counts of the two
/// matchings; 1 exactly for popular matchings, infinite when some N wins
/// votes while M wins none.
struct UnpopularityFactor {
    bool infinite = false;
    long long num = 1, den = 1;  // reduced; meaningful when !infinite

    friend bool operator==(const UnpopularityFactor&, const UnpopularityFactor&) = default;
};

struct UnpopularityReport {
    UnpopularityFactor factor;
    std::optional<Matching> argmax;  // a matching attaining the factor
};

/// Brute-forces the unpopularity factor over all matchings N. Throws
/// SizeLimitError beyond `cap` vertices.
UnpopularityReport unpopularity_factor(const PreferenceInstance& inst, const Matching& m,
                                       int cap = kDefaultBruteForceCap);

/// Compares a factor against the integer bound k (factor <= k).
bool factor_at_most(const UnpopularityFactor& f, long long k);

const char* witness_kind_name(WitnessKind k);

}  // namespace popmatch
