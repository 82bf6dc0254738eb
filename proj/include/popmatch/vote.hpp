#pragma once

#include <optional>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

/// v's vote between partners x and y (either may be "unmatched" = nullopt,
/// which is the least preferred option for every vertex):
///   +1  v strictly prefers x, -1 strictly prefers y, 0 indifferent or x == y.
///
/// Jobs vote by model: in OneSided they always abstain (0); in
/// TwoSidedOneTie a job only distinguishes saturated from unsaturated; in
/// TwoSidedTies jobs vote from their own lists like agents.
///
/// Throws std::invalid_argument when x or y is neither a neighbour of v nor
/// unmatched.
int vote(const PreferenceInstance& inst, VertexId v, std::optional<VertexId> x,
         std::optional<VertexId> y);

/// Delta(M, M') = sum over all vertices of vote(v, M(v), M'(v)).
/// Antisymmetric in its matching arguments. M is popular iff
/// popularity_margin(inst, M', M) <= 0 for every matching M'.
int popularity_margin(const PreferenceInstance& inst, const Matching& m,
                      const Matching& m_prime);

namespace detail {
/// Unchecked vote via precomputed ranks; x, y are partner indices on the
/// opposite side of v, -1 = unmatched. Hot-path variant of vote().
int vote_fast(const PreferenceInstance& inst, VertexId v, int x, int y);
}  // namespace detail

}  // namespace popmatch
