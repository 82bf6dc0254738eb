#include "popmatch/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace popmatch {

namespace {

// Forbidden pairings get a cost large enough never to be chosen (a
// dummy-only assignment is always feasible) but small enough that the
// potential arithmetic stays far from overflow.
constexpr long long kForbidden = 1LL << 40;

}  // namespace

AssignmentResult max_weight_perfect_matching(const WeightedAugmentedGraph& g) {
    const int n = g.n_left + g.n_right;
    AssignmentResult result;
    result.left_to_right.assign(static_cast<std::size_t>(g.n_left), -1);
    result.right_to_left.assign(static_cast<std::size_t>(g.n_right), -1);
    if (n == 0) return result;

    if (static_cast<int>(g.left_dummy_weight.size()) != g.n_left ||
        static_cast<int>(g.right_dummy_weight.size()) != g.n_right)
        throw std::invalid_argument("augmented graph is missing dummy weights");

    // Cost matrix of the square assignment: row i < n_left is a real left
    // vertex, row n_left + r is the dummy of right vertex r; column j <
    // n_right is a real right vertex, column n_right + l is the dummy of
    // left vertex l. Minimization over negated weights.
    std::vector<std::vector<long long>> cost(
        static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), kForbidden));
    for (int l = 0; l < g.n_left; ++l) cost[l][g.n_right + l] = -g.left_dummy_weight[l];
    for (int r = 0; r < g.n_right; ++r) cost[g.n_left + r][r] = -g.right_dummy_weight[r];
    for (int r = 0; r < g.n_right; ++r)
        for (int l = 0; l < g.n_left; ++l) cost[g.n_left + r][g.n_right + l] = 0;
    for (const auto& e : g.real_edges) {
        if (e.left < 0 || e.left >= g.n_left || e.right < 0 || e.right >= g.n_right)
            throw std::invalid_argument("augmented graph edge out of range");
        if (-e.weight < cost[e.left][e.right]) cost[e.left][e.right] = -e.weight;
    }

    // Standard O(n^3) Hungarian method with row/column potentials.
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> v(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> assigned(static_cast<std::size_t>(n) + 1, 0);  // column -> row (1-based)
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        assigned[0] = i;
        int j0 = 0;
        std::vector<long long> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[j0] = 1;
            int i0 = assigned[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[assigned[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (assigned[j0] != 0);
        do {
            int j1 = way[j0];
            assigned[j0] = assigned[j1];
            j0 = j1;
        } while (j0);
    }

    long long total_cost = 0;
    for (int j = 1; j <= n; ++j) {
        int i = assigned[j];
        total_cost += cost[i - 1][j - 1];
        int row = i - 1, col = j - 1;
        if (row < g.n_left && col < g.n_right) {
            result.left_to_right[row] = col;
            result.right_to_left[col] = row;
        }
    }
    result.weight = -total_cost;
    return result;
}

}  // namespace popmatch
