#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stgr/graph.hpp"
#include "stgr/rational.hpp"
#include "stgr/temporal.hpp"

namespace stgr {

constexpr std::int64_t kDefaultBudget = 10'000'000;

// floor(alpha * dist(u,v)) entrywise, flat (n+1)^2 row-major layout matching
// DistanceMatrix. An integer duration meets alpha*dist iff it meets the floor.
std::vector<std::int64_t> bound_matrix(const DistanceMatrix& dist, const Rational& alpha);

// Exhaustive search for a labeling of stretch <= alpha. The first edge is
// pinned to label 1 (rotation symmetry); the remaining delta^(m-1) leaves
// are enumerated lexicographically with no pruning and the first witness is
// returned after re-verification. Raises budget_error when delta^(m-1)
// exceeds the budget.
std::optional<Labeling> exact_decide(const Graph& g, int delta, const Rational& alpha,
                                     std::int64_t budget = kDefaultBudget);

// All values k/d with 1 <= d <= diam and d <= k <= delta*d, deduplicated and
// ascending. Every achievable stretch is of this form.
std::vector<Rational> candidate_alphas(int diam, int delta);

struct OptimizeResult {
  Rational alpha{1, 1};
  Labeling witness;
};

// Minimum stretch over all labelings: for each distance d a binary search
// over the integer numerator k locates the least feasible k/d, and the
// global minimum is re-decided once for a canonical witness.
OptimizeResult exact_optimize(const Graph& g, int delta, std::int64_t budget = kDefaultBudget);

}  // namespace stgr
