#pragma once

// Outer user-selection search. Each candidate scheduled set of size N is
// scored by the optimal pairing (Hungarian) and the optimal task split; the
// set is refined by one-for-one swaps between scheduled and idle users.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

enum class PassMode {
  kFixedPoint,  // rebuild the swap list until a pass accepts nothing
  kSinglePass,  // visit each (scheduled, idle) pair of the initial split once
};

struct SwapOptions {
  PassMode mode = PassMode::kFixedPoint;
  std::size_t max_passes = 50;
  /// Weight used while searching. Unset means the instance weight. The final
  /// report is always rescored under the instance weight.
  std::optional<double> search_weight;
};

/// Minimum objective decrease for a swap to count as an improvement.
inline constexpr double kImprovementThreshold = 1e-12;

/// Score a scheduled set of exactly N users under `weight`.
SolutionReport evaluate_set(std::span<const UserId> scheduled,
                            const ProblemInstance& instance, double weight);
SolutionReport evaluate_set(std::span<const UserId> scheduled,
                            const ProblemInstance& instance);

/// Per-subband greedy: subbands in ascending order each take the unclaimed user
/// with the largest gain (lowest id on ties).
Assignment greedy_pairing(const ProblemInstance& instance);

/// Users of greedy_pairing, ascending.
std::vector<UserId> initial_set(const ProblemInstance& instance);

SolutionReport swap_optimize(const ProblemInstance& instance, const SwapOptions& options = {});
SolutionReport swap_optimize(const ProblemInstance& instance, std::vector<UserId> start,
                             const SwapOptions& options = {});

}  // namespace mcs
