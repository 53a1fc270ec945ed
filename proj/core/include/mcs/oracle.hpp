#pragma once

// Brute-force references for small instances. Nothing here calls the
// Hungarian solver or the swap search; candidates are enumerated outright and
// scored with the core model.

#include <cstddef>
#include <stdexcept>

#include "mcs/matching.hpp"
#include "mcs/model.hpp"
#include "mcs/task_allocation.hpp"

namespace mcs::oracle {

/// Enumeration would exceed its guard. Never truncated silently.
class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxJointCandidates = 1'000'000;
inline constexpr std::size_t kMaxMatchingSize = 8;
inline constexpr std::size_t kMaxGridDimension = 3;

struct MatchingResult {
  Assignment assignment;
  double total = 0.0;
};

/// Max-weight perfect matching by scanning all N! permutations in
/// lexicographic order; the first strict maximum wins.
MatchingResult exhaustive_matching(const WeightMatrix& weights);

/// Global optimum over every N-subset and every pairing of it, with the
/// optimal task split for each; first strict minimum in (subset, permutation)
/// lexicographic order wins.
SolutionReport exhaustive_joint(const ProblemInstance& instance);

struct GridSplit {
  double value = 0.0;            // min over the grid of max_k alpha_k d_k
  double lipschitz_bound = 0.0;  // max gap to the continuous optimum
};

/// Simplex grid over splits summing to task_bits with `grid_points` ticks per axis.
GridSplit grid_split_check(const AlphaVector& alphas, double task_bits, std::size_t grid_points);

}  // namespace mcs::oracle
