#pragma once

// Reference policies scored under the same objective as the proposed solver.

#include "mcs/channel.hpp"
#include "mcs/model.hpp"
#include "mcs/scheduler.hpp"

namespace mcs {

/// Latency-only search: the swap solver run with its internal weight pinned
/// to 1, then rescored under the instance weight.
SolutionReport benchmark1(const ProblemInstance& instance);

/// Top-N users by sensing rate (lower id wins ties), a random subband
/// permutation drawn from `rng`, gain-proportional loads.
SolutionReport benchmark2(const ProblemInstance& instance, RngStream& rng);

/// Per-subband best-gain greedy pairing with gain-proportional loads.
SolutionReport benchmark3(const ProblemInstance& instance);

/// d_k = task * g_{k,n_k} / sum_j g_{j,n_j} over the pairs of `assignment`.
Allocation fractional_split(const Assignment& assignment, const ProblemInstance& instance);

}  // namespace mcs
