#pragma once

// Randomized certification suites that pit each solver against its
// brute-force reference. Used by the `oracle` and `selftest` CLI commands and
// by the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

namespace mcs::certify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Hungarian totals against N! permutation scans on random positive matrices,
/// exact equality, plus a wall-clock budget.
CheckResult matching_optimality(std::uint64_t seed, std::size_t trials = 200,
                                std::size_t n = 5, double budget_seconds = 1.0);

/// Potentials Hungarian against the line-covering reduction: identical totals
/// and identical pairings.
CheckResult reduction_agreement(std::uint64_t seed, std::size_t trials = 200,
                                std::size_t max_n = 8);

/// Closed-form split: equalization, exact task coverage, grid optimality for
/// up to three users.
CheckResult split_certification(std::uint64_t seed, std::size_t trials = 500);

/// Matching latency against the max of per-user latencies under the optimal
/// split, through the core model, for random scheduled sets.
CheckResult latency_consistency(std::uint64_t seed, std::size_t trials = 200);

struct SwapCertification {
  CheckResult result;
  double mean_relative_gap = 0.0;
  double equality_rate = 0.0;
};

/// Swap search on K=8, N=4, M=5 instances: exhaustive re-scan shows no
/// improving swap, and the objective never beats the global optimum.
SwapCertification swap_local_optimality(std::uint64_t seed, std::size_t trials = 100);

/// Norm bounds and monotonicity on random latencies, exact anchor points.
CheckResult normalization(std::uint64_t seed, std::size_t trials = 10'000);

/// Generator determinism, stream independence, benchmark feasibility.
CheckResult generator_and_baselines(std::uint64_t seed, std::size_t trials = 50);

std::vector<CheckResult> oracle_suite(std::uint64_t seed);
std::vector<CheckResult> selftest_suite(std::uint64_t seed);

}  // namespace mcs::certify
