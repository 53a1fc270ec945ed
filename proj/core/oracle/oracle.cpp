#include "mcs/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "mcs/numeric.hpp"

namespace mcs::oracle {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

// Saturating binomial.
std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out > 1e18 ? std::numeric_limits<std::size_t>::max()
                    : static_cast<std::size_t>(out + 0.5);
}

}  // namespace

MatchingResult exhaustive_matching(const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  if (n > kMaxMatchingSize) {
    throw TooLarge("exhaustive matching limited to N <= " + std::to_string(kMaxMatchingSize) +
                   "; got " + std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best_perm;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> row_weights(n);
  do {
    for (std::size_t r = 0; r < n; ++r) row_weights[r] = weights.at(r, perm[r]);
    const double total = stable_sum(row_weights);
    if (total > best) {
      best = total;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Pair> pairs;
  for (std::size_t r = 0; r < n; ++r) pairs.push_back({weights.user(best_perm[r]), r});
  return {Assignment(std::move(pairs)), best};
}

SolutionReport exhaustive_joint(const ProblemInstance& instance) {
  const std::size_t k = instance.n_users();
  const std::size_t n = instance.n_subbands();
  const std::size_t subsets = choose(k, n);
  const std::size_t perms = factorial(n);
  if (n > 12 || subsets > kMaxJointCandidates / perms) {
    throw TooLarge("exhaustive joint search over C(" + std::to_string(k) + "," +
                   std::to_string(n) + ")*" + std::to_string(n) + "! candidates exceeds " +
                   std::to_string(kMaxJointCandidates));
  }

  // Bitmask of chosen users, visited in lexicographic order of the sorted subset.
  std::vector<char> pick(k, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), 1);

  SolutionReport best;
  bool have_best = false;
  std::size_t evaluated = 0;
  do {
    std::vector<UserId> subset;
    for (UserId u = 0; u < k; ++u)
      if (pick[u]) subset.push_back(u);
    std::vector<UserId> order = subset;
    do {
      std::vector<Pair> pairs;
      for (SubbandIndex band = 0; band < n; ++band) pairs.push_back({order[band], band});
      Assignment assignment(std::move(pairs));
      const Allocation split =
          optimal_split(AlphaVector::from_assignment(assignment, instance), instance.task_bits());
      SolutionReport candidate = objective(assignment, split, instance);
      ++evaluated;
      if (!have_best || candidate.objective < best.objective) {
        best = std::move(candidate);
        have_best = true;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  best.diagnostics = {};
  best.diagnostics.evaluations = evaluated;
  return best;
}

GridSplit grid_split_check(const AlphaVector& alphas, double task_bits, std::size_t grid_points) {
  const std::vector<double> a = alphas.values();
  const std::size_t dim = a.size();
  if (dim == 0 || dim > kMaxGridDimension) {
    throw TooLarge("grid split check supports 1 to " + std::to_string(kMaxGridDimension) +
                   " users; got " + std::to_string(dim));
  }
  if (grid_points < 2) throw std::invalid_argument("grid needs at least two points per axis");

  GridSplit out;
  if (dim == 1) {
    out.value = a[0] * task_bits;
    return out;
  }
  const double step = task_bits / static_cast<double>(grid_points - 1);
  out.value = std::numeric_limits<double>::infinity();
  const std::size_t last = grid_points - 1;
  if (dim == 2) {
    for (std::size_t i = 0; i <= last; ++i) {
      const double d0 = static_cast<double>(i) * step;
      const double d1 = static_cast<double>(last - i) * step;
      out.value = std::min(out.value, std::max(a[0] * d0, a[1] * d1));
    }
  } else {
    for (std::size_t i = 0; i <= last; ++i) {
      for (std::size_t j = 0; i + j <= last; ++j) {
        const double d0 = static_cast<double>(i) * step;
        const double d1 = static_cast<double>(j) * step;
        const double d2 = static_cast<double>(last - i - j) * step;
        out.value = std::min(out.value, std::max({a[0] * d0, a[1] * d1, a[2] * d2}));
      }
    }
  }
  // Snapping the continuous optimum onto the grid moves each of the first
  // dim-1 coordinates by under one step and the last by under dim-1 steps.
  out.lipschitz_bound = *std::max_element(a.begin(), a.end()) *
                        static_cast<double>(dim - 1) * step;
  return out;
}

}  // namespace mcs::oracle
