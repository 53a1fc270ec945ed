#include "mcs/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcs/matching.hpp"
#include "mcs/task_allocation.hpp"

namespace mcs {

namespace {

// Search-time score of a set: the latency comes from the matched weight total
// (task / sum of 1/alpha), which equals the max per-user latency of the
// optimal split to within rounding.
double score_set(std::span<const UserId> scheduled, const ProblemInstance& instance,
                 const WeightTable& table, double weight) {
  const WeightMatrix weights = build_weight_matrix(scheduled, table);
  const double t_over = matching_latency(hungarian_assign(weights), weights, instance.task_bits());
  const auto gap = static_cast<double>(instance.n_subareas() - coverage_metric(scheduled, instance));
  return weight * normalize(t_over, instance.scale()) + (1.0 - weight) * gap;
}

}  // namespace

SolutionReport evaluate_set(std::span<const UserId> scheduled,
                            const ProblemInstance& instance, double weight) {
  const WeightMatrix weights = build_weight_matrix(scheduled, instance);
  const Assignment pairing = hungarian_assign(weights);
  const Allocation split =
      optimal_split(AlphaVector::from_assignment(pairing, instance), instance.task_bits());
  SolutionReport report = objective(pairing, split, instance, weight);
  report.diagnostics.evaluations = 1;
  return report;
}

SolutionReport evaluate_set(std::span<const UserId> scheduled,
                            const ProblemInstance& instance) {
  return evaluate_set(scheduled, instance, instance.weight());
}

Assignment greedy_pairing(const ProblemInstance& instance) {
  std::vector<char> taken(instance.n_users(), 0);
  std::vector<Pair> pairs;
  for (SubbandIndex n = 0; n < instance.n_subbands(); ++n) {
    std::size_t best = instance.n_users();
    for (const UserProfile& u : instance.users()) {
      if (taken[u.id]) continue;
      if (best == instance.n_users() || u.gains[n] > instance.user(best).gains[n]) best = u.id;
    }
    taken[best] = 1;
    pairs.push_back({best, n});
  }
  return Assignment(std::move(pairs));
}

std::vector<UserId> initial_set(const ProblemInstance& instance) {
  return greedy_pairing(instance).scheduled();
}

SolutionReport swap_optimize(const ProblemInstance& instance, const SwapOptions& options) {
  return swap_optimize(instance, initial_set(instance), options);
}

SolutionReport swap_optimize(const ProblemInstance& instance, std::vector<UserId> start,
                             const SwapOptions& options) {
  const double weight = options.search_weight.value_or(instance.weight());
  std::vector<char> in_set(instance.n_users(), 0);
  for (UserId k : start) {
    if (k >= instance.n_users() || in_set[k])
      throw std::invalid_argument("initial set must name distinct existing users");
    in_set[k] = 1;
  }
  std::vector<UserId> current = std::move(start);
  std::sort(current.begin(), current.end());

  const WeightTable table(instance);
  Diagnostics diag;
  double best = score_set(current, instance, table, weight);
  diag.evaluations = 1;

  const std::size_t pass_limit =
      options.mode == PassMode::kSinglePass ? 1 : std::max<std::size_t>(options.max_passes, 1);
  while (diag.swap_passes < pass_limit) {
    ++diag.swap_passes;
    // Pair list fixed at pass start, ascending (s, s').
    std::vector<UserId> idle;
    for (UserId k = 0; k < instance.n_users(); ++k)
      if (!in_set[k]) idle.push_back(k);
    const std::vector<UserId> scheduled = current;

    std::size_t accepted_this_pass = 0;
    for (UserId out : scheduled) {
      for (UserId in : idle) {
        // An earlier acceptance in this pass may have moved either user.
        if (!in_set[out] || in_set[in]) continue;
        std::vector<UserId> candidate = current;
        std::replace(candidate.begin(), candidate.end(), out, in);
        std::sort(candidate.begin(), candidate.end());
        const double trial = score_set(candidate, instance, table, weight);
        ++diag.evaluations;
        if (trial < best - kImprovementThreshold) {
          best = trial;
          current = std::move(candidate);
          in_set[out] = 0;
          in_set[in] = 1;
          ++accepted_this_pass;
        }
      }
    }
    diag.accepted_swaps += accepted_this_pass;
    if (accepted_this_pass == 0) break;
  }

  SolutionReport report = evaluate_set(current, instance);
  ++diag.evaluations;
  report.diagnostics = diag;
  return report;
}

}  // namespace mcs
