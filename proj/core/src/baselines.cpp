#include "mcs/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mcs/numeric.hpp"

namespace mcs {

SolutionReport benchmark1(const ProblemInstance& instance) {
  SwapOptions options;
  options.search_weight = 1.0;
  return swap_optimize(instance, options);
}

Allocation fractional_split(const Assignment& assignment, const ProblemInstance& instance) {
  std::vector<double> gains;
  gains.reserve(assignment.size());
  for (const Pair& p : assignment.pairs()) gains.push_back(instance.user(p.user).gains[p.subband]);
  const double total_gain = stable_sum(gains);
  Allocation out;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    out.loads.emplace(assignment.pairs()[i].user, instance.task_bits() * (gains[i] / total_gain));
  }
  return out;
}

SolutionReport benchmark2(const ProblemInstance& instance, RngStream& rng) {
  const std::size_t n = instance.n_subbands();
  std::vector<UserId> order(instance.n_users());
  std::iota(order.begin(), order.end(), UserId{0});
  std::stable_sort(order.begin(), order.end(), [&](UserId a, UserId b) {
    return instance.user(a).sensing_rate > instance.user(b).sensing_rate;
  });
  order.resize(n);
  std::sort(order.begin(), order.end());

  std::vector<SubbandIndex> bands(n);
  std::iota(bands.begin(), bands.end(), SubbandIndex{0});
  std::shuffle(bands.begin(), bands.end(), rng.engine());

  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({order[i], bands[i]});
  const Assignment assignment(std::move(pairs));
  return objective(assignment, fractional_split(assignment, instance), instance);
}

SolutionReport benchmark3(const ProblemInstance& instance) {
  const Assignment assignment = greedy_pairing(instance);
  return objective(assignment, fractional_split(assignment, instance), instance);
}

}  // namespace mcs
