#include "mcs/task_allocation.hpp"

#include <cmath>
#include <string>

#include "mcs/numeric.hpp"

namespace mcs {

AlphaVector::AlphaVector(std::vector<UserCost> costs) : costs_(std::move(costs)) {
  for (const UserCost& c : costs_) {
    if (!(c.alpha > 0.0) || !std::isfinite(c.alpha)) {
      throw std::invalid_argument("per-bit cost of user " + std::to_string(c.user) +
                                  " must be positive and finite");
    }
  }
}

AlphaVector AlphaVector::from_assignment(const Assignment& assignment,
                                         const ProblemInstance& instance) {
  std::vector<UserCost> costs;
  costs.reserve(assignment.size());
  for (const Pair& p : assignment.pairs()) {
    costs.push_back({p.user, per_bit_cost(instance.user(p.user), p.subband, instance)});
  }
  return AlphaVector(std::move(costs));
}

std::vector<double> AlphaVector::values() const {
  std::vector<double> out;
  out.reserve(costs_.size());
  for (const UserCost& c : costs_) out.push_back(c.alpha);
  return out;
}

Allocation optimal_split(const AlphaVector& alphas, double task_bits) {
  if (alphas.empty()) throw EmptySchedule();
  const double completion = minmax_value(alphas, task_bits);
  Allocation out;
  for (const UserCost& c : alphas.costs()) out.loads.emplace(c.user, completion / c.alpha);
  return out;
}

double minmax_value(const AlphaVector& alphas, double task_bits) {
  if (alphas.empty()) throw EmptySchedule();
  const std::vector<double> values = alphas.values();
  return task_bits / harmonic_sum(values);
}

}  // namespace mcs
