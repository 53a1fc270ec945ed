#pragma once

// Min-max split of the sensing task across a fixed, already-paired scheduled
// set: minimize max_k alpha_k d_k subject to sum d_k >= task size. The optimum
// equalizes alpha_k d_k, giving d_k = task / (alpha_k * sum_j 1/alpha_j).

#include <span>
#include <stdexcept>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

struct UserCost {
  UserId user = 0;
  double alpha = 0.0;  // seconds per bit
};

/// Per-bit costs of a scheduled set. Every alpha is checked positive and finite
/// at construction.
class AlphaVector {
 public:
  AlphaVector() = default;
  explicit AlphaVector(std::vector<UserCost> costs);

  /// Costs of the users in `assignment` on their paired subbands, in subband order.
  static AlphaVector from_assignment(const Assignment& assignment,
                                     const ProblemInstance& instance);

  std::span<const UserCost> costs() const noexcept { return costs_; }
  std::vector<double> values() const;
  std::size_t size() const noexcept { return costs_.size(); }
  bool empty() const noexcept { return costs_.empty(); }

 private:
  std::vector<UserCost> costs_;
};

class EmptySchedule : public std::invalid_argument {
 public:
  EmptySchedule() : std::invalid_argument("task split needs at least one scheduled user") {}
};

Allocation optimal_split(const AlphaVector& alphas, double task_bits);

/// task / sum_k 1/alpha_k, the common completion time under optimal_split.
double minmax_value(const AlphaVector& alphas, double task_bits);

}  // namespace mcs
