#pragma once

// Subband/user pairing for a fixed scheduled set. With |S| = N the latency of
// the best task split is task / sum_n 1/alpha_{k_n}, so the best pairing is a
// maximum-weight perfect matching on weights 1/alpha.

#include <cstddef>
#include <span>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

/// Square matrix, rows indexed by subband and columns by scheduled user.
/// Entries must be strictly positive and finite.
class WeightMatrix {
 public:
  WeightMatrix(std::size_t n, std::vector<double> entries, std::vector<UserId> users);

  /// Row-major nested initializer; columns are labelled users 0..n-1.
  static WeightMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double at(SubbandIndex row, std::size_t col) const { return entries_[row * n_ + col]; }
  std::span<const UserId> users() const noexcept { return users_; }
  UserId user(std::size_t col) const { return users_.at(col); }
  /// Column holding `user`, or size() if absent.
  std::size_t column_of(UserId user) const;

  WeightMatrix scaled(double factor) const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
  std::vector<UserId> users_;
};

/// 1/alpha for every (user, subband) pair of an instance, computed once.
class WeightTable {
 public:
  explicit WeightTable(const ProblemInstance& instance);
  double weight(UserId user, SubbandIndex subband) const {
    return weights_[user * n_subbands_ + subband];
  }
  std::size_t n_subbands() const noexcept { return n_subbands_; }

 private:
  std::size_t n_subbands_;
  std::vector<double> weights_;
};

/// Weight matrix for `scheduled` (|scheduled| must equal N); columns are the
/// scheduled users in ascending id order.
WeightMatrix build_weight_matrix(std::span<const UserId> scheduled,
                                 const ProblemInstance& instance);
WeightMatrix build_weight_matrix(std::span<const UserId> scheduled, const WeightTable& table);

/// Maximum-weight perfect matching, O(N^3) shortest-augmenting-path Hungarian
/// with dual potentials. Among optimal pairings (reduced costs within 1e-12
/// after power-of-two normalization) returns the lexicographically smallest by
/// subband then column.
Assignment hungarian_assign(const WeightMatrix& weights);

/// Classical matrix-reduction Hungarian: negate, row and column reduce, cover
/// zeros with the fewest lines, shift by the smallest uncovered entry until N
/// lines are needed, then read the pairing off the zero graph. Reference path
/// for hungarian_assign; same tie rule.
Assignment hungarian_reduce(const WeightMatrix& weights);

/// Sum of matched weights in subband order.
double matching_total(const Assignment& assignment, const WeightMatrix& weights);

/// Completion time of the optimal split under `assignment`: task / matched weight.
double matching_latency(const Assignment& assignment, const WeightMatrix& weights,
                        double task_bits);

}  // namespace mcs
