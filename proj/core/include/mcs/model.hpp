#pragma once

// Network model for a single-cell mobile crowdsensing system: users, subbands,
// the pairing of scheduled users to subbands, the sensing-bit split, and the
// pure evaluation functions (latency, rate, coverage, objective) shared by
// every solver and baseline.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs {

using UserId = std::size_t;
using SubbandIndex = std::size_t;

/// Thrown when a ProblemInstance (or one of its users) breaks a model invariant.
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which constraint of the joint problem a candidate solution violates.
enum class Constraint {
  kTaskCoverage,       // C1: sum of loads reaches the task size
  kLoadOnlyScheduled,  // C2: only users holding a subband carry load
  kLoadBounds,         // C3: 0 <= load <= task size
  kSubbandExclusive,   // C4: each subband used by at most one user
  kUserExclusive,      // C5: each user holds at most one subband
};

std::string to_string(Constraint c);

class ConstraintViolation : public std::runtime_error {
 public:
  ConstraintViolation(Constraint which, const std::string& detail);
  Constraint which() const noexcept { return which_; }

 private:
  Constraint which_;
};

struct UserProfile {
  UserId id = 0;
  double sensing_rate = 0.0;  // bits/s
  double tx_power = 0.0;      // W
  std::size_t subarea = 0;    // 0-based
  std::vector<double> gains;  // linear, one per subband
  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

/// Immutable scenario. All invariants are checked by the constructor.
class ProblemInstance {
 public:
  ProblemInstance(std::vector<UserProfile> users, std::vector<double> bandwidths,
                  double noise_density, double task_bits, std::size_t n_subareas,
                  double weight, double scale);

  std::span<const UserProfile> users() const noexcept { return users_; }
  const UserProfile& user(UserId k) const { return users_.at(k); }
  std::size_t n_users() const noexcept { return users_.size(); }
  std::size_t n_subbands() const noexcept { return bandwidths_.size(); }
  std::size_t n_subareas() const noexcept { return n_subareas_; }
  double bandwidth(SubbandIndex n) const { return bandwidths_.at(n); }
  std::span<const double> bandwidths() const noexcept { return bandwidths_; }
  double noise_density() const noexcept { return noise_density_; }
  double task_bits() const noexcept { return task_bits_; }
  double weight() const noexcept { return weight_; }
  double scale() const noexcept { return scale_; }

  /// Same scenario scored under a different weight.
  ProblemInstance with_weight(double weight) const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  std::vector<UserProfile> users_;
  std::vector<double> bandwidths_;
  double noise_density_;
  double task_bits_;
  std::size_t n_subareas_;
  double weight_;
  double scale_;
};

struct Pair {
  UserId user = 0;
  SubbandIndex subband = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Scheduled-user to subband pairing. Pairs are kept sorted by subband.
/// Exclusivity (C4/C5) is enforced at construction.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Pair> pairs);

  std::span<const Pair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  /// Scheduled users, ascending.
  std::vector<UserId> scheduled() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// Sensing bits per scheduled user.
struct Allocation {
  std::map<UserId, double> loads;
  double total() const;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct Diagnostics {
  std::size_t swap_passes = 0;
  std::size_t accepted_swaps = 0;
  std::size_t evaluations = 0;  // matching calls
};

struct SolutionReport {
  double objective = 0.0;
  double latency_term = 0.0;  // w * Norm(t_over, eta)
  std::size_t coverage_gap = 0;
  double t_over = 0.0;        // seconds
  Assignment assignment;
  Allocation allocation;
  Diagnostics diagnostics;
};

double sensing_latency(const UserProfile& user, double load);

/// Shannon rate of `user` alone on `subband`.
double transmission_rate(const UserProfile& user, SubbandIndex subband,
                         const ProblemInstance& instance);

/// End-to-end seconds per sensed bit, 1/v + 1/R.
double per_bit_cost(const UserProfile& user, SubbandIndex subband,
                    const ProblemInstance& instance);

double total_latency(const UserProfile& user, SubbandIndex subband, double load,
                     const ProblemInstance& instance);

/// Slowest scheduled user's completion time; 0 for an empty assignment.
double overall_latency(const Assignment& assignment, const Allocation& allocation,
                       const ProblemInstance& instance);

/// Distinct subareas among scheduled users.
std::size_t coverage_metric(const Assignment& assignment,
                            const ProblemInstance& instance);
std::size_t coverage_metric(std::span<const UserId> scheduled,
                            const ProblemInstance& instance);

/// Logistic squashing of a latency into [0, 1).
double normalize(double x, double scale);

/// Checks C1-C5; throws ConstraintViolation naming the first violated one.
void validate_solution(const Assignment& assignment, const Allocation& allocation,
                       const ProblemInstance& instance);

/// Validates, then scores under the instance weight.
SolutionReport objective(const Assignment& assignment, const Allocation& allocation,
                         const ProblemInstance& instance);

/// Same, scored under an explicit weight instead of the instance's.
SolutionReport objective(const Assignment& assignment, const Allocation& allocation,
                         const ProblemInstance& instance, double weight);

}  // namespace mcs
