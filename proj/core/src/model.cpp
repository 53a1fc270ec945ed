#include "mcs/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mcs {

namespace {

constexpr double kTaskCoverageRelTol = 1e-9;

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os << what << " = " << value;
  return os.str();
}

}  // namespace

std::string to_string(Constraint c) {
  switch (c) {
    case Constraint::kTaskCoverage:
      return "C1 (loads must sum to at least the task size)";
    case Constraint::kLoadOnlyScheduled:
      return "C2 (only scheduled users may carry load)";
    case Constraint::kLoadBounds:
      return "C3 (each load must lie in [0, task size])";
    case Constraint::kSubbandExclusive:
      return "C4 (each subband serves at most one user)";
    case Constraint::kUserExclusive:
      return "C5 (each user holds at most one subband)";
  }
  return "unknown constraint";
}

ConstraintViolation::ConstraintViolation(Constraint which, const std::string& detail)
    : std::runtime_error("constraint " + to_string(which) + " violated: " + detail),
      which_(which) {}

ProblemInstance::ProblemInstance(std::vector<UserProfile> users,
                                 std::vector<double> bandwidths, double noise_density,
                                 double task_bits, std::size_t n_subareas,
                                 double weight, double scale)
    : users_(std::move(users)),
      bandwidths_(std::move(bandwidths)),
      noise_density_(noise_density),
      task_bits_(task_bits),
      n_subareas_(n_subareas),
      weight_(weight),
      scale_(scale) {
  const std::size_t n = bandwidths_.size();
  if (n < 1) throw InvalidInstance("at least one subband is required");
  if (users_.size() <= n) {
    throw InvalidInstance("K > N violated: " + std::to_string(users_.size()) +
                          " users for " + std::to_string(n) + " subbands");
  }
  if (n_subareas_ < 1) throw InvalidInstance("at least one subarea is required");
  if (!(task_bits_ > 0.0) || !std::isfinite(task_bits_))
    throw InvalidInstance(describe("task_bits must be positive; got", task_bits_));
  if (!(weight_ >= 0.0 && weight_ <= 1.0))
    throw InvalidInstance(describe("weight must lie in [0,1]; got", weight_));
  if (!(scale_ > 0.0) || !std::isfinite(scale_))
    throw InvalidInstance(describe("scale must be positive; got", scale_));
  if (!(noise_density_ > 0.0))
    throw InvalidInstance(describe("noise_density must be positive; got", noise_density_));
  for (double b : bandwidths_) {
    if (!(b > 0.0) || !std::isfinite(b))
      throw InvalidInstance(describe("bandwidth must be positive; got", b));
  }
  for (std::size_t k = 0; k < users_.size(); ++k) {
    const UserProfile& u = users_[k];
    const std::string who = "user " + std::to_string(k) + ": ";
    if (u.id != k) throw InvalidInstance(who + "ids must be dense and ordered");
    if (!(u.sensing_rate > 0.0) || !std::isfinite(u.sensing_rate))
      throw InvalidInstance(who + describe("sensing_rate", u.sensing_rate));
    if (!(u.tx_power > 0.0) || !std::isfinite(u.tx_power))
      throw InvalidInstance(who + describe("tx_power", u.tx_power));
    if (u.subarea >= n_subareas_)
      throw InvalidInstance(who + "subarea index out of range");
    if (u.gains.size() != n)
      throw InvalidInstance(who + "gains must have one entry per subband");
    for (double g : u.gains) {
      if (!(g > 0.0) || !std::isfinite(g))
        throw InvalidInstance(who + describe("gain", g));
    }
  }
}

ProblemInstance ProblemInstance::with_weight(double weight) const {
  return ProblemInstance(users_, bandwidths_, noise_density_, task_bits_, n_subareas_,
                         weight, scale_);
}

Assignment::Assignment(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
    return a.subband != b.subband ? a.subband < b.subband : a.user < b.user;
  });
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].subband == pairs_[i - 1].subband) {
      throw ConstraintViolation(Constraint::kSubbandExclusive,
                                "subband " + std::to_string(pairs_[i].subband) +
                                    " assigned twice");
    }
  }
  std::vector<UserId> users = scheduled();
  auto dup = std::adjacent_find(users.begin(), users.end());
  if (dup != users.end()) {
    throw ConstraintViolation(Constraint::kUserExclusive,
                              "user " + std::to_string(*dup) + " holds two subbands");
  }
}

std::vector<UserId> Assignment::scheduled() const {
  std::vector<UserId> users;
  users.reserve(pairs_.size());
  for (const Pair& p : pairs_) users.push_back(p.user);
  std::sort(users.begin(), users.end());
  return users;
}

double Allocation::total() const {
  double sum = 0.0;
  for (const auto& [user, bits] : loads) sum += bits;
  return sum;
}

double sensing_latency(const UserProfile& user, double load) {
  return load / user.sensing_rate;
}

double transmission_rate(const UserProfile& user, SubbandIndex subband,
                         const ProblemInstance& instance) {
  const double b = instance.bandwidth(subband);
  const double snr = user.tx_power * user.gains.at(subband) / (instance.noise_density() * b);
  // log1p keeps precision when the SNR is small.
  return b * std::log1p(snr) / std::numbers::ln2;
}

double per_bit_cost(const UserProfile& user, SubbandIndex subband,
                    const ProblemInstance& instance) {
  return 1.0 / user.sensing_rate + 1.0 / transmission_rate(user, subband, instance);
}

double total_latency(const UserProfile& user, SubbandIndex subband, double load,
                     const ProblemInstance& instance) {
  return load * per_bit_cost(user, subband, instance);
}

double overall_latency(const Assignment& assignment, const Allocation& allocation,
                       const ProblemInstance& instance) {
  double worst = 0.0;
  for (const Pair& p : assignment.pairs()) {
    const double load = allocation.loads.at(p.user);
    worst = std::max(worst, total_latency(instance.user(p.user), p.subband, load, instance));
  }
  return worst;
}

std::size_t coverage_metric(std::span<const UserId> scheduled,
                            const ProblemInstance& instance) {
  std::vector<bool> seen(instance.n_subareas(), false);
  std::size_t distinct = 0;
  for (UserId k : scheduled) {
    const std::size_t area = instance.user(k).subarea;
    if (!seen[area]) {
      seen[area] = true;
      ++distinct;
    }
  }
  return distinct;
}

std::size_t coverage_metric(const Assignment& assignment,
                            const ProblemInstance& instance) {
  const std::vector<UserId> users = assignment.scheduled();
  return coverage_metric(users, instance);
}

double normalize(double x, double scale) {
  // 2/(1+exp(-x/(2s))) - 1 == tanh(x/(4s)); the tanh form has no cancellation
  // for x << s.
  return std::tanh(x / (4.0 * scale));
}

void validate_solution(const Assignment& assignment, const Allocation& allocation,
                       const ProblemInstance& instance) {
  for (const Pair& p : assignment.pairs()) {
    if (p.user >= instance.n_users())
      throw std::out_of_range("assignment names unknown user " + std::to_string(p.user));
    if (p.subband >= instance.n_subbands())
      throw std::out_of_range("assignment names unknown subband " +
                              std::to_string(p.subband));
  }
  const std::vector<UserId> scheduled = assignment.scheduled();
  for (const auto& [user, bits] : allocation.loads) {
    if (!std::binary_search(scheduled.begin(), scheduled.end(), user) && bits != 0.0) {
      throw ConstraintViolation(Constraint::kLoadOnlyScheduled,
                                "unscheduled user " + std::to_string(user) +
                                    " carries " + std::to_string(bits) + " bits");
    }
  }
  for (UserId k : scheduled) {
    if (!allocation.loads.contains(k)) {
      throw std::invalid_argument("allocation has no load for scheduled user " +
                                  std::to_string(k));
    }
  }
  const double task = instance.task_bits();
  for (const auto& [user, bits] : allocation.loads) {
    if (!(bits >= 0.0 && bits <= task * (1.0 + kTaskCoverageRelTol))) {
      throw ConstraintViolation(Constraint::kLoadBounds,
                                "user " + std::to_string(user) + " load " +
                                    std::to_string(bits));
    }
  }
  const double total = allocation.total();
  if (total < task * (1.0 - kTaskCoverageRelTol)) {
    throw ConstraintViolation(Constraint::kTaskCoverage,
                              describe("total load", total) + " below task size " +
                                  std::to_string(task));
  }
}

SolutionReport objective(const Assignment& assignment, const Allocation& allocation,
                         const ProblemInstance& instance) {
  return objective(assignment, allocation, instance, instance.weight());
}

SolutionReport objective(const Assignment& assignment, const Allocation& allocation,
                         const ProblemInstance& instance, double weight) {
  validate_solution(assignment, allocation, instance);
  SolutionReport report;
  report.t_over = overall_latency(assignment, allocation, instance);
  report.coverage_gap = instance.n_subareas() - coverage_metric(assignment, instance);
  report.latency_term = weight * normalize(report.t_over, instance.scale());
  report.objective =
      report.latency_term + (1.0 - weight) * static_cast<double>(report.coverage_gap);
  report.assignment = assignment;
  report.allocation = allocation;
  return report;
}

}  // namespace mcs
