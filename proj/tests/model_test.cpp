#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mcs/model.hpp"
#include "test_support.hpp"

namespace mcs {
namespace {

using testing::instance_from_gains;
using testing::kNoise;
using testing::make_user;

// Two subbands of 1 MHz, gain 1e-9 everywhere, noise -174 dBm/Hz.
ProblemInstance radio_instance(double weight = 0.5) {
  std::vector<UserProfile> users = {
      make_user(0, 1e6, 0.1, 0, {1e-9, 1e-9}),
      make_user(1, 1e6, 0.2, 1, {1e-9, 1e-9}),
      make_user(2, 2e5, 0.1, 1, {1e-9, 1e-9}),
  };
  return ProblemInstance(std::move(users), {1e6, 1e6}, kNoise, 1e4, 3, weight, 1e6);
}

TEST(SensingLatency, BitsOverRate) {
  const UserProfile u = make_user(0, 1e5, 0.1, 0, {1.0});
  EXPECT_DOUBLE_EQ(sensing_latency(u, 1e4), 0.1);
  EXPECT_EQ(sensing_latency(u, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(sensing_latency(make_user(0, 1e6, 0.1, 0, {1.0}), 5e3), 5e-3);
}

TEST(TransmissionRate, ShannonAtReferenceLink) {
  const ProblemInstance inst = radio_instance();
  EXPECT_NEAR(transmission_rate(inst.user(0), 0, inst), 14616541.051085232, 14616541.05 * 1e-12);
  EXPECT_NEAR(transmission_rate(inst.user(1), 1, inst), 15616512.334580613, 15616512.33 * 1e-12);
}

TEST(TransmissionRate, UnitSnrGivesBandwidth) {
  // P*g / (N0*B) = 1 makes log2(1 + SNR) exactly 1.
  std::vector<UserProfile> users = {make_user(0, 1e6, 1.0, 0, {1.0}),
                                    make_user(1, 1e6, 1.0, 0, {1.0})};
  const ProblemInstance inst(std::move(users), {2e6}, 0.5e-6, 1e4, 1, 0.5, 1e6);
  EXPECT_NEAR(transmission_rate(inst.user(0), 0, inst), 2e6, 2e6 * 1e-15);
}

TEST(TotalLatency, ReferenceValues) {
  const ProblemInstance inst = radio_instance();
  EXPECT_NEAR(total_latency(inst.user(0), 0, 1e4, inst), 0.010684156392750496, 1e-15);
  // d = 1e4 at v = 1e5 with an effectively instantaneous uplink is 0.1 s of sensing.
  EXPECT_DOUBLE_EQ(sensing_latency(make_user(0, 1e5, 0.1, 0, {1.0}), 1e4), 0.1);
}

TEST(TotalLatency, EqualSensingAndLinkRates) {
  // B = 1e5 Hz at unit SNR gives R = 1e5 bit/s.
  std::vector<UserProfile> users = {make_user(0, 1e5, 1.0, 0, {1.0}),
                                    make_user(1, 1e5, 1.0, 0, {1.0})};
  const ProblemInstance inst(std::move(users), {1e5}, 1e-5, 1e4, 1, 0.5, 1e6);
  EXPECT_NEAR(total_latency(inst.user(0), 0, 1e4, inst), 0.2, 1e-15);
  EXPECT_EQ(total_latency(inst.user(0), 0, 0.0, inst), 0.0);
}

TEST(TotalLatency, LinearInLoad) {
  const ProblemInstance inst = radio_instance();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> bits(0.0, 1e4);
  for (int i = 0; i < 200; ++i) {
    const double a = bits(rng), b = bits(rng);
    const double lhs = total_latency(inst.user(2), 1, a + b, inst);
    const double rhs = total_latency(inst.user(2), 1, a, inst) + total_latency(inst.user(2), 1, b, inst);
    EXPECT_NEAR(lhs, rhs, 1e-14 * std::max(1.0, lhs));
    EXPECT_NEAR(total_latency(inst.user(2), 1, 2.0 * a, inst),
                2.0 * total_latency(inst.user(2), 1, a, inst), 1e-15);
  }
}

TEST(OverallLatency, MaxOverScheduledUsers) {
  const ProblemInstance inst = radio_instance();
  const Assignment a({{0, 0}, {2, 1}});
  Allocation alloc;
  alloc.loads = {{0, 6000.0}, {2, 4000.0}};
  const double t0 = total_latency(inst.user(0), 0, 6000.0, inst);
  const double t2 = total_latency(inst.user(2), 1, 4000.0, inst);
  EXPECT_EQ(overall_latency(a, alloc, inst), std::max(t0, t2));
  EXPECT_EQ(overall_latency(Assignment{}, Allocation{}, inst), 0.0);
}

TEST(CoverageMetric, CountsDistinctSubareas) {
  const ProblemInstance inst = instance_from_gains(
      {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}, 5);
  // Users sit in subareas 0..4; relabel through a custom instance for duplicates.
  std::vector<UserProfile> users;
  const std::vector<std::size_t> areas = {0, 0, 1, 4, 2};
  for (std::size_t k = 0; k < areas.size(); ++k)
    users.push_back(make_user(k, 1e5, 0.1, areas[k], {1, 1, 1, 1}));
  const ProblemInstance dup(std::move(users), {1, 1, 1, 1}, 1.0, 10.0, 5, 0.5, 1.0);
  const std::vector<UserId> four = {0, 1, 2, 3};
  EXPECT_EQ(coverage_metric(four, dup), 3u);
  EXPECT_EQ(coverage_metric(std::vector<UserId>{}, dup), 0u);
  const std::vector<UserId> distinct = {0, 2, 3, 4};
  EXPECT_EQ(coverage_metric(distinct, dup), 4u);
  EXPECT_EQ(coverage_metric(Assignment({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), dup), 3u);
  EXPECT_EQ(coverage_metric(four, inst), 4u);
}

TEST(Normalize, AnchorPoints) {
  EXPECT_EQ(normalize(0.0, 1e6), 0.0);
  EXPECT_NEAR(normalize(1e6, 1e6), 0.24491866240370913, 1e-15);
  EXPECT_NEAR(normalize(2e6 * std::log(3.0), 1e6), 0.5, 1e-15);
  // Same value as the logistic form 2/(1+exp(-x/(2 eta))) - 1.
  EXPECT_NEAR(normalize(2e6, 1e6), 2.0 / (1.0 + std::exp(-1.0)) - 1.0, 1e-15);
}

TEST(Normalize, BoundedAndMonotone) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(0.0, 4e7);
  for (int i = 0; i < 2000; ++i) {
    const double a = x(rng), b = x(rng);
    const double na = normalize(a, 1e6), nb = normalize(b, 1e6);
    EXPECT_GE(na, 0.0);
    EXPECT_LT(na, 1.0);
    if (a < b) EXPECT_LE(na, nb);
  }
}

TEST(Objective, WeightEndpoints) {
  const ProblemInstance base = radio_instance();
  const Assignment a({{0, 0}, {1, 1}});
  Allocation alloc;
  alloc.loads = {{0, 5000.0}, {1, 5000.0}};
  const double t = overall_latency(a, alloc, base);

  const SolutionReport w1 = objective(a, alloc, base.with_weight(1.0));
  EXPECT_EQ(w1.objective, normalize(t, 1e6));
  const SolutionReport w0 = objective(a, alloc, base.with_weight(0.0));
  EXPECT_EQ(w0.objective, 1.0);  // 3 subareas, 2 covered
  EXPECT_EQ(w0.coverage_gap, 1u);

  const SolutionReport half = objective(a, alloc, base);
  EXPECT_EQ(half.latency_term, 0.5 * normalize(t, 1e6));
  EXPECT_EQ(half.objective, half.latency_term + 0.5);
  EXPECT_EQ(half.t_over, t);
  EXPECT_EQ(objective(a, alloc, base, 1.0).objective, w1.objective);
}

TEST(ValidateSolution, NamesTaskCoverage) {
  const ProblemInstance inst = radio_instance();
  Allocation alloc;
  alloc.loads = {{0, 4000.0}, {1, 5000.0}};
  try {
    validate_solution(Assignment({{0, 0}, {1, 1}}), alloc, inst);
    FAIL() << "expected a violation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.which(), Constraint::kTaskCoverage);
    EXPECT_NE(std::string(e.what()).find("C1"), std::string::npos);
  }
}

TEST(ValidateSolution, NamesLoadOnUnscheduledUser) {
  const ProblemInstance inst = radio_instance();
  Allocation alloc;
  alloc.loads = {{0, 5000.0}, {1, 5000.0}, {2, 1.0}};
  try {
    validate_solution(Assignment({{0, 0}, {1, 1}}), alloc, inst);
    FAIL() << "expected a violation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.which(), Constraint::kLoadOnlyScheduled);
  }
  alloc.loads[2] = 0.0;  // an explicit zero is allowed
  EXPECT_NO_THROW(validate_solution(Assignment({{0, 0}, {1, 1}}), alloc, inst));
}

TEST(ValidateSolution, NamesLoadBounds) {
  const ProblemInstance inst = radio_instance();
  Allocation alloc;
  alloc.loads = {{0, 11000.0}, {1, -1000.0}};
  try {
    validate_solution(Assignment({{0, 0}, {1, 1}}), alloc, inst);
    FAIL() << "expected a violation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.which(), Constraint::kLoadBounds);
  }
}

TEST(Assignment, RejectsSharedSubband) {
  try {
    Assignment({{0, 1}, {2, 1}});
    FAIL() << "expected a violation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.which(), Constraint::kSubbandExclusive);
    EXPECT_NE(std::string(e.what()).find("C4"), std::string::npos);
  }
}

TEST(Assignment, RejectsUserOnTwoSubbands) {
  try {
    Assignment({{3, 0}, {3, 1}});
    FAIL() << "expected a violation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.which(), Constraint::kUserExclusive);
  }
}

TEST(Assignment, SortedBySubband) {
  const Assignment a({{4, 2}, {1, 0}, {0, 1}});
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.pairs()[0], (Pair{1, 0}));
  EXPECT_EQ(a.pairs()[2], (Pair{4, 2}));
  EXPECT_EQ(a.scheduled(), (std::vector<UserId>{0, 1, 4}));
}

TEST(ValidateSolution, UnknownIndicesAreOutOfRange) {
  const ProblemInstance inst = radio_instance();
  Allocation alloc;
  alloc.loads = {{0, 5000.0}, {7, 5000.0}};
  EXPECT_THROW(validate_solution(Assignment({{0, 0}, {7, 1}}), alloc, inst), std::out_of_range);
  EXPECT_THROW(validate_solution(Assignment({{0, 0}, {1, 5}}), alloc, inst), std::out_of_range);
}

TEST(ProblemInstance, RejectsTooFewUsers) {
  std::vector<UserProfile> users = {make_user(0, 1e5, 0.1, 0, {1, 1}),
                                    make_user(1, 1e5, 0.1, 0, {1, 1})};
  try {
    ProblemInstance(users, {1e6, 1e6}, kNoise, 1e4, 1, 0.5, 1e6);
    FAIL() << "expected InvalidInstance";
  } catch (const InvalidInstance& e) {
    EXPECT_NE(std::string(e.what()).find("K > N"), std::string::npos);
  }
}

TEST(ProblemInstance, RejectsBrokenFields) {
  auto users = [](std::vector<double> gains, std::size_t area = 0) {
    return std::vector<UserProfile>{make_user(0, 1e5, 0.1, area, gains),
                                    make_user(1, 1e5, 0.1, 0, {1.0})};
  };
  EXPECT_THROW(ProblemInstance(users({1.0}), {1e6}, kNoise, 1e4, 1, 1.5, 1e6), InvalidInstance);
  EXPECT_THROW(ProblemInstance(users({1.0}), {1e6}, kNoise, 0.0, 1, 0.5, 1e6), InvalidInstance);
  EXPECT_THROW(ProblemInstance(users({1.0}), {1e6}, kNoise, 1e4, 1, 0.5, 0.0), InvalidInstance);
  EXPECT_THROW(ProblemInstance(users({1.0, 2.0}), {1e6}, kNoise, 1e4, 1, 0.5, 1e6),
               InvalidInstance);
  EXPECT_THROW(ProblemInstance(users({0.0}), {1e6}, kNoise, 1e4, 1, 0.5, 1e6), InvalidInstance);
  EXPECT_THROW(ProblemInstance(users({1.0}, 3), {1e6}, kNoise, 1e4, 2, 0.5, 1e6),
               InvalidInstance);
  EXPECT_NO_THROW(ProblemInstance(users({1.0}), {1e6}, kNoise, 1e4, 1, 0.5, 1e6));
}

}  // namespace
}  // namespace mcs
