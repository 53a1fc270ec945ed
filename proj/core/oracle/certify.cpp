#include "mcs/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "mcs/baselines.hpp"
#include "mcs/channel.hpp"
#include "mcs/matching.hpp"
#include "mcs/oracle.hpp"
#include "mcs/scheduler.hpp"
#include "mcs/task_allocation.hpp"

namespace mcs::certify {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CheckResult finish(std::string name, std::size_t failures, std::ostringstream& detail) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = failures == 0;
  r.detail = detail.str();
  return r;
}

WeightMatrix random_matrix(std::mt19937_64& gen, std::size_t n, bool integral) {
  std::vector<double> entries(n * n);
  if (integral) {
    std::uniform_int_distribution<int> pick(1, 3);
    for (double& e : entries) e = pick(gen);
  } else {
    std::uniform_real_distribution<double> pick(0.01, 10.0);
    for (double& e : entries) e = pick(gen);
  }
  std::vector<UserId> users(n);
  for (std::size_t c = 0; c < n; ++c) users[c] = c;
  return WeightMatrix(n, std::move(entries), std::move(users));
}

ScenarioConfig small_config(std::uint64_t seed) {
  ScenarioConfig config;
  config.n_users = 8;
  config.n_subbands = 4;
  config.n_subareas = 5;
  config.master_seed = seed;
  return config;
}

}  // namespace

CheckResult matching_optimality(std::uint64_t seed, std::size_t trials, std::size_t n,
                                double budget_seconds) {
  std::mt19937_64 gen(seed);
  std::size_t failures = 0;
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < trials; ++t) {
    const WeightMatrix w = random_matrix(gen, n, false);
    const double fast = matching_total(hungarian_assign(w), w);
    const double brute = oracle::exhaustive_matching(w).total;
    if (fast != brute) {
      if (failures == 0) detail << "trial " << t << ": hungarian " << fast << " vs scan " << brute << "; ";
      ++failures;
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= budget_seconds) ++failures;
  detail << trials << " matrices " << n << "x" << n << ", " << failures
         << " mismatches or overruns, " << elapsed << " s";
  return finish("matching optimality", failures, detail);
}

CheckResult reduction_agreement(std::uint64_t seed, std::size_t trials, std::size_t max_n) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::size_t failures = 0;
  std::ostringstream detail;
  for (std::size_t t = 0; t < trials; ++t) {
    // Every other matrix has small integer entries so ties are common.
    const WeightMatrix w = random_matrix(gen, size(gen), t % 2 == 1);
    const Assignment fast = hungarian_assign(w);
    const Assignment slow = hungarian_reduce(w);
    if (!(fast == slow) || matching_total(fast, w) != matching_total(slow, w)) {
      if (failures == 0) detail << "trial " << t << " (N=" << w.size() << ") disagrees; ";
      ++failures;
    }
    if (w.size() <= oracle::kMaxMatchingSize) {
      const auto brute = oracle::exhaustive_matching(w);
      if (matching_total(fast, w) != brute.total) ++failures;
    }
  }
  detail << trials << " matrices, " << failures << " disagreements";
  return finish("hungarian fast path vs reduction", failures, detail);
}

CheckResult split_certification(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  std::uniform_real_distribution<double> log_alpha(-7.0, -4.0);
  std::uniform_real_distribution<double> task(1e3, 1e4);
  std::size_t failures = 0;
  std::size_t grid_checked = 0;
  double worst_equalization = 0.0;
  double worst_coverage = 0.0;
  std::ostringstream detail;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = size(gen);
    std::vector<UserCost> costs;
    for (std::size_t k = 0; k < n; ++k) costs.push_back({k, std::pow(10.0, log_alpha(gen))});
    const AlphaVector alphas(costs);
    const double bits = task(gen);
    const Allocation split = optimal_split(alphas, bits);

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const UserCost& c : alphas.costs()) {
      const double finish_time = c.alpha * split.loads.at(c.user);
      lo = std::min(lo, finish_time);
      hi = std::max(hi, finish_time);
    }
    const double equalization = (hi - lo) / hi;
    const double coverage = std::abs(split.total() - bits) / bits;
    worst_equalization = std::max(worst_equalization, equalization);
    worst_coverage = std::max(worst_coverage, coverage);
    bool ok = equalization <= 1e-9 && coverage <= 1e-12;

    if (n <= oracle::kMaxGridDimension) {
      ++grid_checked;
      const auto grid = oracle::grid_split_check(alphas, bits, n == 2 ? 4001 : 401);
      const double best = minmax_value(alphas, bits);
      const double excess = grid.value - best;
      ok = ok && excess >= -1e-12 * best && excess < grid.lipschitz_bound;
    }
    if (!ok) {
      if (failures == 0) detail << "trial " << t << " (n=" << n << ") failed; ";
      ++failures;
    }
  }
  detail << trials << " vectors (" << grid_checked << " grid-checked), worst equalization "
         << worst_equalization << ", worst coverage error " << worst_coverage;
  return finish("closed-form task split", failures, detail);
}

CheckResult latency_consistency(std::uint64_t seed, std::size_t trials) {
  ScenarioConfig config;
  config.master_seed = seed;
  std::mt19937_64 gen(seed ^ 0x5eedull);
  std::size_t failures = 0;
  double worst = 0.0;
  std::ostringstream detail;
  for (std::size_t t = 0; t < trials; ++t) {
    const ProblemInstance instance = generate_instance(config, t);
    std::vector<UserId> users(instance.n_users());
    std::iota(users.begin(), users.end(), UserId{0});
    std::shuffle(users.begin(), users.end(), gen);
    users.resize(instance.n_subbands());

    const WeightMatrix w = build_weight_matrix(users, instance);
    const Assignment pairing = hungarian_assign(w);
    const double via_matching = matching_latency(pairing, w, instance.task_bits());
    const Allocation split =
        optimal_split(AlphaVector::from_assignment(pairing, instance), instance.task_bits());
    const double via_model = overall_latency(pairing, split, instance);
    const double diff = rel_diff(via_matching, via_model);
    worst = std::max(worst, diff);
    if (diff > 1e-12) ++failures;
  }
  detail << trials << " scheduled sets, worst relative difference " << worst;
  return finish("matching latency vs split latency", failures, detail);
}

SwapCertification swap_local_optimality(std::uint64_t seed, std::size_t trials) {
  const ScenarioConfig config = small_config(seed);
  std::size_t failures = 0;
  std::size_t equal = 0;
  double gap_sum = 0.0;
  std::ostringstream detail;
  for (std::size_t t = 0; t < trials; ++t) {
    const ProblemInstance instance = generate_instance(config, t);
    const SolutionReport found = swap_optimize(instance);

    const std::vector<UserId> scheduled = found.assignment.scheduled();
    bool improvable = false;
    for (UserId out : scheduled) {
      for (UserId in = 0; in < instance.n_users(); ++in) {
        if (std::binary_search(scheduled.begin(), scheduled.end(), in)) continue;
        std::vector<UserId> candidate = scheduled;
        std::replace(candidate.begin(), candidate.end(), out, in);
        if (evaluate_set(candidate, instance).objective <
            found.objective - kImprovementThreshold) {
          improvable = true;
        }
      }
    }
    const SolutionReport best = oracle::exhaustive_joint(instance);
    const bool below_optimum = found.objective < best.objective - kImprovementThreshold;
    if (improvable || below_optimum) {
      if (failures == 0)
        detail << "instance " << t << (improvable ? " admits an improving swap; " : " beats the oracle; ");
      ++failures;
    }
    const double gap = best.objective > 0.0 ? (found.objective - best.objective) / best.objective
                                            : found.objective - best.objective;
    gap_sum += std::max(gap, 0.0);
    if (gap <= 1e-12) ++equal;
  }
  SwapCertification out;
  out.mean_relative_gap = trials ? gap_sum / static_cast<double>(trials) : 0.0;
  out.equality_rate = trials ? static_cast<double>(equal) / static_cast<double>(trials) : 0.0;
  detail << trials << " instances (K=8, N=4, M=5), global optimum reached in "
         << out.equality_rate * 100.0 << "%, mean relative gap " << out.mean_relative_gap;
  out.result = finish("swap local optimality", failures, detail);
  return out;
}

CheckResult normalization(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> log_eta(0.0, 9.0);
  std::size_t failures = 0;
  std::ostringstream detail;
  // Above ~75 eta the squashed value rounds to 1.0 in double precision.
  const double eta = std::pow(10.0, log_eta(gen));
  std::uniform_real_distribution<double> latency(0.0, 40.0 * eta);
  std::vector<double> xs(trials);
  for (double& x : xs) x = latency(gen);
  std::sort(xs.begin(), xs.end());
  double prev_x = -1.0, prev_y = -1.0;
  for (double x : xs) {
    const double y = normalize(x, eta);
    if (!(y >= 0.0 && y < 1.0)) ++failures;
    if (x > prev_x && !(y > prev_y)) ++failures;
    prev_x = x;
    prev_y = y;
  }
  if (normalize(0.0, eta) != 0.0) ++failures;
  for (int i = 0; i < 100; ++i) {
    const double s = std::pow(10.0, log_eta(gen));
    if (std::abs(normalize(2.0 * s * std::log(3.0), s) - 0.5) > 1e-12) ++failures;
  }
  detail << trials << " latencies at eta=" << eta << ", " << failures << " violations";
  return finish("latency normalization", failures, detail);
}

CheckResult generator_and_baselines(std::uint64_t seed, std::size_t trials) {
  ScenarioConfig config;
  config.master_seed = seed;
  ScenarioConfig narrow = config;
  narrow.n_subbands = 6;
  std::size_t failures = 0;
  std::ostringstream detail;
  for (std::size_t t = 0; t < trials; ++t) {
    const ProblemInstance a = generate_instance(config, t);
    if (!(a == generate_instance(config, t))) ++failures;
    const ProblemInstance b = generate_instance(narrow, t);
    for (UserId k = 0; k < a.n_users(); ++k) {
      const UserProfile& wide_user = a.user(k);
      const UserProfile& narrow_user = b.user(k);
      const bool same = wide_user.sensing_rate == narrow_user.sensing_rate &&
                        wide_user.tx_power == narrow_user.tx_power &&
                        wide_user.subarea == narrow_user.subarea &&
                        std::equal(narrow_user.gains.begin(), narrow_user.gains.end(),
                                   wide_user.gains.begin());
      if (!same) ++failures;
    }
    RngStream shuffle(seed, t, StreamTag::kSubbandShuffle);
    const SolutionReport reports[] = {benchmark1(a), benchmark2(a, shuffle), benchmark3(a)};
    for (const SolutionReport& r : reports) {
      try {
        validate_solution(r.assignment, r.allocation, a);
      } catch (const std::exception&) {
        ++failures;
      }
    }
    for (const SolutionReport* r : {&reports[1], &reports[2]}) {
      if (rel_diff(r->allocation.total(), a.task_bits()) > 1e-12) ++failures;
    }
  }
  detail << trials << " generated instances, " << failures << " violations";
  return finish("generator determinism and baseline feasibility", failures, detail);
}

std::vector<CheckResult> oracle_suite(std::uint64_t seed) {
  return {matching_optimality(seed), reduction_agreement(seed), split_certification(seed),
          latency_consistency(seed), swap_local_optimality(seed).result};
}

std::vector<CheckResult> selftest_suite(std::uint64_t seed) {
  std::vector<CheckResult> out = oracle_suite(seed);
  out.push_back(normalization(seed));
  out.push_back(generator_and_baselines(seed));
  return out;
}

}  // namespace mcs::certify
