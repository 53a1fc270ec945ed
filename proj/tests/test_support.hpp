#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcs/channel.hpp"
#include "mcs/model.hpp"

namespace mcs::testing {

inline constexpr double kNoise = 3.981071705534986e-21;  // -174 dBm/Hz in W/Hz

inline std::string fixture(const std::string& name) {
  return std::string(MCS_FIXTURE_DIR) + "/" + name;
}

inline UserProfile make_user(UserId id, double rate, double power, std::size_t subarea,
                             std::vector<double> gains) {
  return UserProfile{id, rate, power, subarea, std::move(gains)};
}

/// Users with the given gain rows; rates, powers and subareas vary by index.
inline ProblemInstance instance_from_gains(const std::vector<std::vector<double>>& gains,
                                           std::size_t n_subareas = 0, double weight = 0.5,
                                           double task_bits = 5000.0) {
  std::vector<UserProfile> users;
  const std::size_t m = n_subareas ? n_subareas : gains.size();
  for (std::size_t k = 0; k < gains.size(); ++k) {
    users.push_back(make_user(k, 5e5, 0.1, k % m, gains[k]));
  }
  const std::size_t n = gains.front().size();
  return ProblemInstance(std::move(users), std::vector<double>(n, 1e6), kNoise, task_bits, m,
                         weight, 1e6);
}

inline ScenarioConfig small_config(std::size_t k, std::size_t n, std::size_t m,
                                   std::uint64_t seed, double weight = 0.5) {
  ScenarioConfig c;
  c.n_users = k;
  c.n_subbands = n;
  c.n_subareas = m;
  c.weight = weight;
  c.master_seed = seed;
  return c;
}

/// Random strictly positive weights in [lo, hi).
inline std::vector<std::vector<double>> random_rows(std::mt19937_64& rng, std::size_t n,
                                                   double lo = 0.5, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (auto& row : rows)
    for (double& x : row) x = dist(rng);
  return rows;
}

}  // namespace mcs::testing
