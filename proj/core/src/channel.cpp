#include "mcs/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInstance("invalid scenario config: " + what);
}

void require_range(double lo, double hi, const std::string& name) {
  require(lo > 0.0 && hi >= lo && std::isfinite(hi),
          name + " range must be positive and ordered");
}

}  // namespace

void ScenarioConfig::validate() const {
  require(n_subbands >= 1, "n_subbands must be at least 1");
  require(n_users > n_subbands, "K > N violated (n_users = " + std::to_string(n_users) +
                                    ", n_subbands = " + std::to_string(n_subbands) + ")");
  require(n_subareas >= 1, "n_subareas must be at least 1");
  require(weight >= 0.0 && weight <= 1.0, "weight must lie in [0,1]");
  require(bandwidth_hz > 0.0, "bandwidth_hz must be positive");
  require(std::isfinite(noise_density_dbm_hz), "noise_density_dbm_hz must be finite");
  require_range(dist_min_m, dist_max_m, "distance");
  require(shadow_sigma_db >= 0.0, "shadow_sigma_db must be nonnegative");
  require_range(rate_min, rate_max, "sensing rate");
  require_range(power_min, power_max, "transmit power");
  require_range(task_min, task_max, "task size");
  require(eta > 0.0, "eta must be positive");
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t sample_index, StreamTag tag,
                     std::uint64_t lane) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(sample_index),
                    static_cast<std::uint32_t>(sample_index >> 32),
                    static_cast<std::uint32_t>(tag),
                    static_cast<std::uint32_t>(lane),
                    static_cast<std::uint32_t>(lane >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RngStream::normal(double mean, double stddev) {
  return std::normal_distribution<double>(mean, stddev)(engine_);
}

double RngStream::exponential_unit() {
  return std::exponential_distribution<double>(1.0)(engine_);
}

std::size_t RngStream::uniform_index(std::size_t count) {
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(engine_);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double path_loss_db(double distance_km) {
  if (!(distance_km > 0.0)) throw std::invalid_argument("path loss needs a positive distance");
  return 128.1 + 37.6 * std::log10(distance_km);
}

double link_gain(double path_loss_db, double shadow_db, double fading_power) {
  return std::pow(10.0, -(path_loss_db + shadow_db) / 10.0) * fading_power;
}

std::vector<double> draw_user_gains(double distance_km, std::size_t n_subbands,
                                    double shadow_sigma_db, RngStream& shadowing,
                                    RngStream& fading) {
  const double loss = path_loss_db(distance_km);
  const double shadow = shadow_sigma_db > 0.0 ? shadowing.normal(0.0, shadow_sigma_db) : 0.0;
  std::vector<double> gains(n_subbands);
  for (double& g : gains) {
    double power = fading.exponential_unit();
    // Exponential draws of exactly 0 are possible in principle; gains must stay positive.
    while (!(power > 0.0)) power = fading.exponential_unit();
    g = link_gain(loss, shadow, power);
  }
  return gains;
}

std::vector<double> draw_distances_m(const ScenarioConfig& config, std::uint64_t sample_index) {
  RngStream distance(config.master_seed, sample_index, StreamTag::kDistance);
  std::vector<double> out(config.n_users);
  for (double& d : out) d = distance.uniform(config.dist_min_m, config.dist_max_m);
  return out;
}

ProblemInstance generate_instance(const ScenarioConfig& config, std::uint64_t sample_index) {
  config.validate();
  const std::uint64_t seed = config.master_seed;
  const std::vector<double> distances = draw_distances_m(config, sample_index);
  RngStream subarea(seed, sample_index, StreamTag::kSubarea);
  RngStream rate(seed, sample_index, StreamTag::kSensingRate);
  RngStream power(seed, sample_index, StreamTag::kTxPower);
  RngStream task(seed, sample_index, StreamTag::kTaskSize);
  RngStream shadowing(seed, sample_index, StreamTag::kShadowing);

  std::vector<UserProfile> users(config.n_users);
  for (std::size_t k = 0; k < config.n_users; ++k) {
    UserProfile& u = users[k];
    u.id = k;
    const double meters = distances[k];
    const double x = config.distance_unit == DistanceUnit::kKilometers ? meters / 1000.0 : meters;
    u.subarea = subarea.uniform_index(config.n_subareas);
    u.sensing_rate = rate.uniform(config.rate_min, config.rate_max);
    u.tx_power = power.uniform(config.power_min, config.power_max);
    RngStream fading(seed, sample_index, StreamTag::kFading, k);
    u.gains = draw_user_gains(x, config.n_subbands, config.shadow_sigma_db, shadowing, fading);
  }
  const double task_bits = task.uniform(config.task_min, config.task_max);
  return ProblemInstance(std::move(users),
                         std::vector<double>(config.n_subbands, config.bandwidth_hz),
                         dbm_to_watts(config.noise_density_dbm_hz), task_bits,
                         config.n_subareas, config.weight, config.eta);
}

}  // namespace mcs
