#pragma once

// Seeded scenario generation: user placement, sensing/radio parameters and
// per-subband channel gains (distance path loss, log-normal shadowing,
// Rayleigh fading).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

enum class DistanceUnit {
  kKilometers,  // 128.1 + 37.6 log10(d[km]), the usual macro-cell form
  kMeters,      // same constants applied to d[m]; links are unusable at this scale
};

struct ScenarioConfig {
  std::size_t n_users = 20;
  std::size_t n_subareas = 10;
  std::size_t n_subbands = 10;
  double weight = 0.5;
  double bandwidth_hz = 1e6;
  double noise_density_dbm_hz = -174.0;
  double dist_min_m = 50.0;
  double dist_max_m = 300.0;
  double shadow_sigma_db = 8.0;
  double rate_min = 1e5;
  double rate_max = 1e6;
  double power_min = 0.1;
  double power_max = 0.2;
  double task_min = 1e3;
  double task_max = 1e4;
  double eta = 1e6;
  std::uint64_t master_seed = 1;
  DistanceUnit distance_unit = DistanceUnit::kKilometers;

  /// Throws InvalidInstance with the offending field named.
  void validate() const;
};

/// Independent draw purposes. Each gets its own stream so changing one part of
/// the scenario (e.g. the subband count) does not shift the others.
enum class StreamTag : std::uint32_t {
  kDistance = 1,
  kSubarea,
  kSensingRate,
  kTxPower,
  kTaskSize,
  kShadowing,
  kFading,
  kSubbandShuffle,
};

/// Deterministic generator keyed by (master seed, sample index, tag, lane).
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t sample_index, StreamTag tag,
            std::uint64_t lane = 0);

  std::mt19937_64& engine() noexcept { return engine_; }
  double uniform(double lo, double hi);
  double normal(double mean, double stddev);
  /// |h|^2 for unit-variance Rayleigh fading.
  double exponential_unit();
  std::size_t uniform_index(std::size_t count);

 private:
  std::mt19937_64 engine_;
};

double dbm_to_watts(double dbm);

double path_loss_db(double distance_km);

/// 10^(-(path_loss + shadowing)/10) * fading_power.
double link_gain(double path_loss_db, double shadow_db, double fading_power);

/// One shadowing draw shared by all subbands of the link, independent fading
/// per subband.
std::vector<double> draw_user_gains(double distance_km, std::size_t n_subbands,
                                    double shadow_sigma_db, RngStream& shadowing,
                                    RngStream& fading);

/// User distances from the base station in meters, one per user.
std::vector<double> draw_distances_m(const ScenarioConfig& config, std::uint64_t sample_index);

ProblemInstance generate_instance(const ScenarioConfig& config, std::uint64_t sample_index);

}  // namespace mcs
