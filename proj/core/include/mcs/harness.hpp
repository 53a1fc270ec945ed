#pragma once

// Seeded Monte Carlo sweeps: one scenario parameter varied over a list of
// values, every method solving the same instance at each (value, sample)
// point, results reduced in sample order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/channel.hpp"
#include "mcs/model.hpp"

namespace mcs {

enum class SweepParam { kUsers, kSubbands, kSubareas, kWeight };
enum class Method { kProposed, kBenchmark1, kBenchmark2, kBenchmark3 };

std::string to_string(SweepParam p);
std::string to_string(Method m);
SweepParam parse_sweep_param(std::string_view name);
Method parse_method(std::string_view name);

inline const std::vector<Method> kAllMethods = {Method::kProposed, Method::kBenchmark1,
                                                Method::kBenchmark2, Method::kBenchmark3};

class InvalidSweep : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepSpec {
  SweepParam parameter = SweepParam::kWeight;
  std::vector<double> values;
  std::size_t samples = 1000;
  std::vector<Method> methods = kAllMethods;
  ScenarioConfig base;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct SampleRecord {
  double value = 0.0;
  std::uint64_t sample = 0;
  Method method = Method::kProposed;
  double weight = 0.0;
  double objective = 0.0;
  double latency_term = 0.0;
  double latency_norm = 0.0;  // Norm(t_over, eta), the latency-only score
  std::size_t coverage_gap = 0;
  double t_over = 0.0;
};

struct AggregateRow {
  std::string param;
  double value = 0.0;
  std::string method;
  double mean_objective = 0.0;
  double std_objective = 0.0;
  double mean_latency_term = 0.0;
  double mean_coverage_gap = 0.0;
  double mean_t_over_s = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct SweepResult {
  std::vector<AggregateRow> rows;
  /// Ordered by value, then sample, then method (in spec order).
  std::vector<SampleRecord> samples;
};

/// Base config with the swept parameter set to `value`; validated.
ScenarioConfig config_at(const SweepSpec& spec, double value);

/// Throws InvalidSweep on empty lists, non-integral counts, or any point that
/// would break K > N.
void validate(const SweepSpec& spec);

/// Solve one instance with one method. `sample_index` keys benchmark 2's
/// subband shuffle.
SolutionReport solve_with(Method method, const ProblemInstance& instance,
                          std::uint64_t master_seed, std::uint64_t sample_index);

SweepResult run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "param,value,method,mean_objective,std_objective,mean_latency_term,"
    "mean_coverage_gap,mean_t_over_s,samples,seed";

std::string format_csv(const std::vector<AggregateRow>& rows);
/// Throws std::invalid_argument on empty rows, std::runtime_error if unwritable.
void emit_csv(const std::vector<AggregateRow>& rows, const std::string& path);
std::vector<AggregateRow> parse_csv(std::string_view text);

std::string format_samples_csv(const std::vector<SampleRecord>& samples,
                               const SweepSpec& spec);
void emit_samples_csv(const std::vector<SampleRecord>& samples, const SweepSpec& spec,
                      const std::string& path);

}  // namespace mcs
