#include "mcs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "mcs/baselines.hpp"
#include "mcs/scheduler.hpp"

namespace mcs {

namespace {

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::size_t as_count(double value, const char* what) {
  if (!(value >= 1.0) || value != std::floor(value) || value > 1e6) {
    throw InvalidSweep(std::string(what) + " values must be positive integers; got " +
                       fmt9(value));
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::string to_string(SweepParam p) {
  switch (p) {
    case SweepParam::kUsers: return "users";
    case SweepParam::kSubbands: return "subbands";
    case SweepParam::kSubareas: return "subareas";
    case SweepParam::kWeight: return "weight";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kProposed: return "proposed";
    case Method::kBenchmark1: return "benchmark1";
    case Method::kBenchmark2: return "benchmark2";
    case Method::kBenchmark3: return "benchmark3";
  }
  return "?";
}

SweepParam parse_sweep_param(std::string_view name) {
  for (SweepParam p : {SweepParam::kUsers, SweepParam::kSubbands, SweepParam::kSubareas,
                       SweepParam::kWeight}) {
    if (name == to_string(p)) return p;
  }
  throw InvalidSweep("unknown sweep parameter '" + std::string(name) +
                     "' (expected users, subbands, subareas or weight)");
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (name == to_string(m)) return m;
  }
  throw InvalidSweep("unknown method '" + std::string(name) + "'");
}

ScenarioConfig config_at(const SweepSpec& spec, double value) {
  ScenarioConfig config = spec.base;
  switch (spec.parameter) {
    case SweepParam::kUsers: config.n_users = as_count(value, "users"); break;
    case SweepParam::kSubbands: config.n_subbands = as_count(value, "subbands"); break;
    case SweepParam::kSubareas: config.n_subareas = as_count(value, "subareas"); break;
    case SweepParam::kWeight: config.weight = value; break;
  }
  try {
    config.validate();
  } catch (const InvalidInstance& e) {
    throw InvalidSweep("sweep point " + to_string(spec.parameter) + "=" + fmt9(value) + ": " +
                       e.what());
  }
  return config;
}

void validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw InvalidSweep("sweep needs at least one value");
  if (spec.samples == 0) throw InvalidSweep("sweep needs at least one sample");
  if (spec.methods.empty()) throw InvalidSweep("sweep needs at least one method");
  for (double v : spec.values) config_at(spec, v);
}

SolutionReport solve_with(Method method, const ProblemInstance& instance,
                          std::uint64_t master_seed, std::uint64_t sample_index) {
  switch (method) {
    case Method::kProposed: return swap_optimize(instance);
    case Method::kBenchmark1: return benchmark1(instance);
    case Method::kBenchmark2: {
      RngStream rng(master_seed, sample_index, StreamTag::kSubbandShuffle);
      return benchmark2(instance, rng);
    }
    case Method::kBenchmark3: return benchmark3(instance);
  }
  throw std::logic_error("unhandled method");
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<ScenarioConfig> configs;
  for (double v : spec.values) configs.push_back(config_at(spec, v));

  const std::size_t n_methods = spec.methods.size();
  const std::size_t n_tasks = spec.values.size() * spec.samples;
  std::vector<SampleRecord> records(n_tasks * n_methods);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= n_tasks) return;
      const std::size_t vi = task / spec.samples;
      const std::uint64_t sample = task % spec.samples;
      try {
        const ScenarioConfig& config = configs[vi];
        const ProblemInstance instance = generate_instance(config, sample);
        for (std::size_t m = 0; m < n_methods; ++m) {
          const SolutionReport r = solve_with(spec.methods[m], instance, config.master_seed, sample);
          SampleRecord& rec = records[task * n_methods + m];
          rec.value = spec.values[vi];
          rec.sample = sample;
          rec.method = spec.methods[m];
          rec.weight = instance.weight();
          rec.objective = r.objective;
          rec.latency_term = r.latency_term;
          rec.latency_norm = normalize(r.t_over, instance.scale());
          rec.coverage_gap = r.coverage_gap;
          rec.t_over = r.t_over;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_tasks);
        return;
      }
    }
  };

  std::size_t n_threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
  n_threads = std::clamp<std::size_t>(n_threads, 1, std::max<std::size_t>(n_tasks, 1));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  const double count = static_cast<double>(spec.samples);
  for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
    for (std::size_t m = 0; m < n_methods; ++m) {
      double sum = 0.0, latency = 0.0, gap = 0.0, t_over = 0.0;
      for (std::size_t s = 0; s < spec.samples; ++s) {
        const SampleRecord& rec = records[(vi * spec.samples + s) * n_methods + m];
        sum += rec.objective;
        latency += rec.latency_term;
        gap += static_cast<double>(rec.coverage_gap);
        t_over += rec.t_over;
      }
      const double mean = sum / count;
      double sq = 0.0;
      for (std::size_t s = 0; s < spec.samples; ++s) {
        const double d = records[(vi * spec.samples + s) * n_methods + m].objective - mean;
        sq += d * d;
      }
      AggregateRow row;
      row.param = to_string(spec.parameter);
      row.value = spec.values[vi];
      row.method = to_string(spec.methods[m]);
      row.mean_objective = mean;
      row.std_objective = spec.samples > 1 ? std::sqrt(sq / (count - 1.0)) : 0.0;
      row.mean_latency_term = latency / count;
      row.mean_coverage_gap = gap / count;
      row.mean_t_over_s = t_over / count;
      row.samples = spec.samples;
      row.seed = spec.base.master_seed;
      result.rows.push_back(std::move(row));
    }
  }
  result.samples = std::move(records);
  return result;
}

std::string format_csv(const std::vector<AggregateRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const AggregateRow& r : rows) {
    out += r.param + ',' + fmt9(r.value) + ',' + r.method + ',' + fmt9(r.mean_objective) + ',' +
           fmt9(r.std_objective) + ',' + fmt9(r.mean_latency_term) + ',' +
           fmt9(r.mean_coverage_gap) + ',' + fmt9(r.mean_t_over_s) + ',' +
           std::to_string(r.samples) + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

void emit_csv(const std::vector<AggregateRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("refusing to write an empty result table");
  write_file(format_csv(rows), path);
}

std::vector<AggregateRow> parse_csv(std::string_view text) {
  std::vector<AggregateRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::invalid_argument("CSV header does not match the sweep format");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 10) throw std::invalid_argument("CSV row has wrong field count: " + line);
    AggregateRow r;
    r.param = f[0];
    r.value = std::stod(f[1]);
    r.method = f[2];
    r.mean_objective = std::stod(f[3]);
    r.std_objective = std::stod(f[4]);
    r.mean_latency_term = std::stod(f[5]);
    r.mean_coverage_gap = std::stod(f[6]);
    r.mean_t_over_s = std::stod(f[7]);
    r.samples = std::stoull(f[8]);
    r.seed = std::stoull(f[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_samples_csv(const std::vector<SampleRecord>& samples,
                               const SweepSpec& spec) {
  std::string out =
      "param,value,sample,instance_seed,method,weight,objective,latency_term,latency_norm,"
      "coverage_gap,t_over_s\n";
  for (const SampleRecord& s : samples) {
    out += to_string(spec.parameter) + ',' + fmt9(s.value) + ',' + std::to_string(s.sample) + ',' +
           std::to_string(spec.base.master_seed) + ':' + std::to_string(s.sample) + ',' +
           to_string(s.method) + ',' + fmt9(s.weight) + ',' + fmt9(s.objective) + ',' +
           fmt9(s.latency_term) + ',' + fmt9(s.latency_norm) + ',' +
           std::to_string(s.coverage_gap) + ',' + fmt9(s.t_over) + '\n';
  }
  return out;
}

void emit_samples_csv(const std::vector<SampleRecord>& samples, const SweepSpec& spec,
                      const std::string& path) {
  write_file(format_samples_csv(samples, spec), path);
}

}  // namespace mcs
