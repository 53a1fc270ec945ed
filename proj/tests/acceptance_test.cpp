// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcs/certify.hpp"
#include "mcs/harness.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250101;
constexpr std::size_t kSamples = 1000;
constexpr double kSweepBudgetSeconds = 60.0;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail
            << std::endl;
  if (!o.passed) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct TimedSweep {
  mcs::SweepSpec spec;
  mcs::SweepResult result;
  double seconds = 0.0;
};

TimedSweep sweep(mcs::SweepParam p, std::vector<double> values, std::vector<mcs::Method> methods) {
  TimedSweep t;
  t.spec.parameter = p;
  t.spec.values = std::move(values);
  t.spec.samples = kSamples;
  t.spec.methods = std::move(methods);
  t.spec.base.master_seed = kSeed;
  const auto start = std::chrono::steady_clock::now();
  t.result = mcs::run_sweep(t.spec);
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

// Objective of (value index, sample, method index) from the paired records.
double sample_objective(const TimedSweep& t, std::size_t vi, std::size_t s, std::size_t m) {
  return t.result.samples[(vi * t.spec.samples + s) * t.spec.methods.size() + m].objective;
}

double row_mean(const TimedSweep& t, std::size_t vi, std::size_t m) {
  return t.result.rows[vi * t.spec.methods.size() + m].mean_objective;
}

std::string timing(const TimedSweep& t) { return "sweep " + num(t.seconds) + " s"; }

bool within_budget(const TimedSweep& t) { return t.seconds <= kSweepBudgetSeconds; }

// Proposed (method 0) must sit at or below every other method at every value.
bool proposed_never_worse(const TimedSweep& t, std::string& detail) {
  bool ok = true;
  for (std::size_t vi = 0; vi < t.spec.values.size(); ++vi) {
    const double p = row_mean(t, vi, 0);
    for (std::size_t m = 1; m < t.spec.methods.size(); ++m) {
      if (p > row_mean(t, vi, m)) {
        ok = false;
        detail += "; proposed above " + mcs::to_string(t.spec.methods[m]) + " at " +
                  num(t.spec.values[vi]);
      }
    }
  }
  return ok;
}

std::string means(const TimedSweep& t, std::size_t m) {
  std::string out;
  for (std::size_t vi = 0; vi < t.spec.values.size(); ++vi) {
    out += (vi ? " " : "") + num(row_mean(t, vi, m));
  }
  return out;
}

Outcome from_check(const mcs::certify::CheckResult& c) { return {c.passed, c.detail}; }

Outcome users_trend() {
  const TimedSweep t = sweep(mcs::SweepParam::kUsers, {12, 16, 20, 24}, {mcs::Method::kProposed});
  Outcome o{within_budget(t), "means " + means(t, 0)};
  const double n = static_cast<double>(kSamples);
  for (std::size_t vi = 0; vi + 1 < t.spec.values.size(); ++vi) {
    double sum = 0.0, sq = 0.0;
    for (std::size_t s = 0; s < kSamples; ++s) {
      const double d = sample_objective(t, vi, s, 0) - sample_objective(t, vi + 1, s, 0);
      sum += d;
      sq += d * d;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sq - n * mean * mean) / (n - 1.0) / n);
    o.detail += "; step " + num(t.spec.values[vi]) + "->" + num(t.spec.values[vi + 1]) +
                " drop " + num(mean) + " (2se " + num(2.0 * se) + ")";
    if (!(mean > 2.0 * se)) o.passed = false;
  }
  o.detail += "; " + timing(t);
  return o;
}

Outcome subbands_trend() {
  const TimedSweep t = sweep(mcs::SweepParam::kSubbands, {4, 6, 8, 10}, mcs::kAllMethods);
  Outcome o{within_budget(t), "proposed means " + means(t, 0)};
  for (std::size_t vi = 0; vi + 1 < t.spec.values.size(); ++vi) {
    if (!(row_mean(t, vi + 1, 0) < row_mean(t, vi, 0))) o.passed = false;
  }
  if (!proposed_never_worse(t, o.detail)) o.passed = false;
  o.detail += "; benchmark/proposed ratios";
  for (std::size_t vi = 0; vi < t.spec.values.size(); ++vi) {
    o.detail += " N=" + num(t.spec.values[vi]) + ":";
    for (std::size_t m = 1; m < t.spec.methods.size(); ++m) {
      o.detail += (m > 1 ? "/" : "") + num(row_mean(t, vi, m) / row_mean(t, vi, 0));
    }
  }
  o.detail += "; " + timing(t);
  return o;
}

Outcome subareas_trend() {
  const TimedSweep t = sweep(mcs::SweepParam::kSubareas, {5, 10, 15, 20}, mcs::kAllMethods);
  Outcome o{within_budget(t), "proposed means " + means(t, 0)};
  for (std::size_t vi = 0; vi + 1 < t.spec.values.size(); ++vi) {
    if (!(row_mean(t, vi + 1, 0) > row_mean(t, vi, 0))) o.passed = false;
  }
  if (!proposed_never_worse(t, o.detail)) o.passed = false;
  o.detail += "; " + timing(t);
  return o;
}

TimedSweep weight_sweep() {
  return sweep(mcs::SweepParam::kWeight, {0, 0.25, 0.5, 0.75, 1}, mcs::kAllMethods);
}

Outcome weight_trend(const TimedSweep& t) {
  Outcome o{within_budget(t), ""};
  // Methods are in kAllMethods order: proposed, benchmark1, ...
  const std::size_t unit = t.spec.values.size() - 1;
  std::size_t equal = 0;
  for (std::size_t s = 0; s < kSamples; ++s) {
    if (sample_objective(t, unit, s, 0) == sample_objective(t, unit, s, 1)) ++equal;
  }
  if (equal != kSamples) o.passed = false;
  o.detail = "w=1 identical on " + std::to_string(equal) + "/" + std::to_string(kSamples);
  for (std::size_t vi = 1; vi < unit; ++vi) {
    const double p = row_mean(t, vi, 0), b = row_mean(t, vi, 1);
    o.detail += "; w=" + num(t.spec.values[vi]) + " proposed " + num(p) + " vs benchmark1 " + num(b);
    if (p > b) o.passed = false;
  }
  o.detail += "; " + timing(t);
  return o;
}

std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome reproducibility(const TimedSweep& first) {
  const auto dir = std::filesystem::temp_directory_path() / "mcs_acceptance";
  std::filesystem::create_directories(dir);
  const TimedSweep second = weight_sweep();
  mcs::emit_csv(first.result.rows, (dir / "first.csv").string());
  mcs::emit_csv(second.result.rows, (dir / "second.csv").string());
  const std::string a = read_bytes(dir / "first.csv");
  const std::string b = read_bytes(dir / "second.csv");
  std::filesystem::remove_all(dir);
  return {!a.empty() && a == b,
          std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "DIFFERENT") + "; " +
              timing(second)};
}

void guarded(int id, const std::string& name, const std::function<Outcome()>& body) {
  try {
    report(id, name, body());
  } catch (const std::exception& e) {
    report(id, name, {false, std::string("threw: ") + e.what()});
  }
}

}  // namespace

int main() {
  using namespace mcs::certify;
  guarded(1, "matching optimality", [] { return from_check(matching_optimality(kSeed)); });
  guarded(2, "task split certification", [] { return from_check(split_certification(kSeed)); });
  guarded(3, "matching latency consistency", [] { return from_check(latency_consistency(kSeed)); });
  guarded(4, "swap local optimality", [] {
    const SwapCertification c = swap_local_optimality(kSeed);
    return Outcome{c.result.passed, c.result.detail};
  });
  guarded(5, "normalization", [] { return from_check(normalization(kSeed)); });
  guarded(6, "objective falls with more users", users_trend);
  guarded(7, "objective falls with more subbands", subbands_trend);
  guarded(8, "objective rises with more subareas", subareas_trend);
  TimedSweep weights;
  guarded(9, "weight sweep against latency-only search", [&] {
    weights = weight_sweep();
    return weight_trend(weights);
  });
  guarded(10, "byte-identical reruns", [&] { return reproducibility(weights); });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
