// mcs_sim: sweeps, single-instance solves and certification suites.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mcs/certify.hpp"
#include "mcs/harness.hpp"
#include "mcs/io.hpp"

namespace {

int report_checks(const std::vector<mcs::certify::CheckResult>& checks) {
  int failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failed;
  }
  std::cout << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size()
            << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage-aware crowdsensing resource allocation simulator"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over one scenario parameter");
  std::string param;
  std::vector<double> values;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> sweep_seed;
  std::vector<std::string> methods;
  std::string sweep_config;
  std::string out_path;
  std::string dump_path;
  std::size_t threads = 0;
  sweep->add_option("--param", param, "users | subbands | subareas | weight")->required();
  sweep->add_option("--values", values, "Comma-separated parameter values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--samples", samples, "Paired Monte Carlo samples per value")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_seed, "Master seed (overrides the config file)");
  sweep->add_option("--methods", methods, "Comma-separated subset of proposed,benchmark1,"
                                          "benchmark2,benchmark3")
      ->delimiter(',');
  sweep->add_option("--config", sweep_config, "Scenario config (JSON)")->check(CLI::ExistingFile);
  sweep->add_option("--out", out_path, "Aggregate CSV output path")->required();
  sweep->add_option("--dump-samples", dump_path, "Per-sample CSV output path");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance and print the report as JSON");
  std::string solve_config;
  std::string instance_path;
  std::uint64_t index = 0;
  std::optional<std::uint64_t> solve_seed;
  std::string method = "proposed";
  auto* config_opt = solve->add_option("--config", solve_config, "Scenario config (JSON)")
                         ->check(CLI::ExistingFile);
  solve->add_option("--instance", instance_path, "Serialized instance (JSON)")
      ->check(CLI::ExistingFile)
      ->excludes(config_opt);
  solve->add_option("--index", index, "Sample index to generate from the config");
  solve->add_option("--seed", solve_seed, "Master seed (overrides the config file)");
  solve->add_option("--method", method, "proposed | benchmark1 | benchmark2 | benchmark3")
      ->capture_default_str();

  // generate
  auto* generate = app.add_subcommand("generate", "Write one generated instance as JSON");
  std::string gen_config;
  std::uint64_t gen_index = 0;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out;
  generate->add_option("--config", gen_config, "Scenario config (JSON)")->check(CLI::ExistingFile);
  generate->add_option("--index", gen_index, "Sample index");
  generate->add_option("--seed", gen_seed, "Master seed (overrides the config file)");
  generate->add_option("--out", gen_out, "Output path (stdout if omitted)");

  auto* oracle = app.add_subcommand("oracle", "Small-instance certification against brute force");
  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");
  std::uint64_t check_seed = 20250101;
  oracle->add_option("--seed", check_seed, "Seed for the random suites")->capture_default_str();
  selftest->add_option("--seed", check_seed, "Seed for the random suites")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      mcs::SweepSpec spec;
      spec.parameter = mcs::parse_sweep_param(param);
      spec.values = values;
      spec.samples = samples;
      spec.threads = threads;
      if (!sweep_config.empty()) spec.base = mcs::io::load_config(sweep_config);
      if (sweep_seed) spec.base.master_seed = *sweep_seed;
      if (!methods.empty()) {
        spec.methods.clear();
        for (const std::string& m : methods) spec.methods.push_back(mcs::parse_method(m));
      }
      const mcs::SweepResult result = mcs::run_sweep(spec);
      mcs::emit_csv(result.rows, out_path);
      if (!dump_path.empty()) mcs::emit_samples_csv(result.samples, spec, dump_path);
      std::cout << "wrote " << result.rows.size() << " rows to " << out_path << '\n';
      return 0;
    }
    if (solve->parsed()) {
      const mcs::Method chosen = mcs::parse_method(method);
      mcs::ScenarioConfig config;
      if (!solve_config.empty()) config = mcs::io::load_config(solve_config);
      if (solve_seed) config.master_seed = *solve_seed;
      const mcs::ProblemInstance instance = instance_path.empty()
                                                ? mcs::generate_instance(config, index)
                                                : mcs::io::load_instance(instance_path);
      const mcs::SolutionReport report =
          mcs::solve_with(chosen, instance, config.master_seed, index);
      nlohmann::json out = mcs::io::report_to_json(report, instance);
      out["method"] = method;
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (generate->parsed()) {
      mcs::ScenarioConfig config;
      if (!gen_config.empty()) config = mcs::io::load_config(gen_config);
      if (gen_seed) config.master_seed = *gen_seed;
      const std::string text =
          mcs::io::instance_to_json(mcs::generate_instance(config, gen_index)).dump(2) + "\n";
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream(gen_out) << text;
      }
      return 0;
    }
    if (oracle->parsed()) return report_checks(mcs::certify::oracle_suite(check_seed));
    if (selftest->parsed()) return report_checks(mcs::certify::selftest_suite(check_seed));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
