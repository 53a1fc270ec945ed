#include "mcs/io.hpp"

#include <fstream>
#include <set>

namespace mcs::io {

using nlohmann::json;

namespace {

template <typename T>
void read_field(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T require_field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

void reject_unknown(const json& j, const std::set<std::string>& known, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw FormatError(std::string("unknown ") + what + " key '" + key + "'");
  }
}

}  // namespace

ScenarioConfig config_from_json(const json& j) {
  static const std::set<std::string> known = {
      "n_users",     "n_subareas",   "n_subbands",      "weight",         "bandwidth_hz",
      "noise_density_dbm_hz",        "dist_min_m",      "dist_max_m",     "shadow_sigma_db",
      "rate_min",    "rate_max",     "power_min",       "power_max",      "task_min",
      "task_max",    "eta",          "master_seed",     "distance_unit"};
  reject_unknown(j, known, "config");
  ScenarioConfig c;
  read_field(j, "n_users", c.n_users);
  read_field(j, "n_subareas", c.n_subareas);
  read_field(j, "n_subbands", c.n_subbands);
  read_field(j, "weight", c.weight);
  read_field(j, "bandwidth_hz", c.bandwidth_hz);
  read_field(j, "noise_density_dbm_hz", c.noise_density_dbm_hz);
  read_field(j, "dist_min_m", c.dist_min_m);
  read_field(j, "dist_max_m", c.dist_max_m);
  read_field(j, "shadow_sigma_db", c.shadow_sigma_db);
  read_field(j, "rate_min", c.rate_min);
  read_field(j, "rate_max", c.rate_max);
  read_field(j, "power_min", c.power_min);
  read_field(j, "power_max", c.power_max);
  read_field(j, "task_min", c.task_min);
  read_field(j, "task_max", c.task_max);
  read_field(j, "eta", c.eta);
  read_field(j, "master_seed", c.master_seed);
  if (j.contains("distance_unit")) {
    const auto unit = require_field<std::string>(j, "distance_unit");
    if (unit == "km") {
      c.distance_unit = DistanceUnit::kKilometers;
    } else if (unit == "m") {
      c.distance_unit = DistanceUnit::kMeters;
    } else {
      throw FormatError("distance_unit must be \"km\" or \"m\"; got \"" + unit + "\"");
    }
  }
  c.validate();
  return c;
}

json config_to_json(const ScenarioConfig& c) {
  return {{"n_users", c.n_users},
          {"n_subareas", c.n_subareas},
          {"n_subbands", c.n_subbands},
          {"weight", c.weight},
          {"bandwidth_hz", c.bandwidth_hz},
          {"noise_density_dbm_hz", c.noise_density_dbm_hz},
          {"dist_min_m", c.dist_min_m},
          {"dist_max_m", c.dist_max_m},
          {"shadow_sigma_db", c.shadow_sigma_db},
          {"rate_min", c.rate_min},
          {"rate_max", c.rate_max},
          {"power_min", c.power_min},
          {"power_max", c.power_max},
          {"task_min", c.task_min},
          {"task_max", c.task_max},
          {"eta", c.eta},
          {"master_seed", c.master_seed},
          {"distance_unit", c.distance_unit == DistanceUnit::kKilometers ? "km" : "m"}};
}

ProblemInstance instance_from_json(const json& j) {
  reject_unknown(j, {"n_subareas", "bandwidths", "noise_density", "task_bits", "weight", "scale",
                     "users"},
                 "instance");
  const auto users_json = require_field<json>(j, "users");
  if (!users_json.is_array()) throw FormatError("'users' must be an array");
  std::vector<UserProfile> users;
  for (const json& u : users_json) {
    reject_unknown(u, {"sensing_rate", "tx_power", "subarea", "gains"}, "user");
    UserProfile p;
    p.id = users.size();
    p.sensing_rate = require_field<double>(u, "sensing_rate");
    p.tx_power = require_field<double>(u, "tx_power");
    const auto area = require_field<long long>(u, "subarea");
    if (area < 1) throw FormatError("subarea indices are 1-based");
    p.subarea = static_cast<std::size_t>(area - 1);
    p.gains = require_field<std::vector<double>>(u, "gains");
    users.push_back(std::move(p));
  }
  return ProblemInstance(std::move(users), require_field<std::vector<double>>(j, "bandwidths"),
                         require_field<double>(j, "noise_density"),
                         require_field<double>(j, "task_bits"),
                         require_field<std::size_t>(j, "n_subareas"),
                         require_field<double>(j, "weight"), require_field<double>(j, "scale"));
}

json instance_to_json(const ProblemInstance& instance) {
  json users = json::array();
  for (const UserProfile& u : instance.users()) {
    users.push_back({{"sensing_rate", u.sensing_rate},
                     {"tx_power", u.tx_power},
                     {"subarea", u.subarea + 1},
                     {"gains", u.gains}});
  }
  return {{"n_subareas", instance.n_subareas()},
          {"bandwidths", std::vector<double>(instance.bandwidths().begin(),
                                             instance.bandwidths().end())},
          {"noise_density", instance.noise_density()},
          {"task_bits", instance.task_bits()},
          {"weight", instance.weight()},
          {"scale", instance.scale()},
          {"users", users}};
}

json report_to_json(const SolutionReport& report, const ProblemInstance& instance) {
  json pairs = json::array();
  for (const Pair& p : report.assignment.pairs()) {
    pairs.push_back({{"user", p.user},
                     {"subband", p.subband},
                     {"subarea", instance.user(p.user).subarea + 1},
                     {"load_bits", report.allocation.loads.at(p.user)},
                     {"latency_s", total_latency(instance.user(p.user), p.subband,
                                                 report.allocation.loads.at(p.user), instance)}});
  }
  return {{"objective", report.objective},
          {"latency_term", report.latency_term},
          {"latency_norm", normalize(report.t_over, instance.scale())},
          {"coverage_gap", report.coverage_gap},
          {"t_over_s", report.t_over},
          {"weight", instance.weight()},
          {"pairs", pairs},
          {"diagnostics",
           {{"swap_passes", report.diagnostics.swap_passes},
            {"accepted_swaps", report.diagnostics.accepted_swaps},
            {"evaluations", report.diagnostics.evaluations}}}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

ScenarioConfig load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

ProblemInstance load_instance(const std::string& path) {
  return instance_from_json(read_json_file(path));
}

}  // namespace mcs::io
