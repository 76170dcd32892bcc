// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "socsim/bundled_data.hpp"
#include "socsim/errors.hpp"
#include "socsim/exact.hpp"
#include "socsim/simengine.hpp"
#include "socsim/tco.hpp"

namespace socsim {

using Json = nlohmann::json;

inline constexpr int kScenarioSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

template <typename T>
T json_get(const Json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw InvalidScenario(std::string("field '") + key + "' has the wrong type");
  }
}

inline const Json& json_require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidScenario(std::string("missing field '") + key + "'");
  return *it;
}

/// Money and rates accept either JSON numbers or decimal strings ("0.0786");
/// strings keep the literal exact.
inline Exact json_exact(const Json& v, const char* what) {
  if (v.is_string()) {
    auto r = try_parse_decimal(v.get<std::string>());
    if (!r) throw InvalidScenario(std::string("field '") + what + "' is not a decimal");
    return *r;
  }
  if (v.is_number_integer()) return Exact(v.get<long long>());
  if (v.is_number()) return exact_from_double(v.get<double>());
  throw InvalidScenario(std::string("field '") + what + "' must be a number");
}

template <typename E, typename Parse>
E json_enum(const Json& j, const char* key, E fallback, Parse parse) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw InvalidScenario(std::string("field '") + key + "' must be a string");
  auto v = parse(it->get<std::string>());
  if (!v) throw InvalidScenario(std::string("unknown ") + key + " '" + it->get<std::string>() + "'");
  return *v;
}

inline std::optional<PlacementPolicy> parse_policy(std::string_view s) {
  for (auto p : {PlacementPolicy::consolidate, PlacementPolicy::spread, PlacementPolicy::random})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

inline std::optional<ArrivalKind> parse_arrival_kind(std::string_view s) {
  for (auto k : {ArrivalKind::constant, ArrivalKind::poisson, ArrivalKind::trace})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline std::optional<CurveShape> parse_shape(std::string_view s) {
  for (auto k : {CurveShape::linear, CurveShape::floor_plus_slope, CurveShape::table})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline std::optional<Precision> parse_precision(std::string_view s) {
  if (s == "fp32") return Precision::fp32;
  if (s == "int8") return Precision::int8;
  return std::nullopt;
}

}  // namespace detail

// --- Cost sheets ---------------------------------------------------------------

/// {"label", "capex": [{"name", "usd"}], "lifetime_months", "avg_peak_watts",
///  "utilization", "usd_per_kwh", "pue"}
inline CostSheet cost_sheet_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidScenario("cost sheet must be an object");
  CostSheet s;
  s.label = detail::json_get<std::string>(j, "label", "sheet");
  const Json& capex = detail::json_require(j, "capex");
  if (!capex.is_array()) throw InvalidScenario("capex must be an array");
  for (const auto& c : capex)
    s.capex.push_back({detail::json_get<std::string>(c, "name", ""), detail::json_exact(detail::json_require(c, "usd"), "usd")});
  s.lifetime_months = detail::json_get<int>(j, "lifetime_months", 36);
  s.avg_peak_watts = detail::json_exact(detail::json_require(j, "avg_peak_watts"), "avg_peak_watts");
  if (j.contains("utilization")) s.utilization = detail::json_exact(j["utilization"], "utilization");
  if (j.contains("usd_per_kwh")) s.usd_per_kwh = detail::json_exact(j["usd_per_kwh"], "usd_per_kwh");
  if (j.contains("pue")) s.pue = detail::json_exact(j["pue"], "pue");
  try {
    s.validate();
  } catch (const Error& e) {
    throw InvalidScenario(e.what());
  }
  return s;
}

inline CostSheet load_cost_sheet(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
  return cost_sheet_from_json(j);
}

// --- Scenarios -----------------------------------------------------------------

inline PowerCurve power_curve_from_json(const Json& j) {
  const CurveShape shape = detail::json_enum(j, "shape", CurveShape::linear, detail::parse_shape);
  const std::string unit = detail::json_get<std::string>(j, "unit", "streams");
  const double idle = detail::json_get<double>(j, "idle_watts", 0);
  const double slope = detail::json_get<double>(j, "watts_per_unit_load", 0);
  try {
    switch (shape) {
      case CurveShape::linear: return PowerCurve::linear(idle, slope, unit);
      case CurveShape::floor_plus_slope:
        return PowerCurve::floor_plus_slope(idle, slope, detail::json_get<double>(j, "floor_watts", 0), unit);
      case CurveShape::table:
        return PowerCurve::table(detail::json_get<std::vector<std::pair<double, double>>>(j, "points", {}), unit);
    }
  } catch (const InvalidArgument& e) {
    throw InvalidScenario(e.what());
  }
  return {};
}

inline TopologySpec topology_from_json(const Json& j) {
  TopologySpec t;
  t.soc_count = detail::json_get(j, "soc_count", t.soc_count);
  t.socs_per_pcb = detail::json_get(j, "socs_per_pcb", t.socs_per_pcb);
  t.pcb_uplink_mbps = detail::json_get(j, "pcb_uplink_mbps", t.pcb_uplink_mbps);
  t.esb_uplink_mbps = detail::json_get(j, "esb_uplink_mbps", t.esb_uplink_mbps);
  t.power_cap_watts = detail::json_get(j, "power_cap_watts", t.power_cap_watts);
  t.intra_soc_rtt_ms = detail::json_get(j, "intra_soc_rtt_ms", t.intra_soc_rtt_ms);
  t.intra_soc_tcp_mbps = detail::json_get(j, "intra_soc_tcp_mbps", t.intra_soc_tcp_mbps);
  t.access_link_mbps = detail::json_get(j, "access_link_mbps", t.access_link_mbps);
  t.cpu_cores = detail::json_get(j, "cpu_cores", t.cpu_cores);
  t.ram_gb = detail::json_get(j, "ram_gb", t.ram_gb);
  t.storage_gb = detail::json_get(j, "storage_gb", t.storage_gb);
  return t;
}

struct ScenarioFile {
  Scenario scenario;
  std::vector<CostSheet> cost_sheets;
};

/// Parses a schema_version 1 scenario document. Relative calibration paths
/// resolve against `base_dir`.
inline ScenarioFile scenario_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  if (!j.is_object()) throw InvalidScenario("scenario must be a JSON object");
  const int version = detail::json_get<int>(j, "schema_version", -1);
  if (version != kScenarioSchemaVersion)
    throw InvalidScenario("unsupported schema_version " + std::to_string(version));

  ScenarioFile out;
  Scenario& s = out.scenario;
  s.label = detail::json_get<std::string>(j, "label", "scenario");
  if (j.contains("topology")) s.topology = topology_from_json(j["topology"]);

  const std::string calib = detail::json_get<std::string>(j, "calibration", "bundled");
  if (calib != "bundled") {
    std::filesystem::path p(calib);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    s.calibration = std::make_shared<const CalibrationTable>(load_calibration(p.string()));
  }

  const Json& u = detail::json_require(j, "units");
  s.units.label = detail::json_get<std::string>(u, "label", "soc");
  s.units.hardware = detail::json_enum(u, "hardware", Hardware::soc_cpu, parse_hardware);
  s.units.engine = detail::json_get<std::string>(u, "engine", "software-encode");
  int default_count = s.topology && is_soc(s.units.hardware) ? s.topology->soc_count : 60;
  s.units.count = detail::json_get<int>(u, "count", default_count);
  if (u.contains("capacity") && !u["capacity"].is_null()) s.units.capacity = u["capacity"].get<int>();
  if (u.contains("service_ms") && !u["service_ms"].is_null()) s.units.service_ms = u["service_ms"].get<double>();
  if (u.contains("power")) s.units.curve = power_curve_from_json(u["power"]);
  s.units.power_gated = detail::json_get<bool>(u, "power_gated", is_soc(s.units.hardware));
  s.units.idle_timeout_ms = detail::json_get<double>(u, "idle_timeout_ms", 1000);
  if (u.contains("low_power_watts") && !u["low_power_watts"].is_null())
    s.units.low_power_watts = u["low_power_watts"].get<double>();

  const Json& w = detail::json_require(j, "workload");
  const std::string kind = detail::json_get<std::string>(w, "kind", "");
  if (kind == "live-streams") {
    s.workload.kind = WorkloadKind::live_streams;
    const std::string video = detail::json_get<std::string>(w, "video", "");
    if (video.empty()) throw InvalidScenario("live-streams workload needs 'video'");
    s.workload.tag = video.rfind("video:", 0) == 0 ? video : "video:" + bundled_video(video).name;
    s.workload.schedule = detail::json_get<std::vector<std::pair<double, int>>>(w, "schedule", {});
    s.workload.lifetime_ms = detail::json_get<double>(w, "lifetime_ms", 60'000);
  } else if (kind == "dl-requests") {
    s.workload.kind = WorkloadKind::dl_requests;
    DlModelProfile m;
    m.name = detail::json_get<std::string>(w, "model", "");
    if (m.name.empty()) throw InvalidScenario("dl-requests workload needs 'model'");
    m.precision = detail::json_enum(w, "precision", Precision::fp32, detail::parse_precision);
    s.workload.tag = m.workload_tag();
  } else {
    throw InvalidScenario("workload.kind must be live-streams or dl-requests");
  }
  if (w.contains("arrivals")) {
    const Json& a = w["arrivals"];
    s.workload.arrivals.kind = detail::json_enum(a, "process", ArrivalKind::constant, detail::parse_arrival_kind);
    s.workload.arrivals.rate_per_s = detail::json_get<double>(a, "rate_per_s", 0);
    s.workload.arrivals.trough_ratio = detail::json_get<double>(a, "trough_ratio", 25);
    s.workload.arrivals.period_ms = detail::json_get<double>(a, "period_ms", 86'400'000);
  }

  if (j.contains("policy")) {
    const Json& p = j["policy"];
    s.placement = detail::json_enum(p, "placement", PlacementPolicy::consolidate, detail::parse_policy);
    s.corun = detail::json_get<bool>(p, "corun", false);
    if (p.contains("queue_limit") && !p["queue_limit"].is_null()) s.queue_limit = p["queue_limit"].get<std::size_t>();
  }
  s.duration_ms = detail::json_get<double>(j, "duration_ms", 60'000);
  s.seed = detail::json_get<std::uint64_t>(j, "seed", 1);
  s.sample_period_ms = detail::json_get<double>(j, "sample_period_ms", 1000);
  s.record_jobs = detail::json_get<bool>(j, "record_jobs", false);

  if (j.contains("cost_sheets"))
    for (const auto& c : j["cost_sheets"]) out.cost_sheets.push_back(cost_sheet_from_json(c));

  s.validate();
  return out;
}

inline ScenarioFile load_scenario(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
  return scenario_from_json(j, std::filesystem::path(path).parent_path());
}

// --- Reports -------------------------------------------------------------------

inline Json to_json(const MetricsReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["label"] = r.label;
  j["seed"] = r.seed;
  j["duration_ms"] = r.duration_ms;
  j["arrivals"] = r.arrivals;
  j["completed"] = r.completed;
  j["rejected"] = r.rejected;
  j["in_flight"] = r.in_flight;
  j["latency_ms"] = {{"mean", r.latency.mean_ms},
                     {"p50", r.latency.p50_ms},
                     {"p95", r.latency.p95_ms},
                     {"p99", r.latency.p99_ms},
                     {"max", r.latency.max_ms}};
  Json trace = Json::array();
  for (const auto& s : r.power_trace.samples()) trace.push_back({s.time_ms, s.watts});
  j["power_trace"] = std::move(trace);
  j["energy_j"] = r.energy_j;
  j["idle_energy_j"] = r.idle_energy_j;
  j["avg_watts"] = r.avg_watts;
  j["busy_fraction"] = r.busy_fraction;
  j["active_units"] = r.active_units;
  j["tpe"] = {{"units", r.tpe.units},
              {"throughput", r.tpe.throughput},
              {"workload_watts", r.tpe.workload_watts},
              {"value", r.tpe.value}};
  Json jobs = Json::array();
  for (const auto& job : r.jobs)
    jobs.push_back({{"id", job.id},
                    {"arrival_ms", job.arrival_ms},
                    {"start_ms", job.start_ms},
                    {"completion_ms", job.completion_ms},
                    {"unit", job.unit},
                    {"rejected", job.rejected}});
  j["jobs"] = std::move(jobs);
  return j;
}

inline MetricsReport report_from_json(const Json& j) {
  MetricsReport r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw InvalidScenario("unsupported report schema_version " + std::to_string(r.schema_version));
    r.label = j.at("label").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.duration_ms = j.at("duration_ms").get<double>();
    r.arrivals = j.at("arrivals").get<std::int64_t>();
    r.completed = j.at("completed").get<std::int64_t>();
    r.rejected = j.at("rejected").get<std::int64_t>();
    r.in_flight = j.at("in_flight").get<std::int64_t>();
    const Json& l = j.at("latency_ms");
    r.latency = {l.at("mean").get<double>(), l.at("p50").get<double>(), l.at("p95").get<double>(),
                 l.at("p99").get<double>(), l.at("max").get<double>()};
    for (const auto& s : j.at("power_trace")) r.power_trace.append(s.at(0).get<double>(), s.at(1).get<double>());
    r.energy_j = j.at("energy_j").get<double>();
    r.idle_energy_j = j.at("idle_energy_j").get<double>();
    r.avg_watts = j.at("avg_watts").get<double>();
    r.busy_fraction = j.at("busy_fraction").get<std::vector<double>>();
    r.active_units = j.at("active_units").get<std::vector<std::pair<double, int>>>();
    const Json& t = j.at("tpe");
    r.tpe = {t.at("units").get<std::string>(), t.at("throughput").get<double>(), t.at("workload_watts").get<double>(),
             t.at("value").get<double>()};
    for (const auto& job : j.at("jobs"))
      r.jobs.push_back({job.at("id").get<std::int64_t>(), job.at("arrival_ms").get<double>(),
                        job.at("start_ms").get<double>(), job.at("completion_ms").get<double>(),
                        job.at("unit").get<int>(), job.at("rejected").get<bool>()});
  } catch (const Json::exception& e) {
    throw InvalidScenario(std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace socsim
