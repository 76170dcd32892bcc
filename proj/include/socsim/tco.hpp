// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socsim/calib.hpp"
#include "socsim/errors.hpp"
#include "socsim/exact.hpp"

namespace socsim {

struct CapexComponent {
  std::string name;
  Exact usd;

  bool operator==(const CapexComponent&) const = default;
};

/// One server's monthly cost inputs. All arithmetic stays exact; rounding
/// happens only when a report is printed.
struct CostSheet {
  std::string label;
  std::vector<CapexComponent> capex;
  int lifetime_months = 36;
  Exact avg_peak_watts = 0;
  Exact utilization = Exact(1, 2);
  Exact usd_per_kwh = Exact(786, 10000);
  Exact pue = 2;

  void validate() const {
    if (capex.empty()) throw InvalidArgument(label + ": capex components must be nonempty");
    for (const auto& c : capex)
      if (c.usd < 0) throw NegativeValue(label + ": capex component " + c.name + " is negative");
    if (lifetime_months <= 0) throw InvalidArgument(label + ": lifetime_months must be > 0");
    if (avg_peak_watts < 0) throw NegativeValue(label + ": avg_peak_watts is negative");
    if (utilization < 0 || utilization > 1) throw InvalidArgument(label + ": utilization must be in [0, 1]");
    if (usd_per_kwh < 0) throw NegativeValue(label + ": electricity price is negative");
    if (pue < 1) throw InvalidArgument(label + ": pue must be >= 1");
  }

  Exact total_capex() const {
    Exact sum = 0;
    for (const auto& c : capex) sum += c.usd;
    return sum;
  }

  bool operator==(const CostSheet&) const = default;
};

inline Exact amortized_capex(const CostSheet& sheet) {
  sheet.validate();
  return sheet.total_capex() / sheet.lifetime_months;
}

/// 30-day months of 24 h.
inline Exact monthly_energy_kwh(const Exact& avg_peak_watts, const Exact& utilization) {
  if (avg_peak_watts < 0) throw NegativeValue("watts must be nonnegative");
  if (utilization < 0 || utilization > 1) throw InvalidArgument("utilization must be in [0, 1]");
  return avg_peak_watts * utilization * 24 * 30 / 1000;
}

/// Grid cost scaled by PUE; base + base * (pue - 1).
inline Exact monthly_electricity_cost(const Exact& kwh, const Exact& usd_per_kwh, const Exact& pue) {
  if (pue < 1) throw InvalidArgument("pue must be >= 1");
  if (kwh < 0 || usd_per_kwh < 0) throw NegativeValue("energy and price must be nonnegative");
  return kwh * usd_per_kwh * pue;
}

struct MonthlyTco {
  std::string label;
  Exact amortized_capex_usd;
  Exact kwh;
  Exact base_electricity_usd;
  Exact pue_overhead_usd;
  Exact electricity_usd;
  Exact total_usd;
};

inline MonthlyTco monthly_tco(const CostSheet& sheet) {
  MonthlyTco t;
  t.label = sheet.label;
  t.amortized_capex_usd = amortized_capex(sheet);
  t.kwh = monthly_energy_kwh(sheet.avg_peak_watts, sheet.utilization);
  t.base_electricity_usd = t.kwh * sheet.usd_per_kwh;
  t.electricity_usd = monthly_electricity_cost(t.kwh, sheet.usd_per_kwh, sheet.pue);
  t.pue_overhead_usd = t.electricity_usd - t.base_electricity_usd;
  t.total_usd = t.amortized_capex_usd + t.electricity_usd;
  return t;
}

enum class TpcUnits { streams_per_usd, frames_per_s_per_usd };

inline std::string_view to_string(TpcUnits u) {
  return u == TpcUnits::streams_per_usd ? "streams/$" : "frames/s/$";
}

struct TpcValue {
  Exact value;
  TpcUnits units = TpcUnits::streams_per_usd;
};

inline TpcValue tpc(const Exact& throughput, const MonthlyTco& tco, TpcUnits units = TpcUnits::streams_per_usd) {
  if (!(tco.total_usd > 0)) throw ZeroDenominator("monthly TCO must be positive");
  if (throughput < 0) throw InvalidArgument("throughput must be nonnegative");
  return TpcValue{throughput / tco.total_usd, units};
}

/// Whole-cluster live-transcoding streams: per-SoC CPU capacity times SoC count.
inline Exact cluster_live_streams(const VideoProfile& video, const CalibrationTable& table, int soc_count = 60) {
  const auto& rec = table.lookup({Hardware::soc_cpu, "software-encode", video.workload_tag(), Metric::max_streams_per_soc});
  return exact_from_double(rec.value) * soc_count;
}

/// Bundled sheets; average peak watts come from the calibration table so a
/// user-supplied table can override them.
inline std::vector<CostSheet> bundled_cost_sheets(const CalibrationTable& table) {
  auto watts = [&](Hardware hw) {
    return exact_from_double(table.lookup({hw, "server-peak", "video:V5", Metric::power_watts}).value);
  };
  CostSheet edge;
  edge.label = "edge-server";
  edge.capex = {{"cpu", 2740}, {"dram", 3540}, {"storage", 1220}, {"gpu", 35192}, {"others", 5544}};
  edge.avg_peak_watts = watts(Hardware::nvidia_a40);

  CostSheet no_gpu;
  no_gpu.label = "edge-server-no-gpu";
  no_gpu.capex = {{"cpu", 2740}, {"dram", 3540}, {"storage", 1220}, {"gpu", 0}, {"others", 5544}};
  no_gpu.avg_peak_watts = watts(Hardware::intel_cpu_8core);

  CostSheet soc;
  soc.label = "soc-cluster";
  soc.capex = {{"soc", 24489}, {"dram", 7075}, {"storage", 689}, {"pcb-esb", 1923}, {"others", 2104}};
  soc.avg_peak_watts = watts(Hardware::soc_cpu);

  return {edge, no_gpu, soc};
}

/// Published live-transcoding TpC of the Intel CPU on both edge-server
/// variants (streams/$, V1..V6). Reference values for the cross-sheet check.
struct PublishedIntelTpc {
  std::string video;
  double with_gpu_sheet;
  double without_gpu_sheet;
};

inline const std::vector<PublishedIntelTpc>& published_intel_live_tpc() {
  static const std::vector<PublishedIntelTpc> rows = {
      {"V1", 0.180, 0.627}, {"V2", 0.223, 0.777}, {"V3", 0.057, 0.200},
      {"V4", 0.101, 0.351}, {"V5", 0.042, 0.146}, {"V6", 0.013, 0.047},
  };
  return rows;
}

// --- Report shapes -------------------------------------------------------------

namespace detail {

inline std::string exact_cell(const Exact& x, bool rounded) {
  return rounded ? std::to_string(round_to_int(x)) : format_double(to_double(x));
}

}  // namespace detail

/// One row per cost line, one column per sheet. `rounded` prints whole
/// dollars / kWh.
inline std::string tco_table_csv(const std::vector<CostSheet>& sheets, bool rounded = true) {
  std::vector<MonthlyTco> t;
  for (const auto& s : sheets) t.push_back(monthly_tco(s));
  std::string out = "item";
  for (const auto& s : sheets) out += "," + s.label;
  out += "\n";

  // Union of component names in first-seen order.
  std::vector<std::string> names;
  for (const auto& s : sheets)
    for (const auto& c : s.capex)
      if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
  for (const auto& n : names) {
    out += "capex:" + n;
    for (const auto& s : sheets) {
      Exact v = 0;
      for (const auto& c : s.capex)
        if (c.name == n) v += c.usd;
      out += "," + detail::exact_cell(v, rounded);
    }
    out += "\n";
  }
  auto row = [&](std::string_view name, auto field) {
    out += std::string(name);
    for (std::size_t i = 0; i < sheets.size(); ++i) out += "," + detail::exact_cell(field(i), rounded);
    out += "\n";
  };
  row("total_capex", [&](std::size_t i) { return sheets[i].total_capex(); });
  row("amortized_capex", [&](std::size_t i) { return t[i].amortized_capex_usd; });
  row("avg_peak_watts", [&](std::size_t i) { return sheets[i].avg_peak_watts; });
  row("monthly_kwh", [&](std::size_t i) { return t[i].kwh; });
  row("base_electricity", [&](std::size_t i) { return t[i].base_electricity_usd; });
  row("pue_overhead", [&](std::size_t i) { return t[i].pue_overhead_usd; });
  row("electricity", [&](std::size_t i) { return t[i].electricity_usd; });
  row("monthly_tco", [&](std::size_t i) { return t[i].total_usd; });
  return out;
}

struct TpcRow {
  std::string server;
  std::string hardware;
  std::string workload;
  TpcValue value;
};

inline std::string tpc_table_csv(const std::vector<TpcRow>& rows) {
  std::string out = "server,hardware,workload,tpc,units\n";
  for (const auto& r : rows)
    out += r.server + "," + r.hardware + "," + r.workload + "," + format_double(to_double(r.value.value)) + "," +
           std::string(to_string(r.value.units)) + "\n";
  return out;
}

/// SoC-cluster live-transcoding TpC column for the given videos.
inline std::vector<TpcRow> soc_live_tpc_rows(const std::vector<VideoProfile>& videos, const CalibrationTable& table,
                                             const MonthlyTco& soc_tco, int soc_count = 60) {
  std::vector<TpcRow> rows;
  for (const auto& v : videos)
    rows.push_back({soc_tco.label, "soc-cpu", v.workload_tag(), tpc(cluster_live_streams(v, table, soc_count), soc_tco)});
  return rows;
}

}  // namespace socsim
