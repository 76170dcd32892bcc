// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "socsim/collab.hpp"
#include "socsim/exact.hpp"
#include "socsim/netmodel.hpp"
#include "socsim/scenario_io.hpp"
#include "socsim/simengine.hpp"
#include "socsim/tco.hpp"

namespace socsim {

enum class Format { table, csv, json };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

/// How a numeric cell is shown in table format. csv/json always carry the
/// unrounded value.
enum class Display { integer, pct1, fixed1, fixed3, raw };

struct Cell {
  std::string text;
  std::optional<double> number;
  std::optional<Exact> exact;
  Display display = Display::raw;

  static Cell str(std::string s) { return Cell{std::move(s), std::nullopt, std::nullopt, Display::raw}; }
  static Cell num(double v, Display d = Display::raw) { return Cell{{}, v, std::nullopt, d}; }
  static Cell ex(const Exact& v, Display d = Display::integer) { return Cell{{}, to_double(v), v, d}; }
  static Cell integer(std::int64_t v) { return Cell{{}, static_cast<double>(v), Exact(v), Display::integer}; }
};

/// Column-oriented document shared by every verb's output.
struct Document {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string display_cell(const Cell& c) {
  if (!c.number) return c.text;
  const double v = *c.number;
  switch (c.display) {
    case Display::integer: return std::to_string(c.exact ? round_to_int(*c.exact) : std::llround(v));
    case Display::pct1: return fixed(v * 100.0, 1) + "%";
    case Display::fixed1: return fixed(v, 1);
    case Display::fixed3: return fixed(v, 3);
    case Display::raw: return format_double(v);
  }
  return {};
}

inline std::string raw_cell(const Cell& c) { return c.number ? format_double(*c.number) : c.text; }

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::csv: {
      std::string out;
      for (std::size_t i = 0; i < doc.columns.size(); ++i) out += (i ? "," : "") + detail::csv_escape(doc.columns[i]);
      out += "\n";
      for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::csv_escape(detail::raw_cell(row[i]));
        out += "\n";
      }
      return out;
    }
    case Format::json: {
      Json rows = Json::array();
      for (const auto& row : doc.rows) {
        Json o = Json::object();
        for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) {
          if (row[i].number)
            o[doc.columns[i]] = *row[i].number;
          else
            o[doc.columns[i]] = row[i].text;
        }
        rows.push_back(std::move(o));
      }
      Json j = {{"schema_version", kReportSchemaVersion}, {"title", doc.title}, {"rows", std::move(rows)}};
      return j.dump(2) + "\n";
    }
    case Format::table: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width;
      for (const auto& c : doc.columns) width.push_back(c.size());
      for (const auto& row : doc.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          line.push_back(detail::display_cell(row[i]));
          if (i < width.size()) width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          std::string c = line[i];
          if (i + 1 < line.size()) c.resize(std::max(c.size(), width[i]), ' ');
          s += (i ? "  " : "") + c;
        }
        return s + "\n";
      };
      std::string out;
      if (!doc.title.empty()) out += doc.title + "\n";
      out += emit(doc.columns);
      for (const auto& line : cells) out += emit(line);
      return out;
    }
  }
  return {};
}

// --- Documents per analysis ----------------------------------------------------

inline Document network_document(const std::vector<VideoProfile>& videos, const CalibrationTable& table,
                                 const ClusterTopology& topo, double overhead = 1.0) {
  Document d;
  d.title = "network bounds at theoretical peak streams";
  d.columns = {"video", "cpu_streams_per_soc", "hw_streams_per_soc", "pcb_used_mbps", "pcb_fraction",
               "server_used_mbps", "server_fraction", "verdict"};
  for (const auto& v : videos) {
    const auto tag = v.workload_tag();
    double cpu = table.lookup({Hardware::soc_cpu, "software-encode", tag, Metric::max_streams_per_soc}).value;
    double hw = table.lookup({Hardware::soc_codec, "hw-codec", tag, Metric::max_streams_per_soc}).value;
    auto b = bottleneck(v, table, topo, overhead);
    d.rows.push_back({Cell::str(v.name), Cell::num(cpu), Cell::num(hw), Cell::num(b.pcb.used_mbps, Display::integer),
                      Cell::num(b.pcb.fraction, Display::pct1), Cell::num(b.server.used_mbps, Display::integer),
                      Cell::num(b.server.fraction, Display::pct1), Cell::str(std::string(to_string(b.verdict)))});
  }
  return d;
}

/// Cost lines as rows, sheets as columns.
inline Document tco_document(const std::vector<CostSheet>& sheets) {
  Document d;
  d.title = "monthly total cost of ownership";
  d.columns = {"item"};
  std::vector<MonthlyTco> t;
  for (const auto& s : sheets) {
    d.columns.push_back(s.label);
    t.push_back(monthly_tco(s));
  }
  auto row = [&](std::string name, auto field) {
    std::vector<Cell> r{Cell::str(std::move(name))};
    for (std::size_t i = 0; i < sheets.size(); ++i) r.push_back(Cell::ex(field(i)));
    d.rows.push_back(std::move(r));
  };
  row("total_capex_usd", [&](std::size_t i) { return sheets[i].total_capex(); });
  row("amortized_capex_usd", [&](std::size_t i) { return t[i].amortized_capex_usd; });
  row("avg_peak_watts", [&](std::size_t i) { return sheets[i].avg_peak_watts; });
  row("monthly_kwh", [&](std::size_t i) { return t[i].kwh; });
  row("base_electricity_usd", [&](std::size_t i) { return t[i].base_electricity_usd; });
  row("pue_overhead_usd", [&](std::size_t i) { return t[i].pue_overhead_usd; });
  row("electricity_usd", [&](std::size_t i) { return t[i].electricity_usd; });
  row("monthly_tco_usd", [&](std::size_t i) { return t[i].total_usd; });
  return d;
}

inline Document tpc_document(const std::vector<TpcRow>& rows) {
  Document d;
  d.title = "throughput per monthly TCO dollar";
  d.columns = {"server", "hardware", "workload", "tpc", "units"};
  for (const auto& r : rows)
    d.rows.push_back({Cell::str(r.server), Cell::str(r.hardware), Cell::str(r.workload),
                      Cell::num(to_double(r.value.value), Display::fixed3),
                      Cell::str(std::string(to_string(r.value.units)))});
  return d;
}

inline Document collab_document(const CollabModel& m, int max_n) {
  Document d;
  d.title = "collaborative inference latency";
  d.columns = {"n", "mode", "compute_ms", "comm_exposed_ms", "total_ms", "comm_share", "speedup"};
  for (int n = 1; n <= max_n; ++n)
    for (auto mode : {CollabMode::serial, CollabMode::pipelined}) {
      auto b = total_latency(m, n, mode);
      d.rows.push_back({Cell::integer(n), Cell::str(std::string(to_string(mode))),
                        Cell::num(to_double(b.compute_ms), Display::fixed1),
                        Cell::num(to_double(b.comm_exposed_ms), Display::fixed1),
                        Cell::num(to_double(b.total_ms), Display::fixed1), Cell::num(to_double(b.comm_share), Display::pct1),
                        Cell::num(to_double(speedup(m, n, mode)), Display::fixed3)});
    }
  return d;
}

inline Document sweep_document(const std::vector<SweepPoint>& points, std::string_view tpe_units) {
  Document d;
  d.title = "proportionality sweep (" + std::string(tpe_units) + ")";
  d.columns = {"load", "tpe", "avg_watts", "workload_watts", "completed", "rejected"};
  for (const auto& p : points)
    d.rows.push_back({Cell::num(p.load), Cell::num(p.tpe, Display::fixed3), Cell::num(p.avg_watts, Display::fixed1),
                      Cell::num(p.workload_watts, Display::fixed1), Cell::integer(p.completed),
                      Cell::integer(p.rejected)});
  return d;
}

/// Simulation report. json is the full report; csv is a flat
/// section,key,value listing that carries every field; table is a summary.
inline std::string render_report(const MetricsReport& r, Format format) {
  switch (format) {
    case Format::json: return to_json(r).dump(2) + "\n";
    case Format::csv: {
      std::string out = "section,key,value\n";
      auto kv = [&](std::string_view sec, std::string_view key, const std::string& v) {
        out += std::string(sec) + "," + std::string(key) + "," + detail::csv_escape(v) + "\n";
      };
      kv("summary", "schema_version", std::to_string(r.schema_version));
      kv("summary", "label", r.label);
      kv("summary", "seed", std::to_string(r.seed));
      kv("summary", "duration_ms", format_double(r.duration_ms));
      kv("summary", "arrivals", std::to_string(r.arrivals));
      kv("summary", "completed", std::to_string(r.completed));
      kv("summary", "rejected", std::to_string(r.rejected));
      kv("summary", "in_flight", std::to_string(r.in_flight));
      kv("latency_ms", "mean", format_double(r.latency.mean_ms));
      kv("latency_ms", "p50", format_double(r.latency.p50_ms));
      kv("latency_ms", "p95", format_double(r.latency.p95_ms));
      kv("latency_ms", "p99", format_double(r.latency.p99_ms));
      kv("latency_ms", "max", format_double(r.latency.max_ms));
      kv("energy", "energy_j", format_double(r.energy_j));
      kv("energy", "idle_energy_j", format_double(r.idle_energy_j));
      kv("energy", "avg_watts", format_double(r.avg_watts));
      kv("tpe", "units", r.tpe.units);
      kv("tpe", "throughput", format_double(r.tpe.throughput));
      kv("tpe", "workload_watts", format_double(r.tpe.workload_watts));
      kv("tpe", "value", format_double(r.tpe.value));
      for (std::size_t i = 0; i < r.busy_fraction.size(); ++i)
        kv("busy_fraction", std::to_string(i), format_double(r.busy_fraction[i]));
      for (const auto& s : r.power_trace.samples()) kv("power_trace", format_double(s.time_ms), format_double(s.watts));
      for (const auto& [t, n] : r.active_units) kv("active_units", format_double(t), std::to_string(n));
      for (const auto& j : r.jobs)
        kv("job", std::to_string(j.id),
           format_double(j.arrival_ms) + ";" + format_double(j.start_ms) + ";" + format_double(j.completion_ms) + ";" +
               std::to_string(j.unit) + ";" + (j.rejected ? "rejected" : "admitted"));
      return out;
    }
    case Format::table: {
      Document d;
      d.title = "simulation: " + r.label;
      d.columns = {"metric", "value"};
      auto add = [&](std::string k, Cell c) { d.rows.push_back({Cell::str(std::move(k)), std::move(c)}); };
      add("arrivals", Cell::integer(r.arrivals));
      add("completed", Cell::integer(r.completed));
      add("rejected", Cell::integer(r.rejected));
      add("in_flight", Cell::integer(r.in_flight));
      add("latency_mean_ms", Cell::num(r.latency.mean_ms, Display::fixed1));
      add("latency_p99_ms", Cell::num(r.latency.p99_ms, Display::fixed1));
      add("energy_j", Cell::num(r.energy_j, Display::fixed1));
      add("avg_watts", Cell::num(r.avg_watts, Display::fixed1));
      add("tpe (" + r.tpe.units + ")", Cell::num(r.tpe.value, Display::fixed3));
      int peak = 0;
      for (const auto& a : r.active_units) peak = std::max(peak, a.second);
      add("peak_active_units", Cell::integer(peak));
      return render(d, Format::table);
    }
  }
  return {};
}

}  // namespace socsim
