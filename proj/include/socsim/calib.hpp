// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "socsim/errors.hpp"
#include "socsim/exact.hpp"

namespace socsim {

enum class Hardware { soc_cpu, soc_gpu, soc_dsp, soc_codec, intel_cpu_8core, nvidia_a40, nvidia_a100 };

enum class Metric {
  latency_ms,
  max_streams_per_soc,
  throughput_per_joule,
  streams_per_watt,
  frames_per_joule,
  power_watts,
  cpu_util_pct,
  gpu_util_pct,
  mem_util_pct,
  // subject TpE / baseline TpE, baseline named by the engine tag "vs:<hardware>"
  efficiency_ratio,
  comm_share_pct,
  speedup,
};

enum class Provenance { paper_table, paper_text, paper_figure_approx, user_measured, derived };

namespace detail {

template <typename E, std::size_t N>
struct Vocabulary {
  std::array<std::pair<E, std::string_view>, N> entries;

  std::string_view name(E e) const {
    for (const auto& [k, v] : entries)
      if (k == e) return v;
    return "?";
  }
  std::optional<E> parse(std::string_view s) const {
    for (const auto& [k, v] : entries)
      if (v == s) return k;
    return std::nullopt;
  }
};

inline constexpr Vocabulary<Hardware, 7> kHardware{{{
    {Hardware::soc_cpu, "soc-cpu"},
    {Hardware::soc_gpu, "soc-gpu"},
    {Hardware::soc_dsp, "soc-dsp"},
    {Hardware::soc_codec, "soc-codec"},
    {Hardware::intel_cpu_8core, "intel-cpu-8core"},
    {Hardware::nvidia_a40, "nvidia-a40"},
    {Hardware::nvidia_a100, "nvidia-a100"},
}}};

inline constexpr Vocabulary<Metric, 12> kMetric{{{
    {Metric::latency_ms, "latency-ms"},
    {Metric::max_streams_per_soc, "max-streams-per-soc"},
    {Metric::throughput_per_joule, "throughput-per-joule"},
    {Metric::streams_per_watt, "streams-per-watt"},
    {Metric::frames_per_joule, "frames-per-joule"},
    {Metric::power_watts, "power-watts"},
    {Metric::cpu_util_pct, "cpu-util-pct"},
    {Metric::gpu_util_pct, "gpu-util-pct"},
    {Metric::mem_util_pct, "mem-util-pct"},
    {Metric::efficiency_ratio, "efficiency-ratio"},
    {Metric::comm_share_pct, "comm-share-pct"},
    {Metric::speedup, "speedup"},
}}};

inline constexpr Vocabulary<Provenance, 5> kProvenance{{{
    {Provenance::paper_table, "paper-table"},
    {Provenance::paper_text, "paper-text"},
    {Provenance::paper_figure_approx, "paper-figure-approx"},
    {Provenance::user_measured, "user-measured"},
    {Provenance::derived, "derived"},
}}};

}  // namespace detail

inline std::string_view to_string(Hardware h) { return detail::kHardware.name(h); }
inline std::string_view to_string(Metric m) { return detail::kMetric.name(m); }
inline std::string_view to_string(Provenance p) { return detail::kProvenance.name(p); }
inline std::optional<Hardware> parse_hardware(std::string_view s) { return detail::kHardware.parse(s); }
inline std::optional<Metric> parse_metric(std::string_view s) { return detail::kMetric.parse(s); }
inline std::optional<Provenance> parse_provenance(std::string_view s) { return detail::kProvenance.parse(s); }

inline bool is_soc(Hardware h) {
  return h == Hardware::soc_cpu || h == Hardware::soc_gpu || h == Hardware::soc_dsp || h == Hardware::soc_codec;
}

inline bool is_paper(Provenance p) {
  return p == Provenance::paper_table || p == Provenance::paper_text || p == Provenance::paper_figure_approx;
}

struct CalibKey {
  Hardware hardware;
  std::string engine;
  std::string workload;
  Metric metric;

  auto operator<=>(const CalibKey&) const = default;
  bool operator==(const CalibKey&) const = default;

  std::string describe() const {
    return std::string(to_string(hardware)) + "/" + engine + "/" + workload + "/" + std::string(to_string(metric));
  }
};

struct CalibrationRecord {
  CalibKey key;
  double value = 0;
  std::optional<double> spread;
  Provenance provenance = Provenance::user_measured;
  std::string citation;

  bool operator==(const CalibrationRecord&) const = default;
};

/// Immutable after construction; keys are unique and kept in canonical order.
class CalibrationTable {
 public:
  CalibrationTable() = default;

  /// Throws DuplicateKey rather than overwriting.
  void insert(CalibrationRecord rec) {
    validate(rec);
    auto [it, inserted] = records_.emplace(rec.key, rec);
    if (!inserted) throw DuplicateKey("duplicate calibration key " + rec.key.describe());
  }

  const CalibrationRecord& lookup(const CalibKey& key) const {
    auto it = records_.find(key);
    if (it == records_.end()) throw MissingCalibration("missing calibration for " + key.describe());
    return it->second;
  }

  const CalibrationRecord* find(const CalibKey& key) const {
    auto it = records_.find(key);
    return it == records_.end() ? nullptr : &it->second;
  }

  /// All records for (hardware, workload, metric) regardless of engine tag.
  std::vector<const CalibrationRecord*> select(Hardware hw, std::string_view workload, Metric metric) const {
    std::vector<const CalibrationRecord*> out;
    for (const auto& [k, r] : records_)
      if (k.hardware == hw && k.workload == workload && k.metric == metric) out.push_back(&r);
    return out;
  }

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  bool operator==(const CalibrationTable&) const = default;

  static void validate(const CalibrationRecord& rec) {
    if (rec.key.engine.empty() || rec.key.workload.empty())
      throw InvalidArgument("calibration key parts must be non-empty");
    if (!(rec.value >= 0)) throw NegativeValue("negative value for " + rec.key.describe());
    if (rec.spread && !(*rec.spread >= 0)) throw NegativeValue("negative spread for " + rec.key.describe());
    if (is_paper(rec.provenance) && rec.citation.empty())
      throw InvalidArgument("paper provenance requires a citation: " + rec.key.describe());
  }

 private:
  std::map<CalibKey, CalibrationRecord> records_;
};

inline const CalibrationRecord& lookup(const CalibrationTable& table, const CalibKey& key) {
  return table.lookup(key);
}

inline constexpr std::string_view kCalibHeader = "hardware,engine,workload,metric,value,spread,provenance,citation";

namespace detail {

// Splits one CSV record. Double quotes delimit fields; "" escapes a quote.
inline std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      if (!cur.empty() || was_quoted) throw ParseError(line_no, "unexpected quote");
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      if (was_quoted) throw ParseError(line_no, "text after closing quote");
      cur.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

inline double parse_value(std::string_view s, std::size_t line_no, const char* what) {
  if (!try_parse_decimal(s)) throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(s) + "'");
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

inline std::string quote_csv(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Parses the calibration CSV schema. Errors carry the 1-based line number.
inline CalibrationTable parse_calibration(std::string_view text) {
  CalibrationTable table;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (!header_seen) {
      if (line != kCalibHeader) throw ParseError(line_no, "expected header '" + std::string(kCalibHeader) + "'");
      header_seen = true;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    auto f = detail::split_csv_line(line, line_no);
    if (f.size() != 8) throw ParseError(line_no, "expected 8 fields, got " + std::to_string(f.size()));
    auto hw = parse_hardware(f[0]);
    if (!hw) throw ParseError(line_no, "unknown hardware '" + f[0] + "'");
    if (f[1].empty()) throw ParseError(line_no, "empty engine");
    if (f[2].empty()) throw ParseError(line_no, "empty workload");
    auto metric = parse_metric(f[3]);
    if (!metric) throw ParseError(line_no, "unknown metric '" + f[3] + "'");
    auto prov = parse_provenance(f[6]);
    if (!prov) throw ParseError(line_no, "unknown provenance '" + f[6] + "'");

    CalibrationRecord rec;
    rec.key = CalibKey{*hw, f[1], f[2], *metric};
    if (!f[4].empty() && f[4][0] == '-') throw NegativeValue("line " + std::to_string(line_no) + ": negative value");
    rec.value = detail::parse_value(f[4], line_no, "value");
    if (!f[5].empty()) {
      if (f[5][0] == '-') throw NegativeValue("line " + std::to_string(line_no) + ": negative spread");
      rec.spread = detail::parse_value(f[5], line_no, "spread");
    }
    rec.provenance = *prov;
    rec.citation = f[7];
    if (is_paper(rec.provenance) && rec.citation.empty())
      throw ParseError(line_no, "paper provenance requires a citation");
    try {
      table.insert(std::move(rec));
    } catch (const DuplicateKey& e) {
      throw DuplicateKey("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw ParseError(1, "missing header");
  return table;
}

inline CalibrationTable load_calibration(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open calibration file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_calibration(ss.str());
}

/// Canonical CSV: header, rows in key order, citations always quoted.
inline std::string serialize_calibration(const CalibrationTable& table) {
  std::string out(kCalibHeader);
  out += '\n';
  for (const auto& [key, rec] : table) {
    out += to_string(key.hardware);
    out += ',';
    out += key.engine;
    out += ',';
    out += key.workload;
    out += ',';
    out += to_string(key.metric);
    out += ',';
    out += format_double(rec.value);
    out += ',';
    if (rec.spread) out += format_double(*rec.spread);
    out += ',';
    out += to_string(rec.provenance);
    out += ',';
    out += detail::quote_csv(rec.citation);
    out += '\n';
  }
  return out;
}

// --- Workload profiles -------------------------------------------------------

struct VideoProfile {
  std::string name;  // "V1".."V6" for the bundled set
  std::string title;
  int width = 0;
  int height = 0;
  double fps = 0;
  double entropy = 0;  // bits / pixel / s
  double source_bitrate_kbps = 0;
  double target_bitrate_kbps = 0;

  std::string workload_tag() const { return "video:" + name; }
};

enum class Precision { fp32, int8 };

struct DlModelProfile {
  std::string name;  // e.g. "resnet50"
  Precision precision = Precision::fp32;
  std::string task;

  std::string workload_tag() const {
    return "dl:" + name + (precision == Precision::fp32 ? "-fp32" : "-int8");
  }
};

}  // namespace socsim
