// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socsim/calib.hpp"
#include "socsim/errors.hpp"

namespace socsim {

enum class CurveShape { linear, floor_plus_slope, table };

inline std::string_view to_string(CurveShape s) {
  switch (s) {
    case CurveShape::linear: return "linear";
    case CurveShape::floor_plus_slope: return "floor-plus-slope";
    case CurveShape::table: return "table";
  }
  return "?";
}

/// Load-to-watts mapping for one compute unit.
///
/// linear:            idle + slope * load
/// floor-plus-slope:  max(floor, idle + slope * load); GPUs that sit in a
///                    high-power state regardless of how little work they get
/// table:             piecewise-linear through (load, watts) points
struct PowerCurve {
  CurveShape shape = CurveShape::linear;
  double idle_watts = 0;
  double watts_per_unit_load = 0;
  double floor_watts = 0;
  std::vector<std::pair<double, double>> points;
  std::string load_unit = "streams";

  static PowerCurve linear(double idle, double slope, std::string unit = "streams") {
    PowerCurve c;
    c.shape = CurveShape::linear;
    c.idle_watts = idle;
    c.watts_per_unit_load = slope;
    c.load_unit = std::move(unit);
    c.validate();
    return c;
  }

  static PowerCurve floor_plus_slope(double idle, double slope, double floor, std::string unit = "streams") {
    PowerCurve c;
    c.shape = CurveShape::floor_plus_slope;
    c.idle_watts = idle;
    c.watts_per_unit_load = slope;
    c.floor_watts = floor;
    c.load_unit = std::move(unit);
    c.validate();
    return c;
  }

  static PowerCurve table(std::vector<std::pair<double, double>> pts, std::string unit = "streams") {
    PowerCurve c;
    c.shape = CurveShape::table;
    c.points = std::move(pts);
    c.idle_watts = c.points.empty() ? 0 : c.points.front().second;
    c.load_unit = std::move(unit);
    c.validate();
    return c;
  }

  void validate() const {
    if (!(idle_watts >= 0) || !(watts_per_unit_load >= 0) || !(floor_watts >= 0))
      throw InvalidArgument("power curve watt fields must be nonnegative");
    if (shape == CurveShape::table) {
      if (points.empty()) throw InvalidArgument("table power curve needs at least one point");
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first >= 0) || !(points[i].second >= 0))
          throw InvalidArgument("table power curve points must be nonnegative");
        if (i > 0 && !(points[i].first > points[i - 1].first))
          throw InvalidArgument("table power curve loads must be strictly increasing");
        if (i > 0 && points[i].second < points[i - 1].second)
          throw InvalidArgument("table power curve watts must be nondecreasing");
      }
    }
  }

  bool operator==(const PowerCurve&) const = default;
};

inline double power_draw(const PowerCurve& curve, double load) {
  if (!(load >= 0)) throw InvalidArgument("load must be nonnegative");
  switch (curve.shape) {
    case CurveShape::linear:
      return curve.idle_watts + curve.watts_per_unit_load * load;
    case CurveShape::floor_plus_slope:
      return std::max(curve.floor_watts, curve.idle_watts + curve.watts_per_unit_load * load);
    case CurveShape::table: {
      const auto& p = curve.points;
      if (load < p.front().first || load > p.back().first)
        throw OutOfDomain("load " + format_double(load) + " outside table domain");
      auto hi = std::lower_bound(p.begin(), p.end(), load,
                                 [](const std::pair<double, double>& pt, double l) { return pt.first < l; });
      if (hi->first == load) return hi->second;
      auto lo = hi - 1;
      double t = (load - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  return 0;
}

/// Draw above the idle baseline; the quantity workload efficiency is
/// computed against.
inline double workload_power(const PowerCurve& curve, double load) {
  return power_draw(curve, load) - curve.idle_watts;
}

struct PowerSample {
  double time_ms = 0;
  double watts = 0;

  bool operator==(const PowerSample&) const = default;
};

/// Power samples with strictly increasing timestamps.
class PowerTrace {
 public:
  PowerTrace() = default;
  explicit PowerTrace(std::vector<PowerSample> samples) {
    for (const auto& s : samples) append(s.time_ms, s.watts);
  }

  void append(double time_ms, double watts) {
    if (!(watts >= 0)) throw InvalidArgument("trace watts must be nonnegative");
    if (!samples_.empty() && !(time_ms > samples_.back().time_ms))
      throw InvalidArgument("trace timestamps must be strictly increasing");
    samples_.push_back({time_ms, watts});
  }

  /// Replaces the watts of the last sample (same-instant state changes).
  void set_last_watts(double watts) {
    if (samples_.empty()) throw InvalidArgument("empty trace");
    if (!(watts >= 0)) throw InvalidArgument("trace watts must be nonnegative");
    samples_.back().watts = watts;
  }

  const std::vector<PowerSample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  bool operator==(const PowerTrace&) const = default;

 private:
  std::vector<PowerSample> samples_;
};

/// Trapezoidal integral, joules.
inline double energy_of_trace(const PowerTrace& trace) {
  const auto& s = trace.samples();
  if (s.size() < 2) throw TooFewSamples("energy_of_trace needs at least two samples");
  double joules = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    joules += 0.5 * (s[i].watts + s[i - 1].watts) * (s[i].time_ms - s[i - 1].time_ms) / 1000.0;
  return joules;
}

// --- Throughput per energy ---------------------------------------------------

enum class TpeUnits { streams_per_watt, frames_per_joule, samples_per_joule };

inline std::string_view to_string(TpeUnits u) {
  switch (u) {
    case TpeUnits::streams_per_watt: return "streams/W";
    case TpeUnits::frames_per_joule: return "frames/J";
    case TpeUnits::samples_per_joule: return "samples/J";
  }
  return "?";
}

inline TpeUnits units_for(Metric m) {
  switch (m) {
    case Metric::streams_per_watt: return TpeUnits::streams_per_watt;
    case Metric::frames_per_joule: return TpeUnits::frames_per_joule;
    case Metric::throughput_per_joule: return TpeUnits::samples_per_joule;
    default: throw UnitMismatch("metric " + std::string(to_string(m)) + " is not a throughput-per-energy metric");
  }
}

struct TpEValue {
  double numerator = 0;    // throughput
  double denominator = 1;  // workload watts (or joules per second)
  double value = 0;
  TpeUnits units = TpeUnits::streams_per_watt;
};

/// Throughput per unit of workload power. `idle_watts` is subtracted from the
/// measured draw before dividing.
inline TpEValue tpe(double throughput, double power_or_energy, TpeUnits units, double idle_watts = 0) {
  if (throughput < 0) throw InvalidArgument("throughput must be nonnegative");
  double denom = power_or_energy - idle_watts;
  if (!(denom > 0)) throw ZeroDenominator("workload power must be positive after removing idle draw");
  return TpEValue{throughput, denom, throughput / denom, units};
}

inline double efficiency_ratio(const TpEValue& a, const TpEValue& b) {
  if (a.units != b.units)
    throw UnitMismatch(std::string("cannot compare ") + std::string(to_string(a.units)) + " with " +
                       std::string(to_string(b.units)));
  if (!(b.value > 0)) throw ZeroDenominator("baseline efficiency must be positive");
  return a.value / b.value;
}

/// TpE of a curve at a given load, idle excluded.
inline TpEValue curve_tpe(const PowerCurve& curve, double load, TpeUnits units) {
  return tpe(load, power_draw(curve, load), units, curve.idle_watts);
}

/// Zero-idle (or given idle) linear curve whose efficiency equals `tpe_value`
/// at every load.
inline PowerCurve linear_curve_from_tpe(double tpe_value, double idle_watts = 0, std::string unit = "streams") {
  if (!(tpe_value > 0)) throw InvalidArgument("efficiency must be positive");
  return PowerCurve::linear(idle_watts, 1.0 / tpe_value, std::move(unit));
}

/// Floor set so that efficiency at `light_load` equals `light_tpe`; slope set
/// from the full-load efficiency (0 when unknown).
inline PowerCurve floor_curve_from_points(double light_load, double light_tpe, double full_tpe = 0,
                                          double idle_watts = 0, std::string unit = "streams") {
  if (!(light_load > 0) || !(light_tpe > 0)) throw InvalidArgument("light-load point must be positive");
  double slope = full_tpe > 0 ? 1.0 / full_tpe : 0.0;
  double floor = idle_watts + light_load / light_tpe;
  return PowerCurve::floor_plus_slope(idle_watts, slope, floor, std::move(unit));
}

namespace detail {

// "vs:nvidia-a100/bs64" -> ("nvidia-a100", "bs64")
inline std::optional<std::pair<Hardware, std::string>> parse_baseline(std::string_view engine) {
  if (engine.substr(0, 3) != "vs:") return std::nullopt;
  auto rest = engine.substr(3);
  auto slash = rest.find('/');
  auto hw = parse_hardware(rest.substr(0, slash));
  if (!hw) return std::nullopt;
  return std::make_pair(*hw, slash == std::string_view::npos ? std::string() : std::string(rest.substr(slash + 1)));
}

inline std::optional<double> resolve_tpe_impl(const CalibrationTable& table, Hardware hw, std::string_view context,
                                              std::string_view workload, Metric metric,
                                              std::set<std::pair<Hardware, std::string>>& visiting) {
  auto node = std::make_pair(hw, std::string(context));
  if (visiting.count(node)) return std::nullopt;
  visiting.insert(node);

  // Direct anchor (context-free records only).
  if (context.empty()) {
    auto direct = table.select(hw, workload, metric);
    if (direct.size() == 1) return direct.front()->value;
    if (direct.size() > 1)
      throw MissingCalibration("ambiguous " + std::string(to_string(metric)) + " records for " +
                               std::string(to_string(hw)) + " / " + std::string(workload));
  }

  for (const auto& [key, rec] : table) {
    if (key.metric != Metric::efficiency_ratio || key.workload != workload) continue;
    auto base = parse_baseline(key.engine);
    if (!base) continue;
    // hw is the subject: hw = ratio * baseline
    if (key.hardware == hw && context.empty()) {
      if (auto b = resolve_tpe_impl(table, base->first, base->second, workload, metric, visiting))
        return rec.value * *b;
    }
    // hw is the baseline: baseline = subject / ratio
    if (base->first == hw && base->second == context && rec.value > 0) {
      if (auto s = resolve_tpe_impl(table, key.hardware, "", workload, metric, visiting)) return *s / rec.value;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Efficiency of `hw` on `workload`, either recorded directly or implied by
/// chained efficiency-ratio records back to a recorded anchor. `context`
/// selects a baseline variant such as "bs64".
inline TpEValue resolve_tpe(const CalibrationTable& table, Hardware hw, std::string_view workload, Metric metric,
                            std::string_view context = "") {
  const TpeUnits units = units_for(metric);
  std::set<std::pair<Hardware, std::string>> visiting;
  auto v = detail::resolve_tpe_impl(table, hw, context, workload, metric, visiting);
  if (!v)
    throw MissingCalibration("no " + std::string(to_string(metric)) + " anchor for " + std::string(to_string(hw)) +
                             (context.empty() ? "" : "/" + std::string(context)) + " / " + std::string(workload));
  return TpEValue{*v, 1.0, *v, units};
}

}  // namespace socsim
