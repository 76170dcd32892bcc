// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <future>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socsim/bundled_data.hpp"
#include "socsim/calib.hpp"
#include "socsim/errors.hpp"
#include "socsim/hwmodel.hpp"
#include "socsim/powermodel.hpp"
#include "socsim/rng.hpp"
#include "socsim/trace.hpp"

namespace socsim {

enum class PlacementPolicy { consolidate, spread, random };
enum class WorkloadKind { live_streams, dl_requests };
enum class ArrivalKind { constant, poisson, trace };

inline std::string_view to_string(PlacementPolicy p) {
  switch (p) {
    case PlacementPolicy::consolidate: return "consolidate";
    case PlacementPolicy::spread: return "spread";
    case PlacementPolicy::random: return "random";
  }
  return "?";
}

inline std::string_view to_string(WorkloadKind k) {
  return k == WorkloadKind::live_streams ? "live-streams" : "dl-requests";
}

inline std::string_view to_string(ArrivalKind k) {
  switch (k) {
    case ArrivalKind::constant: return "constant";
    case ArrivalKind::poisson: return "poisson";
    case ArrivalKind::trace: return "trace";
  }
  return "?";
}

struct ArrivalProcess {
  ArrivalKind kind = ArrivalKind::constant;
  double rate_per_s = 0;  // peak rate for trace arrivals
  double trough_ratio = 25;
  double period_ms = 86'400'000;

  bool operator==(const ArrivalProcess&) const = default;
};

struct Workload {
  WorkloadKind kind = WorkloadKind::live_streams;
  std::string tag;  // calibration workload, e.g. "video:V4" or "dl:resnet50-fp32"
  // Live streams: target concurrent stream count from each time on. When
  // empty, streams arrive per `arrivals` and last `lifetime_ms`.
  std::vector<std::pair<double, int>> schedule;
  ArrivalProcess arrivals;
  double lifetime_ms = 60'000;

  bool operator==(const Workload&) const = default;
};

/// Homogeneous pool of compute units (SoCs or GPU partitions).
struct UnitSpec {
  std::string label = "soc";
  Hardware hardware = Hardware::soc_cpu;
  std::string engine = "software-encode";
  int count = 60;
  std::optional<int> capacity;       // concurrent jobs per unit; overrides calibration
  std::optional<double> service_ms;  // DL service time; overrides calibration
  PowerCurve curve = PowerCurve::linear(0, 0);
  bool power_gated = true;
  double idle_timeout_ms = 1000;
  std::optional<double> low_power_watts;  // defaults to curve idle

  bool operator==(const UnitSpec&) const = default;
};

struct Scenario {
  std::string label = "scenario";
  std::optional<TopologySpec> topology;
  std::shared_ptr<const CalibrationTable> calibration;  // null selects the bundled table
  UnitSpec units;
  Workload workload;
  PlacementPolicy placement = PlacementPolicy::consolidate;
  bool corun = false;  // CPU and hardware codec streams on the same SoC
  std::size_t queue_limit = std::numeric_limits<std::size_t>::max();
  double duration_ms = 60'000;
  std::uint64_t seed = 1;
  double sample_period_ms = 1000;
  bool record_jobs = false;

  const CalibrationTable& table() const { return calibration ? *calibration : bundled_calibration(); }

  void validate() const {
    auto bad = [](const std::string& m) { throw InvalidScenario(m); };
    if (!(duration_ms > 0)) bad("duration_ms must be positive");
    if (!(sample_period_ms > 0)) bad("sample_period_ms must be positive");
    if (units.count < 1) bad("unit count must be >= 1");
    if (units.capacity && *units.capacity < 0) bad("capacity must be nonnegative");
    if (units.service_ms && !(*units.service_ms > 0)) bad("service_ms must be positive");
    if (!(units.idle_timeout_ms >= 0)) bad("idle_timeout_ms must be nonnegative");
    if (units.low_power_watts && !(*units.low_power_watts >= 0)) bad("low_power_watts must be nonnegative");
    try {
      units.curve.validate();
    } catch (const InvalidArgument& e) {
      bad(e.what());
    }
    if (topology) {
      try {
        auto topo = build_cluster(*topology);
        if (is_soc(units.hardware) && static_cast<std::size_t>(units.count) != topo.soc_count())
          bad("unit count does not match the topology's SoC count");
      } catch (const InvalidTopology& e) {
        bad(e.what());
      }
    }
    if (workload.tag.empty()) bad("workload tag is required");
    const auto& a = workload.arrivals;
    if (!(a.rate_per_s >= 0)) bad("arrival rate must be nonnegative");
    if (a.kind == ArrivalKind::trace && (!(a.trough_ratio >= 1) || !(a.period_ms > 0)))
      bad("trace arrivals need trough_ratio >= 1 and period_ms > 0");
    if (workload.kind == WorkloadKind::live_streams) {
      double prev = 0;
      for (const auto& [t, n] : workload.schedule) {
        if (!(t >= prev)) bad("schedule times must be nonnegative and nondecreasing");
        if (n < 0) bad("schedule counts must be nonnegative");
        prev = t;
      }
      if (workload.schedule.empty() && !(workload.lifetime_ms > 0)) bad("lifetime_ms must be positive");
    } else if (!workload.schedule.empty()) {
      bad("schedules apply to live streams only");
    }
  }
};

// --- Events and state --------------------------------------------------------

enum class EventKind { arrival, completion, power_state_change, sample, load_step };

struct SimEvent {
  std::int64_t time_us = 0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::sample;
  std::int64_t job = -1;
  int unit = -1;
  std::uint64_t generation = 0;

  double time_ms() const { return static_cast<double>(time_us) / 1000.0; }
};

// Cadence samples run after every state change at the same instant, so a
// sample never stands in for the level held before that instant.
struct EventLater {
  bool operator()(const SimEvent& a, const SimEvent& b) const {
    if (a.time_us != b.time_us) return a.time_us > b.time_us;
    const bool sa = a.kind == EventKind::sample, sb = b.kind == EventKind::sample;
    if (sa != sb) return sa;
    return a.seq > b.seq;
  }
};

struct UnitState {
  int id = 0;
  int load = 0;
  bool low_power = false;
  std::uint64_t generation = 0;  // invalidates pending power-down events
};

struct ClusterState {
  int capacity = 0;
  std::vector<UnitState> units;
};

/// Unit for the next job, or nullopt when every unit is full.
inline std::optional<int> place(const ClusterState& state, PlacementPolicy policy, Rng& rng) {
  switch (policy) {
    case PlacementPolicy::consolidate:
      for (const auto& u : state.units)
        if (u.load < state.capacity) return u.id;
      return std::nullopt;
    case PlacementPolicy::spread: {
      const UnitState* best = nullptr;
      for (const auto& u : state.units)
        if (u.load < state.capacity && (!best || u.load < best->load)) best = &u;
      if (!best) return std::nullopt;
      return best->id;
    }
    case PlacementPolicy::random: {
      std::vector<int> feasible;
      for (const auto& u : state.units)
        if (u.load < state.capacity) feasible.push_back(u.id);
      if (feasible.empty()) return std::nullopt;
      return feasible[rng.below(feasible.size())];
    }
  }
  return std::nullopt;
}

/// Concurrent jobs per unit: calibrated max streams for live transcoding,
/// one in-service request for DL unless overridden.
inline int unit_capacity(const Scenario& s) {
  if (s.units.capacity) return *s.units.capacity;
  if (s.workload.kind == WorkloadKind::dl_requests) return 1;
  const auto& t = s.table();
  int cap = static_cast<int>(
      std::floor(t.lookup({s.units.hardware, s.units.engine, s.workload.tag, Metric::max_streams_per_soc}).value));
  if (s.corun && s.units.hardware == Hardware::soc_cpu)
    cap += static_cast<int>(
        std::floor(t.lookup({Hardware::soc_codec, "hw-codec", s.workload.tag, Metric::max_streams_per_soc}).value));
  return cap;
}

inline double service_time_ms(const Scenario& s) {
  if (s.units.service_ms) return *s.units.service_ms;
  return s.table().lookup({s.units.hardware, s.units.engine, s.workload.tag, Metric::latency_ms}).value;
}

// --- Report --------------------------------------------------------------------

struct LatencyStats {
  double mean_ms = 0;
  double p50_ms = 0;
  double p95_ms = 0;
  double p99_ms = 0;
  double max_ms = 0;

  bool operator==(const LatencyStats&) const = default;
};

struct TpeSummary {
  std::string units;
  double throughput = 0;      // samples/s or mean concurrent streams
  double workload_watts = 0;  // mean draw above the idle baseline
  double value = 0;

  bool operator==(const TpeSummary&) const = default;
};

struct JobRecord {
  std::int64_t id = 0;
  double arrival_ms = 0;
  double start_ms = -1;       // -1 when never started
  double completion_ms = -1;  // -1 when not completed by the horizon
  int unit = -1;              // -1 when rejected or still queued
  bool rejected = false;

  bool operator==(const JobRecord&) const = default;
};

struct MetricsReport {
  int schema_version = 1;
  std::string label;
  std::uint64_t seed = 0;
  double duration_ms = 0;
  std::int64_t arrivals = 0;
  std::int64_t completed = 0;
  std::int64_t rejected = 0;
  std::int64_t in_flight = 0;
  LatencyStats latency;
  PowerTrace power_trace;
  double energy_j = 0;
  double idle_energy_j = 0;
  double avg_watts = 0;
  std::vector<double> busy_fraction;
  std::vector<std::pair<double, int>> active_units;  // (time_ms, units with jobs)
  TpeSummary tpe;
  std::vector<JobRecord> jobs;

  bool operator==(const MetricsReport&) const = default;
};

namespace detail {

inline std::int64_t to_us(double ms) { return std::llround(ms * 1000.0); }
inline double to_ms(std::int64_t us) { return static_cast<double>(us) / 1000.0; }

inline double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0;
  // Nearest rank.
  auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size())));
  if (rank == 0) rank = 1;
  return sorted[std::min(rank, sorted.size()) - 1];
}

class Runner {
 public:
  explicit Runner(const Scenario& s)
      : s_(s),
        live_(s.workload.kind == WorkloadKind::live_streams),
        horizon_us_(to_us(s.duration_ms)),
        arrival_rng_(derive_seed(s.seed, 1)),
        place_rng_(derive_seed(s.seed, 2)) {
    s_.validate();
    state_.capacity = unit_capacity(s_);
    if (!live_) {
      service_us_ = std::max<std::int64_t>(1, to_us(service_time_ms(s_)));
      busy_rate_ = 1000.0 / service_time_ms(s_);
    }
    if (s_.workload.arrivals.kind == ArrivalKind::trace)
      rate_fn_.emplace(s_.workload.arrivals.rate_per_s, s_.workload.arrivals.trough_ratio,
                       s_.workload.arrivals.period_ms, s_.seed);
    for (int i = 0; i < s_.units.count; ++i) state_.units.push_back({i, 0, s_.units.power_gated, 0});
    unit_watts_.resize(state_.units.size());
    busy_since_.assign(state_.units.size(), -1);
    busy_us_.assign(state_.units.size(), 0);
  }

  MetricsReport run() {
    for (std::size_t i = 0; i < state_.units.size(); ++i) unit_watts_[i] = watts_of(state_.units[i]);
    cur_watts_ = total_watts();
    trace_.append(0, cur_watts_);
    active_.push_back({0, 0});

    if (live_ && !s_.workload.schedule.empty()) {
      for (std::size_t i = 0; i < s_.workload.schedule.size(); ++i) {
        auto t = to_us(s_.workload.schedule[i].first);
        if (t < horizon_us_) push({t, 0, EventKind::load_step, static_cast<std::int64_t>(i), -1, 0});
      }
    } else {
      schedule_next_arrival(0, true);
    }
    const std::int64_t sample_us = std::max<std::int64_t>(1, to_us(s_.sample_period_ms));
    for (std::int64_t t = sample_us; t < horizon_us_; t += sample_us) push({t, 0, EventKind::sample, -1, -1, 0});

    while (!events_.empty() && events_.top().time_us <= horizon_us_) {
      SimEvent ev = events_.top();
      events_.pop();
      now_ = ev.time_us;
      switch (ev.kind) {
        case EventKind::arrival: on_arrival(); break;
        case EventKind::completion: on_completion(ev.job, ev.unit); break;
        case EventKind::power_state_change: on_power_down(ev.unit, ev.generation); break;
        case EventKind::sample: record_sample(); break;
        case EventKind::load_step: on_load_step(static_cast<std::size_t>(ev.job)); break;
      }
    }
    now_ = horizon_us_;
    advance_load();
    record_sample();
    return finish();
  }

 private:
  void push(SimEvent ev) {
    ev.seq = next_seq_++;
    events_.push(ev);
  }

  double watts_of(const UnitState& u) const {
    if (u.low_power) return s_.units.low_power_watts.value_or(s_.units.curve.idle_watts);
    double load = live_ ? u.load : u.load * busy_rate_;
    return power_draw(s_.units.curve, load);
  }

  double total_watts() const {
    double w = 0;
    for (double x : unit_watts_) w += x;
    return w;
  }

  // Step change at now_: hold the old level until 1 us before.
  void record_change() {
    double w = total_watts();
    if (w == cur_watts_) return;
    const auto& last = trace_.samples().back();
    const double t = to_ms(now_);
    if (last.time_ms == t) {
      trace_.set_last_watts(w);
    } else {
      const double pre = to_ms(now_ - 1);
      if (pre > last.time_ms) trace_.append(pre, cur_watts_);
      trace_.append(t, w);
    }
    cur_watts_ = w;
  }

  void record_sample() {
    if (trace_.samples().back().time_ms < to_ms(now_)) trace_.append(to_ms(now_), cur_watts_);
  }

  void record_active() {
    int n = 0;
    for (const auto& u : state_.units) n += u.load > 0;
    if (n == active_.back().second) return;
    if (active_.back().first == to_ms(now_))
      active_.back().second = n;
    else
      active_.push_back({to_ms(now_), n});
  }

  void update_unit(int id) {
    auto& u = state_.units[static_cast<std::size_t>(id)];
    unit_watts_[static_cast<std::size_t>(id)] = watts_of(u);
    record_change();
    record_active();
  }

  std::int64_t next_interarrival_us(std::int64_t from) {
    const auto& a = s_.workload.arrivals;
    if (!(a.rate_per_s > 0)) return -1;
    switch (a.kind) {
      case ArrivalKind::constant:
        return -1;  // handled by index in schedule_next_arrival
      case ArrivalKind::poisson:
        return from + std::llround(arrival_rng_.exponential(a.rate_per_s) * 1e6);
      case ArrivalKind::trace: {
        const double max_rate = rate_fn_->max_rate();
        if (!(max_rate > 0)) return -1;
        std::int64_t t = from;
        for (;;) {
          t += std::llround(arrival_rng_.exponential(max_rate) * 1e6);
          if (t >= horizon_us_) return t;
          if (arrival_rng_.uniform() * max_rate < (*rate_fn_)(to_ms(t))) return t;
        }
      }
    }
    return -1;
  }

  void schedule_next_arrival(std::int64_t from, bool first) {
    const auto& a = s_.workload.arrivals;
    std::int64_t t;
    if (a.kind == ArrivalKind::constant) {
      if (!(a.rate_per_s > 0)) return;
      if (!first) ++arrival_index_;
      t = std::llround(static_cast<double>(arrival_index_) * 1e6 / a.rate_per_s);
    } else {
      t = next_interarrival_us(from);
      if (t < 0) return;
    }
    if (t < horizon_us_) push({t, 0, EventKind::arrival, -1, -1, 0});
  }

  std::int64_t new_job() {
    ++arrivals_;
    std::int64_t id = next_job_++;
    if (s_.record_jobs) jobs_.push_back({id, to_ms(now_), -1, -1, -1, false});
    return id;
  }

  void start_job(std::int64_t id, int unit, std::int64_t arrival_us) {
    auto& u = state_.units[static_cast<std::size_t>(unit)];
    if (u.load == 0) busy_since_[static_cast<std::size_t>(unit)] = now_;
    advance_load();
    ++total_load_;
    ++u.load;
    u.low_power = false;
    ++u.generation;
    job_arrival_us_[id] = arrival_us;
    if (s_.record_jobs) {
      jobs_[static_cast<std::size_t>(id)].start_ms = to_ms(now_);
      jobs_[static_cast<std::size_t>(id)].unit = unit;
    }
    update_unit(unit);
  }

  void reject(std::int64_t id) {
    ++rejected_;
    if (s_.record_jobs) jobs_[static_cast<std::size_t>(id)].rejected = true;
  }

  void on_arrival() {
    std::int64_t id = new_job();
    if (auto unit = place(state_, s_.placement, place_rng_)) {
      start_job(id, *unit, now_);
      if (live_) {
        push({now_ + std::max<std::int64_t>(1, to_us(s_.workload.lifetime_ms)), 0, EventKind::completion, id, *unit, 0});
      } else {
        push({now_ + service_us_, 0, EventKind::completion, id, *unit, 0});
      }
    } else if (!live_ && queue_.size() < s_.queue_limit) {
      queue_.push_back(id);
      job_arrival_us_[id] = now_;
    } else {
      reject(id);
    }
    schedule_next_arrival(now_, false);
  }

  void finish_job(std::int64_t id, int unit) {
    auto& u = state_.units[static_cast<std::size_t>(unit)];
    advance_load();
    --total_load_;
    --u.load;
    ++completed_;
    latencies_.push_back(to_ms(now_ - job_arrival_us_.at(id)));
    job_arrival_us_.erase(id);
    if (s_.record_jobs) jobs_[static_cast<std::size_t>(id)].completion_ms = to_ms(now_);
    if (u.load == 0) {
      busy_us_[static_cast<std::size_t>(unit)] += now_ - busy_since_[static_cast<std::size_t>(unit)];
      busy_since_[static_cast<std::size_t>(unit)] = -1;
      if (s_.units.power_gated) {
        if (s_.units.idle_timeout_ms == 0)
          u.low_power = true;
        else
          push({now_ + std::max<std::int64_t>(1, to_us(s_.units.idle_timeout_ms)), 0, EventKind::power_state_change, -1,
                unit, u.generation});
      }
    }
    update_unit(unit);
  }

  void on_completion(std::int64_t id, int unit) {
    finish_job(id, unit);
    if (!live_ && !queue_.empty()) {
      std::int64_t next = queue_.front();
      queue_.pop_front();
      start_job(next, unit, job_arrival_us_.at(next));
      push({now_ + service_us_, 0, EventKind::completion, next, unit, 0});
    }
  }

  void on_power_down(int unit, std::uint64_t generation) {
    auto& u = state_.units[static_cast<std::size_t>(unit)];
    if (u.generation != generation || u.load > 0) return;
    u.low_power = true;
    update_unit(unit);
  }

  void on_load_step(std::size_t step) {
    const int target = s_.workload.schedule[step].second;
    int delta = target - demand_;
    demand_ = target;
    for (; delta > 0; --delta) {
      std::int64_t id = new_job();
      if (auto unit = place(state_, s_.placement, place_rng_)) {
        start_job(id, *unit, now_);
        live_streams_.push_back({id, *unit});
      } else {
        reject(id);
      }
    }
    // Oldest admitted streams leave first.
    for (; delta < 0 && !live_streams_.empty(); ++delta) {
      auto [id, unit] = live_streams_.front();
      live_streams_.pop_front();
      finish_job(id, unit);
    }
  }

  MetricsReport finish() {
    MetricsReport r;
    r.label = s_.label;
    r.seed = s_.seed;
    r.duration_ms = s_.duration_ms;
    r.arrivals = arrivals_;
    r.completed = completed_;
    r.rejected = rejected_;
    r.in_flight = arrivals_ - completed_ - rejected_;

    std::sort(latencies_.begin(), latencies_.end());
    if (!latencies_.empty()) {
      double sum = 0;
      for (double l : latencies_) sum += l;
      r.latency = {sum / static_cast<double>(latencies_.size()), percentile(latencies_, 0.50),
                   percentile(latencies_, 0.95), percentile(latencies_, 0.99), latencies_.back()};
    }

    r.power_trace = trace_;
    r.energy_j = energy_of_trace(trace_);
    const double seconds = to_ms(horizon_us_) / 1000.0;
    r.avg_watts = r.energy_j / seconds;
    r.idle_energy_j = s_.units.curve.idle_watts * s_.units.count * seconds;

    for (std::size_t i = 0; i < state_.units.size(); ++i) {
      std::int64_t busy = busy_us_[i];
      if (busy_since_[i] >= 0) busy += horizon_us_ - busy_since_[i];
      r.busy_fraction.push_back(static_cast<double>(busy) / static_cast<double>(horizon_us_));
    }
    r.active_units = active_;

    // Work done: stream-seconds for live transcoding, completed requests for DL.
    const double workload_j = r.energy_j - r.idle_energy_j;
    r.tpe.workload_watts = workload_j / seconds;
    if (live_) {
      r.tpe.units = std::string(to_string(TpeUnits::streams_per_watt));
      r.tpe.throughput = stream_us_ / static_cast<double>(horizon_us_);
    } else {
      r.tpe.units = std::string(to_string(TpeUnits::samples_per_joule));
      r.tpe.throughput = static_cast<double>(completed_) / seconds;
    }
    r.tpe.value = r.tpe.workload_watts > 0 ? r.tpe.throughput / r.tpe.workload_watts : 0;
    r.jobs = std::move(jobs_);
    return r;
  }

  // Integral of admitted jobs over time (stream-microseconds).
  void advance_load() {
    stream_us_ += static_cast<double>(total_load_) * static_cast<double>(now_ - load_since_us_);
    load_since_us_ = now_;
  }

  const Scenario& s_;
  const bool live_;
  const std::int64_t horizon_us_;
  Rng arrival_rng_;
  Rng place_rng_;
  std::optional<RateFunction> rate_fn_;
  std::int64_t service_us_ = 0;
  double busy_rate_ = 0;

  ClusterState state_;
  std::vector<double> unit_watts_;
  std::vector<std::int64_t> busy_since_;
  std::vector<std::int64_t> busy_us_;
  std::priority_queue<SimEvent, std::vector<SimEvent>, EventLater> events_;
  std::uint64_t next_seq_ = 0;
  std::int64_t now_ = 0;
  std::int64_t arrival_index_ = 0;

  PowerTrace trace_;
  double cur_watts_ = 0;
  std::vector<std::pair<double, int>> active_;

  std::int64_t arrivals_ = 0, completed_ = 0, rejected_ = 0, next_job_ = 0;
  int demand_ = 0;
  std::deque<std::pair<std::int64_t, int>> live_streams_;
  std::deque<std::int64_t> queue_;
  std::map<std::int64_t, std::int64_t> job_arrival_us_;
  std::vector<double> latencies_;
  std::vector<JobRecord> jobs_;
  double stream_us_ = 0;
  std::int64_t total_load_ = 0;
  std::int64_t load_since_us_ = 0;
};

}  // namespace detail

/// Runs one scenario. Single-threaded; identical scenarios (including seed)
/// give identical reports.
inline MetricsReport run(const Scenario& scenario) { return detail::Runner(scenario).run(); }

struct SweepPoint {
  double load = 0;
  double tpe = 0;
  double avg_watts = 0;
  double workload_watts = 0;
  std::int64_t completed = 0;
  std::int64_t rejected = 0;

  bool operator==(const SweepPoint&) const = default;
};

/// Scenario at one load level: a static stream count for live transcoding, an
/// arrival rate (samples/s) for DL requests.
inline Scenario scenario_at_load(const Scenario& tmpl, double load) {
  Scenario s = tmpl;
  if (s.workload.kind == WorkloadKind::live_streams) {
    if (load != std::floor(load)) throw InvalidArgument("live-stream loads must be whole stream counts");
    s.workload.schedule = {{0.0, static_cast<int>(load)}};
  } else {
    s.workload.arrivals.rate_per_s = load;
  }
  return s;
}

/// One independent run per load, executed concurrently; every run keeps the
/// template's seed.
inline std::vector<SweepPoint> proportionality_sweep(const Scenario& tmpl, const std::vector<double>& loads) {
  for (std::size_t i = 0; i < loads.size(); ++i) {
    if (!(loads[i] >= 0)) throw InvalidArgument("sweep loads must be nonnegative");
    if (i > 0 && loads[i] < loads[i - 1]) throw InvalidArgument("sweep loads must be sorted");
  }
  std::vector<Scenario> scenarios;
  for (double l : loads) scenarios.push_back(scenario_at_load(tmpl, l));
  std::vector<std::future<MetricsReport>> futures;
  for (const auto& s : scenarios) futures.push_back(std::async(std::launch::async, [&s] { return run(s); }));
  std::vector<SweepPoint> out;
  for (std::size_t i = 0; i < loads.size(); ++i) {
    MetricsReport r = futures[i].get();
    out.push_back({loads[i], r.tpe.value, r.avg_watts, r.tpe.workload_watts, r.completed, r.rejected});
  }
  return out;
}

}  // namespace socsim
