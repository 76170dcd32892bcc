// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "socsim/scenario_io.hpp"
#include "socsim/simengine.hpp"
#include "socsim/trace.hpp"

using namespace socsim;

namespace {

Scenario live_static(const std::string& video, int streams, PlacementPolicy p = PlacementPolicy::consolidate) {
  Scenario s;
  s.label = "live";
  s.units.curve = PowerCurve::linear(0, 2);
  s.workload.tag = "video:" + video;
  s.workload.schedule = {{0, streams}};
  s.placement = p;
  s.duration_ms = 10'000;
  return s;
}

Scenario dl(double rate, ArrivalKind kind = ArrivalKind::constant) {
  Scenario s;
  s.label = "dl";
  s.units.hardware = Hardware::soc_gpu;
  s.units.engine = "tflite";
  s.units.curve = PowerCurve::linear(0, 1.0 / 18, "samples/s");
  s.workload.kind = WorkloadKind::dl_requests;
  s.workload.tag = "dl:resnet50-fp32";
  s.workload.arrivals = {kind, rate};
  s.duration_ms = 20'000;
  return s;
}

int final_active(const MetricsReport& r) { return r.active_units.back().second; }

// Random scenario generator for property tests.
Scenario random_scenario(Rng& rng) {
  Scenario s;
  s.record_jobs = true;
  s.seed = rng.next_u64();
  s.units.count = 1 + static_cast<int>(rng.below(12));
  s.placement = static_cast<PlacementPolicy>(rng.below(3));
  s.duration_ms = 500 + rng.uniform() * 5000;
  s.sample_period_ms = 50 + rng.uniform() * 500;
  s.units.power_gated = rng.below(2) == 0;
  s.units.idle_timeout_ms = rng.uniform() * 300;
  s.units.curve = PowerCurve::floor_plus_slope(rng.uniform() * 2, rng.uniform(), rng.uniform() * 5);
  const auto kind = static_cast<ArrivalKind>(rng.below(3));
  if (rng.below(2) == 0) {
    s.workload.kind = WorkloadKind::dl_requests;
    s.workload.tag = "dl:resnet50-fp32";
    s.units.hardware = Hardware::soc_gpu;
    s.units.engine = "tflite";
    s.units.service_ms = 1 + rng.uniform() * 200;
    s.units.capacity = 1 + static_cast<int>(rng.below(3));
    s.queue_limit = rng.below(3) == 0 ? rng.below(5) : std::numeric_limits<std::size_t>::max();
    s.workload.arrivals = {kind, rng.uniform() * 80, 1 + rng.uniform() * 30, 200 + rng.uniform() * 4000};
  } else {
    s.workload.tag = "video:V" + std::to_string(1 + rng.below(6));
    if (rng.below(2) == 0) {
      double t = 0;
      for (int k = 0; k < 4; ++k) {
        s.workload.schedule.push_back({t, static_cast<int>(rng.below(40))});
        t += rng.uniform() * s.duration_ms / 3;
      }
    } else {
      s.workload.arrivals = {kind, rng.uniform() * 30, 1 + rng.uniform() * 30, 200 + rng.uniform() * 4000};
      s.workload.lifetime_ms = 1 + rng.uniform() * 2000;
    }
  }
  return s;
}

}  // namespace

TEST(Placement, ThreeV4StreamsShareOneSoc) {
  auto s = live_static("V4", 3);
  s.record_jobs = true;
  auto r = run(s);
  EXPECT_EQ(final_active(r), 1);
  for (const auto& j : r.jobs) EXPECT_EQ(j.unit, 0);
}

TEST(Placement, ConsolidateActivatesCeilDemandOverCapacity) {
  EXPECT_EQ(final_active(run(live_static("V5", 10))), 4);  // 3 per SoC
  for (int n : {1, 9, 10, 61, 179})
    EXPECT_EQ(final_active(run(live_static("V5", n))), (n + 2) / 3) << n;
  EXPECT_EQ(final_active(run(live_static("V5", 10, PlacementPolicy::spread))), 10);
}

TEST(Placement, RejectsBeyondClusterCapacity) {
  auto r = run(live_static("V6", 61));
  EXPECT_EQ(r.rejected, 1);
  EXPECT_EQ(r.in_flight, 60);
  EXPECT_EQ(run(live_static("V4", 540)).rejected, 0);
  EXPECT_EQ(run(live_static("V4", 545)).rejected, 5);
}

TEST(Placement, PlaceDirect) {
  ClusterState st{2, {{0, 2, false, 0}, {1, 1, false, 0}, {2, 0, false, 0}}};
  Rng rng(1);
  EXPECT_EQ(place(st, PlacementPolicy::consolidate, rng), 1);
  EXPECT_EQ(place(st, PlacementPolicy::spread, rng), 2);
  for (int i = 0; i < 50; ++i) EXPECT_NE(place(st, PlacementPolicy::random, rng), 0);
  st.units = {{0, 2, false, 0}};
  EXPECT_FALSE(place(st, PlacementPolicy::random, rng));
}

TEST(Capacity, CorunAddsCodecCapacity) {
  auto s = live_static("V4", 1);
  EXPECT_EQ(unit_capacity(s), 9);
  s.corun = true;
  EXPECT_EQ(unit_capacity(s), 9 + 16);
  s.units.capacity = 4;
  EXPECT_EQ(unit_capacity(s), 4);
}

TEST(Capacity, MissingCalibrationIsAnError) {
  auto s = live_static("V4", 1);
  s.units.hardware = Hardware::soc_dsp;
  EXPECT_THROW(run(s), MissingCalibration);
  auto d = dl(1);
  d.workload.tag = "dl:yolov5x-fp32";
  EXPECT_THROW(run(d), MissingCalibration);
}

TEST(Validation, RejectsBadScenarios) {
  auto s = live_static("V4", 1);
  s.duration_ms = 0;
  EXPECT_THROW(run(s), InvalidScenario);
  s = live_static("V4", 1);
  s.topology = TopologySpec{};
  s.units.count = 59;
  EXPECT_THROW(run(s), InvalidScenario);
  s = live_static("V4", 1);
  s.workload.schedule = {{10, 1}, {5, 2}};
  EXPECT_THROW(run(s), InvalidScenario);
  auto d = dl(1);
  d.workload.schedule = {{0, 1}};
  EXPECT_THROW(run(d), InvalidScenario);
}

TEST(Energy, ZeroArrivalsGiveIdleEnergyOnly) {
  auto s = dl(0);
  s.units.curve = PowerCurve::linear(1.5, 0.1, "samples/s");
  s.units.power_gated = false;
  auto r = run(s);
  EXPECT_EQ(r.arrivals, 0);
  EXPECT_NEAR(r.energy_j, 1.5 * 60 * 20, 1e-9);
  EXPECT_NEAR(r.idle_energy_j, r.energy_j, 1e-9);
  EXPECT_EQ(r.tpe.value, 0);
}

TEST(Energy, PowerGatingAfterIdleTimeout) {
  // One 100 ms request at t = 0, then the unit idles 1 s at 1 W before
  // dropping to 0.1 W for the rest of the 10 s run.
  auto s = dl(0.001);
  s.units.count = 1;
  s.units.service_ms = 100;
  s.units.curve = PowerCurve::linear(1, 0, "samples/s");
  s.units.low_power_watts = 0.1;
  s.duration_ms = 10'000;
  auto r = run(s);
  EXPECT_EQ(r.completed, 1);
  EXPECT_NEAR(r.energy_j, 1.1 * 1 + 8.9 * 0.1, 1e-5);
}

TEST(Energy, SocGpuAnchor) {
  auto r = run(dl(5));
  EXPECT_NEAR(r.tpe.value, 18, 1e-3);
  EXPECT_EQ(r.tpe.units, "samples/J");
  EXPECT_EQ(r.completed, 100);
  EXPECT_NEAR(r.latency.p50_ms, 32.7, 1e-9);
}

TEST(Queue, LimitRejects) {
  auto s = dl(100);
  s.units.count = 1;
  s.queue_limit = 0;
  auto r = run(s);
  EXPECT_GT(r.rejected, 0);
  s.queue_limit = std::numeric_limits<std::size_t>::max();
  auto q = run(s);
  EXPECT_EQ(q.rejected, 0);
  EXPECT_GT(q.latency.max_ms, r.latency.max_ms);
}

TEST(Determinism, SameSeedSameReport) {
  Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    auto s = random_scenario(rng);
    EXPECT_EQ(to_json(run(s)).dump(), to_json(run(s)).dump());
  }
  auto p = dl(20, ArrivalKind::poisson);
  auto a = run(p);
  p.seed = 2;
  EXPECT_NE(to_json(a).dump(), to_json(run(p)).dump());
}

TEST(Properties, ConservationCausalityCapacity) {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    auto s = random_scenario(rng);
    auto r = run(s);
    const int cap = unit_capacity(s);
    ASSERT_EQ(r.arrivals, r.completed + r.rejected + r.in_flight);
    ASSERT_EQ(static_cast<std::int64_t>(r.jobs.size()), r.arrivals);
    std::int64_t completed = 0, rejected = 0;
    std::map<int, std::vector<std::pair<double, int>>> edges;
    for (const auto& j : r.jobs) {
      ASSERT_LE(j.arrival_ms, s.duration_ms);
      if (j.rejected) {
        ++rejected;
        ASSERT_EQ(j.unit, -1);
        continue;
      }
      if (j.start_ms >= 0) {
        ASSERT_GE(j.start_ms, j.arrival_ms);
        ASSERT_GE(j.unit, 0);
        ASSERT_LT(j.unit, s.units.count);
        edges[j.unit].push_back({j.start_ms, +1});
      }
      if (j.completion_ms >= 0) {
        ++completed;
        ASSERT_GT(j.completion_ms, j.start_ms);
        if (s.workload.kind == WorkloadKind::dl_requests) {
          ASSERT_NEAR(j.completion_ms - j.start_ms, detail::to_ms(detail::to_us(*s.units.service_ms)), 1e-9);
        }
        edges[j.unit].push_back({j.completion_ms, -1});
      }
    }
    ASSERT_EQ(completed, r.completed);
    ASSERT_EQ(rejected, r.rejected);
    for (auto& [unit, ev] : edges) {
      std::sort(ev.begin(), ev.end());  // departures first at equal time
      int load = 0;
      for (auto& [t, d] : ev) {
        load += d;
        ASSERT_LE(load, cap);
        ASSERT_GE(load, 0);
      }
    }
    for (double b : r.busy_fraction) {
      ASSERT_GE(b, 0);
      ASSERT_LE(b, 1 + 1e-12);
    }
    ASSERT_GE(r.energy_j, 0);
  }
}

TEST(Properties, PlacementDoesNotChangeEnergyForLinearCurves) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    auto s = random_scenario(rng);
    s.units.curve = PowerCurve::linear(rng.uniform(), rng.uniform());
    s.units.power_gated = false;
    std::vector<double> e;
    for (auto p : {PlacementPolicy::consolidate, PlacementPolicy::spread, PlacementPolicy::random}) {
      s.placement = p;
      e.push_back(run(s).energy_j);
    }
    EXPECT_NEAR(e[0], e[1], 1e-6 * (1 + e[0]));
    EXPECT_NEAR(e[0], e[2], 1e-6 * (1 + e[0]));
  }
}

TEST(Sweep, LinearCurveIsFlat) {
  auto s = live_static("V4", 1);
  s.units.curve = PowerCurve::linear(0, 1 / 0.7344);
  auto pts = proportionality_sweep(s, {1, 10, 100, 540});
  ASSERT_EQ(pts.size(), 4u);
  for (const auto& p : pts) EXPECT_NEAR(p.tpe, 0.7344, 0.7344 * 1e-3);
  EXPECT_TRUE(proportionality_sweep(s, {}).empty());
  EXPECT_THROW(proportionality_sweep(s, {5, 1}), InvalidArgument);
  EXPECT_THROW(proportionality_sweep(s, {1.5}), InvalidArgument);
}

TEST(Sweep, FloorCurveIncreases) {
  auto s = live_static("V4", 1);
  s.units.count = 1;
  s.units.capacity = 20;
  s.units.power_gated = false;
  s.units.curve = PowerCurve::floor_plus_slope(0, 0, 1 / 0.018);
  auto pts = proportionality_sweep(s, {1, 5, 10, 20});
  EXPECT_NEAR(pts[0].tpe, 0.018, 1e-6);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_GT(pts[i].tpe, pts[i - 1].tpe);
}

TEST(Trace, RealizedRatioNearRequested) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    double r = realized_ratio(synth_trace(10, 25, 86'400'000, seed));
    EXPECT_GE(r, 23.75);
    EXPECT_LE(r, 26.25);
  }
  EXPECT_DOUBLE_EQ(realized_ratio(synth_trace(10, 1, 1000, 3)), 1);
}

TEST(Trace, ArrivalsFollowRate) {
  auto s = dl(40, ArrivalKind::trace);
  s.units.service_ms = 1;
  s.workload.arrivals.period_ms = 20'000;
  s.record_jobs = true;
  auto r = run(s);
  int peak = 0, trough = 0;
  for (const auto& j : r.jobs) {
    if (j.arrival_ms < 2000 || j.arrival_ms >= 18'000) ++peak;
    if (j.arrival_ms >= 8000 && j.arrival_ms < 12'000) ++trough;
  }
  EXPECT_GT(peak, 5 * trough);
}

TEST(ReportJson, RoundTrip) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    auto r = run(random_scenario(rng));
    EXPECT_EQ(report_from_json(to_json(r)), r);
    EXPECT_EQ(report_from_json(Json::parse(to_json(r).dump())), r);
  }
}
