// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "socsim/bundled_data.hpp"
#include "socsim/powermodel.hpp"
#include "socsim/rng.hpp"

using namespace socsim;

TEST(PowerDraw, LinearCurve) {
  auto c = PowerCurve::linear(3, 2);
  EXPECT_DOUBLE_EQ(power_draw(c, 0), 3);
  EXPECT_DOUBLE_EQ(power_draw(c, 8) - power_draw(c, 4), 2 * 4);
  EXPECT_THROW(power_draw(c, -1), InvalidArgument);
}

TEST(PowerDraw, FloorPlusSlope) {
  auto c = PowerCurve::floor_plus_slope(0, 2, 10);
  EXPECT_DOUBLE_EQ(power_draw(c, 0), 10);
  EXPECT_DOUBLE_EQ(power_draw(c, 5), 10);
  EXPECT_DOUBLE_EQ(power_draw(c, 6), 12);
}

TEST(PowerDraw, TableInterpolates) {
  auto c = PowerCurve::table({{0, 1}, {10, 11}, {20, 31}});
  EXPECT_DOUBLE_EQ(power_draw(c, 5), 6);
  EXPECT_DOUBLE_EQ(power_draw(c, 10), 11);
  EXPECT_DOUBLE_EQ(power_draw(c, 15), 21);
  EXPECT_THROW(power_draw(c, 20.5), OutOfDomain);
}

TEST(PowerCurveValidation, Rejects) {
  EXPECT_THROW(PowerCurve::linear(-1, 1), InvalidArgument);
  EXPECT_THROW(PowerCurve::table({{0, 5}, {1, 4}}), InvalidArgument);
  EXPECT_THROW(PowerCurve::table({{1, 5}, {1, 6}}), InvalidArgument);
  EXPECT_THROW(PowerCurve::table({}), InvalidArgument);
}

TEST(PowerDraw, A40SingleStreamAnchor) {
  auto c = floor_curve_from_points(1, 0.018);
  EXPECT_NEAR(power_draw(c, 1), 1 / 0.018, 1e-9);
  EXPECT_NEAR(curve_tpe(c, 1, TpeUnits::streams_per_watt).value, 0.018, 1e-12);
}

TEST(PowerDraw, PropertyNondecreasing) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    PowerCurve c;
    switch (rng.below(3)) {
      case 0: c = PowerCurve::linear(rng.uniform() * 10, rng.uniform() * 5); break;
      case 1: c = PowerCurve::floor_plus_slope(rng.uniform() * 5, rng.uniform() * 5, rng.uniform() * 50); break;
      default: {
        std::vector<std::pair<double, double>> pts;
        double l = 0, w = rng.uniform() * 10;
        for (int k = 0; k < 6; ++k) {
          pts.push_back({l, w});
          l += 0.1 + rng.uniform() * 5;
          w += rng.uniform() * 5;
        }
        c = PowerCurve::table(pts);
      }
    }
    double hi = c.shape == CurveShape::table ? c.points.back().first : 50;
    double prev = power_draw(c, 0);
    for (int k = 1; k <= 40; ++k) {
      double p = power_draw(c, k == 40 ? hi : hi * k / 40);
      EXPECT_GE(p, prev - 1e-12);
      prev = p;
    }
  }
}

TEST(Energy, ConstantAndRamp) {
  EXPECT_DOUBLE_EQ(energy_of_trace(PowerTrace({{0, 100}, {10'000, 100}})), 1000);
  EXPECT_DOUBLE_EQ(energy_of_trace(PowerTrace({{0, 0}, {10'000, 100}})), 500);
  EXPECT_THROW(energy_of_trace(PowerTrace({{0, 100}})), TooFewSamples);
  EXPECT_THROW(PowerTrace({{0, 1}, {0, 2}}), InvalidArgument);
  EXPECT_THROW(PowerTrace({{0, -1}}), InvalidArgument);
}

TEST(Energy, PropertyAdditiveAtSharedBoundary) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    std::vector<PowerSample> all;
    double t = 0;
    for (int k = 0; k < 12; ++k) {
      all.push_back({t, rng.uniform() * 200});
      t += 1 + rng.uniform() * 1000;
    }
    const std::size_t cut = 1 + rng.below(10);
    std::vector<PowerSample> a(all.begin(), all.begin() + static_cast<long>(cut) + 1);
    std::vector<PowerSample> b(all.begin() + static_cast<long>(cut), all.end());
    EXPECT_NEAR(energy_of_trace(PowerTrace(all)), energy_of_trace(PowerTrace(a)) + energy_of_trace(PowerTrace(b)), 1e-9);
  }
}

TEST(Tpe, SimpleRatioAndIdleExclusion) {
  auto v = tpe(18, 1, TpeUnits::samples_per_joule);
  EXPECT_DOUBLE_EQ(v.value, 18);
  EXPECT_DOUBLE_EQ(tpe(0, 5, TpeUnits::samples_per_joule).value, 0);
  EXPECT_DOUBLE_EQ(tpe(10, 12, TpeUnits::streams_per_watt, 2).value, 1);
  EXPECT_THROW(tpe(1, 2, TpeUnits::streams_per_watt, 2), ZeroDenominator);
  EXPECT_THROW(tpe(1, 0, TpeUnits::streams_per_watt), ZeroDenominator);
}

TEST(Tpe, EfficiencyRatioUnitSafety) {
  auto a = tpe(10, 1, TpeUnits::samples_per_joule);
  auto b = tpe(10, 1, TpeUnits::streams_per_watt);
  EXPECT_THROW(efficiency_ratio(a, b), UnitMismatch);
  EXPECT_DOUBLE_EQ(efficiency_ratio(a, a), 1);
  EXPECT_THROW(efficiency_ratio(a, tpe(0, 1, TpeUnits::samples_per_joule)), ZeroDenominator);
  EXPECT_THROW(units_for(Metric::latency_ms), UnitMismatch);
}

TEST(Tpe, LinearZeroIdleIsLoadIndependent) {
  auto c = linear_curve_from_tpe(0.7344);
  for (double l : {1.0, 3.0, 9.0, 20.0, 540.0})
    EXPECT_NEAR(curve_tpe(c, l, TpeUnits::streams_per_watt).value, 0.7344, 1e-12);
}

TEST(Tpe, FloorCurveStrictlyIncreasingUntilFloorExceeded) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    double slope = 0.1 + rng.uniform();
    double floor = 5 + rng.uniform() * 50;
    auto c = PowerCurve::floor_plus_slope(0, slope, floor);
    double knee = floor / slope;
    double prev = 0;
    for (int k = 1; k <= 20; ++k) {
      double l = knee * k / 20;
      double v = curve_tpe(c, l, TpeUnits::streams_per_watt).value;
      EXPECT_GT(v, prev);
      prev = v;
    }
    // Past the knee efficiency is flat at 1 / slope.
    EXPECT_NEAR(curve_tpe(c, 2 * knee, TpeUnits::streams_per_watt).value, 1 / slope, 1e-9);
  }
}

TEST(ResolveTpe, DirectAndChained) {
  const auto& t = bundled_calibration();
  EXPECT_DOUBLE_EQ(resolve_tpe(t, Hardware::soc_gpu, "dl:resnet50-fp32", Metric::frames_per_joule).value, 18);
  // Baselines implied by the SoC GPU's 18 frames/J.
  EXPECT_NEAR(resolve_tpe(t, Hardware::intel_cpu_8core, "dl:resnet50-fp32", Metric::frames_per_joule).value, 18 / 7.09,
              1e-12);
  EXPECT_NEAR(resolve_tpe(t, Hardware::nvidia_a100, "dl:resnet50-fp32", Metric::frames_per_joule, "bs64").value,
              18 / 1.15, 1e-12);
  // Subject through a baseline: soc-cpu = 40.8 x A40 on the single-stream V4 anchor.
  EXPECT_NEAR(resolve_tpe(t, Hardware::soc_cpu, "video:V4@1-stream", Metric::streams_per_watt).value, 40.8 * 0.018,
              1e-12);
  EXPECT_NEAR(resolve_tpe(t, Hardware::intel_cpu_8core, "video:V4@1-stream", Metric::streams_per_watt).value,
              14.9 * 0.018, 1e-12);
  EXPECT_THROW(resolve_tpe(t, Hardware::soc_dsp, "dl:resnet152-int8", Metric::frames_per_joule), MissingCalibration);
}

TEST(ResolveTpe, CyclesTerminate) {
  CalibrationTable t;
  t.insert({{Hardware::soc_cpu, "vs:soc-gpu", "w", Metric::efficiency_ratio}, 2, {}, Provenance::user_measured, ""});
  t.insert({{Hardware::soc_gpu, "vs:soc-cpu", "w", Metric::efficiency_ratio}, 0.5, {}, Provenance::user_measured, ""});
  EXPECT_THROW(resolve_tpe(t, Hardware::soc_cpu, "w", Metric::streams_per_watt), MissingCalibration);
}
