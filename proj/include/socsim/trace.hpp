// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "socsim/errors.hpp"
#include "socsim/rng.hpp"

namespace socsim {

/// Diurnal-style arrival rate: a sinusoid on the log scale with peak at t = 0
/// and trough at half a period, times a seeded multiplicative jitter.
///
/// Jitter factors are drawn once per knot (period / knots_per_period apart)
/// and interpolated on the log scale, so the rate stays continuous.
class RateFunction {
 public:
  static constexpr int kKnotsPerPeriod = 96;
  // exp(2 * kJitter) = 1.05: the realized max/min stays within 5% of the
  // requested ratio even when peak and trough jitter in opposite directions.
  static inline const double kJitter = std::log(1.05) / 2.0;

  RateFunction(double peak_rate, double trough_ratio, double period_ms, std::uint64_t seed)
      : peak_(peak_rate), log_ratio_(std::log(trough_ratio)), period_ms_(period_ms) {
    if (!(peak_rate >= 0)) throw InvalidArgument("peak rate must be nonnegative");
    if (!(trough_ratio >= 1)) throw InvalidArgument("trough ratio must be >= 1");
    if (!(period_ms > 0)) throw InvalidArgument("period must be positive");
    Rng rng(derive_seed(seed, 0x7472616365ULL));
    jitter_.resize(kKnotsPerPeriod);
    // A constant rate (ratio 1) carries no jitter.
    for (auto& j : jitter_) j = trough_ratio == 1 ? 0.0 : kJitter * rng.symmetric();
  }

  /// Rate at time t (same unit as peak_rate).
  double operator()(double t_ms) const {
    double phase = std::fmod(t_ms, period_ms_) / period_ms_;
    if (phase < 0) phase += 1;
    const double base = -0.5 * log_ratio_ * (1 - std::cos(2 * std::numbers::pi * phase));
    const double pos = phase * kKnotsPerPeriod;
    const int i = static_cast<int>(pos) % kKnotsPerPeriod;
    const int k = (i + 1) % kKnotsPerPeriod;
    const double w = pos - std::floor(pos);
    const double jit = (1 - w) * jitter_[i] + w * jitter_[k];
    return peak_ * std::exp(base + jit);
  }

  /// Upper bound used for thinning.
  double max_rate() const { return peak_ * std::exp(kJitter); }
  double period_ms() const { return period_ms_; }

 private:
  double peak_;
  double log_ratio_;
  double period_ms_;
  std::vector<double> jitter_;
};

inline RateFunction synth_trace(double peak_rate, double trough_ratio, double period_ms, std::uint64_t seed) {
  return RateFunction(peak_rate, trough_ratio, period_ms, seed);
}

/// Max/min of the rate over one period on a uniform grid.
inline double realized_ratio(const RateFunction& f, int samples = 4 * RateFunction::kKnotsPerPeriod) {
  double lo = INFINITY, hi = 0;
  for (int s = 0; s < samples; ++s) {
    double r = f(f.period_ms() * s / samples);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return lo > 0 ? hi / lo : INFINITY;
}

}  // namespace socsim
