// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. `acceptance <id>` runs one criterion, `acceptance` runs
// all; each check prints one PASS/FAIL line and the exit code is nonzero if
// any check failed.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "socsim/socsim.hpp"

using namespace socsim;

namespace {

int g_failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << "\n";
  if (!ok) ++g_failures;
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

bool within_rel(double got, double want, double rel) { return std::abs(got - want) <= rel * std::abs(want); }

std::string data(const std::string& rel) { return std::string(SOCSIM_DATA_DIR) + "/" + rel; }

// --- 1: network bounds ----------------------------------------------------------

void criterion_1() {
  // Printed (pcb, server) usage in Mbps from the video metadata table.
  const std::map<std::string, std::pair<double, double>> printed = {
      {"V1", {534, 6407}}, {"V2", {43, 505}},     {"V3", {673, 8072}},
      {"V4", {81, 968}},   {"V5", {1008, 12010}}, {"V6", {985, 11821}}};
  const auto topo = build_cluster();
  bool ok = true;
  double worst = 0;
  std::string flagged;
  for (const auto& v : bundled_videos()) {
    auto b = bottleneck(v, bundled_calibration(), topo);
    const auto [pcb, server] = printed.at(v.name);
    worst = std::max({worst, std::abs(b.pcb.used_mbps - pcb) / pcb, std::abs(b.server.used_mbps - server) / server});
    ok &= within_rel(b.pcb.used_mbps, pcb, 0.03) && within_rel(b.server.used_mbps, server, 0.03);
    if (b.verdict != Bottleneck::none) flagged += v.name + ":" + std::string(to_string(b.verdict)) + " ";
  }
  report("1", ok, "12 usage cells within 3% (worst " + fmt(100 * worst, 2) + "%)");
  report("1", flagged == "V5:pcb-saturated ", "bottleneck flags = {" + flagged + "}");
}

// --- 2: monthly TCO -------------------------------------------------------------

void criterion_2() {
  const auto sheets = bundled_cost_sheets(bundled_calibration());
  const long want_total[] = {1410, 399, 1042};
  const long want_kwh[] = {443, 228, 212};
  const long want_elec[] = {70, 36, 34};
  const long want_capex[] = {1340, 363, 1008};
  auto close = [](const Exact& got, long want) { return abs(Exact(got - want)) <= 1; };
  bool total_ok = true, cells_ok = true;
  std::string line;
  for (std::size_t i = 0; i < 3; ++i) {
    auto t = monthly_tco(sheets[i]);
    total_ok &= close(t.total_usd, want_total[i]);
    cells_ok &= close(t.kwh, want_kwh[i]) && close(t.electricity_usd, want_elec[i]) &&
                close(t.amortized_capex_usd, want_capex[i]);
    line += sheets[i].label + "=" + fmt(to_double(t.total_usd), 2) + " ";
  }
  report("2", total_ok, "monthly TCO within $1 of 1410/399/1042: " + line);
  report("2", cells_ok, "kWh, electricity and amortized CapEx cells within 1");
}

// --- 3: TpC ---------------------------------------------------------------------

void criterion_3a() {
  const double want[] = {0.748, 0.863, 0.230, 0.519, 0.173, 0.058};
  const auto& table = bundled_calibration();
  const auto soc = monthly_tco(bundled_cost_sheets(table).back());
  auto rows = soc_live_tpc_rows(bundled_videos(), table, soc);
  bool ok = rows.size() == 6;
  std::string line;
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    const double got = to_double(rows[i].value.value);
    ok &= std::abs(got - want[i]) <= 0.002;
    line += fmt(got) + " ";
  }
  report("3a", ok, "SoC-CPU live TpC within 0.002: " + line);
}

void criterion_3b() {
  const auto sheets = bundled_cost_sheets(bundled_calibration());
  const double with_gpu = to_double(monthly_tco(sheets[0]).total_usd);
  const double without_gpu = to_double(monthly_tco(sheets[1]).total_usd);
  for (const auto& row : published_intel_live_tpc()) {
    // Streams implied by each published TpC cell.
    const double a = row.with_gpu_sheet * with_gpu;
    const double b = row.without_gpu_sheet * without_gpu;
    const double gap = std::abs(a - b) / std::min(a, b);
    report("3b", gap <= 0.02,
           row.video + " Intel streams implied by both sheets agree within 2%: " + fmt(a, 2) + " vs " + fmt(b, 2) +
               " (gap " + fmt(100 * gap, 2) + "%)");
  }
}

// --- 4: collaborative inference -------------------------------------------------

void criterion_4() {
  const auto m = calibrate_from_observations(80, 34, 5, Exact(415, 1000), Exact(229, 1000));
  report("4", m.serial_fraction == Exact(28125, 100000), "f = " + m.serial_fraction.str() + " (exact 0.28125)");
  const auto s = total_latency(m, 5, CollabMode::serial);
  const double sp = to_double(speedup(m, 5, CollabMode::serial));
  report("4", std::abs(sp - 1.38) <= 0.01, "serial speedup at n=5 " + fmt(sp) + " (1.38 +- 0.01)");
  const double share = 100 * to_double(s.comm_share);
  report("4", std::abs(share - 41.5) <= 0.5, "serial comm share " + fmt(share, 2) + "% (41.5 +- 0.5 pt)");
  const auto p = total_latency(m, 5, CollabMode::pipelined);
  const double pshare = 100 * to_double(p.comm_share);
  report("4", std::abs(pshare - 22.9) <= 0.5, "pipelined comm share " + fmt(pshare, 2) + "% (22.9 +- 0.5 pt)");
  const double total = to_double(p.total_ms);
  report("4", within_rel(total, 44.1, 0.02), "pipelined total " + fmt(total, 2) + " ms (44.1 +- 2%)");
}

// --- 5: efficiency ratios -------------------------------------------------------

void criterion_5() {
  const auto& t = bundled_calibration();
  const auto spw = Metric::streams_per_watt;
  const auto fpj = Metric::frames_per_joule;
  auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };

  // Only V4 carries CPU efficiency anchors; the other videos have no data.
  const double soc_v4 = resolve_tpe(t, Hardware::soc_cpu, "video:V4@1-stream", spw).value;
  const double intel_v4 = resolve_tpe(t, Hardware::intel_cpu_8core, "video:V4@1-stream", spw).value;
  const double r_intel = soc_v4 / intel_v4;
  report("5", in(r_intel, 2.58, 3.21), "SoC-CPU / Intel live TpE, V4: " + fmt(r_intel) + " in [2.58, 3.21]");

  // SoC-CPU against the A40 at the top of the shared 1..20 stream sweep.
  auto soc = load_scenario(data("scenarios/live-v4-diurnal.json")).scenario;
  soc.workload.arrivals = {};
  auto a40 = load_scenario(data("scenarios/a40-v4-sweep.json")).scenario;
  const double soc20 = proportionality_sweep(soc, {20})[0].tpe;
  const double a40_20 = proportionality_sweep(a40, {20})[0].tpe;
  report("5", in(soc20 / a40_20, 1.83, 4.53),
         "SoC-CPU / A40 live TpE at 20 V4 streams: " + fmt(soc20 / a40_20) + " in [1.83, 4.53]");

  // Give the DSP an arbitrary absolute TpE; the baselines follow from the ratios.
  CalibrationTable dsp = t;
  dsp.insert({{Hardware::soc_dsp, "tflite", "dl:resnet152-int8", fpj}, 100, {}, Provenance::user_measured, "probe"});
  const auto d = tpe(resolve_tpe(dsp, Hardware::soc_dsp, "dl:resnet152-int8", fpj).value, 1, TpeUnits::frames_per_joule);
  auto vs = [&](Hardware hw, const std::string& ctx) {
    return efficiency_ratio(d, tpe(resolve_tpe(dsp, hw, "dl:resnet152-int8", fpj, ctx).value, 1, TpeUnits::frames_per_joule));
  };
  const double r42 = vs(Hardware::intel_cpu_8core, "");
  const double r15 = vs(Hardware::nvidia_a100, "bs64");
  report("5", within_rel(r42, 42, 0.10), "ResNet-152 INT8 DSP / Intel: " + fmt(r42, 2) + " (42 +- 10%)");
  report("5", within_rel(r15, 1.5, 0.10), "ResNet-152 INT8 DSP / A100 BS64: " + fmt(r15, 2) + " (1.5 +- 10%)");

  const auto gpu_v = resolve_tpe(t, Hardware::soc_gpu, "dl:resnet50-fp32", fpj).value;
  report("5", within_rel(gpu_v, 18, 0.10), "ResNet-50 FP32 SoC GPU: " + fmt(gpu_v, 2) + " samples/J (18 +- 10%)");
  const auto g = tpe(gpu_v, 1, TpeUnits::frames_per_joule);
  auto gvs = [&](Hardware hw, const std::string& ctx, double want, const std::string& name) {
    const double r =
        efficiency_ratio(g, tpe(resolve_tpe(t, hw, "dl:resnet50-fp32", fpj, ctx).value, 1, TpeUnits::frames_per_joule));
    report("5", within_rel(r, want, 0.10), "ResNet-50 FP32 SoC GPU / " + name + ": " + fmt(r, 2) + " (" + fmt(want, 2) + " +- 10%)");
  };
  gvs(Hardware::intel_cpu_8core, "", 7.09, "Intel");
  gvs(Hardware::nvidia_a40, "bs64", 1.78, "A40 BS64");
  gvs(Hardware::nvidia_a100, "bs64", 1.15, "A100 BS64");
}

// --- 6: proportionality ---------------------------------------------------------

void criterion_6() {
  auto soc = load_scenario(data("scenarios/live-v4-diurnal.json")).scenario;
  soc.workload.arrivals = {};
  std::vector<double> loads;
  for (int n = 1; n <= 20; ++n) loads.push_back(n);
  auto pts = proportionality_sweep(soc, loads);
  double lo = INFINITY, hi = 0;
  for (const auto& p : pts) {
    lo = std::min(lo, p.tpe);
    hi = std::max(hi, p.tpe);
  }
  report("6", hi <= lo * 1.01, "linear zero-idle SoC TpE over 1..20 streams in [" + fmt(lo, 4) + ", " + fmt(hi, 4) + "]");

  auto a40 = load_scenario(data("scenarios/a40-v4-sweep.json")).scenario;
  auto a = proportionality_sweep(a40, loads);
  bool mono = true;
  for (std::size_t i = 1; i < a.size(); ++i) mono &= a[i].tpe > a[i - 1].tpe;
  report("6", std::abs(a[0].tpe - 0.018) <= 0.018 * 0.01, "A40 TpE at one V4 stream " + fmt(a[0].tpe, 4) + " (0.018)");
  report("6", mono, "A40 TpE strictly increasing over 1..20 streams (" + fmt(a.back().tpe, 3) + " at 20)");

  auto gpu = run(load_scenario(data("scenarios/dl-resnet50-soc-gpu.json")).scenario);
  auto a100 = run(load_scenario(data("scenarios/dl-resnet50-a100.json")).scenario);
  const double r = gpu.tpe.value / a100.tpe.value;
  report("6", within_rel(r, 5.71, 0.10),
         "SoC / A100 TpE at 5 ResNet-50 samples/s: " + fmt(gpu.tpe.value) + " / " + fmt(a100.tpe.value) + " = " + fmt(r) +
             " (5.71 +- 10%)");
}

// --- 7: simulator properties ----------------------------------------------------

Scenario random_scenario(Rng& rng) {
  Scenario s;
  s.seed = rng.next_u64();
  s.units.count = 1 + static_cast<int>(rng.below(16));
  s.placement = static_cast<PlacementPolicy>(rng.below(3));
  s.duration_ms = 200 + rng.uniform() * 3000;
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
    if (rng.below(2) == 0) s.units.service_ms = 1 + rng.uniform() * 150;
    if (rng.below(2) == 0) s.units.capacity = 1 + static_cast<int>(rng.below(4));
    if (rng.below(3) == 0) s.queue_limit = rng.below(6);
    s.workload.arrivals = {kind, rng.uniform() * 100, 1 + rng.uniform() * 30, 100 + rng.uniform() * 3000};
  } else {
    s.workload.tag = "video:V" + std::to_string(1 + rng.below(6));
    s.corun = rng.below(4) == 0;
    if (rng.below(2) == 0) {
      double t = 0;
      for (int k = 0; k < 5; ++k) {
        s.workload.schedule.push_back({t, static_cast<int>(rng.below(60))});
        t += rng.uniform() * s.duration_ms / 3;
      }
    } else {
      s.workload.arrivals = {kind, rng.uniform() * 40, 1 + rng.uniform() * 30, 100 + rng.uniform() * 3000};
      s.workload.lifetime_ms = 1 + rng.uniform() * 1500;
    }
  }
  return s;
}

void criterion_7() {
  Rng rng(0x5eed);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    auto s = random_scenario(rng);
    s.record_jobs = true;
    auto r = run(s);
    std::int64_t done = 0, rej = 0, open = 0;
    for (const auto& j : r.jobs) {
      if (j.rejected) ++rej;
      else if (j.completion_ms >= 0) ++done;
      else ++open;
    }
    const bool ok = r.arrivals == r.completed + r.rejected + r.in_flight &&
                    static_cast<std::int64_t>(r.jobs.size()) == r.arrivals && done == r.completed &&
                    rej == r.rejected && open == r.in_flight;
    violations += !ok;
  }
  report("7", violations == 0, "job conservation on 1000 random scenarios (" + std::to_string(violations) + " violations)");

  Rng rng2(0xd37);
  int diffs = 0;
  for (int i = 0; i < 50; ++i) {
    auto s = random_scenario(rng2);
    s.record_jobs = true;
    diffs += to_json(run(s)).dump() != to_json(run(s)).dump();
  }
  report("7", diffs == 0, "identical seeds give bit-identical reports on 50 scenarios");

  int wrong = 0, cases = 0;
  for (const auto& v : bundled_videos()) {
    Scenario s;
    s.units.curve = PowerCurve::linear(0, 1);
    s.workload.tag = v.workload_tag();
    s.duration_ms = 1000;
    const int cap = unit_capacity(s);
    for (int demand : {1, cap, cap + 1, 7 * cap - 1, 60 * cap}) {
      s.workload.schedule = {{0, demand}};
      auto r = run(s);
      wrong += r.active_units.back().second != (demand + cap - 1) / cap;
      ++cases;
    }
  }
  report("7", wrong == 0, "consolidate activates ceil(demand/capacity) SoCs (" + std::to_string(cases) + " static loads)");

  double lo = INFINITY, hi = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    double r = realized_ratio(synth_trace(1, 25, 86'400'000, seed));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  report("7", lo >= 23.75 && hi <= 26.25,
         "synthetic trace max/min over 200 seeds in [" + fmt(lo, 2) + ", " + fmt(hi, 2) + "] within [23.75, 26.25]");
}

// --- 8: calibration round trip --------------------------------------------------

void criterion_8() {
  const auto& t = bundled_calibration();
  report("8", parse_calibration(serialize_calibration(t)) == t,
         "load(serialize(bundled)) == bundled (" + std::to_string(t.size()) + " records)");
  int missing = 0;
  for (const auto& [key, r] : t) missing += is_paper(r.provenance) && r.citation.empty();
  report("8", missing == 0, "published-source records with empty citation: " + std::to_string(missing));
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<void()>> checks = {
      {"1", criterion_1},  {"2", criterion_2}, {"3a", criterion_3a}, {"3b", criterion_3b}, {"4", criterion_4},
      {"5", criterion_5},  {"6", criterion_6}, {"7", criterion_7},   {"8", criterion_8}};
  try {
    if (argc > 1) {
      auto it = checks.find(argv[1]);
      if (it == checks.end()) {
        std::cerr << "unknown criterion " << argv[1] << "\n";
        return 2;
      }
      it->second();
    } else {
      for (const auto& [id, fn] : checks) fn();
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL criterion " << (argc > 1 ? argv[1] : "*") << ": exception: " << e.what() << "\n";
    return 1;
  }
  return g_failures == 0 ? 0 : 1;
}
