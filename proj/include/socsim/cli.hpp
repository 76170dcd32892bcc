// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "socsim/bundled_data.hpp"
#include "socsim/collab.hpp"
#include "socsim/hwmodel.hpp"
#include "socsim/netmodel.hpp"
#include "socsim/report.hpp"
#include "socsim/scenario_io.hpp"
#include "socsim/simengine.hpp"
#include "socsim/tco.hpp"

namespace socsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

namespace detail {

inline std::vector<double> parse_loads(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--loads", "not a number: '" + item + "'");
    }
  }
  return out;
}

inline std::vector<VideoProfile> select_videos(const std::vector<std::string>& names) {
  if (names.empty()) return bundled_videos();
  std::vector<VideoProfile> out;
  for (const auto& n : names) out.push_back(bundled_video(n));
  return out;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SoC cluster capacity, power and cost models", "socsim"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the verb

  std::string calib_path;
  std::string format_name = "table";
  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--calib", calib_path, "Calibration CSV (default: bundled dataset)")->check(CLI::ExistingFile);
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", out_path, "Write results to this file instead of stdout");
  auto* seed_opt = app.add_option("--seed", seed, "Override the scenario seed");

  // net
  auto* net = app.add_subcommand("net", "Network usage of every SoC at its theoretical peak stream count");
  std::vector<std::string> net_videos;
  TopologySpec topo_spec;
  double overhead = 1.0;
  net->add_option("--video", net_videos, "Video name or title (repeatable; default: all six)");
  net->add_option("--soc-count", topo_spec.soc_count, "SoCs in the server")->capture_default_str();
  net->add_option("--socs-per-pcb", topo_spec.socs_per_pcb, "SoCs per carrier board")->capture_default_str();
  net->add_option("--pcb-uplink", topo_spec.pcb_uplink_mbps, "Carrier-board uplink, Mbps")->capture_default_str();
  net->add_option("--esb-uplink", topo_spec.esb_uplink_mbps, "Switch-board uplink, Mbps")->capture_default_str();
  net->add_option("--overhead", overhead, "Protocol overhead multiplier (>= 1)")->capture_default_str();

  // tco
  auto* tco = app.add_subcommand("tco", "Monthly TCO per cost sheet");
  std::vector<std::string> sheet_paths;
  tco->add_option("--sheet", sheet_paths, "Cost sheet JSON (repeatable; default: bundled sheets)")
      ->check(CLI::ExistingFile);

  // tpc
  auto* tpcc = app.add_subcommand("tpc", "Live-transcoding streams per TCO dollar for the SoC cluster");
  std::string tpc_sheet;
  std::vector<std::string> tpc_videos;
  int tpc_socs = 60;
  tpcc->add_option("--sheet", tpc_sheet, "SoC-cluster cost sheet JSON (default: bundled)")->check(CLI::ExistingFile);
  tpcc->add_option("--video", tpc_videos, "Video (repeatable; default: all six)");
  tpcc->add_option("--soc-count", tpc_socs, "SoCs in the cluster")->capture_default_str();

  // collab
  auto* col = app.add_subcommand("collab", "Tensor-parallel inference latency across n SoCs");
  std::string t1_s, tn_s, share_s, pshare_s;
  int col_n = 5;
  int max_n = 5;
  col->add_option("--t1", t1_s, "Compute latency on one SoC, ms (default: calibration)");
  col->add_option("--tn", tn_s, "Compute latency on n SoCs, ms (default: calibration)");
  col->add_option("--n", col_n, "SoC count of the --tn observation")->capture_default_str();
  col->add_option("--serial-share", share_s, "Communication share of total latency, serial (0..1)");
  col->add_option("--pipelined-share", pshare_s, "Communication share of total latency, pipelined (0..1)");
  col->add_option("--max-n", max_n, "Report n = 1..max-n")->capture_default_str()->check(CLI::PositiveNumber);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run one scenario");
  std::string sim_path;
  bool record_jobs = false;
  sim->add_option("--scenario", sim_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
  sim->add_flag("--jobs", record_jobs, "Include the per-job log");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Run a scenario at several load levels");
  std::string swp_path;
  std::string loads_text;
  swp->add_option("--scenario", swp_path, "Scenario JSON used as the template")->required()->check(CLI::ExistingFile);
  swp->add_option("--loads", loads_text, "Comma-separated loads: streams or samples/s")->required();

  // defaults
  app.add_subcommand("defaults", "Print the bundled calibration dataset as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Format format = *parse_format(format_name);
  std::string result;
  try {
    std::shared_ptr<const CalibrationTable> table_ptr;
    if (!calib_path.empty()) table_ptr = std::make_shared<const CalibrationTable>(load_calibration(calib_path));
    const CalibrationTable& table = table_ptr ? *table_ptr : bundled_calibration();

    if (*net) {
      if (!(overhead >= 1.0)) {
        err << "error: --overhead must be >= 1\n";
        return kExitUsage;
      }
      auto topo = build_cluster(topo_spec);
      result = render(network_document(detail::select_videos(net_videos), table, topo, overhead), format);
    } else if (*tco) {
      std::vector<CostSheet> sheets;
      for (const auto& p : sheet_paths) sheets.push_back(load_cost_sheet(p));
      if (sheets.empty()) sheets = bundled_cost_sheets(table);
      result = render(tco_document(sheets), format);
    } else if (*tpcc) {
      CostSheet sheet = tpc_sheet.empty() ? bundled_cost_sheets(table).back() : load_cost_sheet(tpc_sheet);
      auto rows = soc_live_tpc_rows(detail::select_videos(tpc_videos), table, monthly_tco(sheet), tpc_socs);
      result = render(tpc_document(rows), format);
    } else if (*col) {
      auto pick = [&](const std::string& flag, const CalibKey& key) {
        return flag.empty() ? exact_from_double(table.lookup(key).value) : parse_decimal(flag);
      };
      const std::string ctx = "dl:resnet50-fp32@";
      Exact t1 = pick(t1_s, {Hardware::soc_cpu, "mnn-tp-compute", ctx + "1-soc", Metric::latency_ms});
      Exact tn = pick(tn_s, {Hardware::soc_cpu, "mnn-tp-compute", ctx + "5-soc", Metric::latency_ms});
      Exact share = share_s.empty()
                        ? Exact(exact_from_double(
                                    table.lookup({Hardware::soc_cpu, "mnn-tp", ctx + "5-soc", Metric::comm_share_pct}).value) /
                                100)
                        : parse_decimal(share_s);
      Exact pshare =
          pshare_s.empty()
              ? Exact(exact_from_double(
                          table.lookup({Hardware::soc_cpu, "mnn-tp-pipelined", ctx + "5-soc", Metric::comm_share_pct})
                              .value) /
                      100)
              : parse_decimal(pshare_s);
      auto model = calibrate_from_observations(t1, tn, col_n, share, pshare);
      result = render(collab_document(model, max_n), format);
    } else if (*sim) {
      auto file = load_scenario(sim_path);
      if (table_ptr) file.scenario.calibration = table_ptr;
      if (*seed_opt) file.scenario.seed = seed;
      if (record_jobs) file.scenario.record_jobs = true;
      result = render_report(run(file.scenario), format);
    } else if (*swp) {
      auto file = load_scenario(swp_path);
      if (table_ptr) file.scenario.calibration = table_ptr;
      if (*seed_opt) file.scenario.seed = seed;
      auto points = proportionality_sweep(file.scenario, detail::parse_loads(loads_text));
      auto units = file.scenario.workload.kind == WorkloadKind::live_streams ? TpeUnits::streams_per_watt
                                                                             : TpeUnits::samples_per_joule;
      result = render(sweep_document(points, to_string(units)), format);
    } else {
      result = serialize_calibration(table);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  if (out_path.empty()) {
    out << result;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return kExitData;
    }
    f << result;
  }
  return kExitOk;
}

}  // namespace socsim::cli
