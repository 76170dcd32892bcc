// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "socsim/calib.hpp"
#include "socsim/hwmodel.hpp"

namespace socsim {

/// Per-stream network load; a transcoding stream pulls its source and pushes
/// the transcoded output through the same links.
struct StreamTraffic {
  double inbound_kbps = 0;
  double outbound_kbps = 0;
  double total_kbps = 0;
};

inline StreamTraffic per_stream_traffic(const VideoProfile& video, double overhead = 1.0) {
  if (video.source_bitrate_kbps < 0 || video.target_bitrate_kbps < 0)
    throw InvalidArgument("bitrates must be nonnegative");
  if (!(overhead >= 1.0)) throw InvalidArgument("protocol overhead multiplier must be >= 1");
  StreamTraffic t;
  t.inbound_kbps = video.source_bitrate_kbps * overhead;
  t.outbound_kbps = video.target_bitrate_kbps * overhead;
  t.total_kbps = t.inbound_kbps + t.outbound_kbps;
  return t;
}

enum class UsageLevel { pcb, server };

struct UsageReport {
  UsageLevel level = UsageLevel::pcb;
  double used_mbps = 0;
  double capacity_mbps = 0;
  double fraction = 0;
};

inline UsageReport make_usage(UsageLevel level, double used_mbps, double capacity_mbps) {
  if (!(capacity_mbps > 0)) throw InvalidArgument("capacity must be positive");
  return UsageReport{level, used_mbps, capacity_mbps, used_mbps / capacity_mbps};
}

/// Theoretical streams per SoC when the CPU (software x264) and the hardware
/// codec both run at their individual maxima.
inline double peak_streams_per_soc(const VideoProfile& video, const CalibrationTable& table) {
  const auto tag = video.workload_tag();
  double cpu = table.lookup({Hardware::soc_cpu, "software-encode", tag, Metric::max_streams_per_soc}).value;
  double hw = table.lookup({Hardware::soc_codec, "hw-codec", tag, Metric::max_streams_per_soc}).value;
  return cpu + hw;
}

/// Uplink usage of a board whose SoCs each carry `streams_per_soc[i]` streams.
inline UsageReport pcb_usage(const PcbBoard& pcb, const std::vector<double>& streams_per_soc,
                             const StreamTraffic& traffic) {
  if (streams_per_soc.size() != pcb.soc_ids.size())
    throw InvalidArgument("one stream count per SoC on the board is required");
  double streams = 0;
  for (double s : streams_per_soc) streams += s;
  return make_usage(UsageLevel::pcb, streams * traffic.total_kbps / 1000.0, pcb.uplink_mbps);
}

/// Board at peak: every SoC at its theoretical maximum. Uses board 0 (all
/// boards are identical in a build_cluster() topology).
inline UsageReport pcb_peak_usage(const VideoProfile& video, const CalibrationTable& table,
                                  const ClusterTopology& topo, double overhead = 1.0) {
  const PcbBoard& pcb = topo.pcbs().front();
  const double per_soc = peak_streams_per_soc(video, table);
  std::vector<double> load(pcb.soc_ids.size(), per_soc);
  return pcb_usage(pcb, load, per_stream_traffic(video, overhead));
}

/// Whole-server usage through the ESB: sum over boards at peak.
inline UsageReport server_peak_usage(const VideoProfile& video, const CalibrationTable& table,
                                     const ClusterTopology& topo, double overhead = 1.0) {
  const double per_soc = peak_streams_per_soc(video, table);
  const StreamTraffic traffic = per_stream_traffic(video, overhead);
  double used = 0;
  for (const auto& pcb : topo.pcbs()) {
    std::vector<double> load(pcb.soc_ids.size(), per_soc);
    used += pcb_usage(pcb, load, traffic).used_mbps;
  }
  return make_usage(UsageLevel::server, used, topo.esb_uplink_mbps());
}

/// Usage for an arbitrary placement: `streams_by_soc[id]` streams on SoC id.
struct PlacementUsage {
  std::vector<UsageReport> pcbs;
  UsageReport server;
};

inline PlacementUsage placement_usage(const ClusterTopology& topo, const std::vector<double>& streams_by_soc,
                                      const StreamTraffic& traffic) {
  if (streams_by_soc.size() != topo.soc_count())
    throw InvalidArgument("placement must list one stream count per SoC");
  PlacementUsage out;
  double total = 0;
  for (const auto& pcb : topo.pcbs()) {
    std::vector<double> load;
    for (int id : pcb.soc_ids) {
      if (streams_by_soc[static_cast<std::size_t>(id)] < 0) throw InvalidArgument("negative stream count");
      load.push_back(streams_by_soc[static_cast<std::size_t>(id)]);
    }
    auto r = pcb_usage(pcb, load, traffic);
    total += r.used_mbps;
    out.pcbs.push_back(r);
  }
  out.server = make_usage(UsageLevel::server, total, topo.esb_uplink_mbps());
  return out;
}

enum class Bottleneck { none, pcb_saturated, esb_saturated };

inline std::string_view to_string(Bottleneck b) {
  switch (b) {
    case Bottleneck::none: return "none";
    case Bottleneck::pcb_saturated: return "pcb-saturated";
    case Bottleneck::esb_saturated: return "esb-saturated";
  }
  return "?";
}

struct BottleneckVerdict {
  Bottleneck verdict = Bottleneck::none;
  double limiting_fraction = 0;  // max of the PCB and server fractions
  UsageReport pcb;
  UsageReport server;
};

/// PCB saturation takes precedence when both levels exceed capacity.
inline BottleneckVerdict bottleneck(const VideoProfile& video, const CalibrationTable& table,
                                    const ClusterTopology& topo, double overhead = 1.0) {
  BottleneckVerdict v;
  v.pcb = pcb_peak_usage(video, table, topo, overhead);
  v.server = server_peak_usage(video, table, topo, overhead);
  v.limiting_fraction = std::max(v.pcb.fraction, v.server.fraction);
  if (v.pcb.fraction > 1.0) v.verdict = Bottleneck::pcb_saturated;
  else if (v.server.fraction > 1.0) v.verdict = Bottleneck::esb_saturated;
  return v;
}

/// CSV mirroring the stream-count and usage columns of the network-bound table.
inline std::string network_bound_csv(const std::vector<VideoProfile>& videos, const CalibrationTable& table,
                                     const ClusterTopology& topo) {
  std::string out = "video,cpu_streams_per_soc,hw_streams_per_soc,pcb_used_mbps,pcb_fraction,server_used_mbps,"
                    "server_fraction,verdict\n";
  for (const auto& v : videos) {
    const auto tag = v.workload_tag();
    double cpu = table.lookup({Hardware::soc_cpu, "software-encode", tag, Metric::max_streams_per_soc}).value;
    double hw = table.lookup({Hardware::soc_codec, "hw-codec", tag, Metric::max_streams_per_soc}).value;
    auto b = bottleneck(v, table, topo);
    out += v.name + "," + format_double(cpu) + "," + format_double(hw) + "," + format_double(b.pcb.used_mbps) + "," +
           format_double(b.pcb.fraction) + "," + format_double(b.server.used_mbps) + "," +
           format_double(b.server.fraction) + "," + std::string(to_string(b.verdict)) + "\n";
  }
  return out;
}

}  // namespace socsim
