// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "socsim/errors.hpp"

namespace socsim {

enum class Processor { cpu, gpu, dsp, codec };

inline std::string_view to_string(Processor p) {
  switch (p) {
    case Processor::cpu: return "cpu";
    case Processor::gpu: return "gpu";
    case Processor::dsp: return "dsp";
    case Processor::codec: return "codec";
  }
  return "?";
}

struct SocUnit {
  int id = 0;
  int pcb_id = 0;
  std::vector<Processor> processors{Processor::cpu, Processor::gpu, Processor::dsp, Processor::codec};
  int cpu_cores = 8;
  double ram_gb = 12;
  double storage_gb = 256;
};

struct PcbBoard {
  int id = 0;
  std::vector<int> soc_ids;
  double uplink_mbps = 1000;
};

/// Parameters accepted by build_cluster(). Defaults describe the 60-SoC,
/// 12-board production server.
struct TopologySpec {
  int soc_count = 60;
  int socs_per_pcb = 5;
  double pcb_uplink_mbps = 1000;
  double esb_uplink_mbps = 20000;
  double power_cap_watts = 700;
  double intra_soc_rtt_ms = 0.44;
  double intra_soc_tcp_mbps = 903;
  // Per-SoC access link. Defaults to the achieved TCP figure; the wiring's
  // nominal rate is not published.
  double access_link_mbps = 903;
  int cpu_cores = 8;
  double ram_gb = 12;
  double storage_gb = 256;
};

enum class LinkKind { soc_access, pcb_uplink, esb };

inline std::string_view to_string(LinkKind k) {
  switch (k) {
    case LinkKind::soc_access: return "soc-access";
    case LinkKind::pcb_uplink: return "pcb-uplink";
    case LinkKind::esb: return "esb";
  }
  return "?";
}

struct Link {
  LinkKind kind;
  int index;  // SoC id, PCB id, or 0 for the ESB
  double capacity_mbps;

  friend bool operator==(const Link&, const Link&) = default;
};

/// Validated, immutable description of an SoC cluster.
class ClusterTopology {
 public:
  ClusterTopology(std::vector<SocUnit> socs, std::vector<PcbBoard> pcbs, double esb_uplink_mbps,
                  double power_cap_watts, double intra_soc_rtt_ms, double intra_soc_tcp_mbps,
                  double access_link_mbps)
      : socs_(std::move(socs)),
        pcbs_(std::move(pcbs)),
        esb_uplink_mbps_(esb_uplink_mbps),
        power_cap_watts_(power_cap_watts),
        intra_soc_rtt_ms_(intra_soc_rtt_ms),
        intra_soc_tcp_mbps_(intra_soc_tcp_mbps),
        access_link_mbps_(access_link_mbps) {
    validate();
  }

  const std::vector<SocUnit>& socs() const noexcept { return socs_; }
  const std::vector<PcbBoard>& pcbs() const noexcept { return pcbs_; }
  std::size_t soc_count() const noexcept { return socs_.size(); }
  std::size_t pcb_count() const noexcept { return pcbs_.size(); }
  double esb_uplink_mbps() const noexcept { return esb_uplink_mbps_; }
  double power_cap_watts() const noexcept { return power_cap_watts_; }
  double intra_soc_rtt_ms() const noexcept { return intra_soc_rtt_ms_; }
  double intra_soc_tcp_mbps() const noexcept { return intra_soc_tcp_mbps_; }
  double access_link_mbps() const noexcept { return access_link_mbps_; }

  const SocUnit& soc(int id) const {
    auto it = std::find_if(socs_.begin(), socs_.end(), [&](const SocUnit& s) { return s.id == id; });
    if (it == socs_.end()) throw UnknownSoC(id);
    return *it;
  }

  const PcbBoard& pcb(int id) const {
    auto it = std::find_if(pcbs_.begin(), pcbs_.end(), [&](const PcbBoard& p) { return p.id == id; });
    if (it == pcbs_.end()) throw InvalidTopology("unknown PCB id " + std::to_string(id));
    return *it;
  }

  int pcb_of(int soc_id) const { return soc(soc_id).pcb_id; }

  double max_pcb_uplink_mbps() const {
    double m = 0;
    for (const auto& p : pcbs_) m = std::max(m, p.uplink_mbps);
    return m;
  }

 private:
  void validate() const {
    if (socs_.empty()) throw InvalidTopology("topology has no SoCs");
    if (pcbs_.empty()) throw InvalidTopology("topology has no PCBs");
    if (!(esb_uplink_mbps_ > 0)) throw InvalidTopology("ESB uplink must be positive");
    if (!(power_cap_watts_ > 0)) throw InvalidTopology("power cap must be positive");
    if (!(access_link_mbps_ > 0)) throw InvalidTopology("access link capacity must be positive");
    if (intra_soc_rtt_ms_ < 0 || !(intra_soc_tcp_mbps_ > 0))
      throw InvalidTopology("intra-SoC link figures must be positive");

    std::vector<int> ids;
    for (const auto& s : socs_) {
      if (s.cpu_cores <= 0) throw InvalidTopology("SoC " + std::to_string(s.id) + ": cpu_cores must be > 0");
      if (!(s.ram_gb > 0)) throw InvalidTopology("SoC " + std::to_string(s.id) + ": ram_gb must be > 0");
      ids.push_back(s.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw InvalidTopology("duplicate SoC id");

    std::vector<int> pcb_ids;
    std::vector<int> members;
    for (const auto& p : pcbs_) {
      if (!(p.uplink_mbps > 0)) throw InvalidTopology("PCB " + std::to_string(p.id) + ": uplink must be > 0");
      pcb_ids.push_back(p.id);
      for (int sid : p.soc_ids) {
        auto it = std::find_if(socs_.begin(), socs_.end(), [&](const SocUnit& s) { return s.id == sid; });
        if (it == socs_.end()) throw InvalidTopology("PCB " + std::to_string(p.id) + " lists unknown SoC");
        if (it->pcb_id != p.id) throw InvalidTopology("SoC " + std::to_string(sid) + " pcb_id mismatch");
        members.push_back(sid);
      }
    }
    std::sort(pcb_ids.begin(), pcb_ids.end());
    if (std::adjacent_find(pcb_ids.begin(), pcb_ids.end()) != pcb_ids.end())
      throw InvalidTopology("duplicate PCB id");
    std::sort(members.begin(), members.end());
    if (members != ids) throw InvalidTopology("every SoC must belong to exactly one PCB");
    if (esb_uplink_mbps_ < max_pcb_uplink_mbps())
      throw InvalidTopology("ESB uplink must be at least the largest PCB uplink");
  }

  std::vector<SocUnit> socs_;
  std::vector<PcbBoard> pcbs_;
  double esb_uplink_mbps_;
  double power_cap_watts_;
  double intra_soc_rtt_ms_;
  double intra_soc_tcp_mbps_;
  double access_link_mbps_;
};

/// Board-major construction: SoC k lives on PCB k / socs_per_pcb.
inline ClusterTopology build_cluster(const TopologySpec& spec = {}) {
  if (spec.soc_count <= 0 || spec.socs_per_pcb <= 0) throw InvalidTopology("counts must be positive");
  if (spec.soc_count % spec.socs_per_pcb != 0)
    throw InvalidTopology("group size " + std::to_string(spec.socs_per_pcb) + " does not divide " +
                          std::to_string(spec.soc_count) + " SoCs");
  if (!(spec.pcb_uplink_mbps > 0) || !(spec.esb_uplink_mbps > 0) || !(spec.power_cap_watts > 0) ||
      !(spec.access_link_mbps > 0) || !(spec.intra_soc_tcp_mbps > 0) || spec.cpu_cores <= 0 ||
      !(spec.ram_gb > 0))
    throw InvalidTopology("capacities must be positive");

  std::vector<SocUnit> socs;
  std::vector<PcbBoard> pcbs;
  const int boards = spec.soc_count / spec.socs_per_pcb;
  for (int b = 0; b < boards; ++b) {
    PcbBoard pcb;
    pcb.id = b;
    pcb.uplink_mbps = spec.pcb_uplink_mbps;
    for (int j = 0; j < spec.socs_per_pcb; ++j) {
      SocUnit s;
      s.id = b * spec.socs_per_pcb + j;
      s.pcb_id = b;
      s.cpu_cores = spec.cpu_cores;
      s.ram_gb = spec.ram_gb;
      s.storage_gb = spec.storage_gb;
      pcb.soc_ids.push_back(s.id);
      socs.push_back(std::move(s));
    }
    pcbs.push_back(std::move(pcb));
  }
  return ClusterTopology(std::move(socs), std::move(pcbs), spec.esb_uplink_mbps, spec.power_cap_watts,
                         spec.intra_soc_rtt_ms, spec.intra_soc_tcp_mbps, spec.access_link_mbps);
}

/// Links traversed by traffic from `src` to `dst`. Same-board pairs switch
/// on the PCB; cross-board pairs go up through both uplinks and the ESB.
inline std::vector<Link> link_path(const ClusterTopology& topo, int src, int dst) {
  const SocUnit& a = topo.soc(src);
  const SocUnit& b = topo.soc(dst);
  if (src == dst) throw InvalidArgument("link_path requires distinct endpoints");
  const double access = topo.access_link_mbps();
  std::vector<Link> path;
  path.push_back({LinkKind::soc_access, a.id, access});
  if (a.pcb_id != b.pcb_id) {
    path.push_back({LinkKind::pcb_uplink, a.pcb_id, topo.pcb(a.pcb_id).uplink_mbps});
    path.push_back({LinkKind::esb, 0, topo.esb_uplink_mbps()});
    path.push_back({LinkKind::pcb_uplink, b.pcb_id, topo.pcb(b.pcb_id).uplink_mbps});
  }
  path.push_back({LinkKind::soc_access, b.id, access});
  return path;
}

/// Comparison "traditional" edge server. Only the partitioning scheme
/// matters to the models.
struct TraditionalServerSpec {
  std::string label = "edge-server";
  int cpu_cores = 80;       // hardware threads
  int cpu_partitions = 10;  // 8-core slices
  int gpus = 8;
  std::string gpu_model = "nvidia-a40";
  double dram_gb = 768;

  void validate() const {
    if (cpu_cores <= 0) throw InvalidTopology("cpu_cores must be > 0");
    if (cpu_partitions < 0 || gpus < 0) throw InvalidTopology("counts must be nonnegative");
    if (cpu_partitions * 8 > cpu_cores)
      throw InvalidTopology("cpu_partitions x 8 exceeds available hardware threads");
  }
};

}  // namespace socsim
