// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string_view>

#include "socsim/errors.hpp"
#include "socsim/exact.hpp"

namespace socsim {

enum class CommForm { linear, table, bandwidth };

/// Per-SoC communication cost for tensor-parallel inference across n SoCs.
///
/// linear:    c * (n - 1) + setup
/// table:     measured values keyed by n (n = 1 implicitly 0)
/// bandwidth: (n - 1) * exchange_bytes * 8 / link_mbps + setup
struct CommModel {
  CommForm form = CommForm::linear;
  Exact per_partner_ms = 0;
  Exact setup_ms = 0;
  std::map<int, Exact> table_ms;
  Exact exchange_bytes = 0;
  Exact link_mbps = 903;

  static CommModel linear(Exact c, Exact setup = 0) {
    CommModel m;
    m.per_partner_ms = std::move(c);
    m.setup_ms = std::move(setup);
    m.validate();
    return m;
  }

  static CommModel table(std::map<int, Exact> points) {
    CommModel m;
    m.form = CommForm::table;
    m.table_ms = std::move(points);
    m.validate();
    return m;
  }

  static CommModel bandwidth(Exact bytes_per_partner, Exact mbps, Exact setup = 0) {
    CommModel m;
    m.form = CommForm::bandwidth;
    m.exchange_bytes = std::move(bytes_per_partner);
    m.link_mbps = std::move(mbps);
    m.setup_ms = std::move(setup);
    m.validate();
    return m;
  }

  void validate() const {
    if (per_partner_ms < 0 || setup_ms < 0 || exchange_bytes < 0)
      throw InvalidArgument("communication parameters must be nonnegative");
    if (form == CommForm::bandwidth && !(link_mbps > 0)) throw InvalidArgument("link bandwidth must be positive");
    if (form == CommForm::table) {
      Exact prev = 0;
      for (const auto& [n, ms] : table_ms) {
        if (n < 1) throw InvalidArgument("table entries need n >= 1");
        if (n == 1 && ms != 0) throw InvalidArgument("communication at n = 1 must be 0");
        if (ms < prev) throw InvalidArgument("communication table must be nondecreasing in n");
        prev = ms;
      }
    }
  }

  bool operator==(const CommModel&) const = default;
};

struct CollabModel {
  Exact t1_ms = 0;
  Exact serial_fraction = 0;
  CommModel comm;
  Exact overlap_fraction = 0;

  void validate() const {
    if (!(t1_ms > 0)) throw InvalidArgument("t1 must be positive");
    if (serial_fraction < 0 || serial_fraction > 1) throw InvalidArgument("serial fraction must be in [0, 1]");
    if (overlap_fraction < 0 || overlap_fraction > 1) throw InvalidArgument("overlap fraction must be in [0, 1]");
    comm.validate();
  }

  bool operator==(const CollabModel&) const = default;
};

struct AmdahlFit {
  Exact serial_fraction;
  bool clamped = false;  // data implied a value outside [0, 1]
};

/// Solves t1 * (f + (1 - f) / n) = tN for f.
inline AmdahlFit fit_amdahl(const Exact& t1_ms, const Exact& tn_ms, int n) {
  if (n < 2) throw InvalidArgument("fit_amdahl needs n >= 2");
  if (!(t1_ms > 0) || !(tn_ms > 0)) throw InvalidArgument("latencies must be positive");
  if (tn_ms > t1_ms) throw Infeasible("latency at n exceeds single-SoC latency");
  const Exact inv_n = Exact(1, n);
  Exact f = (tn_ms / t1_ms - inv_n) / (1 - inv_n);
  AmdahlFit fit{f, false};
  if (f < 0) fit = {Exact(0), true};
  if (f > 1) fit = {Exact(1), true};
  return fit;
}

inline Exact compute_time(const CollabModel& m, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n == 1) return m.t1_ms;
  return m.t1_ms * (m.serial_fraction + (1 - m.serial_fraction) / n);
}

inline Exact comm_time(const CollabModel& m, int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n == 1) return 0;
  const CommModel& c = m.comm;
  switch (c.form) {
    case CommForm::linear:
      return c.per_partner_ms * (n - 1) + c.setup_ms;
    case CommForm::bandwidth:
      // bytes * 8 bits / (Mbps * 1000 bits per ms)
      return c.exchange_bytes * 8 * (n - 1) / (c.link_mbps * 1000) + c.setup_ms;
    case CommForm::table: {
      auto it = c.table_ms.find(n);
      if (it == c.table_ms.end()) throw OutOfDomain("no communication entry for n = " + std::to_string(n));
      return it->second;
    }
  }
  return 0;
}

enum class CollabMode { serial, pipelined };

inline std::string_view to_string(CollabMode m) { return m == CollabMode::serial ? "serial" : "pipelined"; }

struct LatencyBreakdown {
  Exact compute_ms;
  Exact comm_exposed_ms;
  Exact total_ms;
  Exact comm_share;
};

inline LatencyBreakdown total_latency(const CollabModel& m, int n, CollabMode mode) {
  LatencyBreakdown b;
  b.compute_ms = compute_time(m, n);
  Exact comm = comm_time(m, n);
  b.comm_exposed_ms = mode == CollabMode::serial ? comm : Exact((1 - m.overlap_fraction) * comm);
  b.total_ms = b.compute_ms + b.comm_exposed_ms;
  b.comm_share = b.total_ms > 0 ? Exact(b.comm_exposed_ms / b.total_ms) : Exact(0);
  return b;
}

inline Exact speedup(const CollabModel& m, int n, CollabMode mode) {
  return m.t1_ms / total_latency(m, n, mode).total_ms;
}

/// Builds a linear-communication model from the observations available for
/// one model at a single n: compute latencies at 1 and n SoCs and the
/// communication share of total latency with and without pipelining.
inline CollabModel calibrate_from_observations(const Exact& t1_ms, const Exact& tn_ms, int n, const Exact& serial_share,
                                               const Exact& pipelined_share) {
  if (serial_share < 0 || !(serial_share < 1) || pipelined_share < 0 || !(pipelined_share < 1))
    throw InvalidArgument("communication shares must be in [0, 1)");
  if (pipelined_share > serial_share) throw Infeasible("pipelined share exceeds serial share");
  CollabModel m;
  m.t1_ms = t1_ms;
  m.serial_fraction = fit_amdahl(t1_ms, tn_ms, n).serial_fraction;
  // share = comm / (compute + comm)
  const Exact comm_n = serial_share * tn_ms / (1 - serial_share);
  const Exact exposed_n = pipelined_share * tn_ms / (1 - pipelined_share);
  m.comm = CommModel::linear(comm_n / (n - 1));
  m.overlap_fraction = comm_n > 0 ? Exact(1 - exposed_n / comm_n) : Exact(0);
  m.validate();
  return m;
}

}  // namespace socsim
