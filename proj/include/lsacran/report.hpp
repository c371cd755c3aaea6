#pragma once

// Deterministic text output: CSV tables for runs and sweeps (integers for
// money in micro-units and rates in bps) and the protocol message log, one
// line per message.

#include <cstdio>
#include <string>
#include <vector>

#include "lsacran/lsa_protocol.hpp"
#include "lsacran/sim_engine.hpp"
#include "lsacran/sweeps.hpp"

namespace lsacran {

namespace detail {

inline std::string join_channels(const std::vector<int>& channels) {
  std::string out;
  for (int ch : channels) {
    if (!out.empty()) out += ';';
    out += std::to_string(ch);
  }
  return out;
}

inline std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", ratio);
  return buf;
}

}  // namespace detail

inline std::string run_csv(const SimResult& result, bool baseline_enabled) {
  std::string out =
      "time_us,active_incumbents,available_mhz,served_dynamic,churned_mvnos,revenue_dynamic_micro";
  if (baseline_enabled) out += ",served_static,revenue_static_micro";
  out += '\n';
  for (const auto& rec : result.records) {
    out += std::to_string(rec.time_us);
    out += ',' + std::to_string(rec.active_incumbents);
    out += ',' + std::to_string(rec.available_mhz);
    out += ',' + std::to_string(rec.served_mvnos);
    out += ',' + std::to_string(rec.churned_mvnos);
    out += ',' + std::to_string(rec.revenue_dynamic_micro);
    if (baseline_enabled) {
      out += ',' + std::to_string(rec.static_allocation ? rec.static_allocation->served_count() : 0);
      out += ',' + std::to_string(rec.revenue_static_micro.value_or(0));
    }
    out += '\n';
  }
  return out;
}

// Long-format per-MVNO view of every record.
inline std::string run_detail_csv(const SimResult& result) {
  std::string out = "time_us,mvno,served,antennas,channels,rate_bps\n";
  for (const auto& rec : result.records) {
    for (const auto& entry : rec.dynamic_allocation.entries) {
      out += std::to_string(rec.time_us);
      out += ',' + entry.mvno_id;
      out += ',' + std::string(entry.served ? "1" : "0");
      out += ',' + std::to_string(entry.antennas);
      out += ',' + detail::join_channels(entry.channel_indices);
      out += ',' + std::to_string(entry.achieved_rate_bps);
      out += '\n';
    }
  }
  return out;
}

inline std::string message_log_text(const std::vector<LsaMessage>& log) {
  std::string out;
  for (const auto& msg : log) {
    out += std::to_string(msg.issued_at_us);
    out += ' ';
    out += to_string(msg.kind);
    out += ' ';
    out += msg.sender;
    out += " -> ";
    out += msg.receiver;
    out += " channels=";
    out += detail::join_channels(msg.channel_indices);
    if (msg.deadline_us) out += " deadline_us=" + std::to_string(*msg.deadline_us);
    out += '\n';
  }
  return out;
}

inline std::string incumbent_sweep_csv(const std::vector<IncumbentSweepRow>& rows) {
  std::string out = "active_incumbents,served_dynamic,served_static,revenue_dynamic_micro,revenue_static_micro\n";
  for (const auto& row : rows) {
    out += std::to_string(row.active_incumbents);
    out += ',' + std::to_string(row.served_dynamic);
    out += ',' + std::to_string(row.served_static);
    out += ',' + std::to_string(row.revenue_dynamic_micro);
    out += ',' + std::to_string(row.revenue_static_micro);
    out += '\n';
  }
  return out;
}

inline std::string cost_ratio_sweep_csv(const std::vector<CostRatioSweepRow>& rows) {
  std::string out = "ratio,cost_per_antenna_micro,revenue_dynamic_micro,revenue_static_micro\n";
  for (const auto& row : rows) {
    out += detail::format_ratio(row.ratio);
    out += ',' + std::to_string(row.cost_per_antenna_micro);
    out += ',' + std::to_string(row.revenue_dynamic_micro);
    out += ',' + std::to_string(row.revenue_static_micro);
    out += '\n';
  }
  return out;
}

}  // namespace lsacran
