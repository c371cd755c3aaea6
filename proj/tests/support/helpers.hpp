#pragma once

// Shared helpers for the unit and acceptance suites: scenario loading,
// allocation invariant checking, independent brute-force oracles and random
// instance generation. Everything here stays independent of the knapsack
// implementation it is used to check.

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lsacran/lsacran.hpp"

#ifndef LSACRAN_SCENARIO_DIR
#define LSACRAN_SCENARIO_DIR "scenarios"
#endif

namespace lsacran::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Scenario load_scenario_file(const std::string& name) {
  return parse_scenario(read_file(std::string(LSACRAN_SCENARIO_DIR) + "/" + name));
}

inline Scenario reference_scenario() { return load_scenario_file("reference.scn"); }

// All structural invariants an Allocation must satisfy against its inputs.
// Returns a description of the first violation, or nullopt when clean.
inline std::optional<std::string> allocation_violation(const Allocation& alloc,
                                                       const std::vector<MvnoRequest>& requests,
                                                       const BandPlan& plan,
                                                       const RateModelParams& params,
                                                       const SystemLimits& limits,
                                                       const CostModel& costs,
                                                       bool static_system = false) {
  if (alloc.entries.size() != requests.size()) return "entry count differs from request count";
  std::set<int> used_channels;
  MoneyMicro income = 0;
  MoneyMicro cost = 0;
  for (size_t i = 0; i < requests.size(); ++i) {
    const auto& entry = alloc.entries[i];
    const auto& req = requests[i];
    if (entry.mvno_id != req.id) return "entry order does not match request order";
    if (!entry.served) {
      if (entry.antennas != 0 || !entry.channel_indices.empty() || entry.achieved_rate_bps != 0)
        return "unserved entry '" + req.id + "' is not all-zero";
      continue;
    }
    if (entry.channel_indices.empty()) return "served entry '" + req.id + "' holds no channels";
    for (int ch : entry.channel_indices) {
      if (plan.state_of(ch) != ChannelState::Free)
        return "channel " + std::to_string(ch) + " was not free in the input plan";
      if (!used_channels.insert(ch).second)
        return "channel " + std::to_string(ch) + " assigned twice";
    }
    if (static_system) {
      if (entry.antennas != limits.static_antennas_per_mvno)
        return "static entry '" + req.id + "' does not use the fixed antenna count";
    } else {
      if (entry.antennas < limits.antennas_min_per_mvno || entry.antennas > limits.antennas_total)
        return "entry '" + req.id + "' violates the antenna bounds";
    }
    const Bps achieved = rate(params, entry.antennas,
                              static_cast<Hertz>(entry.channel_indices.size()) * plan.channel_width_hz());
    if (achieved != entry.achieved_rate_bps) return "achieved rate of '" + req.id + "' is inconsistent";
    if (achieved < req.min_rate_bps) return "entry '" + req.id + "' misses its rate requirement";
    income += contracted_income_micro(req);
    cost += static_cast<MoneyMicro>(entry.antennas) * costs.per_antenna_micro +
            static_cast<MoneyMicro>(entry.channel_indices.size()) * plan.channel_width_hz() *
                costs.per_hz_micro;
  }
  if (income != alloc.total_income_micro) return "total income is inconsistent";
  if (cost != alloc.total_cost_micro) return "total cost is inconsistent";
  if (alloc.revenue_micro != alloc.total_income_micro - alloc.total_cost_micro)
    return "revenue != income - cost";
  if (static_system) {
    const int cap = limits.static_antennas_per_mvno > 0
                        ? limits.antennas_total / limits.static_antennas_per_mvno
                        : 0;
    if (alloc.served_count() > cap) return "static allocation exceeds the dedicated antenna pool";
  }
  return std::nullopt;
}

// Brute-force reference for the static baseline: enumerates every subset and
// every per-member channel count with the pinned antenna count.
struct StaticOracleResult {
  MoneyMicro revenue = 0;
  int served = 0;
};

namespace detail {

inline void static_oracle_assign(const std::vector<MvnoRequest>& sorted, const std::vector<int>& members,
                                 size_t pos, int budget, Hertz width, const RateModelParams& params,
                                 int antennas, const CostModel& costs, MoneyMicro revenue_so_far,
                                 bool& any, StaticOracleResult& best) {
  if (pos == members.size()) {
    if (!any || revenue_so_far > best.revenue ||
        (revenue_so_far == best.revenue && static_cast<int>(members.size()) > best.served)) {
      best.revenue = revenue_so_far;
      best.served = static_cast<int>(members.size());
      any = true;
    }
    return;
  }
  const MvnoRequest& req = sorted[static_cast<size_t>(members[pos])];
  const MoneyMicro income = contracted_income_micro(req);
  for (int c = 1; c <= budget; ++c) {
    if (rate(params, antennas, c * width) < req.min_rate_bps) continue;
    const MoneyMicro cost = static_cast<MoneyMicro>(antennas) * costs.per_antenna_micro +
                            static_cast<MoneyMicro>(c) * width * costs.per_hz_micro;
    static_oracle_assign(sorted, members, pos + 1, budget - c, width, params, antennas, costs,
                         revenue_so_far + income - cost, any, best);
  }
}

}  // namespace detail

inline StaticOracleResult static_oracle(const std::vector<MvnoRequest>& requests,
                                        const BandPlan& plan, const RateModelParams& params,
                                        const SystemLimits& limits, const CostModel& costs) {
  std::vector<MvnoRequest> sorted = requests;
  std::sort(sorted.begin(), sorted.end(),
            [](const MvnoRequest& a, const MvnoRequest& b) { return a.id < b.id; });
  const int n = static_cast<int>(sorted.size());
  const int budget = static_cast<int>(plan.free_channels().size());
  if (n > 8 || budget > 8) throw std::invalid_argument("static_oracle: instance too large");
  const int cap = limits.static_antennas_per_mvno > 0
                      ? limits.antennas_total / limits.static_antennas_per_mvno
                      : 0;
  StaticOracleResult best;  // empty allocation
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int r = 0; r < n; ++r)
      if (mask & (1u << r)) members.push_back(r);
    if (static_cast<int>(members.size()) > cap) continue;
    StaticOracleResult sub;
    bool any = false;
    detail::static_oracle_assign(sorted, members, 0, budget, plan.channel_width_hz(), params,
                                 limits.static_antennas_per_mvno, costs, 0, any, sub);
    if (any && (sub.revenue > best.revenue ||
                (sub.revenue == best.revenue && sub.served > best.served)))
      best = sub;
  }
  return best;
}

// Small random instances for oracle-equivalence and property tests.
struct RandomInstance {
  std::vector<MvnoRequest> requests;
  BandPlan plan;
  RateModelParams params;
  SystemLimits limits;
  CostModel costs;
};

inline RandomInstance random_instance(std::mt19937& rng, int max_mvnos = 6, int max_channels = 8) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  RandomInstance inst;
  const int channels = pick(1, max_channels);
  inst.plan = BandPlan(channels, 5 * kMegaHertz, {});
  inst.params.antennas_per_stream = std::vector<int>{5, 10, 15}[static_cast<size_t>(pick(0, 2))];
  inst.params.sigma_millibps_per_hz = 500 * pick(2, 40);  // 1 .. 20 bps/Hz
  inst.limits.antennas_min_per_mvno = std::vector<int>{0, 10, 20}[static_cast<size_t>(pick(0, 2))];
  inst.limits.antennas_total = pick(4, 12) * 10;
  inst.limits.static_antennas_per_mvno =
      std::min(inst.limits.antennas_total,
               std::max(inst.limits.antennas_min_per_mvno, pick(1, 4) * 10));
  inst.costs.per_antenna_micro = pick(0, 200) * 1'000'000LL;
  inst.costs.per_hz_micro = pick(0, 40);
  const int n = pick(0, max_mvnos);
  std::vector<std::string> ids = {"ada", "bob", "cleo", "dot", "eve", "finn", "gus", "hana"};
  std::shuffle(ids.begin(), ids.end(), rng);
  for (int i = 0; i < n; ++i) {
    MvnoRequest req;
    req.id = ids[static_cast<size_t>(i)];
    req.min_rate_bps = static_cast<Bps>(pick(1, 60)) * 10 * kMbps;
    req.price_per_bps_micro = pick(0, 20);
    inst.requests.push_back(std::move(req));
  }
  return inst;
}

}  // namespace lsacran::test
