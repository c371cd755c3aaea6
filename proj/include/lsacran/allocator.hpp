#pragma once

// Revenue-maximizing joint assignment of antennas and channels to MVNOs.
//
// Stage 1 (per_mvno_options) lists, for a single MVNO, the Pareto frontier
// of feasible (channel count, minimal antennas, cost) configurations over
// the channel-granular bandwidths. Stage 2 (allocate_dynamic /
// allocate_static) is an exact multiple-choice knapsack over the free
// channel budget, with at most one configuration per MVNO. allocate_oracle
// is the exhaustive reference implementation that guards the knapsack on
// small instances.
//
// Income counts the contracted rate only: a served MVNO pays
// price_per_bps * min_rate_bps per epoch, independent of any surplus rate
// its configuration happens to deliver. All money is integer micro-units,
// so revenue comparisons and tie-breaks are exact.
//
// Ties are broken by: higher revenue, more MVNOs served, lexicographically
// smallest served-id set, fewer total channels, fewer total antennas.

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsacran/band_plan.hpp"
#include "lsacran/rate_model.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

struct MvnoRequest {
  std::string id;
  Bps min_rate_bps = 0;
  MoneyMicro price_per_bps_micro = 0;

  bool operator==(const MvnoRequest&) const = default;
};

struct CostModel {
  MoneyMicro per_antenna_micro = 0;
  MoneyMicro per_hz_micro = 0;

  bool operator==(const CostModel&) const = default;
};

struct SystemLimits {
  int antennas_min_per_mvno = 20;
  int antennas_total = 100;
  int static_antennas_per_mvno = 20;

  bool operator==(const SystemLimits&) const = default;
};

// One feasible configuration for one MVNO: `channels` channels of the plan's
// width, the minimal antenna count meeting the rate requirement on them, and
// the per-epoch cost of renting both.
struct MvnoOption {
  int channels = 0;
  int antennas = 0;
  MoneyMicro cost_micro = 0;

  bool operator==(const MvnoOption&) const = default;
};

struct MvnoAllocation {
  std::string mvno_id;
  bool served = false;
  int antennas = 0;
  std::vector<int> channel_indices;
  Bps achieved_rate_bps = 0;

  bool operator==(const MvnoAllocation&) const = default;
};

struct Allocation {
  std::vector<MvnoAllocation> entries;  // one per request, in request order
  MoneyMicro total_income_micro = 0;
  MoneyMicro total_cost_micro = 0;
  MoneyMicro revenue_micro = 0;

  int served_count() const {
    int n = 0;
    for (const auto& e : entries) n += e.served ? 1 : 0;
    return n;
  }

  bool operator==(const Allocation&) const = default;
};

inline MoneyMicro contracted_income_micro(const MvnoRequest& req) {
  const __int128 v = static_cast<__int128>(req.price_per_bps_micro) * req.min_rate_bps;
  if (v > std::numeric_limits<MoneyMicro>::max())
    throw std::overflow_error("income overflows micro-currency range");
  return static_cast<MoneyMicro>(v);
}

namespace detail {

inline MoneyMicro option_cost_micro(int antennas, Hertz bandwidth_hz, const CostModel& cost) {
  const __int128 v = static_cast<__int128>(antennas) * cost.per_antenna_micro +
                     static_cast<__int128>(bandwidth_hz) * cost.per_hz_micro;
  if (v > std::numeric_limits<MoneyMicro>::max())
    throw std::overflow_error("configuration cost overflows micro-currency range");
  return static_cast<MoneyMicro>(v);
}

// Keeps only Pareto-efficient options: anything both wider and at least as
// costly as a narrower option is dropped. Input must be sorted by channel
// count ascending.
inline std::vector<MvnoOption> pareto_prune(std::vector<MvnoOption> options) {
  std::vector<MvnoOption> kept;
  MoneyMicro best_cost = std::numeric_limits<MoneyMicro>::max();
  for (const auto& opt : options) {
    if (opt.cost_micro < best_cost) {
      kept.push_back(opt);
      best_cost = opt.cost_micro;
    }
  }
  return kept;
}

}  // namespace detail

// Feasible dynamic-C-RAN configurations for one MVNO, one per candidate
// bandwidth in {w, 2w, ..., max_bandwidth_hz}, each with the minimal antenna
// count within [antennas_min_per_mvno, antennas_total]. Infeasible
// bandwidths are omitted and the list is pruned to the Pareto frontier.
inline std::vector<MvnoOption> per_mvno_options(const MvnoRequest& req,
                                                const RateModelParams& params,
                                                const SystemLimits& limits, const CostModel& cost,
                                                Hertz max_bandwidth_hz,
                                                Hertz channel_width_hz = 5 * kMegaHertz) {
  if (channel_width_hz <= 0) throw std::invalid_argument("per_mvno_options: channel width must be > 0");
  if (max_bandwidth_hz < 0 || max_bandwidth_hz % channel_width_hz != 0)
    throw std::invalid_argument("per_mvno_options: max bandwidth must be a multiple of the channel width");
  std::vector<MvnoOption> options;
  const int max_channels = static_cast<int>(max_bandwidth_hz / channel_width_hz);
  for (int c = 1; c <= max_channels; ++c) {
    const Hertz b = c * channel_width_hz;
    const auto m = min_antennas(params, b, req.min_rate_bps, limits.antennas_min_per_mvno,
                                limits.antennas_total);
    if (!m) continue;
    options.push_back(MvnoOption{c, *m, detail::option_cost_micro(*m, b, cost)});
  }
  return detail::pareto_prune(std::move(options));
}

// Static-baseline counterpart: the antenna count is pinned (dedicated
// antennas), only the bandwidth varies.
inline std::vector<MvnoOption> fixed_antenna_options(const MvnoRequest& req,
                                                     const RateModelParams& params, int antennas,
                                                     const CostModel& cost, Hertz max_bandwidth_hz,
                                                     Hertz channel_width_hz = 5 * kMegaHertz) {
  if (channel_width_hz <= 0) throw std::invalid_argument("fixed_antenna_options: channel width must be > 0");
  if (antennas < 0) throw std::invalid_argument("fixed_antenna_options: antennas must be >= 0");
  if (max_bandwidth_hz < 0 || max_bandwidth_hz % channel_width_hz != 0)
    throw std::invalid_argument("fixed_antenna_options: max bandwidth must be a multiple of the channel width");
  std::vector<MvnoOption> options;
  const int max_channels = static_cast<int>(max_bandwidth_hz / channel_width_hz);
  for (int c = 1; c <= max_channels; ++c) {
    const Hertz b = c * channel_width_hz;
    if (rate(params, antennas, b) < req.min_rate_bps) continue;
    options.push_back(MvnoOption{c, antennas, detail::option_cost_micro(antennas, b, cost)});
  }
  return detail::pareto_prune(std::move(options));
}

namespace detail {

struct KnapsackItem {
  int channels = 0;
  int antennas = 0;
  MoneyMicro cost_micro = 0;
  MoneyMicro gain_micro = 0;  // income - cost, never negative here
  int option_index = -1;      // position in the rank's option list
};

struct KnapsackCell {
  MoneyMicro gain = 0;
  int served = 0;
  std::vector<int> ids;  // served request ranks, ascending
  int channels = 0;
  int antennas = 0;
  int choice = -1;  // option index chosen for the row's MVNO, -1 = skip
};

// Full tie-break key: revenue desc, served desc, served-id set lex asc,
// channels asc, antennas asc.
inline bool cell_better(const KnapsackCell& a, const KnapsackCell& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.served != b.served) return a.served > b.served;
  if (a.ids != b.ids) return std::lexicographical_compare(a.ids.begin(), a.ids.end(),
                                                          b.ids.begin(), b.ids.end());
  if (a.channels != b.channels) return a.channels < b.channels;
  return a.antennas < b.antennas;
}

// Exact multiple-choice knapsack over the channel budget. items[r] are the
// candidate configurations of the MVNO with rank r (ranks follow id order,
// so the lexicographic component of the key is the id order). max_served
// caps how many MVNOs may be picked; pass n for no cap.
//
// The cell key composes additively (the id vector is prepended with a rank
// smaller than everything behind it), so suffix-optimal cells combine into
// globally optimal ones and the tie-break order is exact.
inline std::vector<int> solve_mckp(const std::vector<std::vector<KnapsackItem>>& items,
                                   int budget_channels, int max_served) {
  const int n = static_cast<int>(items.size());
  const int cap = std::min(max_served, n);
  if (cap < 0) throw std::invalid_argument("solve_mckp: max_served must be >= 0");
  const int cols = budget_channels + 1;
  const int planes = cap + 1;
  auto at = [&](int i, int j, int k) -> size_t {
    return (static_cast<size_t>(i) * cols + j) * planes + k;
  };
  std::vector<KnapsackCell> dp(static_cast<size_t>(n + 1) * cols * planes);
  // row n is the all-zero base; fill rows n-1 .. 0
  for (int i = n - 1; i >= 0; --i) {
    for (int j = 0; j <= budget_channels; ++j) {
      for (int k = 0; k <= cap; ++k) {
        KnapsackCell best = dp[at(i + 1, j, k)];
        best.choice = -1;
        for (int o = 0; o < static_cast<int>(items[i].size()); ++o) {
          const auto& item = items[i][static_cast<size_t>(o)];
          if (item.channels > j || k == 0) continue;
          const KnapsackCell& suffix = dp[at(i + 1, j - item.channels, k - 1)];
          KnapsackCell cand;
          cand.gain = item.gain_micro + suffix.gain;
          cand.served = 1 + suffix.served;
          cand.ids.reserve(suffix.ids.size() + 1);
          cand.ids.push_back(i);
          cand.ids.insert(cand.ids.end(), suffix.ids.begin(), suffix.ids.end());
          cand.channels = item.channels + suffix.channels;
          cand.antennas = item.antennas + suffix.antennas;
          cand.choice = o;
          if (cell_better(cand, best)) best = std::move(cand);
        }
        dp[at(i, j, k)] = std::move(best);
      }
    }
  }
  // walk the choices back out
  std::vector<int> choice(static_cast<size_t>(n), -1);
  int j = budget_channels;
  int k = cap;
  for (int i = 0; i < n; ++i) {
    const int o = dp[at(i, j, k)].choice;
    choice[static_cast<size_t>(i)] = o;
    if (o >= 0) {
      j -= items[i][static_cast<size_t>(o)].channels;
      k -= 1;
    }
  }
  return choice;
}

inline std::vector<int> ranks_by_id(const std::vector<MvnoRequest>& requests) {
  std::set<std::string> ids;
  for (const auto& r : requests) {
    if (r.id.empty()) throw std::invalid_argument("allocator: MVNO id must be non-empty");
    if (r.min_rate_bps <= 0) throw std::invalid_argument("allocator: min_rate_bps must be > 0");
    if (r.price_per_bps_micro < 0) throw std::invalid_argument("allocator: price must be >= 0");
    if (!ids.insert(r.id).second)
      throw std::invalid_argument("allocator: duplicate MVNO id '" + r.id + "'");
  }
  std::vector<int> order(requests.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return requests[static_cast<size_t>(a)].id < requests[static_cast<size_t>(b)].id; });
  return order;
}

// Turns per-rank picked options into a concrete Allocation, handing out
// channel indices lowest-free-index-first in id order.
inline Allocation materialize(const std::vector<MvnoRequest>& requests,
                              const std::vector<int>& order, const BandPlan& plan,
                              const RateModelParams& params,
                              const std::vector<std::vector<MvnoOption>>& options,
                              const std::vector<int>& choice) {
  const std::vector<int> free = plan.free_channels();
  Allocation out;
  out.entries.resize(requests.size());
  size_t next_free = 0;
  for (size_t rank = 0; rank < order.size(); ++rank) {
    const auto req_index = static_cast<size_t>(order[rank]);
    const MvnoRequest& req = requests[req_index];
    MvnoAllocation entry;
    entry.mvno_id = req.id;
    const int o = choice[rank];
    if (o >= 0) {
      const MvnoOption& opt = options[rank][static_cast<size_t>(o)];
      entry.served = true;
      entry.antennas = opt.antennas;
      for (int c = 0; c < opt.channels; ++c)
        entry.channel_indices.push_back(free[next_free++]);
      entry.achieved_rate_bps = rate(params, opt.antennas, opt.channels * plan.channel_width_hz());
      out.total_income_micro += contracted_income_micro(req);
      out.total_cost_micro += opt.cost_micro;
    }
    out.entries[req_index] = std::move(entry);
  }
  out.revenue_micro = out.total_income_micro - out.total_cost_micro;
  return out;
}

inline std::vector<std::vector<KnapsackItem>> profitable_items(
    const std::vector<MvnoRequest>& requests, const std::vector<int>& order,
    const std::vector<std::vector<MvnoOption>>& options) {
  std::vector<std::vector<KnapsackItem>> items(order.size());
  for (size_t rank = 0; rank < order.size(); ++rank) {
    const MvnoRequest& req = requests[static_cast<size_t>(order[rank])];
    const MoneyMicro income = contracted_income_micro(req);
    for (size_t o = 0; o < options[rank].size(); ++o) {
      const auto& opt = options[rank][o];
      if (income < opt.cost_micro) continue;  // serving at a loss is never revenue-optimal
      items[rank].push_back(KnapsackItem{opt.channels, opt.antennas, opt.cost_micro,
                                         income - opt.cost_micro, static_cast<int>(o)});
    }
  }
  return items;
}

// solve_mckp works on item indices; translate back to option-list indices.
inline std::vector<int> option_choices(const std::vector<std::vector<KnapsackItem>>& items,
                                       const std::vector<int>& item_choice) {
  std::vector<int> out(item_choice.size(), -1);
  for (size_t rank = 0; rank < item_choice.size(); ++rank)
    if (item_choice[rank] >= 0)
      out[rank] = items[rank][static_cast<size_t>(item_choice[rank])].option_index;
  return out;
}

}  // namespace detail

// Dynamic C-RAN allocation: antennas are shared RRHs (the antennas_total cap
// applies per MVNO, cost is charged per MVNO rental), channels come from the
// plan's free set. Pure function of its inputs; the caller applies the
// returned assignment to the plan if desired.
inline Allocation allocate_dynamic(const std::vector<MvnoRequest>& requests, const BandPlan& plan,
                                   const RateModelParams& params, const SystemLimits& limits,
                                   const CostModel& cost) {
  const std::vector<int> order = detail::ranks_by_id(requests);
  const int budget = static_cast<int>(plan.free_channels().size());
  const Hertz width = plan.channel_width_hz();
  std::vector<std::vector<MvnoOption>> options(order.size());
  for (size_t rank = 0; rank < order.size(); ++rank)
    options[rank] = per_mvno_options(requests[static_cast<size_t>(order[rank])], params, limits,
                                     cost, budget * width, width);
  const auto items = detail::profitable_items(requests, order, options);
  const auto choice = detail::solve_mckp(items, budget, static_cast<int>(order.size()));
  return detail::materialize(requests, order, plan, params, options,
                             detail::option_choices(items, choice));
}

// Static C-RAN baseline: every served MVNO uses exactly
// static_antennas_per_mvno dedicated antennas, so at most
// floor(antennas_total / static_antennas_per_mvno) MVNOs fit in the pool.
inline Allocation allocate_static(const std::vector<MvnoRequest>& requests, const BandPlan& plan,
                                  const RateModelParams& params, const SystemLimits& limits,
                                  const CostModel& cost) {
  const std::vector<int> order = detail::ranks_by_id(requests);
  const int budget = static_cast<int>(plan.free_channels().size());
  const Hertz width = plan.channel_width_hz();
  std::vector<std::vector<MvnoOption>> options(order.size());
  for (size_t rank = 0; rank < order.size(); ++rank)
    options[rank] = fixed_antenna_options(requests[static_cast<size_t>(order[rank])], params,
                                          limits.static_antennas_per_mvno, cost, budget * width,
                                          width);
  const int max_served = limits.static_antennas_per_mvno > 0
                             ? limits.antennas_total / limits.static_antennas_per_mvno
                             : 0;
  const auto items = detail::profitable_items(requests, order, options);
  const auto choice = detail::solve_mckp(items, budget, max_served);
  return detail::materialize(requests, order, plan, params, options,
                             detail::option_choices(items, choice));
}

namespace detail {

struct OracleBest {
  bool found = false;
  MoneyMicro revenue = 0;
  int served = 0;
  std::vector<int> ids;
  std::vector<int> channel_counts;  // per served rank
  std::vector<int> antenna_counts;
};

inline bool oracle_better(const OracleBest& a, const OracleBest& b) {
  if (!b.found) return a.found;
  if (!a.found) return false;
  if (a.revenue != b.revenue) return a.revenue > b.revenue;
  if (a.served != b.served) return a.served > b.served;
  return std::lexicographical_compare(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end());
}

inline void oracle_assign(const std::vector<MvnoRequest>& requests, const std::vector<int>& order,
                          const std::vector<int>& members, size_t pos, int budget, Hertz width,
                          const RateModelParams& params, const SystemLimits& limits,
                          const CostModel& cost, MoneyMicro revenue_so_far,
                          std::vector<int>& channel_counts, std::vector<int>& antenna_counts,
                          OracleBest& best) {
  if (pos == members.size()) {
    OracleBest cand;
    cand.found = true;
    cand.revenue = revenue_so_far;
    cand.served = static_cast<int>(members.size());
    cand.ids = members;
    cand.channel_counts = channel_counts;
    cand.antenna_counts = antenna_counts;
    if (oracle_better(cand, best)) best = std::move(cand);
    return;
  }
  const MvnoRequest& req = requests[static_cast<size_t>(order[static_cast<size_t>(members[pos])])];
  const MoneyMicro income = contracted_income_micro(req);
  for (int c = 1; c <= budget; ++c) {
    const auto m = min_antennas(params, c * width, req.min_rate_bps, limits.antennas_min_per_mvno,
                                limits.antennas_total);
    if (!m) continue;
    const MoneyMicro opt_cost = option_cost_micro(*m, c * width, cost);
    channel_counts[pos] = c;
    antenna_counts[pos] = *m;
    oracle_assign(requests, order, members, pos + 1, budget - c, width, params, limits, cost,
                  revenue_so_far + income - opt_cost, channel_counts, antenna_counts, best);
  }
}

}  // namespace detail

// Exhaustive reference allocator: enumerates every served subset, every
// per-member channel count and the minimal antennas for it. Refuses
// instances beyond 8 MVNOs or 8 free channels.
inline Allocation allocate_oracle(const std::vector<MvnoRequest>& requests, const BandPlan& plan,
                                  const RateModelParams& params, const SystemLimits& limits,
                                  const CostModel& cost) {
  const std::vector<int> order = detail::ranks_by_id(requests);
  const int n = static_cast<int>(order.size());
  const int budget = static_cast<int>(plan.free_channels().size());
  if (n > 8 || budget > 8)
    throw std::invalid_argument("allocate_oracle: instance too large (max 8 MVNOs, 8 free channels)");
  const Hertz width = plan.channel_width_hz();

  detail::OracleBest best;
  best.found = true;  // empty allocation, revenue 0
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int r = 0; r < n; ++r)
      if (mask & (1u << r)) members.push_back(r);
    std::vector<int> channel_counts(members.size(), 0);
    std::vector<int> antenna_counts(members.size(), 0);
    detail::OracleBest sub;
    detail::oracle_assign(requests, order, members, 0, budget, width, params, limits, cost, 0,
                          channel_counts, antenna_counts, sub);
    if (detail::oracle_better(sub, best)) best = std::move(sub);
  }

  // rebuild as option choices so materialize() can do the channel handout
  std::vector<std::vector<MvnoOption>> options(order.size());
  std::vector<int> choice(order.size(), -1);
  for (size_t pos = 0; pos < best.ids.size(); ++pos) {
    const auto rank = static_cast<size_t>(best.ids[pos]);
    const int c = best.channel_counts[pos];
    const int m = best.antenna_counts[pos];
    options[rank].push_back(MvnoOption{c, m, detail::option_cost_micro(m, c * width, cost)});
    choice[rank] = 0;
  }
  return detail::materialize(requests, order, plan, params, options, choice);
}

}  // namespace lsacran
