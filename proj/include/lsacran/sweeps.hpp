#pragma once

// Experiment sweeps: served MVNOs versus number of returned incumbents, and
// revenue versus the spectrum-to-antenna cost ratio. Sweep points are
// independent pure allocations; they run as parallel tasks and the rows are
// assembled in grid order.

#include <cmath>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lsacran/allocator.hpp"
#include "lsacran/scenario.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

struct IncumbentSweepRow {
  int active_incumbents = 0;
  int served_dynamic = 0;
  int served_static = 0;
  MoneyMicro revenue_dynamic_micro = 0;
  MoneyMicro revenue_static_micro = 0;
  Allocation dynamic_allocation;
  Allocation static_allocation;
};

struct CostRatioSweepRow {
  double ratio = 0.0;  // per_hz cost over per_antenna cost
  MoneyMicro cost_per_antenna_micro = 0;
  MoneyMicro revenue_dynamic_micro = 0;
  MoneyMicro revenue_static_micro = 0;
  Allocation dynamic_allocation;
  Allocation static_allocation;
};

namespace detail {

template <typename Row, typename Fn>
std::vector<Row> run_grid(int points, Fn&& eval) {
  std::vector<Row> rows(static_cast<size_t>(points));
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (int i = static_cast<int>(w); i < points; i += static_cast<int>(workers))
        rows[static_cast<size_t>(i)] = eval(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return rows;
}

}  // namespace detail

// For k = 0..incumbent_count, allocates with exactly the first k incumbents
// (in scenario order) returned. min_rate_override replaces every MVNO's rate
// requirement when set.
inline std::vector<IncumbentSweepRow> sweep_incumbents(const Scenario& scenario,
                                                       std::optional<Bps> min_rate_override = {}) {
  validate_scenario(scenario);
  std::vector<MvnoRequest> requests = scenario.mvnos;
  if (min_rate_override) {
    if (*min_rate_override <= 0)
      throw std::invalid_argument("sweep_incumbents: min rate override must be > 0");
    for (auto& r : requests) r.min_rate_bps = *min_rate_override;
  }
  const int incumbent_count = static_cast<int>(scenario.band.incumbents.size());
  return detail::run_grid<IncumbentSweepRow>(incumbent_count + 1, [&](int k) {
    BandPlan plan = make_band_plan(scenario.band);
    for (int i = 0; i < k; ++i) plan.reclaim(scenario.band.incumbents[static_cast<size_t>(i)].id);
    IncumbentSweepRow row;
    row.active_incumbents = k;
    row.dynamic_allocation =
        allocate_dynamic(requests, plan, scenario.rate_model, scenario.limits, scenario.costs);
    row.static_allocation =
        allocate_static(requests, plan, scenario.rate_model, scenario.limits, scenario.costs);
    row.served_dynamic = row.dynamic_allocation.served_count();
    row.served_static = row.static_allocation.served_count();
    row.revenue_dynamic_micro = row.dynamic_allocation.revenue_micro;
    row.revenue_static_micro = row.static_allocation.revenue_micro;
    return row;
  });
}

// Log-spaced grid of spectrum-to-antenna cost ratios. The per-Hz cost stays
// at the scenario's value; the per-antenna cost is derived from the ratio.
// No incumbents are active (the scenario's initial state).
inline std::vector<CostRatioSweepRow> sweep_cost_ratio(const Scenario& scenario, double ratio_min,
                                                       double ratio_max, int steps) {
  validate_scenario(scenario);
  if (!(ratio_min > 0.0)) throw std::invalid_argument("sweep_cost_ratio: ratio_min must be > 0");
  if (!(ratio_max >= ratio_min))
    throw std::invalid_argument("sweep_cost_ratio: ratio_max must be >= ratio_min");
  if (steps < 2) throw std::invalid_argument("sweep_cost_ratio: steps must be >= 2");
  if (scenario.costs.per_hz_micro <= 0)
    throw std::invalid_argument("sweep_cost_ratio: scenario needs a positive per-Hz cost");
  const double log_min = std::log(ratio_min);
  const double log_max = std::log(ratio_max);
  return detail::run_grid<CostRatioSweepRow>(steps, [&](int i) {
    const double ratio =
        std::exp(log_min + (log_max - log_min) * static_cast<double>(i) / (steps - 1));
    CostModel costs = scenario.costs;
    costs.per_antenna_micro =
        static_cast<MoneyMicro>(std::llround(static_cast<double>(costs.per_hz_micro) / ratio));
    BandPlan plan = make_band_plan(scenario.band);
    CostRatioSweepRow row;
    row.ratio = ratio;
    row.cost_per_antenna_micro = costs.per_antenna_micro;
    row.dynamic_allocation =
        allocate_dynamic(scenario.mvnos, plan, scenario.rate_model, scenario.limits, costs);
    row.static_allocation =
        allocate_static(scenario.mvnos, plan, scenario.rate_model, scenario.limits, costs);
    row.revenue_dynamic_micro = row.dynamic_allocation.revenue_micro;
    row.revenue_static_micro = row.static_allocation.revenue_micro;
    return row;
  });
}

}  // namespace lsacran
