#pragma once

// Deterministic discrete-event driver. Events are dispatched in (time, seq)
// order; after each one the protocol flow runs, the allocators rerun from
// scratch on the updated band plan and one SimRecord is appended. Identical
// scenarios produce bit-identical results.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsacran/allocator.hpp"
#include "lsacran/band_plan.hpp"
#include "lsacran/lsa_protocol.hpp"
#include "lsacran/scenario.hpp"
#include "lsacran/sim_events.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

struct SimRecord {
  TimeUs time_us = 0;
  int active_incumbents = 0;
  std::int64_t available_mhz = 0;
  int served_mvnos = 0;
  // MVNOs whose (served, antennas, channels) tuple changed since the
  // previous record. Reported, never constrained.
  int churned_mvnos = 0;
  Allocation dynamic_allocation;
  MoneyMicro revenue_dynamic_micro = 0;
  std::optional<Allocation> static_allocation;
  std::optional<MoneyMicro> revenue_static_micro;
  std::optional<EvacuationRecord> evacuation;

  bool operator==(const SimRecord&) const = default;
};

struct SimResult {
  std::vector<SimRecord> records;
  std::vector<LsaMessage> message_log;

  bool operator==(const SimResult&) const = default;
};

namespace detail {

inline void apply_assignments(BandPlan& plan, const Allocation& alloc) {
  for (const auto& entry : alloc.entries)
    for (int ch : entry.channel_indices) plan.assign(ch, entry.mvno_id);
}

// An MVNO churns when its configuration differs between two consecutive
// allocations; absent counts the same as unserved.
inline int count_churn(const Allocation& before, const Allocation& after) {
  std::map<std::string, const MvnoAllocation*> previous;
  for (const auto& e : before.entries) previous[e.mvno_id] = &e;
  const MvnoAllocation idle{};
  int churn = 0;
  std::set<std::string> seen;
  for (const auto& e : after.entries) {
    seen.insert(e.mvno_id);
    const auto it = previous.find(e.mvno_id);
    const MvnoAllocation& old = it == previous.end() ? idle : *it->second;
    if (e.served != old.served || e.antennas != old.antennas ||
        e.channel_indices != old.channel_indices)
      ++churn;
  }
  for (const auto& e : before.entries)
    if (!seen.count(e.mvno_id) && e.served) ++churn;  // left while holding resources
  return churn;
}

}  // namespace detail

inline SimResult run(const Scenario& scenario) {
  validate_scenario(scenario);
  BandPlan plan = make_band_plan(scenario.band);
  std::vector<MvnoRequest> mvnos = scenario.mvnos;
  ProtocolContext ctx{&mvnos, scenario.rate_model, scenario.limits, scenario.costs,
                      scenario.protocol};

  SimResult result;
  auto record = [&](TimeUs time, Allocation dynamic_alloc,
                    std::optional<EvacuationRecord> evacuation) {
    // the static baseline sees the same spectrum, so compute it before the
    // dynamic assignment lands in the plan
    std::optional<Allocation> static_alloc;
    if (scenario.sim.baseline_enabled)
      static_alloc = allocate_static(mvnos, plan, scenario.rate_model, scenario.limits,
                                     scenario.costs);
    detail::apply_assignments(plan, dynamic_alloc);
    SimRecord rec;
    rec.time_us = time;
    rec.active_incumbents = plan.active_incumbent_count();
    rec.available_mhz = plan.available_bandwidth() / kMegaHertz;
    rec.served_mvnos = dynamic_alloc.served_count();
    rec.churned_mvnos = result.records.empty()
                            ? 0
                            : detail::count_churn(result.records.back().dynamic_allocation,
                                                  dynamic_alloc);
    rec.revenue_dynamic_micro = dynamic_alloc.revenue_micro;
    rec.dynamic_allocation = std::move(dynamic_alloc);
    if (static_alloc) {
      rec.revenue_static_micro = static_alloc->revenue_micro;
      rec.static_allocation = std::move(static_alloc);
    }
    rec.evacuation = std::move(evacuation);
    result.records.push_back(std::move(rec));
  };

  record(0, allocate_dynamic(mvnos, plan, scenario.rate_model, scenario.limits, scenario.costs),
         std::nullopt);

  std::vector<SimEvent> events = scenario.events;
  std::stable_sort(events.begin(), events.end(), [](const SimEvent& a, const SimEvent& b) {
    return a.time_us != b.time_us ? a.time_us < b.time_us : a.seq < b.seq;
  });

  for (const SimEvent& ev : events) {
    switch (ev.kind) {
      case EventKind::IncumbentReturn: {
        const LsaMessage request = make_evacuation_request(plan, ev.subject_id, ev.time_us,
                                                           ev.urgency, scenario.protocol);
        EvacuationOutcome outcome = handle_evacuation(request, plan, ctx, ev.urgency);
        result.message_log.insert(result.message_log.end(), outcome.trace.begin(),
                                  outcome.trace.end());
        record(ev.time_us, std::move(outcome.reallocation), std::move(outcome.record));
        break;
      }
      case EventKind::IncumbentRelease: {
        const LsaMessage request = make_band_released(plan, ev.subject_id, ev.time_us);
        ReleaseOutcome outcome = handle_release(request, plan, ctx);
        result.message_log.insert(result.message_log.end(), outcome.trace.begin(),
                                  outcome.trace.end());
        record(ev.time_us, std::move(outcome.reallocation), std::nullopt);
        break;
      }
      case EventKind::MvnoJoin: {
        mvnos.push_back(*ev.join_request);
        plan.clear_assignments();
        record(ev.time_us,
               allocate_dynamic(mvnos, plan, scenario.rate_model, scenario.limits, scenario.costs),
               std::nullopt);
        break;
      }
      case EventKind::MvnoLeave: {
        mvnos.erase(std::find_if(mvnos.begin(), mvnos.end(),
                                 [&](const MvnoRequest& r) { return r.id == ev.subject_id; }));
        plan.clear_assignments();
        record(ev.time_us,
               allocate_dynamic(mvnos, plan, scenario.rate_model, scenario.limits, scenario.costs),
               std::nullopt);
        break;
      }
    }
  }
  return result;
}

// Latest record at or before `time_us`; the initial record when `time_us`
// is earlier than everything.
inline const SimRecord& snapshot_at(const std::vector<SimRecord>& records, TimeUs time_us) {
  if (records.empty()) throw std::invalid_argument("snapshot_at: no records");
  if (time_us < 0) throw std::invalid_argument("snapshot_at: time must be >= 0");
  const SimRecord* best = &records.front();
  for (const auto& rec : records) {
    if (rec.time_us <= time_us) best = &rec;
    else break;
  }
  return *best;
}

}  // namespace lsacran
