#pragma once

// Message-level model of the evacuation information flow between an
// incumbent, the LSA Repository, the LSA Controller and the C-RAN operator.
//
// An evacuation runs as an ordered trace with one configured latency per
// hop:
//
//   EvacuationRequest      incumbent    -> repository
//   AvailabilityUpdate     repository   -> controller
//   ReconfigurationCommand controller   -> cran_operator
//   StopIqTransfer         cran_operator-> rrh_pool
//   EvacuationConfirmed    cran_operator-> incumbent
//
// When the scenario marks the licensee and the C-RAN operator as distinct
// entities, one extra notification hop (licensee -> cran_operator, carried
// as an AvailabilityUpdate) is inserted after the controller's command and
// the command is addressed to the licensee instead.
//
// A band release is the short symmetric flow: BandReleased followed by an
// AvailabilityUpdate, after which the allocator reruns so licensees can
// expand. Deadline violations are recorded, never thrown; the simulation
// keeps going.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsacran/allocator.hpp"
#include "lsacran/band_plan.hpp"
#include "lsacran/errors.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

enum class MessageKind {
  EvacuationRequest,
  AvailabilityUpdate,
  ReconfigurationCommand,
  StopIqTransfer,
  EvacuationConfirmed,
  BandReleased
};

enum class Urgency { Graceful, Urgent };

inline const char* to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::EvacuationRequest: return "EvacuationRequest";
    case MessageKind::AvailabilityUpdate: return "AvailabilityUpdate";
    case MessageKind::ReconfigurationCommand: return "ReconfigurationCommand";
    case MessageKind::StopIqTransfer: return "StopIqTransfer";
    case MessageKind::EvacuationConfirmed: return "EvacuationConfirmed";
    case MessageKind::BandReleased: return "BandReleased";
  }
  return "?";
}

inline const char* to_string(Urgency u) {
  return u == Urgency::Graceful ? "graceful" : "urgent";
}

struct LsaMessage {
  MessageKind kind = MessageKind::AvailabilityUpdate;
  std::string sender;
  std::string receiver;
  std::vector<int> channel_indices;      // always non-empty
  TimeUs issued_at_us = 0;
  std::optional<TimeUs> deadline_us;     // EvacuationRequest only

  bool operator==(const LsaMessage&) const = default;
};

struct EvacuationRecord {
  std::string incumbent_id;
  TimeUs requested_at_us = 0;
  TimeUs completed_at_us = 0;
  TimeUs deadline_us = 0;
  std::set<std::string> displaced_mvnos;
  Urgency urgency = Urgency::Graceful;
  bool deadline_met = true;

  bool operator==(const EvacuationRecord&) const = default;
};

struct ProtocolConfig {
  TimeUs hop_latency_us = 10 * kMillisecondUs;
  // Class defaults; invented placeholders, override them per scenario.
  TimeUs graceful_deadline_us = 30 * kSecondUs;
  TimeUs urgent_deadline_us = 1 * kSecondUs;
  bool separate_cran_operator = false;

  bool operator==(const ProtocolConfig&) const = default;

  TimeUs deadline_for(Urgency u) const {
    return u == Urgency::Graceful ? graceful_deadline_us : urgent_deadline_us;
  }
};

// Everything the protocol handlers need besides the band plan itself.
struct ProtocolContext {
  const std::vector<MvnoRequest>* mvnos = nullptr;
  RateModelParams rate_params;
  SystemLimits limits;
  CostModel costs;
  ProtocolConfig config;
};

inline LsaMessage make_evacuation_request(const BandPlan& plan, const std::string& incumbent_id,
                                          TimeUs at_us, Urgency urgency,
                                          const ProtocolConfig& config) {
  const Incumbent& inc = plan.incumbent(incumbent_id);
  LsaMessage msg;
  msg.kind = MessageKind::EvacuationRequest;
  msg.sender = incumbent_id;
  msg.receiver = "repository";
  msg.channel_indices = inc.owned_channels;
  msg.issued_at_us = at_us;
  msg.deadline_us = at_us + inc.evacuation_deadline_us.value_or(config.deadline_for(urgency));
  return msg;
}

inline LsaMessage make_band_released(const BandPlan& plan, const std::string& incumbent_id,
                                     TimeUs at_us) {
  const Incumbent& inc = plan.incumbent(incumbent_id);
  LsaMessage msg;
  msg.kind = MessageKind::BandReleased;
  msg.sender = incumbent_id;
  msg.receiver = "repository";
  msg.channel_indices = inc.owned_channels;
  msg.issued_at_us = at_us;
  return msg;
}

struct EvacuationOutcome {
  std::vector<LsaMessage> trace;
  EvacuationRecord record;
  // Fresh dynamic allocation over the remaining channels. Not yet applied to
  // the plan; the caller decides when the assignment takes effect.
  Allocation reallocation;
};

struct ReleaseOutcome {
  std::vector<LsaMessage> trace;
  Allocation reallocation;
};

// Runs the full evacuation flow: reclaims the band (evicting assignments),
// emits the ordered message trace, reruns the allocator on what is left and
// classifies deadline compliance.
inline EvacuationOutcome handle_evacuation(const LsaMessage& request, BandPlan& plan,
                                           const ProtocolContext& ctx, Urgency urgency) {
  if (request.kind != MessageKind::EvacuationRequest)
    throw protocol_error("handle_evacuation: message is not an EvacuationRequest");
  if (!request.deadline_us || *request.deadline_us < request.issued_at_us)
    throw protocol_error("handle_evacuation: request carries no valid deadline");
  const std::string& incumbent_id = request.sender;

  EvacuationOutcome out;
  out.record.incumbent_id = incumbent_id;
  out.record.requested_at_us = request.issued_at_us;
  out.record.deadline_us = *request.deadline_us;
  out.record.urgency = urgency;
  out.record.displaced_mvnos = plan.reclaim(incumbent_id);  // throws if already active

  plan.clear_assignments();
  out.reallocation = allocate_dynamic(*ctx.mvnos, plan, ctx.rate_params, ctx.limits, ctx.costs);

  const TimeUs hop = ctx.config.hop_latency_us;
  const auto& chans = request.channel_indices;
  TimeUs t = request.issued_at_us;
  auto emit = [&](MessageKind kind, std::string sender, std::string receiver) {
    out.trace.push_back(LsaMessage{kind, std::move(sender), std::move(receiver), chans, t,
                                   kind == MessageKind::EvacuationRequest ? request.deadline_us
                                                                          : std::nullopt});
    t += hop;
  };
  emit(MessageKind::EvacuationRequest, incumbent_id, "repository");
  emit(MessageKind::AvailabilityUpdate, "repository", "controller");
  if (ctx.config.separate_cran_operator) {
    emit(MessageKind::ReconfigurationCommand, "controller", "licensee");
    emit(MessageKind::AvailabilityUpdate, "licensee", "cran_operator");
  } else {
    emit(MessageKind::ReconfigurationCommand, "controller", "cran_operator");
  }
  emit(MessageKind::StopIqTransfer, "cran_operator", "rrh_pool");
  emit(MessageKind::EvacuationConfirmed, "cran_operator", incumbent_id);

  out.record.completed_at_us = t;  // arrival of the confirmation
  out.record.deadline_met = out.record.completed_at_us <= out.record.deadline_us;
  return out;
}

// Inverse flow: the incumbent leaves, its channels go back to the pool and
// the allocator reruns so waiting licensees can be served.
inline ReleaseOutcome handle_release(const LsaMessage& request, BandPlan& plan,
                                     const ProtocolContext& ctx) {
  if (request.kind != MessageKind::BandReleased)
    throw protocol_error("handle_release: message is not a BandReleased");
  const std::string& incumbent_id = request.sender;
  plan.release(incumbent_id);  // throws if not active
  plan.clear_assignments();

  ReleaseOutcome out;
  out.reallocation = allocate_dynamic(*ctx.mvnos, plan, ctx.rate_params, ctx.limits, ctx.costs);
  const auto& chans = request.channel_indices;
  out.trace.push_back(request);
  out.trace.push_back(LsaMessage{MessageKind::AvailabilityUpdate, "repository", "controller",
                                 chans, request.issued_at_us + ctx.config.hop_latency_us,
                                 std::nullopt});
  return out;
}

}  // namespace lsacran
