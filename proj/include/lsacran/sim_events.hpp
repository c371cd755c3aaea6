#pragma once

// Timestamped events driving the simulation engine. Events are dispatched
// in (time, seq) order; seq is the position in the scenario file and breaks
// same-time ties.

#include <optional>
#include <string>

#include "lsacran/allocator.hpp"
#include "lsacran/lsa_protocol.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

enum class EventKind { IncumbentReturn, IncumbentRelease, MvnoJoin, MvnoLeave };

inline const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::IncumbentReturn: return "incumbent_return";
    case EventKind::IncumbentRelease: return "incumbent_release";
    case EventKind::MvnoJoin: return "mvno_join";
    case EventKind::MvnoLeave: return "mvno_leave";
  }
  return "?";
}

struct SimEvent {
  TimeUs time_us = 0;
  int seq = 0;
  EventKind kind = EventKind::IncumbentReturn;
  std::string subject_id;                    // incumbent or MVNO id
  Urgency urgency = Urgency::Graceful;       // IncumbentReturn only
  std::optional<MvnoRequest> join_request;   // MvnoJoin only

  bool operator==(const SimEvent&) const = default;
};

}  // namespace lsacran
