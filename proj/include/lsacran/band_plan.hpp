#pragma once

// Occupancy model of the LSA spectrum pool: a row of equal-width channels,
// the incumbent blocks carved out of it, and the per-channel assignment
// state. This is the information the LSA Repository stores and every other
// component reads.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>
#include <optional>

#include "lsacran/errors.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

struct Channel {
  int index = 0;
  Hertz width_hz = 5 * kMegaHertz;

  bool operator==(const Channel&) const = default;
};

struct Incumbent {
  std::string id;
  std::vector<int> owned_channels;  // sorted, unique
  bool active = false;
  // Per-incumbent evacuation allowance. When unset, the urgency-class
  // default from ProtocolConfig applies.
  std::optional<TimeUs> evacuation_deadline_us;

  bool operator==(const Incumbent&) const = default;
};

enum class ChannelState { Free, IncumbentHeld, Assigned };

// A channel is in exactly one state; `holder` names the active incumbent or
// the MVNO and is empty for Free channels.
class BandPlan {
 public:
  BandPlan() = default;

  BandPlan(int channel_count, Hertz channel_width_hz, std::vector<Incumbent> incumbents)
      : width_hz_(channel_width_hz), incumbents_(std::move(incumbents)) {
    if (channel_count <= 0) throw std::invalid_argument("BandPlan: channel_count must be > 0");
    if (channel_width_hz <= 0) throw std::invalid_argument("BandPlan: channel width must be > 0");
    states_.assign(static_cast<size_t>(channel_count), ChannelState::Free);
    holders_.assign(static_cast<size_t>(channel_count), std::string{});
    std::vector<bool> owned(static_cast<size_t>(channel_count), false);
    for (auto& inc : incumbents_) {
      if (inc.id.empty()) throw std::invalid_argument("BandPlan: incumbent id must be non-empty");
      std::sort(inc.owned_channels.begin(), inc.owned_channels.end());
      for (int ch : inc.owned_channels) {
        if (ch < 0 || ch >= channel_count)
          throw std::invalid_argument("BandPlan: incumbent '" + inc.id + "' owns out-of-range channel");
        if (owned[static_cast<size_t>(ch)])
          throw std::invalid_argument("BandPlan: channel owned by two incumbents");
        owned[static_cast<size_t>(ch)] = true;
      }
      if (inc.active) {
        for (int ch : inc.owned_channels) {
          states_[static_cast<size_t>(ch)] = ChannelState::IncumbentHeld;
          holders_[static_cast<size_t>(ch)] = inc.id;
        }
      }
    }
  }

  int channel_count() const { return static_cast<int>(states_.size()); }
  Hertz channel_width_hz() const { return width_hz_; }

  std::vector<Channel> channels() const {
    std::vector<Channel> out;
    out.reserve(states_.size());
    for (int i = 0; i < channel_count(); ++i) out.push_back(Channel{i, width_hz_});
    return out;
  }

  ChannelState state_of(int channel) const { return states_[checked(channel)]; }
  const std::string& holder_of(int channel) const { return holders_[checked(channel)]; }

  const std::vector<Incumbent>& incumbents() const { return incumbents_; }

  const Incumbent& incumbent(const std::string& id) const {
    for (const auto& inc : incumbents_)
      if (inc.id == id) return inc;
    throw protocol_error("unknown incumbent '" + id + "'");
  }

  int active_incumbent_count() const {
    int n = 0;
    for (const auto& inc : incumbents_) n += inc.active ? 1 : 0;
    return n;
  }

  Hertz available_bandwidth() const {
    Hertz total = 0;
    for (auto s : states_)
      if (s != ChannelState::IncumbentHeld) total += width_hz_;
    return total;
  }

  std::vector<int> free_channels() const {
    std::vector<int> out;
    for (int i = 0; i < channel_count(); ++i)
      if (states_[static_cast<size_t>(i)] == ChannelState::Free) out.push_back(i);
    return out;
  }

  // Puts the incumbent's channels into IncumbentHeld state, evicting any MVNO
  // assignments on them. Returns the ids of the displaced MVNOs.
  std::set<std::string> reclaim(const std::string& incumbent_id) {
    Incumbent& inc = find(incumbent_id);
    if (inc.active)
      throw protocol_error("reclaim: incumbent '" + incumbent_id + "' is already active");
    std::set<std::string> displaced;
    for (int ch : inc.owned_channels) {
      auto i = static_cast<size_t>(ch);
      if (states_[i] == ChannelState::Assigned) displaced.insert(holders_[i]);
      states_[i] = ChannelState::IncumbentHeld;
      holders_[i] = inc.id;
    }
    inc.active = true;
    return displaced;
  }

  void release(const std::string& incumbent_id) {
    Incumbent& inc = find(incumbent_id);
    if (!inc.active)
      throw protocol_error("release: incumbent '" + incumbent_id + "' is not active");
    for (int ch : inc.owned_channels) {
      auto i = static_cast<size_t>(ch);
      states_[i] = ChannelState::Free;
      holders_[i].clear();
    }
    inc.active = false;
  }

  void assign(int channel, const std::string& mvno_id) {
    auto i = checked(channel);
    if (mvno_id.empty()) throw std::invalid_argument("assign: mvno id must be non-empty");
    if (states_[i] != ChannelState::Free)
      throw protocol_error("assign: channel " + std::to_string(channel) + " is not free");
    states_[i] = ChannelState::Assigned;
    holders_[i] = mvno_id;
  }

  void clear_assignments() {
    for (size_t i = 0; i < states_.size(); ++i) {
      if (states_[i] == ChannelState::Assigned) {
        states_[i] = ChannelState::Free;
        holders_[i].clear();
      }
    }
  }

  bool operator==(const BandPlan&) const = default;

 private:
  size_t checked(int channel) const {
    if (channel < 0 || channel >= channel_count())
      throw std::invalid_argument("channel index out of range");
    return static_cast<size_t>(channel);
  }

  Incumbent& find(const std::string& id) {
    for (auto& inc : incumbents_)
      if (inc.id == id) return inc;
    throw protocol_error("unknown incumbent '" + id + "'");
  }

  Hertz width_hz_ = 5 * kMegaHertz;
  std::vector<Incumbent> incumbents_;
  std::vector<ChannelState> states_;
  std::vector<std::string> holders_;
};

}  // namespace lsacran
