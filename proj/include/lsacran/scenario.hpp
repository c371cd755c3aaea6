#pragma once

// Scenario ingestion: a line-oriented configuration format with [section]
// headers and key = value pairs. '#' starts a comment. Singleton sections
// (band, rate_model, limits, costs, protocol, sim) may appear once; named
// sections ([incumbent <id>], [mvno <id>]) once per id; [event] sections
// repeat and keep file order, which defines the tie-breaking sequence
// number.
//
// parse_scenario returns a fully validated Scenario or throws a
// scenario_error whose kind distinguishes syntax errors, unknown keys and
// invariant violations, with the offending line where one exists.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lsacran/allocator.hpp"
#include "lsacran/band_plan.hpp"
#include "lsacran/errors.hpp"
#include "lsacran/lsa_protocol.hpp"
#include "lsacran/rate_model.hpp"
#include "lsacran/sim_events.hpp"
#include "lsacran/units.hpp"

namespace lsacran {

struct BandConfig {
  Hertz channel_width_hz = 5 * kMegaHertz;
  int channel_count = 8;
  std::vector<Incumbent> incumbents;

  bool operator==(const BandConfig&) const = default;
};

struct SimConfig {
  bool baseline_enabled = true;

  bool operator==(const SimConfig&) const = default;
};

struct Scenario {
  BandConfig band;
  RateModelParams rate_model;
  SystemLimits limits;
  CostModel costs;
  ProtocolConfig protocol;
  SimConfig sim;
  std::vector<MvnoRequest> mvnos;
  std::vector<SimEvent> events;

  bool operator==(const Scenario&) const = default;
};

inline BandPlan make_band_plan(const BandConfig& band) {
  return BandPlan(band.channel_count, band.channel_width_hz, band.incumbents);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

inline std::int64_t parse_i64(std::string_view text, int line, const std::string& field) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw scenario_error(ScenarioErrorKind::Syntax, line, field,
                         "expected an integer, got '" + std::string(text) + "'");
  return value;
}

// Fixed-point decimal: "10", "10.5", "0.25" scaled by 10^digits, exact.
inline std::int64_t parse_scaled(std::string_view text, int digits, int line,
                                 const std::string& field) {
  bool negative = false;
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  const auto dot = rest.find('.');
  const std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
  const std::string_view frac_part = dot == std::string_view::npos ? "" : rest.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw scenario_error(ScenarioErrorKind::Syntax, line, field, "expected a number");
  if (static_cast<int>(frac_part.size()) > digits)
    throw scenario_error(ScenarioErrorKind::Syntax, line, field,
                         "at most " + std::to_string(digits) + " decimal places supported");
  auto digits_only = [&](std::string_view part) {
    for (char c : part)
      if (c < '0' || c > '9')
        throw scenario_error(ScenarioErrorKind::Syntax, line, field,
                             "expected a number, got '" + std::string(text) + "'");
  };
  digits_only(int_part);
  digits_only(frac_part);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t value = int_part.empty() ? 0 : parse_i64(int_part, line, field);
  if (value > std::numeric_limits<std::int64_t>::max() / scale)
    throw scenario_error(ScenarioErrorKind::Syntax, line, field, "number out of range");
  value *= scale;
  std::int64_t frac = 0;
  std::int64_t frac_scale = scale;
  for (char c : frac_part) {
    frac_scale /= 10;
    frac += (c - '0') * frac_scale;
  }
  value += frac;
  return negative ? -value : value;
}

inline std::string format_scaled(std::int64_t value, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::string out;
  if (value < 0) {
    out += '-';
    value = -value;
  }
  out += std::to_string(value / scale);
  std::int64_t frac = value % scale;
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    out += '.';
    out += f;
  }
  return out;
}

inline bool parse_bool(std::string_view text, int line, const std::string& field) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw scenario_error(ScenarioErrorKind::Syntax, line, field,
                       "expected true or false, got '" + std::string(text) + "'");
}

inline std::vector<int> parse_int_list(std::string_view text, int line, const std::string& field) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    const std::int64_t v = parse_i64(text.substr(pos, end - pos), line, field);
    if (v < 0 || v > std::numeric_limits<int>::max())
      throw scenario_error(ScenarioErrorKind::Syntax, line, field, "channel index out of range");
    out.push_back(static_cast<int>(v));
    pos = end;
  }
  if (out.empty())
    throw scenario_error(ScenarioErrorKind::Syntax, line, field, "expected a list of integers");
  return out;
}

struct RawEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct RawSection {
  std::string name;
  std::string id;  // empty for unnamed sections
  int line = 0;
  std::vector<RawEntry> entries;
};

inline std::vector<RawSection> tokenize_scenario(std::string_view text) {
  std::vector<RawSection> sections;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw scenario_error(ScenarioErrorKind::Syntax, line_no, "", "unterminated section header");
      const std::string_view inner = trim(s.substr(1, s.size() - 2));
      const auto space = inner.find(' ');
      RawSection sec;
      sec.line = line_no;
      if (space == std::string_view::npos) {
        sec.name = std::string(inner);
      } else {
        sec.name = std::string(trim(inner.substr(0, space)));
        sec.id = std::string(trim(inner.substr(space + 1)));
        if (!valid_identifier(sec.id))
          throw scenario_error(ScenarioErrorKind::Syntax, line_no, sec.name,
                               "invalid section id '" + sec.id + "'");
      }
      if (sec.name.empty())
        throw scenario_error(ScenarioErrorKind::Syntax, line_no, "", "empty section name");
      sections.push_back(std::move(sec));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw scenario_error(ScenarioErrorKind::Syntax, line_no, "",
                           "expected 'key = value' or a [section] header");
    RawEntry entry;
    entry.key = std::string(trim(s.substr(0, eq)));
    entry.value = std::string(trim(s.substr(eq + 1)));
    entry.line = line_no;
    if (entry.key.empty())
      throw scenario_error(ScenarioErrorKind::Syntax, line_no, "", "empty key");
    if (entry.value.empty())
      throw scenario_error(ScenarioErrorKind::Syntax, line_no, entry.key, "empty value");
    if (sections.empty())
      throw scenario_error(ScenarioErrorKind::Syntax, line_no, entry.key,
                           "key outside of any [section]");
    sections.back().entries.push_back(std::move(entry));
  }
  return sections;
}

// Iterates a section's entries with duplicate detection; `fn` returns false
// for keys it does not know.
template <typename Fn>
void read_section(const RawSection& sec, Fn&& fn) {
  std::set<std::string> seen;
  for (const auto& e : sec.entries) {
    if (!seen.insert(e.key).second)
      throw scenario_error(ScenarioErrorKind::Invariant, e.line, e.key,
                           "duplicate key in section [" + sec.name + "]");
    if (!fn(e))
      throw scenario_error(ScenarioErrorKind::UnknownKey, e.line, e.key,
                           "unknown key in section [" + sec.name + "]");
  }
}

inline void require_key(const RawSection& sec, bool present, const std::string& key) {
  if (!present)
    throw scenario_error(ScenarioErrorKind::Invariant, sec.line, key,
                         "section [" + sec.name + "] is missing required key '" + key + "'");
}

}  // namespace detail

void validate_scenario(const Scenario& scenario);

inline Scenario parse_scenario(std::string_view text) {
  using detail::RawEntry;
  using detail::RawSection;
  Scenario sc;
  std::set<std::string> singletons_seen;
  const auto sections = detail::tokenize_scenario(text);
  for (const auto& sec : sections) {
    const bool named = !sec.id.empty();
    if (sec.name == "band" || sec.name == "rate_model" || sec.name == "limits" ||
        sec.name == "costs" || sec.name == "protocol" || sec.name == "sim") {
      if (named)
        throw scenario_error(ScenarioErrorKind::Syntax, sec.line, sec.name,
                             "section [" + sec.name + "] does not take an id");
      if (!singletons_seen.insert(sec.name).second)
        throw scenario_error(ScenarioErrorKind::Invariant, sec.line, sec.name,
                             "section [" + sec.name + "] appears twice");
    }
    if (sec.name == "band") {
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "channel_width_hz")
          sc.band.channel_width_hz = detail::parse_i64(e.value, e.line, e.key);
        else if (e.key == "channel_count")
          sc.band.channel_count = static_cast<int>(detail::parse_i64(e.value, e.line, e.key));
        else
          return false;
        return true;
      });
    } else if (sec.name == "rate_model") {
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "m0")
          sc.rate_model.antennas_per_stream = static_cast<int>(detail::parse_i64(e.value, e.line, e.key));
        else if (e.key == "sigma_bps_hz")
          sc.rate_model.sigma_millibps_per_hz = detail::parse_scaled(e.value, 3, e.line, e.key);
        else
          return false;
        return true;
      });
    } else if (sec.name == "limits") {
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "antennas_min_per_mvno")
          sc.limits.antennas_min_per_mvno = static_cast<int>(detail::parse_i64(e.value, e.line, e.key));
        else if (e.key == "antennas_total")
          sc.limits.antennas_total = static_cast<int>(detail::parse_i64(e.value, e.line, e.key));
        else if (e.key == "static_antennas_per_mvno")
          sc.limits.static_antennas_per_mvno = static_cast<int>(detail::parse_i64(e.value, e.line, e.key));
        else
          return false;
        return true;
      });
    } else if (sec.name == "costs") {
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "per_antenna_micro")
          sc.costs.per_antenna_micro = detail::parse_i64(e.value, e.line, e.key);
        else if (e.key == "per_hz_micro")
          sc.costs.per_hz_micro = detail::parse_i64(e.value, e.line, e.key);
        else
          return false;
        return true;
      });
    } else if (sec.name == "protocol") {
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "hop_latency_us")
          sc.protocol.hop_latency_us = detail::parse_i64(e.value, e.line, e.key);
        else if (e.key == "graceful_deadline_us")
          sc.protocol.graceful_deadline_us = detail::parse_i64(e.value, e.line, e.key);
        else if (e.key == "urgent_deadline_us")
          sc.protocol.urgent_deadline_us = detail::parse_i64(e.value, e.line, e.key);
        else if (e.key == "separate_cran_operator")
          sc.protocol.separate_cran_operator = detail::parse_bool(e.value, e.line, e.key);
        else
          return false;
        return true;
      });
    } else if (sec.name == "sim") {
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "baseline_enabled")
          sc.sim.baseline_enabled = detail::parse_bool(e.value, e.line, e.key);
        else
          return false;
        return true;
      });
    } else if (sec.name == "incumbent") {
      if (!named)
        throw scenario_error(ScenarioErrorKind::Syntax, sec.line, sec.name,
                             "section [incumbent] needs an id: [incumbent <id>]");
      Incumbent inc;
      inc.id = sec.id;
      bool have_channels = false;
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "channels") {
          inc.owned_channels = detail::parse_int_list(e.value, e.line, e.key);
          have_channels = true;
        } else if (e.key == "evacuation_deadline_s") {
          inc.evacuation_deadline_us = detail::parse_scaled(e.value, 6, e.line, e.key);
        } else {
          return false;
        }
        return true;
      });
      detail::require_key(sec, have_channels, "channels");
      sc.band.incumbents.push_back(std::move(inc));
    } else if (sec.name == "mvno") {
      if (!named)
        throw scenario_error(ScenarioErrorKind::Syntax, sec.line, sec.name,
                             "section [mvno] needs an id: [mvno <id>]");
      MvnoRequest req;
      req.id = sec.id;
      bool have_rate = false;
      bool have_price = false;
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "min_rate_bps") {
          req.min_rate_bps = detail::parse_i64(e.value, e.line, e.key);
          have_rate = true;
        } else if (e.key == "price_per_bps_micro") {
          req.price_per_bps_micro = detail::parse_i64(e.value, e.line, e.key);
          have_price = true;
        } else {
          return false;
        }
        return true;
      });
      detail::require_key(sec, have_rate, "min_rate_bps");
      detail::require_key(sec, have_price, "price_per_bps_micro");
      sc.mvnos.push_back(std::move(req));
    } else if (sec.name == "event") {
      if (named)
        throw scenario_error(ScenarioErrorKind::Syntax, sec.line, sec.name,
                             "section [event] does not take an id");
      SimEvent ev;
      ev.seq = static_cast<int>(sc.events.size());
      bool have_time = false;
      bool have_kind = false;
      std::optional<std::string> incumbent_id;
      std::optional<std::string> mvno_id;
      std::optional<Bps> min_rate;
      std::optional<MoneyMicro> price;
      std::optional<Urgency> urgency;
      detail::read_section(sec, [&](const RawEntry& e) {
        if (e.key == "time_us") {
          ev.time_us = detail::parse_i64(e.value, e.line, e.key);
          have_time = true;
        } else if (e.key == "kind") {
          have_kind = true;
          if (e.value == "incumbent_return") ev.kind = EventKind::IncumbentReturn;
          else if (e.value == "incumbent_release") ev.kind = EventKind::IncumbentRelease;
          else if (e.value == "mvno_join") ev.kind = EventKind::MvnoJoin;
          else if (e.value == "mvno_leave") ev.kind = EventKind::MvnoLeave;
          else
            throw scenario_error(ScenarioErrorKind::Syntax, e.line, e.key,
                                 "unknown event kind '" + e.value + "'");
        } else if (e.key == "incumbent") {
          incumbent_id = e.value;
        } else if (e.key == "mvno") {
          mvno_id = e.value;
        } else if (e.key == "urgency") {
          if (e.value == "graceful") urgency = Urgency::Graceful;
          else if (e.value == "urgent") urgency = Urgency::Urgent;
          else
            throw scenario_error(ScenarioErrorKind::Syntax, e.line, e.key,
                                 "urgency must be graceful or urgent");
        } else if (e.key == "min_rate_bps") {
          min_rate = detail::parse_i64(e.value, e.line, e.key);
        } else if (e.key == "price_per_bps_micro") {
          price = detail::parse_i64(e.value, e.line, e.key);
        } else {
          return false;
        }
        return true;
      });
      detail::require_key(sec, have_time, "time_us");
      detail::require_key(sec, have_kind, "kind");
      auto forbid = [&](bool present, const char* key) {
        if (present)
          throw scenario_error(ScenarioErrorKind::Invariant, sec.line, key,
                               std::string("key '") + key + "' does not apply to this event kind");
      };
      switch (ev.kind) {
        case EventKind::IncumbentReturn:
          detail::require_key(sec, incumbent_id.has_value(), "incumbent");
          forbid(mvno_id.has_value(), "mvno");
          forbid(min_rate.has_value(), "min_rate_bps");
          forbid(price.has_value(), "price_per_bps_micro");
          ev.subject_id = *incumbent_id;
          ev.urgency = urgency.value_or(Urgency::Graceful);
          break;
        case EventKind::IncumbentRelease:
          detail::require_key(sec, incumbent_id.has_value(), "incumbent");
          forbid(mvno_id.has_value(), "mvno");
          forbid(urgency.has_value(), "urgency");
          forbid(min_rate.has_value(), "min_rate_bps");
          forbid(price.has_value(), "price_per_bps_micro");
          ev.subject_id = *incumbent_id;
          break;
        case EventKind::MvnoJoin:
          detail::require_key(sec, mvno_id.has_value(), "mvno");
          detail::require_key(sec, min_rate.has_value(), "min_rate_bps");
          detail::require_key(sec, price.has_value(), "price_per_bps_micro");
          forbid(incumbent_id.has_value(), "incumbent");
          forbid(urgency.has_value(), "urgency");
          ev.subject_id = *mvno_id;
          ev.join_request = MvnoRequest{*mvno_id, *min_rate, *price};
          break;
        case EventKind::MvnoLeave:
          detail::require_key(sec, mvno_id.has_value(), "mvno");
          forbid(incumbent_id.has_value(), "incumbent");
          forbid(urgency.has_value(), "urgency");
          forbid(min_rate.has_value(), "min_rate_bps");
          forbid(price.has_value(), "price_per_bps_micro");
          ev.subject_id = *mvno_id;
          break;
      }
      sc.events.push_back(std::move(ev));
    } else {
      throw scenario_error(ScenarioErrorKind::UnknownKey, sec.line, sec.name,
                           "unknown section [" + sec.name + "]");
    }
  }
  validate_scenario(sc);
  return sc;
}

// Cross-field invariants, applied both after parsing and before a run.
inline void validate_scenario(const Scenario& sc) {
  using K = ScenarioErrorKind;
  auto fail = [](const std::string& field, const std::string& msg) {
    throw scenario_error(K::Invariant, 0, field, msg);
  };
  // band
  if (sc.band.channel_count < 1 || sc.band.channel_count > 64)
    fail("band.channel_count", "must be in [1, 64]");
  if (sc.band.channel_width_hz < kMegaHertz || sc.band.channel_width_hz > 100 * kMegaHertz ||
      sc.band.channel_width_hz % kMegaHertz != 0)
    fail("band.channel_width_hz", "must be a whole number of MHz in [1 MHz, 100 MHz]");
  if (sc.band.incumbents.size() > 16) fail("incumbent", "at most 16 incumbents supported");
  {
    std::set<std::string> ids;
    std::set<int> owned;
    for (const auto& inc : sc.band.incumbents) {
      if (!detail::valid_identifier(inc.id)) fail("incumbent", "invalid incumbent id '" + inc.id + "'");
      if (!ids.insert(inc.id).second) fail("incumbent", "duplicate incumbent id '" + inc.id + "'");
      if (inc.owned_channels.empty()) fail("incumbent", "incumbent '" + inc.id + "' owns no channels");
      for (int ch : inc.owned_channels) {
        if (ch < 0 || ch >= sc.band.channel_count)
          fail("incumbent", "incumbent '" + inc.id + "' owns out-of-range channel " + std::to_string(ch));
        if (!owned.insert(ch).second)
          fail("incumbent", "channel " + std::to_string(ch) + " owned by two incumbents");
      }
      if (inc.active) fail("incumbent", "incumbents must start inactive");
      if (inc.evacuation_deadline_us && *inc.evacuation_deadline_us < 0)
        fail("incumbent", "evacuation deadline must be >= 0");
    }
  }
  // rate model
  if (sc.rate_model.antennas_per_stream < 1 || sc.rate_model.antennas_per_stream > 1000)
    fail("rate_model.m0", "must be in [1, 1000]");
  if (sc.rate_model.sigma_millibps_per_hz <= 0 || sc.rate_model.sigma_millibps_per_hz > 1'000'000'000)
    fail("rate_model.sigma_bps_hz", "must be in (0, 1e6]");
  // limits
  if (sc.limits.antennas_min_per_mvno < 0) fail("limits.antennas_min_per_mvno", "must be >= 0");
  if (sc.limits.antennas_total < sc.limits.antennas_min_per_mvno)
    fail("limits.antennas_total", "must be >= antennas_min_per_mvno");
  if (sc.limits.antennas_total > 100'000) fail("limits.antennas_total", "must be <= 100000");
  if (sc.limits.static_antennas_per_mvno < 0 || sc.limits.static_antennas_per_mvno > 100'000)
    fail("limits.static_antennas_per_mvno", "must be in [0, 100000]");
  // costs
  if (sc.costs.per_antenna_micro < 0 || sc.costs.per_antenna_micro > 1'000'000'000'000)
    fail("costs.per_antenna_micro", "must be in [0, 1e12]");
  if (sc.costs.per_hz_micro < 0 || sc.costs.per_hz_micro > 1'000'000)
    fail("costs.per_hz_micro", "must be in [0, 1e6]");
  // protocol
  if (sc.protocol.hop_latency_us < 0) fail("protocol.hop_latency_us", "must be >= 0");
  if (sc.protocol.graceful_deadline_us < 0) fail("protocol.graceful_deadline_us", "must be >= 0");
  if (sc.protocol.urgent_deadline_us < 0) fail("protocol.urgent_deadline_us", "must be >= 0");
  // mvnos
  auto check_mvno = [&](const MvnoRequest& req, const std::string& where) {
    if (!detail::valid_identifier(req.id)) fail(where, "invalid MVNO id '" + req.id + "'");
    if (req.min_rate_bps <= 0 || req.min_rate_bps > 1'000'000'000'000)
      fail(where, "MVNO '" + req.id + "': min_rate_bps must be in (0, 1e12]");
    if (req.price_per_bps_micro < 0 || req.price_per_bps_micro > 100'000)
      fail(where, "MVNO '" + req.id + "': price_per_bps_micro must be in [0, 1e5]");
  };
  {
    std::set<std::string> ids;
    for (const auto& req : sc.mvnos) {
      check_mvno(req, "mvno");
      if (!ids.insert(req.id).second) fail("mvno", "duplicate MVNO id '" + req.id + "'");
    }
  }
  // events: replay them in dispatch order and track world state
  {
    std::vector<const SimEvent*> ordered;
    std::set<int> seqs;
    for (const auto& ev : sc.events) {
      if (ev.time_us < 0) fail("event.time_us", "event times must be >= 0");
      if (!seqs.insert(ev.seq).second) fail("event", "duplicate event seq");
      ordered.push_back(&ev);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const SimEvent* a, const SimEvent* b) {
      return a->time_us != b->time_us ? a->time_us < b->time_us : a->seq < b->seq;
    });
    std::set<std::string> incumbent_ids;
    for (const auto& inc : sc.band.incumbents) incumbent_ids.insert(inc.id);
    std::set<std::string> active_incumbents;
    std::set<std::string> present_mvnos;
    for (const auto& req : sc.mvnos) present_mvnos.insert(req.id);
    for (const SimEvent* ev : ordered) {
      switch (ev->kind) {
        case EventKind::IncumbentReturn:
          if (!incumbent_ids.count(ev->subject_id))
            fail("event.incumbent", "unknown incumbent '" + ev->subject_id + "'");
          if (!active_incumbents.insert(ev->subject_id).second)
            fail("event.incumbent", "incumbent '" + ev->subject_id + "' returns while already active");
          break;
        case EventKind::IncumbentRelease:
          if (!incumbent_ids.count(ev->subject_id))
            fail("event.incumbent", "unknown incumbent '" + ev->subject_id + "'");
          if (active_incumbents.erase(ev->subject_id) == 0)
            fail("event.incumbent", "incumbent '" + ev->subject_id + "' releases while not active");
          break;
        case EventKind::MvnoJoin:
          if (!ev->join_request || ev->join_request->id != ev->subject_id)
            fail("event.mvno", "malformed join event");
          check_mvno(*ev->join_request, "event.mvno");
          if (!present_mvnos.insert(ev->subject_id).second)
            fail("event.mvno", "MVNO '" + ev->subject_id + "' joins while already present");
          break;
        case EventKind::MvnoLeave:
          if (present_mvnos.erase(ev->subject_id) == 0)
            fail("event.mvno", "MVNO '" + ev->subject_id + "' leaves but was never present");
          break;
      }
      if (present_mvnos.size() > 32) fail("event.mvno", "at most 32 concurrent MVNOs supported");
    }
  }
  if (sc.mvnos.size() > 32) fail("mvno", "at most 32 concurrent MVNOs supported");
}

inline std::string emit_scenario(const Scenario& sc) {
  std::string out;
  auto kv = [&](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  auto num = [](std::int64_t v) { return std::to_string(v); };
  out += "[band]\n";
  kv("channel_width_hz", num(sc.band.channel_width_hz));
  kv("channel_count", num(sc.band.channel_count));
  out += "\n[rate_model]\n";
  kv("m0", num(sc.rate_model.antennas_per_stream));
  kv("sigma_bps_hz", detail::format_scaled(sc.rate_model.sigma_millibps_per_hz, 3));
  out += "\n[limits]\n";
  kv("antennas_min_per_mvno", num(sc.limits.antennas_min_per_mvno));
  kv("antennas_total", num(sc.limits.antennas_total));
  kv("static_antennas_per_mvno", num(sc.limits.static_antennas_per_mvno));
  out += "\n[costs]\n";
  kv("per_antenna_micro", num(sc.costs.per_antenna_micro));
  kv("per_hz_micro", num(sc.costs.per_hz_micro));
  out += "\n[protocol]\n";
  kv("hop_latency_us", num(sc.protocol.hop_latency_us));
  kv("graceful_deadline_us", num(sc.protocol.graceful_deadline_us));
  kv("urgent_deadline_us", num(sc.protocol.urgent_deadline_us));
  kv("separate_cran_operator", sc.protocol.separate_cran_operator ? "true" : "false");
  out += "\n[sim]\n";
  kv("baseline_enabled", sc.sim.baseline_enabled ? "true" : "false");
  for (const auto& inc : sc.band.incumbents) {
    out += "\n[incumbent " + inc.id + "]\n";
    std::string chans;
    for (int ch : inc.owned_channels) {
      if (!chans.empty()) chans += ' ';
      chans += std::to_string(ch);
    }
    kv("channels", chans);
    if (inc.evacuation_deadline_us)
      kv("evacuation_deadline_s", detail::format_scaled(*inc.evacuation_deadline_us, 6));
  }
  for (const auto& req : sc.mvnos) {
    out += "\n[mvno " + req.id + "]\n";
    kv("min_rate_bps", num(req.min_rate_bps));
    kv("price_per_bps_micro", num(req.price_per_bps_micro));
  }
  for (const auto& ev : sc.events) {
    out += "\n[event]\n";
    kv("time_us", num(ev.time_us));
    kv("kind", to_string(ev.kind));
    switch (ev.kind) {
      case EventKind::IncumbentReturn:
        kv("incumbent", ev.subject_id);
        kv("urgency", to_string(ev.urgency));
        break;
      case EventKind::IncumbentRelease:
        kv("incumbent", ev.subject_id);
        break;
      case EventKind::MvnoJoin:
        kv("mvno", ev.subject_id);
        kv("min_rate_bps", num(ev.join_request->min_rate_bps));
        kv("price_per_bps_micro", num(ev.join_request->price_per_bps_micro));
        break;
      case EventKind::MvnoLeave:
        kv("mvno", ev.subject_id);
        break;
    }
  }
  return out;
}

}  // namespace lsacran
