#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lsacran {

// Raised when a band operation or an LSA message violates the protocol state
// machine (reclaim of an active incumbent, release of an idle one, ...).
class protocol_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioErrorKind {
  Syntax,      // malformed line or value
  UnknownKey,  // unrecognized section or key
  Invariant    // well-formed but semantically invalid
};

// Scenario parse/validation failure with enough context to point at the
// offending line and field. line() is 1-based, 0 when not tied to a line.
class scenario_error : public std::runtime_error {
 public:
  scenario_error(ScenarioErrorKind kind, int line, std::string field, const std::string& message)
      : std::runtime_error(format(kind, line, field, message)),
        kind_(kind),
        line_(line),
        field_(std::move(field)) {}

  ScenarioErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(ScenarioErrorKind kind, int line, const std::string& field,
                            const std::string& message) {
    std::string out = "scenario ";
    switch (kind) {
      case ScenarioErrorKind::Syntax: out += "syntax error"; break;
      case ScenarioErrorKind::UnknownKey: out += "unknown key"; break;
      case ScenarioErrorKind::Invariant: out += "invariant violation"; break;
    }
    if (line > 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " (" + field + ")";
    out += ": " + message;
    return out;
  }

  ScenarioErrorKind kind_;
  int line_;
  std::string field_;
};

}  // namespace lsacran
