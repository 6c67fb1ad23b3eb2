#pragma once

// Scenario documents: the asset list, propagation paths, threats, initial
// infections and solver settings of one experiment, stored as YAML. The
// grammar is described in docs/scenario-format.md.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scpn/game.hpp"
#include "scpn/net.hpp"
#include "scpn/ssa.hpp"

namespace scpn {

struct ScenarioDoc {
  std::string id;
  std::string description;
  std::vector<ThreatId> threats;
  std::vector<Asset> assets;
  std::vector<Connection> connections;
  std::vector<std::pair<ThreatId, std::vector<PlaceId>>> initial_infections;
  GameConfig game;
  SsaConfig ssa;

  bool operator==(const ScenarioDoc&) const = default;
};

ScpnNet to_net(const ScenarioDoc& doc);

struct ScenarioError {
  enum class Kind { Syntax, Range, DanglingReference, DuplicateId };
  Kind kind = Kind::Syntax;
  int line = 0;         // 1-based, 0 when unknown
  std::string field;    // e.g. "connections[2].exploitability"
  std::string subject;  // offending identifier or value
  std::string message;

  std::string to_string() const;
};

std::string_view to_string(ScenarioError::Kind kind);

struct ParseOutcome {
  std::optional<ScenarioDoc> doc;
  std::vector<ScenarioError> errors;  // every problem found, in document order

  bool ok() const { return doc.has_value(); }
};

ParseOutcome parse_scenario(std::string_view text);

// Canonical text: fixed key order, quoted strings, shortest round-trip numbers.
std::string serialize_scenario(const ScenarioDoc& doc);

inline constexpr std::string_view kScenario1 = "smart-home-scenario-1";
inline constexpr std::string_view kScenario2 = "smart-home-scenario-2";

// The two smart-home attack scenarios: TV entry and tablet entry.
std::vector<ScenarioDoc> builtin_fixtures();
std::optional<ScenarioDoc> builtin_fixture(std::string_view name);

}  // namespace scpn
