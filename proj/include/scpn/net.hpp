#pragma once

// Stochastic colored Petri net over IoT assets. Places are devices, colored
// tokens are threats, connections are directed propagation channels and each
// transition moves one threat color along one connection with a fixed firing
// probability.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scpn {

using PlaceId = std::string;
using ThreatId = std::string;

inline constexpr int kMinLevel = 1;
inline constexpr int kMaxLevel = 5;
inline constexpr double kMaxImpact = 10.0;
// Deposits beyond this many tokens of one threat on one place saturate.
inline constexpr int kTokenCap = 3;

struct Vulnerability {
  std::string id;
  double impact = 0.0;  // [0, 10]
  std::set<ThreatId> exploitable_by;
  std::optional<double> cvss_base_score;  // metadata only, never feeds damage
  std::string description;

  bool operator==(const Vulnerability&) const = default;
};

struct Asset {
  PlaceId id;
  std::string name;
  int level = kMinLevel;  // importance rank 1..5
  std::vector<Vulnerability> vulnerabilities;

  bool vulnerable_to(std::string_view threat) const;
  // Largest impact among vulnerabilities exploitable by `threat`, 0 if none.
  double max_impact_for(std::string_view threat) const;

  bool operator==(const Asset&) const = default;
};

struct ThreatToken {
  ThreatId id;
  std::string color;

  bool operator==(const ThreatToken&) const = default;
};

struct Place {
  Asset asset;
  std::map<ThreatId, int> tokens;  // multiplicity per threat, absent means 0

  const PlaceId& id() const { return asset.id; }
  int tokens_of(std::string_view threat) const;

  bool operator==(const Place&) const = default;
};

struct Connection {
  PlaceId source;
  PlaceId target;
  int path_level = kMinLevel;      // 1..5
  int exploitability = kMinLevel;  // 1..5

  std::string label() const { return source + "->" + target; }
  bool operator==(const Connection&) const = default;
};

// Exploitability rank 1..5 mapped linearly onto (0, 1].
double firing_probability(int exploitability);

struct Transition {
  std::size_t connection = 0;  // index into ScpnNet::connections()
  ThreatId threat;
  double firing_probability = 0.0;

  bool operator==(const Transition&) const = default;
};

// Immutable, validated net. All collections are kept in lexicographic id order:
// places by id, connections by (source, target), threats by id, transitions by
// (connection, threat).
class ScpnNet {
 public:
  ScpnNet() = default;

  const std::vector<Place>& places() const { return places_; }
  const std::vector<Connection>& connections() const { return connections_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<ThreatToken>& threats() const { return threats_; }

  const Place* find_place(std::string_view id) const;
  const Place& place(std::string_view id) const;  // throws UnknownPlace
  bool has_threat(std::string_view id) const;
  std::optional<std::size_t> find_connection(std::string_view source, std::string_view target) const;

  // Returns a copy with `count` tokens of `threat` on `place`, clamped to [0, kTokenCap].
  ScpnNet with_tokens(std::string_view place, std::string_view threat, int count) const;

  bool operator==(const ScpnNet&) const = default;

 private:
  friend ScpnNet build_net(std::vector<Asset>, std::vector<Connection>, std::vector<ThreatToken>,
                           const std::map<ThreatId, std::set<PlaceId>>&);
  friend ScpnNet fire_step(const ScpnNet&, std::uint64_t, std::uint64_t);

  std::size_t place_index(std::string_view id) const;

  std::vector<Place> places_;
  std::vector<Connection> connections_;
  std::vector<Transition> transitions_;
  std::vector<ThreatToken> threats_;
};

// Validates and assembles a net. Each initially infected place receives one token
// of the threat; one transition is generated for every (connection, threat) pair
// whose target asset carries a vulnerability exploitable by that threat.
// Throws ModelError: DuplicateId, DanglingEndpoint, UnknownThreat, UnknownPlace,
// InvalidValue.
ScpnNet build_net(std::vector<Asset> assets, std::vector<Connection> connections,
                  std::vector<ThreatToken> threats,
                  const std::map<ThreatId, std::set<PlaceId>>& initial_infections);

struct ThreatSubnet {
  ThreatId threat;
  std::vector<PlaceId> nodes;      // sorted
  std::vector<std::size_t> paths;  // connection indices, sorted by (source, target)

  bool contains(std::string_view place) const;
  bool operator==(const ThreatSubnet&) const = default;
};

// Nodes are the places infected by `threat` plus the places vulnerable to it;
// paths are the connections with both endpoints among those nodes.
ThreatSubnet threat_subnet(const ScpnNet& net, std::string_view threat);

struct AttackPath {
  std::vector<PlaceId> nodes;            // entry first, target last
  std::vector<std::size_t> connections;  // empty for the entry == target path

  std::string to_string() const;  // "N2->N3->N6"
  bool operator==(const AttackPath&) const = default;
  auto operator<=>(const AttackPath& other) const { return nodes <=> other.nodes; }
};

// Every simple directed path from entry to target over the threat subnet's
// connections, ordered lexicographically by node sequence. entry == target
// yields one zero-length path.
std::vector<AttackPath> enumerate_attack_paths(const ScpnNet& net, std::string_view threat,
                                               std::string_view entry, std::string_view target);

// Uniform [0, 1) draws keyed by (seed, stream). The generator is a standard
// mt19937_64 and the conversion uses the top 53 bits, so sequences are
// bit-identical across platforms.
class FiringDraws {
 public:
  FiringDraws(std::uint64_t seed, std::uint64_t stream);
  double next();

 private:
  std::mt19937_64 engine_;
};

// One synchronous Monte-Carlo firing round. Every transition consumes one draw in
// transition order; an enabled transition (source holds a token of its color)
// fires when the draw is below its probability and deposits a copy of the token
// on the target. Sources keep their tokens.
ScpnNet fire_step(const ScpnNet& net, std::uint64_t rng_seed, std::uint64_t step_index);

}  // namespace scpn
