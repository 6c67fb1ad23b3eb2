#pragma once

// Two-player attacker/defender Markov game over one threat subnet.
//
// A state records, for every node of the subnet, whether it is infected,
// vulnerable, mitigated or removed, and for every propagation path whether it
// has been cut. Each epoch the defender's action is applied first, then the
// attacker's propagation attempt succeeds with the path's firing probability.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scpn/net.hpp"

namespace scpn {

struct NodeState {
  PlaceId place;
  int asset_level = kMinLevel;
  bool infected = false;
  bool vulnerable = false;
  double max_exploitable_impact = 0.0;
  bool removed = false;
  bool mitigated = false;

  // Infected and still able to do harm or spread.
  bool active() const { return infected && !removed && !mitigated; }
  // Could be newly infected by a propagation attempt.
  bool infectable() const { return vulnerable && !infected && !removed && !mitigated; }

  bool operator==(const NodeState&) const = default;
};

struct PathState {
  std::size_t source = 0;  // index into GameState::nodes
  std::size_t target = 0;
  int path_level = kMinLevel;
  int exploitability = kMinLevel;
  bool cut = false;

  double firing_probability() const { return scpn::firing_probability(exploitability); }
  bool operator==(const PathState&) const = default;
};

struct GameState {
  ThreatId threat;
  int tau = 0;
  std::vector<NodeState> nodes;  // sorted by place id
  std::vector<PathState> paths;  // sorted by (source id, target id)

  std::string path_label(std::size_t path) const;
  // Flags that change during play; equal keys mean equal states up to tau.
  std::string key() const;

  bool operator==(const GameState&) const = default;
};

// Snapshot of the threat subnet of `threat` in `net`.
GameState make_game_state(const ScpnNet& net, std::string_view threat, int tau = 0);

struct AttackerAction {
  enum class Kind { Idle, Propagate };
  Kind kind = Kind::Idle;
  std::size_t path = 0;

  static AttackerAction idle() { return {}; }
  static AttackerAction propagate(std::size_t path) { return {Kind::Propagate, path}; }
  std::string describe(const GameState& s) const;
  bool operator==(const AttackerAction&) const = default;
};

struct DefenderAction {
  enum class Kind { Idle, FixVulnerability, CutPath, RemoveNode };
  Kind kind = Kind::Idle;
  std::size_t target = 0;  // node index for Fix/Remove, path index for Cut

  static DefenderAction idle() { return {}; }
  static DefenderAction fix(std::size_t node) { return {Kind::FixVulnerability, node}; }
  static DefenderAction cut(std::size_t path) { return {Kind::CutPath, path}; }
  static DefenderAction remove(std::size_t node) { return {Kind::RemoveNode, node}; }
  std::string describe(const GameState& s) const;
  bool operator==(const DefenderAction&) const = default;
};

// How the per-epoch term of the recursive value is formed.
enum class StepReward {
  // Attacker damage of the current state. The defender's one-step reward only
  // selects the defender's response.
  Damage,
  // Attacker one-step reward plus defender one-step reward, summed as written.
  // The damage terms cancel and the value reduces to discounted defender gains.
  Combined,
};

struct GameConfig {
  double discount = 0.9;          // [0, 1)
  int horizon = 10;               // >= 1
  double restore_fraction = 0.5;  // [0, 1]
  double cut_penalty = 0.2;       // >= 0, per path level
  double removal_penalty = 0.6;   // >= 0, per asset level
  StepReward step_reward = StepReward::Damage;

  // Throws ModelError(InvalidValue) naming the first offending field.
  void validate() const;
  bool operator==(const GameConfig&) const = default;
};

double node_damage(const NodeState& n);
double path_damage(const PathState& p, std::span<const NodeState> nodes);

// Damage of every active node plus every uncut path leaving an active node.
// A path is counted once even when both of its endpoints are infected.
double attacker_reward(const GameState& s);

struct LegalActions {
  std::vector<AttackerAction> attacker;  // Idle first, then Propagate by path order
  std::vector<DefenderAction> defender;  // Idle, Fix by node, Cut by path, Remove by node
};
LegalActions legal_actions(const GameState& s);

bool is_legal(const GameState& s, const AttackerAction& a);
bool is_legal(const GameState& s, const DefenderAction& d);

// Deterministic effect of a defender action; tau is unchanged. Throws IllegalAction.
GameState apply_defender(const GameState& s, const DefenderAction& d);

double performance_cost(const GameState& s, const DefenderAction& d, const GameConfig& cfg);

// -attacker_reward(before) + restore_fraction * (damage removed) - performance cost.
double defender_reward(const GameState& before, const DefenderAction& d, const GameConfig& cfg);
// Same, inferring the action from the pair of states (tau is ignored).
// Throws StateMismatch when `after` is not a one-action successor of `before`.
double defender_reward(const GameState& before, const GameState& after, const GameConfig& cfg);

struct Successor {
  GameState state;
  double probability = 0.0;
};

// Successor distribution for one action pair; probabilities sum to 1 and tau
// increments. The defender acts first, so cutting the attacked path, removing
// either endpoint or fixing the target nullifies the propagation.
// Throws IllegalAction.
std::vector<Successor> transition(const GameState& s, const AttackerAction& a, const DefenderAction& d);

struct Decision {
  AttackerAction attacker;
  DefenderAction defender;
  double value = 0.0;
};

// Finite-horizon backward recursion. The attacker leads: it picks the action
// with the largest recursive value. The defender follows with the action that
// maximizes its one-step reward. Ties go to the earliest action in
// legal_actions order. Values are memoized on (state key, depth) for the
// lifetime of the solver.
class GameSolver {
 public:
  explicit GameSolver(GameConfig cfg, bool memoize = true);

  double value(const GameState& s, int depth);
  Decision decide(const GameState& s, int depth);
  // Defender response at `s`; independent of the attacker's choice because the
  // defender's one-step reward does not depend on it.
  DefenderAction best_response(const GameState& s) const;

  const GameConfig& config() const { return cfg_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  double step_term(const GameState& s, const DefenderAction& d) const;

  GameConfig cfg_;
  bool memoize_;
  std::unordered_map<std::string, double> memo_;
};

double total_reward(const GameState& s, const GameConfig& cfg, int depth_remaining);

struct SolveResult {
  double value = 0.0;
  AttackerAction attacker;
  DefenderAction defender;
};

// Root value and policy pair over cfg.horizon epochs.
SolveResult solve(const GameState& s, const GameConfig& cfg);

}  // namespace scpn
