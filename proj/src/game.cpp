#include "scpn/game.hpp"

#include <algorithm>
#include <cmath>

#include "scpn/error.hpp"

namespace scpn {

std::string GameState::path_label(std::size_t path) const {
  const PathState& p = paths.at(path);
  return nodes.at(p.source).place + "->" + nodes.at(p.target).place;
}

std::string GameState::key() const {
  std::string k;
  k.reserve(nodes.size() + paths.size());
  for (const auto& n : nodes) {
    k.push_back(static_cast<char>('0' + (n.infected ? 1 : 0) + (n.mitigated ? 2 : 0) + (n.removed ? 4 : 0)));
  }
  k.push_back('|');
  for (const auto& p : paths) k.push_back(p.cut ? '1' : '0');
  return k;
}

GameState make_game_state(const ScpnNet& net, std::string_view threat, int tau) {
  const ThreatSubnet sub = threat_subnet(net, threat);
  GameState s;
  s.threat = sub.threat;
  s.tau = tau;
  for (const auto& id : sub.nodes) {
    const Place& p = net.place(id);
    NodeState n;
    n.place = id;
    n.asset_level = p.asset.level;
    n.infected = p.tokens_of(threat) > 0;
    n.vulnerable = p.asset.vulnerable_to(threat);
    n.max_exploitable_impact = p.asset.max_impact_for(threat);
    s.nodes.push_back(std::move(n));
  }
  auto index_of = [&](const PlaceId& id) {
    return static_cast<std::size_t>(std::lower_bound(sub.nodes.begin(), sub.nodes.end(), id) -
                                    sub.nodes.begin());
  };
  for (std::size_t ci : sub.paths) {
    const Connection& c = net.connections()[ci];
    s.paths.push_back(PathState{index_of(c.source), index_of(c.target), c.path_level, c.exploitability, false});
  }
  return s;
}

std::string AttackerAction::describe(const GameState& s) const {
  if (kind == Kind::Idle) return "Idle";
  return "Propagate(" + s.path_label(path) + ")";
}

std::string DefenderAction::describe(const GameState& s) const {
  switch (kind) {
    case Kind::Idle: return "Idle";
    case Kind::FixVulnerability: return "FixVulnerability(" + s.nodes.at(target).place + ")";
    case Kind::CutPath: return "CutPath(" + s.path_label(target) + ")";
    case Kind::RemoveNode: return "RemoveNode(" + s.nodes.at(target).place + ")";
  }
  return "?";
}

void GameConfig::validate() const {
  auto fail = [](const char* field, const std::string& why) {
    throw ModelError(ErrorCode::InvalidValue, field, why);
  };
  if (!(discount >= 0.0 && discount < 1.0)) fail("discount", "must be in [0, 1)");
  if (horizon < 1) fail("horizon", "must be >= 1");
  if (!(restore_fraction >= 0.0 && restore_fraction <= 1.0)) fail("restore_fraction", "must be in [0, 1]");
  if (!(cut_penalty >= 0.0) || !std::isfinite(cut_penalty)) fail("cut_penalty", "must be >= 0");
  if (!(removal_penalty >= 0.0) || !std::isfinite(removal_penalty)) fail("removal_penalty", "must be >= 0");
}

double node_damage(const NodeState& n) {
  if (!n.active()) return 0.0;
  return n.asset_level * (n.max_exploitable_impact / kMaxImpact);
}

double path_damage(const PathState& p, std::span<const NodeState> nodes) {
  if (p.cut || !nodes[p.source].active()) return 0.0;
  return p.path_level * p.firing_probability();
}

double attacker_reward(const GameState& s) {
  double total = 0.0;
  for (const auto& n : s.nodes) total += node_damage(n);
  for (const auto& p : s.paths) total += path_damage(p, s.nodes);
  return total;
}

bool is_legal(const GameState& s, const AttackerAction& a) {
  if (a.kind == AttackerAction::Kind::Idle) return true;
  if (a.path >= s.paths.size()) return false;
  const PathState& p = s.paths[a.path];
  return !p.cut && s.nodes[p.source].active() && s.nodes[p.target].infectable();
}

bool is_legal(const GameState& s, const DefenderAction& d) {
  using K = DefenderAction::Kind;
  switch (d.kind) {
    case K::Idle: return true;
    case K::FixVulnerability:
      // Patching is preventive: an infected node has to be removed instead.
      return d.target < s.nodes.size() && s.nodes[d.target].infectable();
    case K::CutPath: {
      if (d.target >= s.paths.size()) return false;
      const PathState& p = s.paths[d.target];
      return !p.cut && !s.nodes[p.source].removed && !s.nodes[p.target].removed;
    }
    case K::RemoveNode: return d.target < s.nodes.size() && !s.nodes[d.target].removed;
  }
  return false;
}

LegalActions legal_actions(const GameState& s) {
  LegalActions out;
  out.attacker.push_back(AttackerAction::idle());
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    if (is_legal(s, AttackerAction::propagate(i))) out.attacker.push_back(AttackerAction::propagate(i));
  }
  out.defender.push_back(DefenderAction::idle());
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (is_legal(s, DefenderAction::fix(i))) out.defender.push_back(DefenderAction::fix(i));
  }
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    if (is_legal(s, DefenderAction::cut(i))) out.defender.push_back(DefenderAction::cut(i));
  }
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (is_legal(s, DefenderAction::remove(i))) out.defender.push_back(DefenderAction::remove(i));
  }
  return out;
}

GameState apply_defender(const GameState& s, const DefenderAction& d) {
  if (!is_legal(s, d)) throw ModelError(ErrorCode::IllegalAction, d.describe(s));
  GameState out = s;
  using K = DefenderAction::Kind;
  switch (d.kind) {
    case K::Idle: break;
    case K::FixVulnerability:
      out.nodes[d.target].mitigated = true;
      out.nodes[d.target].vulnerable = false;
      break;
    case K::CutPath: out.paths[d.target].cut = true; break;
    case K::RemoveNode: out.nodes[d.target].removed = true; break;
  }
  return out;
}

double performance_cost(const GameState& s, const DefenderAction& d, const GameConfig& cfg) {
  using K = DefenderAction::Kind;
  switch (d.kind) {
    case K::CutPath: return cfg.cut_penalty * s.paths.at(d.target).path_level;
    case K::RemoveNode: return cfg.removal_penalty * s.nodes.at(d.target).asset_level;
    case K::Idle:
    case K::FixVulnerability: return 0.0;
  }
  return 0.0;
}

double defender_reward(const GameState& before, const DefenderAction& d, const GameConfig& cfg) {
  const double damage_before = attacker_reward(before);
  const double damage_after = attacker_reward(apply_defender(before, d));
  const double variation = cfg.restore_fraction * (damage_before - damage_after) - performance_cost(before, d, cfg);
  return -damage_before + variation;
}

double defender_reward(const GameState& before, const GameState& after, const GameConfig& cfg) {
  GameState target = after;
  target.tau = before.tau;
  for (const auto& d : legal_actions(before).defender) {
    if (apply_defender(before, d) == target) return defender_reward(before, d, cfg);
  }
  throw ModelError(ErrorCode::StateMismatch, before.threat,
                   "state is not reachable by a single defender action");
}

std::vector<Successor> transition(const GameState& s, const AttackerAction& a, const DefenderAction& d) {
  if (!is_legal(s, a)) throw ModelError(ErrorCode::IllegalAction, a.describe(s));
  GameState defended = apply_defender(s, d);
  defended.tau = s.tau + 1;

  if (a.kind == AttackerAction::Kind::Idle || !is_legal(defended, a)) {
    return {Successor{std::move(defended), 1.0}};
  }
  const PathState& p = defended.paths[a.path];
  const double prob = p.firing_probability();
  GameState infected = defended;
  infected.nodes[p.target].infected = true;
  if (prob >= 1.0) return {Successor{std::move(infected), 1.0}};
  return {Successor{std::move(infected), prob}, Successor{std::move(defended), 1.0 - prob}};
}

GameSolver::GameSolver(GameConfig cfg, bool memoize) : cfg_(cfg), memoize_(memoize) { cfg_.validate(); }

double GameSolver::step_term(const GameState& s, const DefenderAction& d) const {
  const double damage = attacker_reward(s);
  if (cfg_.step_reward == StepReward::Combined) return damage + defender_reward(s, d, cfg_);
  return damage;
}

DefenderAction GameSolver::best_response(const GameState& s) const {
  const auto options = legal_actions(s).defender;
  DefenderAction best = options.front();
  double best_reward = defender_reward(s, best, cfg_);
  for (std::size_t i = 1; i < options.size(); ++i) {
    const double r = defender_reward(s, options[i], cfg_);
    if (r > best_reward) {
      best_reward = r;
      best = options[i];
    }
  }
  return best;
}

Decision GameSolver::decide(const GameState& s, int depth) {
  if (depth <= 0) return Decision{{}, {}, step_term(s, DefenderAction::idle())};

  const DefenderAction response = best_response(s);
  const double immediate = step_term(s, response);
  Decision best;
  bool first = true;
  for (const auto& a : legal_actions(s).attacker) {
    double future = 0.0;
    if (cfg_.discount > 0.0) {
      for (const auto& succ : transition(s, a, response)) future += succ.probability * value(succ.state, depth - 1);
    }
    const double q = immediate + cfg_.discount * future;
    if (first || q > best.value) {
      best = Decision{a, response, q};
      first = false;
    }
  }
  return best;
}

double GameSolver::value(const GameState& s, int depth) {
  if (!memoize_) return decide(s, depth).value;
  std::string key = s.key();
  key += '#';
  key += std::to_string(depth);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const double v = decide(s, depth).value;
  memo_.emplace(std::move(key), v);
  return v;
}

double total_reward(const GameState& s, const GameConfig& cfg, int depth_remaining) {
  GameSolver solver(cfg);
  return solver.value(s, depth_remaining);
}

SolveResult solve(const GameState& s, const GameConfig& cfg) {
  GameSolver solver(cfg);
  const Decision d = solver.decide(s, cfg.horizon);
  return SolveResult{d.value, d.attacker, d.defender};
}

}  // namespace scpn
