#pragma once

// Random inputs for property tests. All generators are driven by an explicit
// engine so every test run is reproducible.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scpn/game.hpp"
#include "scpn/net.hpp"
#include "scpn/scenario.hpp"

namespace gen {

using Engine = std::mt19937_64;

inline int uniform_int(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform_real(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline bool coin(Engine& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Distinct node ids drawn from a pool so that lexicographic order differs from
// creation order.
inline std::vector<std::string> node_ids(Engine& rng, int count) {
  std::vector<std::string> pool{"alpha", "bravo", "N1", "N2", "N10", "zulu", "cam", "hub", "lock", "tv"};
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

struct NetShape {
  int min_nodes = 1;
  int max_nodes = 4;
  int min_paths = 0;
  int max_paths = 5;
  double vulnerable_p = 0.7;
  double infected_p = 0.4;
  bool ensure_infected = false;  // infect the first node if the draw left none
};

// Random single-threat net ("T") with at most `max_nodes` places and
// `max_paths` connections. Impacts are on a 0.5 grid to provoke ties.
inline scpn::ScpnNet random_net(Engine& rng, const NetShape& shape) {
  const int n = uniform_int(rng, shape.min_nodes, shape.max_nodes);
  const auto ids = node_ids(rng, n);
  std::vector<scpn::Asset> assets;
  std::set<std::string> infected;
  for (const auto& id : ids) {
    scpn::Asset a{id, "asset " + id, uniform_int(rng, 1, 5), {}};
    if (coin(rng, shape.vulnerable_p)) {
      const int count = uniform_int(rng, 1, 2);
      for (int k = 0; k < count; ++k)
        a.vulnerabilities.push_back(scpn::Vulnerability{"v" + std::to_string(k), uniform_int(rng, 0, 20) * 0.5, {"T"}, {}, {}});
    }
    if (coin(rng, shape.infected_p)) infected.insert(id);
    assets.push_back(std::move(a));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& s : ids) {
    for (const auto& t : ids) {
      if (s != t) pairs.emplace_back(s, t);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int m = std::min<int>(static_cast<int>(pairs.size()), uniform_int(rng, shape.min_paths, shape.max_paths));
  std::vector<scpn::Connection> conns;
  for (int i = 0; i < m; ++i) conns.push_back(scpn::Connection{pairs[i].first, pairs[i].second, uniform_int(rng, 1, 5), uniform_int(rng, 1, 5)});
  if (shape.ensure_infected && infected.empty()) infected.insert(ids.front());
  std::map<scpn::ThreatId, std::set<scpn::PlaceId>> infections;
  if (!infected.empty()) infections["T"] = infected;
  return scpn::build_net(std::move(assets), std::move(conns), {scpn::ThreatToken{"T", "red"}}, infections);
}

inline scpn::GameConfig random_config(Engine& rng, int max_horizon) {
  scpn::GameConfig cfg;
  const double discounts[] = {0.0, 0.5, 0.9, 0.95};
  cfg.discount = discounts[uniform_int(rng, 0, 3)];
  cfg.horizon = uniform_int(rng, 1, max_horizon);
  cfg.restore_fraction = uniform_int(rng, 0, 4) * 0.25;
  cfg.cut_penalty = uniform_int(rng, 0, 4) * 0.1;
  cfg.removal_penalty = uniform_int(rng, 0, 8) * 0.1;
  cfg.step_reward = coin(rng) ? scpn::StepReward::Damage : scpn::StepReward::Combined;
  return cfg;
}

inline std::string random_text(Engine& rng) {
  static const std::vector<std::string> parts{"hub", "Thermostat", "Тепло", "锁", "caméra", "x:y", "#tag", "\"q\"",
                                              "back\\slash", "- dash", "yes", "null", "42", "ö", "emoji 🔒", "  pad"};
  std::string s = parts[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(parts.size()) - 1))];
  if (coin(rng)) s += " " + parts[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(parts.size()) - 1))];
  return s;
}

// A valid scenario document with arbitrary (but in-range) values.
inline scpn::ScenarioDoc random_scenario(Engine& rng) {
  scpn::ScenarioDoc doc;
  doc.id = "gen-" + std::to_string(uniform_int(rng, 0, 1 << 20));
  if (coin(rng)) doc.description = random_text(rng);
  const int n_threats = uniform_int(rng, 1, 3);
  for (int t = 0; t < n_threats; ++t) doc.threats.push_back("T" + std::to_string(t) + (coin(rng) ? "*" : ""));
  std::sort(doc.threats.begin(), doc.threats.end());
  doc.threats.erase(std::unique(doc.threats.begin(), doc.threats.end()), doc.threats.end());

  const int n = uniform_int(rng, 1, 6);
  const auto ids = node_ids(rng, n);
  for (const auto& id : ids) {
    scpn::Asset a{id, random_text(rng), uniform_int(rng, 1, 5), {}};
    const int nv = uniform_int(rng, 0, 3);
    for (int k = 0; k < nv; ++k) {
      scpn::Vulnerability v;
      v.id = "V" + std::to_string(k);
      v.impact = coin(rng) ? uniform_int(rng, 0, 10) : uniform_real(rng, 0.0, 10.0);
      for (const auto& t : doc.threats) {
        if (coin(rng)) v.exploitable_by.insert(t);
      }
      if (coin(rng, 0.3)) v.cvss_base_score = uniform_real(rng, 0.0, 10.0);
      if (coin(rng, 0.3)) v.description = random_text(rng);
      a.vulnerabilities.push_back(std::move(v));
    }
    doc.assets.push_back(std::move(a));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& s : ids) {
    for (const auto& t : ids) {
      if (s != t) pairs.emplace_back(s, t);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const int m = std::min<int>(static_cast<int>(pairs.size()), uniform_int(rng, 0, 8));
  for (int i = 0; i < m; ++i)
    doc.connections.push_back(scpn::Connection{pairs[i].first, pairs[i].second, uniform_int(rng, 1, 5), uniform_int(rng, 1, 5)});
  for (const auto& t : doc.threats) {
    if (!coin(rng)) continue;
    std::vector<std::string> places;
    for (const auto& id : ids) {
      if (coin(rng, 0.3)) places.push_back(id);
    }
    doc.initial_infections.emplace_back(t, std::move(places));
  }
  doc.game.discount = uniform_real(rng, 0.0, 0.999);
  doc.game.horizon = uniform_int(rng, 1, 30);
  doc.game.restore_fraction = uniform_real(rng, 0.0, 1.0);
  doc.game.cut_penalty = uniform_real(rng, 0.0, 3.0);
  doc.game.removal_penalty = uniform_real(rng, 0.0, 3.0);
  doc.game.step_reward = coin(rng) ? scpn::StepReward::Damage : scpn::StepReward::Combined;
  doc.ssa.radix = coin(rng) ? 10.0 : uniform_real(rng, 1.01, 100.0);
  doc.ssa.mode = coin(rng) ? scpn::RolloutMode::Expectation : scpn::RolloutMode::MonteCarlo;
  doc.ssa.trials = uniform_int(rng, 1, 5000);
  doc.ssa.seed = rng();
  return doc;
}

}  // namespace gen
