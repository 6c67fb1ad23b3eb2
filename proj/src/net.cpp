#include "scpn/net.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "scpn/error.hpp"

namespace scpn {

bool Asset::vulnerable_to(std::string_view threat) const {
  return std::any_of(vulnerabilities.begin(), vulnerabilities.end(), [&](const Vulnerability& v) {
    return v.exploitable_by.contains(std::string{threat});
  });
}

double Asset::max_impact_for(std::string_view threat) const {
  double best = 0.0;
  for (const auto& v : vulnerabilities) {
    if (v.exploitable_by.contains(std::string{threat})) best = std::max(best, v.impact);
  }
  return best;
}

int Place::tokens_of(std::string_view threat) const {
  auto it = tokens.find(std::string{threat});
  return it == tokens.end() ? 0 : it->second;
}

double firing_probability(int exploitability) {
  return static_cast<double>(exploitability) / static_cast<double>(kMaxLevel);
}

const Place* ScpnNet::find_place(std::string_view id) const {
  auto it = std::lower_bound(places_.begin(), places_.end(), id,
                             [](const Place& p, std::string_view key) { return p.id() < key; });
  if (it == places_.end() || it->id() != id) return nullptr;
  return &*it;
}

const Place& ScpnNet::place(std::string_view id) const {
  const Place* p = find_place(id);
  if (p == nullptr) throw ModelError(ErrorCode::UnknownPlace, std::string{id});
  return *p;
}

std::size_t ScpnNet::place_index(std::string_view id) const {
  return static_cast<std::size_t>(&place(id) - places_.data());
}

bool ScpnNet::has_threat(std::string_view id) const {
  auto it = std::lower_bound(threats_.begin(), threats_.end(), id,
                             [](const ThreatToken& t, std::string_view key) { return t.id < key; });
  return it != threats_.end() && it->id == id;
}

std::optional<std::size_t> ScpnNet::find_connection(std::string_view source,
                                                    std::string_view target) const {
  for (std::size_t i = 0; i < connections_.size(); ++i) {
    if (connections_[i].source == source && connections_[i].target == target) return i;
  }
  return std::nullopt;
}

ScpnNet ScpnNet::with_tokens(std::string_view place_id, std::string_view threat, int count) const {
  if (!has_threat(threat)) throw ModelError(ErrorCode::UnknownThreat, std::string{threat});
  ScpnNet out = *this;
  Place& p = out.places_[place_index(place_id)];
  count = std::clamp(count, 0, kTokenCap);
  if (count == 0)
    p.tokens.erase(std::string{threat});
  else
    p.tokens[std::string{threat}] = count;
  return out;
}

namespace {

void check_level(int value, const std::string& subject, const char* field) {
  if (value < kMinLevel || value > kMaxLevel)
    throw ModelError(ErrorCode::InvalidValue, subject,
                     std::string(field) + " must be in 1..5, got " + std::to_string(value));
}

}  // namespace

ScpnNet build_net(std::vector<Asset> assets, std::vector<Connection> connections,
                  std::vector<ThreatToken> threats,
                  const std::map<ThreatId, std::set<PlaceId>>& initial_infections) {
  ScpnNet net;

  std::sort(threats.begin(), threats.end(),
            [](const ThreatToken& a, const ThreatToken& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < threats.size(); ++i) {
    if (threats[i].id == threats[i - 1].id) throw ModelError(ErrorCode::DuplicateId, threats[i].id);
  }
  net.threats_ = std::move(threats);

  std::sort(assets.begin(), assets.end(), [](const Asset& a, const Asset& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < assets.size(); ++i) {
    const Asset& a = assets[i];
    if (i > 0 && a.id == assets[i - 1].id) throw ModelError(ErrorCode::DuplicateId, a.id);
    check_level(a.level, a.id, "asset level");
    std::unordered_set<std::string> vul_ids;
    for (const auto& v : a.vulnerabilities) {
      if (!vul_ids.insert(v.id).second) throw ModelError(ErrorCode::DuplicateId, a.id + "/" + v.id);
      if (!(v.impact >= 0.0 && v.impact <= kMaxImpact))
        throw ModelError(ErrorCode::InvalidValue, a.id + "/" + v.id, "impact must be in [0, 10]");
      for (const auto& t : v.exploitable_by) {
        if (!net.has_threat(t)) throw ModelError(ErrorCode::UnknownThreat, t);
      }
    }
  }
  net.places_.reserve(assets.size());
  for (auto& a : assets) net.places_.push_back(Place{std::move(a), {}});

  std::sort(connections.begin(), connections.end(), [](const Connection& a, const Connection& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  for (std::size_t i = 0; i < connections.size(); ++i) {
    const Connection& c = connections[i];
    if (net.find_place(c.source) == nullptr) throw ModelError(ErrorCode::DanglingEndpoint, c.source);
    if (net.find_place(c.target) == nullptr) throw ModelError(ErrorCode::DanglingEndpoint, c.target);
    if (c.source == c.target)
      throw ModelError(ErrorCode::InvalidValue, c.label(), "connection endpoints must differ");
    if (i > 0 && c.source == connections[i - 1].source && c.target == connections[i - 1].target)
      throw ModelError(ErrorCode::DuplicateId, c.label());
    check_level(c.path_level, c.label(), "path level");
    check_level(c.exploitability, c.label(), "exploitability");
  }
  net.connections_ = std::move(connections);

  for (const auto& [threat, places] : initial_infections) {
    if (!net.has_threat(threat)) throw ModelError(ErrorCode::UnknownThreat, threat);
    for (const auto& pid : places) {
      if (net.find_place(pid) == nullptr) throw ModelError(ErrorCode::UnknownPlace, pid);
      net.places_[net.place_index(pid)].tokens[threat] = 1;
    }
  }

  for (std::size_t ci = 0; ci < net.connections_.size(); ++ci) {
    const Connection& c = net.connections_[ci];
    const Asset& target = net.place(c.target).asset;
    for (const auto& t : net.threats_) {
      if (target.vulnerable_to(t.id))
        net.transitions_.push_back(Transition{ci, t.id, firing_probability(c.exploitability)});
    }
  }
  return net;
}

bool ThreatSubnet::contains(std::string_view place) const {
  return std::binary_search(nodes.begin(), nodes.end(), place);
}

ThreatSubnet threat_subnet(const ScpnNet& net, std::string_view threat) {
  if (!net.has_threat(threat)) throw ModelError(ErrorCode::UnknownThreat, std::string{threat});
  ThreatSubnet sub;
  sub.threat = std::string{threat};
  for (const auto& p : net.places()) {
    if (p.tokens_of(threat) > 0 || p.asset.vulnerable_to(threat)) sub.nodes.push_back(p.id());
  }
  for (std::size_t i = 0; i < net.connections().size(); ++i) {
    const auto& c = net.connections()[i];
    if (sub.contains(c.source) && sub.contains(c.target)) sub.paths.push_back(i);
  }
  return sub;
}

std::string AttackPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out += "->";
    out += nodes[i];
  }
  return out;
}

std::vector<AttackPath> enumerate_attack_paths(const ScpnNet& net, std::string_view threat,
                                               std::string_view entry, std::string_view target) {
  if (!net.has_threat(threat)) throw ModelError(ErrorCode::UnknownThreat, std::string{threat});
  net.place(entry);
  net.place(target);

  std::vector<AttackPath> found;
  if (entry == target) {
    found.push_back(AttackPath{{std::string{entry}}, {}});
    return found;
  }

  const ThreatSubnet sub = threat_subnet(net, threat);
  if (!sub.contains(entry) || !sub.contains(target)) return found;

  // sub.paths is sorted by (source, target), so each adjacency list comes out
  // sorted by target id and DFS emits paths in lexicographic order.
  std::map<std::string_view, std::vector<std::size_t>> out_edges;
  for (std::size_t ci : sub.paths) out_edges[net.connections()[ci].source].push_back(ci);

  AttackPath current{{std::string{entry}}, {}};
  std::set<std::string_view> on_path{entry};
  std::function<void(std::string_view)> dfs = [&](std::string_view node) {
    auto it = out_edges.find(node);
    if (it == out_edges.end()) return;
    for (std::size_t ci : it->second) {
      const Connection& c = net.connections()[ci];
      if (on_path.contains(c.target)) continue;
      current.nodes.push_back(c.target);
      current.connections.push_back(ci);
      if (c.target == target) {
        found.push_back(current);
      } else {
        on_path.insert(c.target);
        dfs(c.target);
        on_path.erase(c.target);
      }
      current.nodes.pop_back();
      current.connections.pop_back();
    }
  };
  dfs(entry);
  return found;
}

FiringDraws::FiringDraws(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double FiringDraws::next() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

ScpnNet fire_step(const ScpnNet& net, std::uint64_t rng_seed, std::uint64_t step_index) {
  ScpnNet out = net;
  FiringDraws draws(rng_seed, step_index);
  for (const auto& tr : net.transitions()) {
    const double u = draws.next();
    const Connection& c = net.connections()[tr.connection];
    if (net.place(c.source).tokens_of(tr.threat) == 0) continue;
    if (u < tr.firing_probability) {
      int& count = out.places_[out.place_index(c.target)].tokens[tr.threat];
      count = std::min(count + 1, kTokenCap);
    }
  }
  return out;
}

}  // namespace scpn
