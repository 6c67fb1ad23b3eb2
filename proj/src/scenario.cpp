#include "scpn/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <set>

#include "scpn/error.hpp"

namespace scpn {

ScpnNet to_net(const ScenarioDoc& doc) {
  std::vector<ThreatToken> threats;
  for (const auto& t : doc.threats) threats.push_back(ThreatToken{t, t});
  std::map<ThreatId, std::set<PlaceId>> infections;
  for (const auto& [threat, places] : doc.initial_infections) {
    infections[threat].insert(places.begin(), places.end());
  }
  return build_net(doc.assets, doc.connections, std::move(threats), infections);
}

std::string_view to_string(ScenarioError::Kind kind) {
  switch (kind) {
    case ScenarioError::Kind::Syntax: return "SyntaxError";
    case ScenarioError::Kind::Range: return "RangeError";
    case ScenarioError::Kind::DanglingReference: return "DanglingReference";
    case ScenarioError::Kind::DuplicateId: return "DuplicateId";
  }
  return "Error";
}

std::string ScenarioError::to_string() const {
  std::string out{scpn::to_string(kind)};
  if (!subject.empty()) out += "(" + subject + ")";
  if (line > 0) out += " line " + std::to_string(line);
  if (!field.empty()) out += " [" + field + "]";
  if (!message.empty()) out += ": " + message;
  return out;
}

namespace {

using Kind = ScenarioError::Kind;

int line_of(const YAML::Node& n) {
  const auto mark = n.Mark();
  return mark.is_null() ? 0 : mark.line + 1;
}

std::string step_reward_name(StepReward s) { return s == StepReward::Damage ? "damage" : "combined"; }
std::string mode_name(RolloutMode m) { return m == RolloutMode::Expectation ? "expectation" : "montecarlo"; }

// Walks the YAML tree, records every problem and keeps going where it can.
class Reader {
 public:
  std::vector<ScenarioError> errors;

  void error(Kind kind, const YAML::Node& at, std::string field, std::string subject, std::string message) {
    errors.push_back(ScenarioError{kind, line_of(at), std::move(field), std::move(subject), std::move(message)});
  }

  void check_keys(const YAML::Node& map, const std::string& field, std::initializer_list<std::string_view> allowed) {
    for (const auto& kv : map) {
      std::string key;
      if (!kv.first.IsScalar()) {
        error(Kind::Syntax, kv.first, field, "", "keys must be scalars");
        continue;
      }
      key = kv.first.Scalar();
      bool known = false;
      for (auto a : allowed) known = known || a == key;
      if (!known) error(Kind::Syntax, kv.first, field.empty() ? key : field + "." + key, key, "unknown key");
    }
  }

  YAML::Node child(const YAML::Node& map, const std::string& parent, const char* key, bool required) {
    YAML::Node n = map[key];
    if (!n.IsDefined() || n.IsNull()) {
      if (required) error(Kind::Syntax, map, join(parent, key), "", "missing required key");
      return YAML::Node(YAML::NodeType::Undefined);
    }
    return n;
  }

  static std::string join(const std::string& parent, const char* key) {
    return parent.empty() ? std::string(key) : parent + "." + key;
  }

  std::optional<std::string> text(const YAML::Node& n, const std::string& field, bool non_empty = true) {
    if (!n.IsScalar()) {
      error(Kind::Syntax, n, field, "", "expected a string");
      return std::nullopt;
    }
    if (non_empty && n.Scalar().empty()) {
      error(Kind::Range, n, field, "", "must not be empty");
      return std::nullopt;
    }
    return n.Scalar();
  }

  std::optional<long long> integer(const YAML::Node& n, const std::string& field) {
    if (!n.IsScalar()) {
      error(Kind::Syntax, n, field, "", "expected an integer");
      return std::nullopt;
    }
    const std::string& s = n.Scalar();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      error(Kind::Syntax, n, field, s, "expected an integer");
      return std::nullopt;
    }
    return v;
  }

  std::optional<double> number(const YAML::Node& n, const std::string& field) {
    if (!n.IsScalar()) {
      error(Kind::Syntax, n, field, "", "expected a number");
      return std::nullopt;
    }
    const std::string& s = n.Scalar();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
      error(Kind::Syntax, n, field, s, "expected a finite number");
      return std::nullopt;
    }
    return v;
  }

  std::vector<std::pair<std::string, YAML::Node>> string_list(const YAML::Node& n, const std::string& field) {
    std::vector<std::pair<std::string, YAML::Node>> out;
    if (!n.IsDefined()) return out;
    if (!n.IsSequence()) {
      error(Kind::Syntax, n, field, "", "expected a list");
      return out;
    }
    for (std::size_t i = 0; i < n.size(); ++i) {
      const std::string f = field + "[" + std::to_string(i) + "]";
      if (auto s = text(n[i], f)) out.emplace_back(*s, n[i]);
    }
    return out;
  }

  void level(const YAML::Node& n, const std::string& field, const std::string& subject, int& out) {
    if (auto v = integer(n, field)) {
      if (*v < kMinLevel || *v > kMaxLevel)
        error(Kind::Range, n, field, subject, "must be in 1..5, got " + std::to_string(*v));
      else
        out = static_cast<int>(*v);
    }
  }
};

ScenarioDoc read_document(const YAML::Node& root, Reader& r) {
  ScenarioDoc doc;
  r.check_keys(root, "",
               {"scenario", "description", "threats", "assets", "connections", "initial_infections", "game", "ssa"});

  if (auto id = r.child(root, "", "scenario", true); id.IsDefined()) {
    if (auto s = r.text(id, "scenario")) doc.id = *s;
  }
  if (auto d = r.child(root, "", "description", false); d.IsDefined()) {
    if (auto s = r.text(d, "description", false)) doc.description = *s;
  }

  std::set<std::string> threat_ids;
  const YAML::Node threats = r.child(root, "", "threats", true);
  for (const auto& [t, node] : r.string_list(threats, "threats")) {
    if (!threat_ids.insert(t).second) {
      r.error(Kind::DuplicateId, node, "threats", t, "threat listed twice");
      continue;
    }
    doc.threats.push_back(t);
  }
  if (threats.IsDefined() && threats.IsSequence() && threats.size() == 0)
    r.error(Kind::Range, threats, "threats", "", "at least one threat is required");

  std::set<std::string> asset_ids;
  const YAML::Node assets = r.child(root, "", "assets", true);
  if (assets.IsDefined() && !assets.IsSequence()) r.error(Kind::Syntax, assets, "assets", "", "expected a list");
  if (assets.IsDefined() && assets.IsSequence()) {
    for (std::size_t i = 0; i < assets.size(); ++i) {
      const YAML::Node a = assets[i];
      const std::string f = "assets[" + std::to_string(i) + "]";
      if (!a.IsMap()) {
        r.error(Kind::Syntax, a, f, "", "expected a mapping");
        continue;
      }
      r.check_keys(a, f, {"id", "name", "level", "vulnerabilities"});
      Asset asset;
      if (auto n = r.child(a, f, "id", true); n.IsDefined()) {
        if (auto s = r.text(n, f + ".id")) {
          asset.id = *s;
          if (!asset_ids.insert(asset.id).second)
            r.error(Kind::DuplicateId, n, f + ".id", asset.id, "asset id used twice");
        }
      }
      if (auto n = r.child(a, f, "name", false); n.IsDefined()) {
        if (auto s = r.text(n, f + ".name", false)) asset.name = *s;
      }
      if (auto n = r.child(a, f, "level", true); n.IsDefined()) r.level(n, f + ".level", asset.id, asset.level);

      const YAML::Node vulns = r.child(a, f, "vulnerabilities", false);
      if (vulns.IsDefined() && !vulns.IsSequence())
        r.error(Kind::Syntax, vulns, f + ".vulnerabilities", "", "expected a list");
      if (vulns.IsDefined() && vulns.IsSequence()) {
        std::set<std::string> vul_ids;
        for (std::size_t j = 0; j < vulns.size(); ++j) {
          const YAML::Node v = vulns[j];
          const std::string vf = f + ".vulnerabilities[" + std::to_string(j) + "]";
          if (!v.IsMap()) {
            r.error(Kind::Syntax, v, vf, "", "expected a mapping");
            continue;
          }
          r.check_keys(v, vf, {"id", "impact", "exploitable_by", "cvss_base_score", "description"});
          Vulnerability vul;
          if (auto n = r.child(v, vf, "id", true); n.IsDefined()) {
            if (auto s = r.text(n, vf + ".id")) {
              vul.id = *s;
              if (!vul_ids.insert(vul.id).second)
                r.error(Kind::DuplicateId, n, vf + ".id", vul.id, "vulnerability id used twice on " + asset.id);
            }
          }
          if (auto n = r.child(v, vf, "impact", true); n.IsDefined()) {
            if (auto x = r.number(n, vf + ".impact")) {
              if (*x < 0.0 || *x > kMaxImpact)
                r.error(Kind::Range, n, vf + ".impact", vul.id, "must be in [0, 10]");
              else
                vul.impact = *x;
            }
          }
          const YAML::Node by = r.child(v, vf, "exploitable_by", true);
          for (const auto& [t, node] : r.string_list(by, vf + ".exploitable_by")) {
            if (!threat_ids.contains(t)) r.error(Kind::DanglingReference, node, vf + ".exploitable_by", t, "unknown threat");
            vul.exploitable_by.insert(t);
          }
          if (auto n = r.child(v, vf, "cvss_base_score", false); n.IsDefined()) {
            if (auto x = r.number(n, vf + ".cvss_base_score")) {
              if (*x < 0.0 || *x > 10.0)
                r.error(Kind::Range, n, vf + ".cvss_base_score", vul.id, "must be in [0, 10]");
              else
                vul.cvss_base_score = *x;
            }
          }
          if (auto n = r.child(v, vf, "description", false); n.IsDefined()) {
            if (auto s = r.text(n, vf + ".description", false)) vul.description = *s;
          }
          asset.vulnerabilities.push_back(std::move(vul));
        }
      }
      doc.assets.push_back(std::move(asset));
    }
  }

  const YAML::Node connections = r.child(root, "", "connections", false);
  if (connections.IsDefined() && !connections.IsSequence())
    r.error(Kind::Syntax, connections, "connections", "", "expected a list");
  if (connections.IsDefined() && connections.IsSequence()) {
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < connections.size(); ++i) {
      const YAML::Node c = connections[i];
      const std::string f = "connections[" + std::to_string(i) + "]";
      if (!c.IsMap()) {
        r.error(Kind::Syntax, c, f, "", "expected a mapping");
        continue;
      }
      r.check_keys(c, f, {"source", "target", "path_level", "exploitability"});
      Connection conn;
      for (auto [key, slot] : {std::pair{"source", &conn.source}, std::pair{"target", &conn.target}}) {
        if (auto n = r.child(c, f, key, true); n.IsDefined()) {
          if (auto s = r.text(n, f + "." + key)) {
            *slot = *s;
            if (!asset_ids.contains(*s)) r.error(Kind::DanglingReference, n, f + "." + key, *s, "unknown asset");
          }
        }
      }
      const std::string label = conn.label();
      if (!conn.source.empty() && conn.source == conn.target)
        r.error(Kind::Range, c, f, label, "source and target must differ");
      if (!conn.source.empty() && !conn.target.empty() && !seen.insert({conn.source, conn.target}).second)
        r.error(Kind::DuplicateId, c, f, label, "connection listed twice");
      if (auto n = r.child(c, f, "path_level", true); n.IsDefined()) r.level(n, f + ".path_level", label, conn.path_level);
      if (auto n = r.child(c, f, "exploitability", true); n.IsDefined())
        r.level(n, f + ".exploitability", label, conn.exploitability);
      doc.connections.push_back(std::move(conn));
    }
  }

  const YAML::Node infections = r.child(root, "", "initial_infections", false);
  if (infections.IsDefined() && !infections.IsMap())
    r.error(Kind::Syntax, infections, "initial_infections", "", "expected a mapping of threat to asset list");
  if (infections.IsDefined() && infections.IsMap()) {
    std::set<std::string> keys;
    for (const auto& kv : infections) {
      if (!kv.first.IsScalar()) {
        r.error(Kind::Syntax, kv.first, "initial_infections", "", "keys must be threat ids");
        continue;
      }
      const std::string threat = kv.first.Scalar();
      const std::string f = "initial_infections." + threat;
      if (!threat_ids.contains(threat)) r.error(Kind::DanglingReference, kv.first, f, threat, "unknown threat");
      if (!keys.insert(threat).second) r.error(Kind::DuplicateId, kv.first, f, threat, "threat listed twice");
      std::vector<PlaceId> places;
      std::set<std::string> seen;
      for (const auto& [p, node] : r.string_list(kv.second, f)) {
        if (!asset_ids.contains(p)) r.error(Kind::DanglingReference, node, f, p, "unknown asset");
        if (!seen.insert(p).second) r.error(Kind::DuplicateId, node, f, p, "asset listed twice");
        places.push_back(p);
      }
      doc.initial_infections.emplace_back(threat, std::move(places));
    }
  }

  if (auto g = r.child(root, "", "game", false); g.IsDefined()) {
    if (!g.IsMap()) {
      r.error(Kind::Syntax, g, "game", "", "expected a mapping");
    } else {
      r.check_keys(g, "game", {"discount", "horizon", "restore_fraction", "cut_penalty", "removal_penalty", "step_reward"});
      auto real = [&](const char* key, double& out, auto valid, const char* range) {
        if (auto n = r.child(g, "game", key, false); n.IsDefined()) {
          if (auto x = r.number(n, std::string("game.") + key)) {
            if (!valid(*x))
              r.error(Kind::Range, n, std::string("game.") + key, n.Scalar(), range);
            else
              out = *x;
          }
        }
      };
      real("discount", doc.game.discount, [](double x) { return x >= 0.0 && x < 1.0; }, "must be in [0, 1)");
      real("restore_fraction", doc.game.restore_fraction, [](double x) { return x >= 0.0 && x <= 1.0; },
           "must be in [0, 1]");
      real("cut_penalty", doc.game.cut_penalty, [](double x) { return x >= 0.0; }, "must be >= 0");
      real("removal_penalty", doc.game.removal_penalty, [](double x) { return x >= 0.0; }, "must be >= 0");
      if (auto n = r.child(g, "game", "horizon", false); n.IsDefined()) {
        if (auto v = r.integer(n, "game.horizon")) {
          if (*v < 1 || *v > 1000)
            r.error(Kind::Range, n, "game.horizon", n.Scalar(), "must be in 1..1000");
          else
            doc.game.horizon = static_cast<int>(*v);
        }
      }
      if (auto n = r.child(g, "game", "step_reward", false); n.IsDefined()) {
        if (auto s = r.text(n, "game.step_reward")) {
          if (*s == "damage")
            doc.game.step_reward = StepReward::Damage;
          else if (*s == "combined")
            doc.game.step_reward = StepReward::Combined;
          else
            r.error(Kind::Range, n, "game.step_reward", *s, "must be damage or combined");
        }
      }
    }
  }

  if (auto s = r.child(root, "", "ssa", false); s.IsDefined()) {
    if (!s.IsMap()) {
      r.error(Kind::Syntax, s, "ssa", "", "expected a mapping");
    } else {
      r.check_keys(s, "ssa", {"radix", "mode", "trials", "seed"});
      if (auto n = r.child(s, "ssa", "radix", false); n.IsDefined()) {
        if (auto x = r.number(n, "ssa.radix")) {
          if (!(*x > 1.0))
            r.error(Kind::Range, n, "ssa.radix", n.Scalar(), "must be > 1");
          else
            doc.ssa.radix = *x;
        }
      }
      if (auto n = r.child(s, "ssa", "mode", false); n.IsDefined()) {
        if (auto m = r.text(n, "ssa.mode")) {
          if (*m == "expectation")
            doc.ssa.mode = RolloutMode::Expectation;
          else if (*m == "montecarlo")
            doc.ssa.mode = RolloutMode::MonteCarlo;
          else
            r.error(Kind::Range, n, "ssa.mode", *m, "must be expectation or montecarlo");
        }
      }
      if (auto n = r.child(s, "ssa", "trials", false); n.IsDefined()) {
        if (auto v = r.integer(n, "ssa.trials")) {
          if (*v < 1 || *v > 1000000)
            r.error(Kind::Range, n, "ssa.trials", n.Scalar(), "must be in 1..1000000");
          else
            doc.ssa.trials = static_cast<int>(*v);
        }
      }
      if (auto n = r.child(s, "ssa", "seed", false); n.IsDefined()) {
        const std::string& text = n.IsScalar() ? n.Scalar() : std::string();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
          r.error(Kind::Syntax, n, "ssa.seed", text, "expected a non-negative integer");
        else
          doc.ssa.seed = v;
      }
    }
  }
  return doc;
}

}  // namespace

ParseOutcome parse_scenario(std::string_view text) {
  ParseOutcome out;
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    out.errors.push_back(ScenarioError{Kind::Syntax, e.mark.is_null() ? 0 : e.mark.line + 1, "", "", e.msg});
    return out;
  }
  if (!root.IsMap()) {
    out.errors.push_back(ScenarioError{Kind::Syntax, line_of(root), "", "", "document must be a mapping"});
    return out;
  }
  Reader reader;
  try {
    ScenarioDoc doc = read_document(root, reader);
    out.errors = std::move(reader.errors);
    if (out.errors.empty()) out.doc = std::move(doc);
  } catch (const YAML::Exception& e) {
    out.errors = std::move(reader.errors);
    out.errors.push_back(ScenarioError{Kind::Syntax, e.mark.is_null() ? 0 : e.mark.line + 1, "", "", e.msg});
  }
  return out;
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string serialize_scenario(const ScenarioDoc& doc) {
  YAML::Emitter out;
  out.SetIndent(2);
  auto str = [&](const std::string& s) { out << YAML::DoubleQuoted << s; };
  auto num = [&](double v) { out << shortest(v); };

  out << YAML::BeginMap;
  out << YAML::Key << "scenario" << YAML::Value;
  str(doc.id);
  if (!doc.description.empty()) {
    out << YAML::Key << "description" << YAML::Value;
    str(doc.description);
  }
  out << YAML::Key << "threats" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& t : doc.threats) str(t);
  out << YAML::EndSeq;

  out << YAML::Key << "assets" << YAML::Value << YAML::BeginSeq;
  for (const auto& a : doc.assets) {
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value;
    str(a.id);
    out << YAML::Key << "name" << YAML::Value;
    str(a.name);
    out << YAML::Key << "level" << YAML::Value << a.level;
    out << YAML::Key << "vulnerabilities" << YAML::Value;
    if (a.vulnerabilities.empty()) out << YAML::Flow;
    out << YAML::BeginSeq;
    for (const auto& v : a.vulnerabilities) {
      out << YAML::BeginMap;
      out << YAML::Key << "id" << YAML::Value;
      str(v.id);
      out << YAML::Key << "impact" << YAML::Value;
      num(v.impact);
      out << YAML::Key << "exploitable_by" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (const auto& t : v.exploitable_by) str(t);
      out << YAML::EndSeq;
      if (v.cvss_base_score) {
        out << YAML::Key << "cvss_base_score" << YAML::Value;
        num(*v.cvss_base_score);
      }
      if (!v.description.empty()) {
        out << YAML::Key << "description" << YAML::Value;
        str(v.description);
      }
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "connections" << YAML::Value;
  if (doc.connections.empty()) out << YAML::Flow;
  out << YAML::BeginSeq;
  for (const auto& c : doc.connections) {
    out << YAML::BeginMap;
    out << YAML::Key << "source" << YAML::Value;
    str(c.source);
    out << YAML::Key << "target" << YAML::Value;
    str(c.target);
    out << YAML::Key << "path_level" << YAML::Value << c.path_level;
    out << YAML::Key << "exploitability" << YAML::Value << c.exploitability;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "initial_infections" << YAML::Value;
  if (doc.initial_infections.empty()) out << YAML::Flow;
  out << YAML::BeginMap;
  for (const auto& [threat, places] : doc.initial_infections) {
    out << YAML::Key;
    str(threat);
    out << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& p : places) str(p);
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;

  out << YAML::Key << "game" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "discount" << YAML::Value;
  num(doc.game.discount);
  out << YAML::Key << "horizon" << YAML::Value << doc.game.horizon;
  out << YAML::Key << "restore_fraction" << YAML::Value;
  num(doc.game.restore_fraction);
  out << YAML::Key << "cut_penalty" << YAML::Value;
  num(doc.game.cut_penalty);
  out << YAML::Key << "removal_penalty" << YAML::Value;
  num(doc.game.removal_penalty);
  out << YAML::Key << "step_reward" << YAML::Value << step_reward_name(doc.game.step_reward);
  out << YAML::EndMap;

  out << YAML::Key << "ssa" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "radix" << YAML::Value;
  num(doc.ssa.radix);
  out << YAML::Key << "mode" << YAML::Value << mode_name(doc.ssa.mode);
  out << YAML::Key << "trials" << YAML::Value << doc.ssa.trials;
  out << YAML::Key << "seed" << YAML::Value << doc.ssa.seed;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

namespace {

constexpr const char* kThreat = "T1";

Vulnerability vul(std::string id, double impact, std::string description, std::optional<double> cvss = {}) {
  return Vulnerability{std::move(id), impact, {kThreat}, cvss, std::move(description)};
}

// Asset levels and VulOR flags follow the node-state table; the TV and tablet
// vulnerabilities follow the two vulnerability tables. The hub, thermostat and
// lock are flagged vulnerable there without an impact figure, so their entries
// carry placeholder impacts.
ScenarioDoc smart_home(std::string id, std::string description, PlaceId entry) {
  ScenarioDoc doc;
  doc.id = std::move(id);
  doc.description = std::move(description);
  doc.threats = {kThreat};
  doc.assets = {
      Asset{"N1", "Smart hub", 5, {vul("V_hub1", 7, "Hub firmware flaw reachable from paired devices")}},
      Asset{"N2",
            "TV",
            4,
            {vul("V_tv1", 10, "CVE-2008-4866", 10.0), vul("V_tv2", 10, "CVE-2009-0385", 9.3)}},
      Asset{"N3",
            "Tablet",
            5,
            {vul("V_tab1", 2, "Disrupt the conversion of Java bytecode"),
             vul("V_tab2", 2, "Modify the AndroidManifest.xml file"),
             vul("V_tab3", 10, "Obtain extended Device privileges"),
             vul("V_tab4", 5, "Automatic sleep caused by low power")}},
      Asset{"N4", "Meter", 3, {}},
      Asset{"N5", "Thermostat", 2, {vul("V_thermo1", 4, "ZigBee command injection")}},
      Asset{"N6", "Lock", 5, {vul("V_lock1", 8, "ZigBee unlock replay")}},
  };
  doc.connections = {
      Connection{"N2", "N1", 5, 3},
      Connection{"N2", "N3", 5, 4},
      Connection{"N3", "N5", 3, 1},
      Connection{"N3", "N6", 1, 1},
  };
  doc.initial_infections = {{kThreat, {std::move(entry)}}};
  return doc;
}

}  // namespace

std::vector<ScenarioDoc> builtin_fixtures() {
  return {
      smart_home(std::string(kScenario1), "Smart home, TV used as the entry point", "N2"),
      smart_home(std::string(kScenario2), "Smart home, Android tablet used as the entry point", "N3"),
  };
}

std::optional<ScenarioDoc> builtin_fixture(std::string_view name) {
  for (auto& doc : builtin_fixtures()) {
    if (doc.id == name) return doc;
  }
  return std::nullopt;
}

}  // namespace scpn
