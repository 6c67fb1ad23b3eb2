#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "scpn/error.hpp"
#include "scpn/net.hpp"
#include "scpn/scenario.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace scpn;

namespace {

ScpnNet scenario_net(std::string_view name) { return to_net(*builtin_fixture(name)); }

std::vector<std::vector<std::string>> node_lists(const std::vector<AttackPath>& paths) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : paths) out.push_back(p.nodes);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ModelError& e) {
    return e.code();
  }
  FAIL("expected ModelError");
  return ErrorCode::InvalidValue;
}

Asset asset(std::string id, int level, double impact = -1.0) {
  Asset a{id, id, level, {}};
  if (impact >= 0.0) a.vulnerabilities.push_back(Vulnerability{"v", impact, {"T"}, {}, {}});
  return a;
}

}  // namespace

TEST_CASE("firing probability is exploitability over five") {
  CHECK(firing_probability(1) == doctest::Approx(0.2));
  CHECK(firing_probability(4) == doctest::Approx(0.8));
  CHECK(firing_probability(5) == 1.0);
}

TEST_CASE("build_net orders places and creates one transition per vulnerable target") {
  const ScpnNet net = scenario_net(kScenario1);
  REQUIRE(net.places().size() == 6);
  CHECK(net.places().front().id() == "N1");
  CHECK(net.places().back().id() == "N6");
  CHECK(net.connections().size() == 4);
  CHECK(net.connections()[0].label() == "N2->N1");
  CHECK(net.place("N2").tokens_of("T1") == 1);
  CHECK(net.place("N3").tokens_of("T1") == 0);
  // N4 is not vulnerable and is not a connection target, so all four connections
  // produce a transition for T1.
  CHECK(net.transitions().size() == 4);
  for (const auto& t : net.transitions()) {
    CHECK(t.firing_probability == doctest::Approx(firing_probability(net.connections()[t.connection].exploitability)));
  }
}

TEST_CASE("build_net rejects malformed input") {
  const std::vector<ThreatToken> threats{{"T", "red"}};
  CHECK(code_of([&] { build_net({asset("A", 1), asset("A", 2)}, {}, threats, {}); }) == ErrorCode::DuplicateId);
  CHECK(code_of([&] { build_net({asset("A", 1)}, {{"A", "Z", 1, 1}}, threats, {}); }) == ErrorCode::DanglingEndpoint);
  CHECK(code_of([&] { build_net({asset("A", 1)}, {}, threats, {{"X", {"A"}}}); }) == ErrorCode::UnknownThreat);
  CHECK(code_of([&] { build_net({asset("A", 1)}, {}, threats, {{"T", {"Q"}}}); }) == ErrorCode::UnknownPlace);
  CHECK(code_of([&] { build_net({asset("A", 6)}, {}, threats, {}); }) == ErrorCode::InvalidValue);
  CHECK(code_of([&] { build_net({asset("A", 1, 10.5)}, {}, threats, {}); }) == ErrorCode::InvalidValue);
  CHECK(code_of([&] { build_net({asset("A", 1), asset("B", 1)}, {{"A", "B", 0, 1}}, threats, {}); }) ==
        ErrorCode::InvalidValue);
  CHECK(code_of([&] { build_net({asset("A", 1)}, {{"A", "A", 1, 1}}, threats, {}); }) == ErrorCode::InvalidValue);
  CHECK(code_of([&] {
          build_net({asset("A", 1), asset("B", 1)}, {{"A", "B", 1, 1}, {"A", "B", 2, 2}}, threats, {});
        }) == ErrorCode::DuplicateId);
}

TEST_CASE("ModelError messages name the code and the subject") {
  try {
    build_net({asset("A", 1)}, {{"A", "N9", 1, 1}}, {{"T", "red"}}, {});
    FAIL("expected throw");
  } catch (const ModelError& e) {
    CHECK(e.subject() == "N9");
    CHECK(std::string(e.what()).find("DanglingEndpoint") != std::string::npos);
  }
}

TEST_CASE("threat subnet of the smart-home net") {
  const ScpnNet net = scenario_net(kScenario1);
  const ThreatSubnet sub = threat_subnet(net, "T1");
  CHECK(sub.nodes == std::vector<PlaceId>{"N1", "N2", "N3", "N5", "N6"});
  CHECK(sub.paths.size() == 4);
  CHECK_FALSE(sub.contains("N4"));
  CHECK_THROWS_AS(threat_subnet(net, "T9"), ModelError);
}

TEST_CASE("an infected place without vulnerabilities still belongs to the subnet") {
  const ScpnNet net = build_net({asset("A", 3), asset("B", 2, 5.0)}, {{"A", "B", 2, 2}}, {{"T", "red"}}, {{"T", {"A"}}});
  const ThreatSubnet sub = threat_subnet(net, "T");
  CHECK(sub.nodes == std::vector<PlaceId>{"A", "B"});
  CHECK(sub.paths.size() == 1);
}

TEST_CASE("attack paths on the smart-home net") {
  const ScpnNet net = scenario_net(kScenario1);
  const auto n2_n6 = enumerate_attack_paths(net, "T1", "N2", "N6");
  REQUIRE(n2_n6.size() == 1);
  CHECK(n2_n6[0].to_string() == "N2->N3->N6");
  CHECK(n2_n6[0].connections.size() == 2);
  CHECK(enumerate_attack_paths(net, "T1", "N1", "N6").empty());
  const auto self = enumerate_attack_paths(net, "T1", "N3", "N3");
  REQUIRE(self.size() == 1);
  CHECK(self[0].nodes == std::vector<PlaceId>{"N3"});
  CHECK(self[0].connections.empty());
  // N4 is outside the subnet.
  CHECK(enumerate_attack_paths(net, "T1", "N2", "N4").empty());
}

TEST_CASE("attack paths agree with brute force on random digraphs") {
  gen::Engine rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const ScpnNet net = gen::random_net(rng, gen::NetShape{.max_nodes = 6, .max_paths = 20, .vulnerable_p = 0.8, .infected_p = 0.3});
    for (const auto& s : net.places()) {
      for (const auto& t : net.places()) {
        const auto got = enumerate_attack_paths(net, "T", s.id(), t.id());
        const auto want = oracle::attack_paths(net, "T", s.id(), t.id());
        REQUIRE(node_lists(got) == want);
        for (const auto& p : got) {
          // Simple, consecutive connections, entry and target at the ends.
          std::vector<std::string> sorted = p.nodes;
          std::sort(sorted.begin(), sorted.end());
          CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
          CHECK(p.connections.size() + 1 == p.nodes.size());
          for (std::size_t i = 0; i < p.connections.size(); ++i) {
            const auto& c = net.connections()[p.connections[i]];
            CHECK(c.source == p.nodes[i]);
            CHECK(c.target == p.nodes[i + 1]);
          }
        }
        CHECK(std::is_sorted(got.begin(), got.end()));
      }
    }
  }
}

TEST_CASE("adding a connection never removes attack paths") {
  gen::Engine rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const ScpnNet net = gen::random_net(rng, gen::NetShape{.max_nodes = 5, .max_paths = 6, .vulnerable_p = 1.0, .infected_p = 0.3});
    std::vector<Asset> assets;
    for (const auto& p : net.places()) assets.push_back(p.asset);
    std::vector<Connection> more = net.connections();
    [&] {
      for (const auto& a : assets) {
        for (const auto& b : assets) {
          if (a.id != b.id && !net.find_connection(a.id, b.id)) {
            more.push_back({a.id, b.id, 1, 1});
            return;
          }
        }
      }
    }();
    const ScpnNet bigger = build_net(assets, more, net.threats(), {});
    for (const auto& s : net.places()) {
      for (const auto& t : net.places()) {
        const auto before = enumerate_attack_paths(net, "T", s.id(), t.id());
        const auto after = enumerate_attack_paths(bigger, "T", s.id(), t.id());
        for (const auto& p : before) CHECK(std::binary_search(after.begin(), after.end(), p));
      }
    }
  }
}

TEST_CASE("fire_step") {
  const ScpnNet net = scenario_net(kScenario1);

  SUBCASE("is deterministic for a fixed seed and step") {
    CHECK(fire_step(net, 42, 3) == fire_step(net, 42, 3));
  }
  SUBCASE("keeps the source token") {
    for (std::uint64_t step = 0; step < 20; ++step) CHECK(fire_step(net, 5, step).place("N2").tokens_of("T1") >= 1);
  }
  SUBCASE("certain transitions always deposit and tokens saturate") {
    ScpnNet sure = build_net({asset("A", 1), asset("B", 1, 5.0)}, {{"A", "B", 1, 5}}, {{"T", "red"}}, {{"T", {"A"}}});
    for (int step = 0; step < 5; ++step) sure = fire_step(sure, 1, static_cast<std::uint64_t>(step));
    CHECK(sure.place("B").tokens_of("T") == kTokenCap);
    CHECK(sure.place("A").tokens_of("T") == 1);
  }
  SUBCASE("without tokens nothing fires") {
    const ScpnNet clean = net.with_tokens("N2", "T1", 0);
    for (std::uint64_t step = 0; step < 10; ++step) CHECK(fire_step(clean, 9, step) == clean);
  }
  SUBCASE("only enabled transitions move tokens") {
    const ScpnNet next = fire_step(net, 42, 0);
    // Only N2 is infected, so only N1 and N3 can change.
    CHECK(next.place("N5").tokens_of("T1") == 0);
    CHECK(next.place("N6").tokens_of("T1") == 0);
    CHECK(next.place("N4").tokens_of("T1") == 0);
  }
}

TEST_CASE("FiringDraws are uniform in [0, 1) and keyed by seed and stream") {
  FiringDraws a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  double sum = 0.0;
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 10000; ++i) {
    const double x = a.next();
    CHECK(x == b.next());
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    differs_stream = differs_stream || x != c.next();
    differs_seed = differs_seed || x != d.next();
    sum += x;
  }
  CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.02));
  CHECK(differs_stream);
  CHECK(differs_seed);
}

TEST_CASE("with_tokens clamps to the cap") {
  const ScpnNet net = scenario_net(kScenario1);
  CHECK(net.with_tokens("N3", "T1", 9).place("N3").tokens_of("T1") == kTokenCap);
  CHECK(net.with_tokens("N3", "T1", -1).place("N3").tokens_of("T1") == 0);
  CHECK_THROWS_AS(net.with_tokens("N9", "T1", 1), ModelError);
  CHECK_THROWS_AS(net.with_tokens("N3", "T9", 1), ModelError);
}
