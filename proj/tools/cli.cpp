#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scpn/error.hpp"
#include "scpn/scenario.hpp"
#include "scpn/ssa.hpp"

#ifndef SCPN_DEFAULT_FIXTURES_DIR
#define SCPN_DEFAULT_FIXTURES_DIR "data"
#endif

namespace scpn::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--horizon", o.horizon, "Decision epochs H")->check(CLI::Range(1, 1000));
  cmd->add_option("--discount", o.discount, "Discount factor")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double v = 0.0;
            if (!CLI::detail::lexical_cast(s, v) || !(v >= 0.0 && v < 1.0)) return "Value " + s + " not in range [0, 1)";
            return {};
          },
          "FLOAT in [0, 1)", "UnitInterval"));
  cmd->add_option("--radix", o.radix, "Aggregation radix B")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double v = 0.0;
            if (!CLI::detail::lexical_cast(s, v) || !(v > 1.0) || !std::isfinite(v))
              return "Value " + s + " not in range (1, inf)";
            return {};
          },
          "FLOAT in (1, inf)", "Radix"));
  cmd->add_option("--mode", o.mode, "Rollout mode")->check(CLI::IsMember({"expectation", "montecarlo"}));
  cmd->add_option("--trials", o.trials, "Monte-Carlo rollouts")->check(CLI::Range(1, 1000000));
  cmd->add_option("--seed", o.seed, "Monte-Carlo seed")->check(CLI::NonNegativeNumber);
}

void add_out(CLI::App* cmd, std::string& out) {
  cmd->add_option("--out", out, "Write output to this file instead of standard output");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIo, "cannot read " + path.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Failure{kIo, "cannot read " + path.string()};
  return ss.str();
}

std::filesystem::path fixtures_dir() {
  if (const char* env = std::getenv(kFixturesEnv); env != nullptr && *env != '\0') return env;
  return SCPN_DEFAULT_FIXTURES_DIR;
}

ScenarioDoc parse_or_fail(const std::string& text, const std::string& origin) {
  ParseOutcome parsed = parse_scenario(text);
  if (!parsed.ok()) {
    std::string msg = origin + ": " + parsed.errors.front().to_string();
    if (parsed.errors.size() > 1) msg += " (+" + std::to_string(parsed.errors.size() - 1) + " more)";
    throw Failure{kValidation, msg};
  }
  return std::move(*parsed.doc);
}

// A reference is a path to a scenario file or the name of a bundled fixture.
ScenarioDoc load_scenario(const std::string& ref) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) return parse_or_fail(read_file(ref), ref);
  const auto bundled = fixtures_dir() / (ref + ".yaml");
  if (std::filesystem::is_regular_file(bundled, ec)) return parse_or_fail(read_file(bundled), bundled.string());
  if (auto doc = builtin_fixture(ref)) return *doc;
  throw Failure{kValidation, "unknown scenario '" + ref + "': no such file and no fixture of that name in " +
                                 fixtures_dir().string()};
}

void apply(const Overrides& o, ScenarioDoc& doc) {
  if (o.horizon) doc.game.horizon = *o.horizon;
  if (o.discount) doc.game.discount = *o.discount;
  if (o.radix) doc.ssa.radix = *o.radix;
  if (o.mode) doc.ssa.mode = *o.mode == "montecarlo" ? RolloutMode::MonteCarlo : RolloutMode::Expectation;
  if (o.trials) doc.ssa.trials = *o.trials;
  if (o.seed) doc.ssa.seed = *o.seed;
}

void emit(const Invocation& inv, const std::string& text, std::ostream& out) {
  if (inv.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(inv.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure{kIo, "cannot open " + inv.out + " for writing"};
  file << text;
  file.flush();
  if (!file) throw Failure{kIo, "failed writing " + inv.out};
}

SituationSeries simulate(const ScenarioDoc& doc) {
  return situation_series(to_net(doc), doc.game, doc.ssa, doc.id);
}

int cmd_simulate(const Invocation& inv, std::ostream& out) {
  ScenarioDoc doc = load_scenario(inv.scenarios.at(0));
  apply(inv.overrides, doc);
  emit(inv, to_csv(simulate(doc)), out);
  return kOk;
}

int cmd_paths(const Invocation& inv, std::ostream& out) {
  const ScenarioDoc doc = load_scenario(inv.scenarios.at(0));
  const ScpnNet net = to_net(doc);
  std::string threat = inv.threat;
  if (threat.empty()) threat = net.threats().empty() ? "" : net.threats().front().id;
  std::string text;
  const auto paths = enumerate_attack_paths(net, threat, inv.entry, inv.target);
  for (const auto& p : paths) text += p.to_string() + "\n";
  text += "count: " + std::to_string(paths.size()) + "\n";
  emit(inv, text, out);
  return kOk;
}

int cmd_compare(const Invocation& inv, std::ostream& out) {
  ScenarioDoc a = load_scenario(inv.scenarios.at(0));
  ScenarioDoc b = load_scenario(inv.scenarios.at(1));
  apply(inv.overrides, a);
  apply(inv.overrides, b);
  if (a.game.horizon != b.game.horizon)
    throw Failure{kValidation, "HorizonMismatch: " + a.id + " uses H=" + std::to_string(a.game.horizon) + ", " +
                                   b.id + " uses H=" + std::to_string(b.game.horizon)};
  emit(inv, compare(simulate(a), simulate(b)).to_text(), out);
  return kOk;
}

int cmd_validate(const Invocation& inv, std::ostream& out, std::ostream& err) {
  int code = kOk;
  std::string text;
  for (const auto& ref : inv.scenarios) {
    std::string body;
    std::error_code ec;
    if (std::filesystem::is_regular_file(ref, ec)) {
      body = read_file(ref);
    } else {
      try {
        body = serialize_scenario(load_scenario(ref));
      } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        code = std::max(code, f.code);
        continue;
      }
    }
    const ParseOutcome parsed = parse_scenario(body);
    if (parsed.ok()) {
      text += "ok: " + ref + " (" + parsed.doc->id + ")\n";
      continue;
    }
    code = std::max<int>(code, kValidation);
    for (const auto& e : parsed.errors) err << ref << ": " << e.to_string() << "\n";
  }
  emit(inv, text, out);
  return code;
}

int cmd_fixtures(const Invocation& inv, std::ostream& out) {
  if (!inv.show.empty()) {
    emit(inv, serialize_scenario(load_scenario(inv.show)), out);
    return kOk;
  }
  std::string text;
  for (const auto& doc : builtin_fixtures()) text += doc.id + "\t" + doc.description + "\n";
  emit(inv, text, out);
  return kOk;
}

}  // namespace

std::unique_ptr<CLI::App> make_app(Invocation& inv) {
  auto app = std::make_unique<CLI::App>("Security-situation simulator for IoT threat propagation", "scpn-ssa");
  app->require_subcommand(1);

  auto* simulate = app->add_subcommand("simulate", "Write the situation curve of a scenario as CSV");
  simulate->add_option("scenario", inv.scenarios, "Scenario file or fixture name")->required()->expected(1);
  add_overrides(simulate, inv.overrides);
  add_out(simulate, inv.out);

  auto* paths = app->add_subcommand("paths", "List simple attack paths between two nodes");
  paths->add_option("scenario", inv.scenarios, "Scenario file or fixture name")->required()->expected(1);
  paths->add_option("--threat", inv.threat, "Threat id (default: first threat)");
  paths->add_option("--entry", inv.entry, "Entry node id")->required();
  paths->add_option("--target", inv.target, "Target node id")->required();
  add_out(paths, inv.out);

  auto* compare = app->add_subcommand("compare", "Compare the situation curves of two scenarios");
  compare->add_option("scenarios", inv.scenarios, "Two scenario files or fixture names")->required()->expected(2);
  add_overrides(compare, inv.overrides);
  add_out(compare, inv.out);

  auto* validate = app->add_subcommand("validate", "Check scenario files and report every error");
  validate->add_option("scenarios", inv.scenarios, "Scenario files or fixture names")->required()->expected(1, -1);
  add_out(validate, inv.out);

  auto* fixtures = app->add_subcommand("fixtures", "List bundled scenarios, or print one");
  fixtures->add_option("--show", inv.show, "Print the named fixture as a scenario file");
  add_out(fixtures, inv.out);

  for (auto* sub : app->get_subcommands({})) {
    sub->callback([&inv, sub] { inv.command = sub->get_name(); });
  }
  return app;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  auto app = make_app(inv);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app->help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: RangeError: " << e.what() << "\n";
    return kValidation;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (inv.command == "simulate") return cmd_simulate(inv, out);
    if (inv.command == "paths") return cmd_paths(inv, out);
    if (inv.command == "compare") return cmd_compare(inv, out);
    if (inv.command == "validate") return cmd_validate(inv, out, err);
    if (inv.command == "fixtures") return cmd_fixtures(inv, out);
    err << "error: no command given\n";
    return kValidation;
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ModelError& e) {
    const bool range = e.code() == ErrorCode::InvalidValue || e.code() == ErrorCode::InvalidRadix;
    err << "error: " << (range ? "RangeError: " : "") << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace scpn::cli
