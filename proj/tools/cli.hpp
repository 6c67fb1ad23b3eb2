#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace scpn::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2 };

inline constexpr const char* kFixturesEnv = "SCPN_FIXTURES_DIR";

struct Overrides {
  std::optional<int> horizon;
  std::optional<double> discount;
  std::optional<double> radix;
  std::optional<std::string> mode;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
};

struct Invocation {
  std::string command;
  std::vector<std::string> scenarios;
  Overrides overrides;
  std::string threat;
  std::string entry;
  std::string target;
  std::string show;
  std::string out;  // empty: standard output
};

// Builds the argument parser, binding every option into `inv`.
std::unique_ptr<CLI::App> make_app(Invocation& inv);

// Parses `args` (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scpn::cli
