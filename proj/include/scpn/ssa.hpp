#pragma once

// Security-situation curves: per-threat worst-case values from the game solver,
// combined across threats by a log-radix sum and min-max normalized per series.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scpn/game.hpp"
#include "scpn/net.hpp"

namespace scpn {

enum class RolloutMode { Expectation, MonteCarlo };

struct SsaConfig {
  double radix = 10.0;  // > 1
  RolloutMode mode = RolloutMode::Expectation;
  int trials = 200;  // Monte-Carlo only, >= 1
  std::uint64_t seed = 42;

  void validate() const;
  bool operator==(const SsaConfig&) const = default;
};

// log_B(sum_i B^x_i), evaluated around the largest exponent so that it stays
// finite for any finite inputs. Throws EmptyThreatSet, InvalidRadix.
double aggregate(const std::map<ThreatId, double>& per_threat, double radix);

// (x - min) / (max - min); a constant series maps to all zeros.
std::vector<double> normalize(std::span<const double> series);

struct SituationPoint {
  int tau = 0;
  std::map<ThreatId, double> per_threat;
  double aggregate = 0.0;
  double normalized = 0.0;
};

struct SituationSeries {
  std::string scenario_id;
  double radix = 10.0;
  std::vector<SituationPoint> points;  // tau = 0..H

  std::vector<ThreatId> threats() const;
  std::vector<double> aggregates() const;
  std::vector<double> normalized() const;
};

// Rolls every threat forward for cfg.horizon epochs along the solved policy,
// re-solving with the full horizon at each epoch.
//
// Expectation mode is deterministic: the defender's action is applied and the
// attacked target becomes infected once the cumulative success probability of
// the attempts made on that path reaches 0.5 (first attempt for paths with
// firing probability >= 0.5). Monte-Carlo mode samples each attempt with seeded
// draws and reports the per-threat mean over `trials` rollouts.
SituationSeries situation_series(const ScpnNet& net, const GameConfig& cfg, const SsaConfig& ssa,
                                 std::string scenario_id = {});

// Header `tau,<threat>...,aggregate,normalized`, one row per epoch, six decimals.
std::string to_csv(const SituationSeries& series);

struct SeriesSummary {
  std::string scenario_id;
  double peak = 0.0;  // un-normalized maximum of the aggregate column
  // First epoch at which the curve reaches the midpoint of its own range; empty
  // for a constant series, which never rises.
  std::optional<int> time_to_half_peak;
  double area = 0.0;  // trapezoidal area under the un-normalized aggregate
};

SeriesSummary summarize(const SituationSeries& series);

struct ComparisonReport {
  SeriesSummary a;
  SeriesSummary b;
  std::string faster;   // scenario id, or empty when tied
  std::string higher;   // scenario id, or empty when tied
  std::string verdict;  // "equal" or "<id> faster, <id> higher impact"

  std::string to_text() const;
};

// Throws HorizonMismatch when the series differ in length.
ComparisonReport compare(const SituationSeries& a, const SituationSeries& b);

}  // namespace scpn
