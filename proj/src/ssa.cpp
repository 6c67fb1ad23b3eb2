#include "scpn/ssa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "scpn/error.hpp"

namespace scpn {

void SsaConfig::validate() const {
  if (!(radix > 1.0) || !std::isfinite(radix))
    throw ModelError(ErrorCode::InvalidRadix, "radix", "must be a finite value > 1");
  if (trials < 1) throw ModelError(ErrorCode::InvalidValue, "trials", "must be >= 1");
}

double aggregate(const std::map<ThreatId, double>& per_threat, double radix) {
  if (per_threat.empty()) throw ModelError(ErrorCode::EmptyThreatSet, "");
  if (!(radix > 1.0) || !std::isfinite(radix))
    throw ModelError(ErrorCode::InvalidRadix, std::to_string(radix));
  double top = -INFINITY;
  for (const auto& [_, v] : per_threat) top = std::max(top, v);
  const double log_radix = std::log(radix);
  double sum = 0.0;
  for (const auto& [_, v] : per_threat) sum += std::exp((v - top) * log_radix);
  return top + std::log(sum) / log_radix;
}

std::vector<double> normalize(std::span<const double> series) {
  std::vector<double> out(series.size(), 0.0);
  if (series.empty()) return out;
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < series.size(); ++i) out[i] = (series[i] - *lo) / range;
  return out;
}

std::vector<ThreatId> SituationSeries::threats() const {
  std::vector<ThreatId> ids;
  if (!points.empty()) {
    for (const auto& [id, _] : points.front().per_threat) ids.push_back(id);
  }
  return ids;
}

std::vector<double> SituationSeries::aggregates() const {
  std::vector<double> v;
  for (const auto& p : points) v.push_back(p.aggregate);
  return v;
}

std::vector<double> SituationSeries::normalized() const {
  std::vector<double> v;
  for (const auto& p : points) v.push_back(p.normalized);
  return v;
}

namespace {

// Median-time rule: after k attempts at probability p the target is considered
// infected once 1 - (1 - p)^k >= 1/2.
bool expected_infection(double prob, int attempts) {
  return 1.0 - std::pow(1.0 - prob, attempts) >= 0.5;
}

// One rollout of a single threat. `draws` is null in expectation mode.
std::vector<double> rollout(GameSolver& solver, GameState state, FiringDraws* draws) {
  const int horizon = solver.config().horizon;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(horizon) + 1);
  std::vector<int> attempts(state.paths.size(), 0);

  for (int tau = 0; tau <= horizon; ++tau) {
    const Decision d = solver.decide(state, horizon);
    values.push_back(d.value);
    if (tau == horizon) break;

    GameState next = apply_defender(state, d.defender);
    next.tau = tau + 1;
    const double u = draws != nullptr ? draws->next() : 0.0;
    if (d.attacker.kind == AttackerAction::Kind::Propagate && is_legal(next, d.attacker)) {
      const PathState& p = next.paths[d.attacker.path];
      const double prob = p.firing_probability();
      ++attempts[d.attacker.path];
      const bool fired = draws != nullptr ? u < prob : expected_infection(prob, attempts[d.attacker.path]);
      if (fired) next.nodes[p.target].infected = true;
    }
    state = std::move(next);
  }
  return values;
}

}  // namespace

SituationSeries situation_series(const ScpnNet& net, const GameConfig& cfg, const SsaConfig& ssa,
                                 std::string scenario_id) {
  cfg.validate();
  ssa.validate();
  if (net.threats().empty()) throw ModelError(ErrorCode::EmptyThreatSet, scenario_id);

  const std::size_t epochs = static_cast<std::size_t>(cfg.horizon) + 1;
  std::map<ThreatId, std::vector<double>> curves;
  std::uint64_t threat_index = 0;
  for (const auto& threat : net.threats()) {
    GameSolver solver(cfg);
    const GameState start = make_game_state(net, threat.id);
    if (ssa.mode == RolloutMode::Expectation) {
      curves[threat.id] = rollout(solver, start, nullptr);
    } else {
      std::vector<double> mean(epochs, 0.0);
      const auto n_threats = static_cast<std::uint64_t>(net.threats().size());
      for (int trial = 0; trial < ssa.trials; ++trial) {
        FiringDraws draws(ssa.seed, static_cast<std::uint64_t>(trial) * n_threats + threat_index);
        const auto values = rollout(solver, start, &draws);
        for (std::size_t i = 0; i < epochs; ++i) mean[i] += values[i];
      }
      for (double& v : mean) v /= ssa.trials;
      curves[threat.id] = std::move(mean);
    }
    ++threat_index;
  }

  SituationSeries series;
  series.scenario_id = std::move(scenario_id);
  series.radix = ssa.radix;
  for (std::size_t i = 0; i < epochs; ++i) {
    SituationPoint point;
    point.tau = static_cast<int>(i);
    for (const auto& [id, curve] : curves) point.per_threat[id] = curve[i];
    point.aggregate = aggregate(point.per_threat, ssa.radix);
    series.points.push_back(std::move(point));
  }
  const auto norm = normalize(series.aggregates());
  for (std::size_t i = 0; i < epochs; ++i) series.points[i].normalized = norm[i];
  return series;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string to_csv(const SituationSeries& series) {
  std::string out = "tau";
  const auto threats = series.threats();
  for (const auto& t : threats) out += "," + t;
  out += ",aggregate,normalized\n";
  for (const auto& p : series.points) {
    out += std::to_string(p.tau);
    for (const auto& t : threats) out += "," + fixed6(p.per_threat.at(t));
    out += "," + fixed6(p.aggregate) + "," + fixed6(p.normalized) + "\n";
  }
  return out;
}

SeriesSummary summarize(const SituationSeries& series) {
  SeriesSummary s;
  s.scenario_id = series.scenario_id;
  const auto values = series.aggregates();
  if (values.empty()) return s;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.peak = *hi;
  if (*hi > *lo) {
    const double half = *lo + 0.5 * (*hi - *lo);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] >= half) {
        s.time_to_half_peak = series.points[i].tau;
        break;
      }
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) s.area += 0.5 * (values[i - 1] + values[i]);
  return s;
}

namespace {

// Never-rising curves rank after any curve that does rise.
bool strictly_faster(const std::optional<int>& x, const std::optional<int>& y) {
  if (!x) return false;
  if (!y) return true;
  return *x < *y;
}

std::string half_peak_text(const std::optional<int>& t) { return t ? std::to_string(*t) : "never"; }

}  // namespace

ComparisonReport compare(const SituationSeries& a, const SituationSeries& b) {
  if (a.points.size() != b.points.size())
    throw ModelError(ErrorCode::HorizonMismatch, a.scenario_id + "/" + b.scenario_id,
                     std::to_string(a.points.size()) + " vs " + std::to_string(b.points.size()) + " epochs");
  ComparisonReport r;
  r.a = summarize(a);
  r.b = summarize(b);
  const std::string name_a = a.scenario_id.empty() ? "a" : a.scenario_id;
  const std::string name_b = b.scenario_id.empty() ? "b" : b.scenario_id;

  if (strictly_faster(r.a.time_to_half_peak, r.b.time_to_half_peak))
    r.faster = name_a;
  else if (strictly_faster(r.b.time_to_half_peak, r.a.time_to_half_peak))
    r.faster = name_b;
  if (r.a.peak > r.b.peak)
    r.higher = name_a;
  else if (r.b.peak > r.a.peak)
    r.higher = name_b;

  if (r.faster.empty() && r.higher.empty()) {
    r.verdict = "equal";
  } else {
    r.verdict = (r.faster.empty() ? std::string("equally fast") : r.faster + " faster") + ", " +
                (r.higher.empty() ? std::string("equal impact") : r.higher + " higher impact");
  }
  return r;
}

std::string ComparisonReport::to_text() const {
  std::string out;
  auto line = [&](const SeriesSummary& s) {
    out += s.scenario_id + ": peak=" + fixed6(s.peak) + " time_to_half_peak=" + half_peak_text(s.time_to_half_peak) +
           " auc=" + fixed6(s.area) + "\n";
  };
  line(a);
  line(b);
  out += "delta: peak=" + fixed6(b.peak - a.peak) + " auc=" + fixed6(b.area - a.area) + "\n";
  out += "verdict: " + verdict + "\n";
  return out;
}

}  // namespace scpn
