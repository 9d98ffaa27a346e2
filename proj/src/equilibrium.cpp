// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qgame/angles.hpp"
#include "qgame/errors.hpp"

namespace qgame {
namespace {

// Node i of `points` uniform nodes on [lo, hi]; the last node is hi exactly.
double node(double lo, double hi, int i, int points) {
  if (i == points - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (points - 1);
}

bool scan_precedes(const StrategyParams& a, const StrategyParams& b) {
  return a.theta < b.theta || (a.theta == b.theta && a.phi < b.phi);
}

// Tracks the incumbent; only strict improvements replace it.
struct Incumbent {
  StrategyParams params{};
  double payoff = -std::numeric_limits<double>::infinity();

  void offer(const StrategyParams& p, double v) {
    if (v > payoff) {
      params = p;
      payoff = v;
    }
  }
};

bool weakly_dominates(const PayoffVector& a, const PayoffVector& b) {
  constexpr double kTol = 1e-9;
  bool strict = false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] < b[p] - kTol) return false;
    if (a[p] > b[p] + kTol) strict = true;
  }
  return strict;
}

}  // namespace

void check_config(const SearchConfig& c) {
  if (c.theta_points < 2 || c.phi_points < 2) {
    throw DomainError("search grid needs at least 2 points per axis");
  }
  if (c.refine_rounds < 0) {
    throw DomainError("refine_rounds must be nonnegative");
  }
  if (!(c.refine_shrink > 0.0 && c.refine_shrink < 1.0)) {
    throw DomainError("refine_shrink " + format_12g(c.refine_shrink) +
                      " outside (0, 1)");
  }
}

double NashReport::max_gap() const {
  double g = -std::numeric_limits<double>::infinity();
  for (const auto& r : per_player) g = std::max(g, r.gap);
  return g;
}

BestResponseResult best_response(const PayoffEvaluator& eval,
                                 const Profile& profile, int player,
                                 const SearchConfig& config) {
  check_config(config);
  if (player < 0 || player >= eval.n_players()) {
    throw IndexError("player " + std::to_string(player) + " out of range for " +
                     std::to_string(eval.n_players()) + " players");
  }
  if (profile.size() != static_cast<std::size_t>(eval.n_players())) {
    throw DimensionError("profile length does not match player count");
  }
  const StrategyParams current = profile[player];
  check_domain(current);

  Profile trial = profile;
  auto value = [&](const StrategyParams& s) {
    trial[player] = s;
    return eval.payoff(trial, player);
  };
  const double current_payoff = value(current);

  Incumbent best;
  bool current_seen = false;
  auto scan = [&](double t_lo, double t_hi, double p_lo, double p_hi,
                  bool with_current) {
    for (int i = 0; i < config.theta_points; ++i) {
      const double theta = node(t_lo, t_hi, i, config.theta_points);
      for (int j = 0; j < config.phi_points; ++j) {
        const StrategyParams s{theta, node(p_lo, p_hi, j, config.phi_points)};
        if (with_current && !current_seen && scan_precedes(current, s)) {
          best.offer(current, current_payoff);
          current_seen = true;
        }
        best.offer(s, value(s));
      }
    }
    if (with_current && !current_seen) {
      best.offer(current, current_payoff);
      current_seen = true;
    }
  };

  scan(0.0, kPi, 0.0, kHalfPi, true);
  double scale = 1.0;
  for (int r = 0; r < config.refine_rounds; ++r) {
    scale *= config.refine_shrink;
    const double ht = 0.5 * kPi * scale;
    const double hp = 0.5 * kHalfPi * scale;
    const StrategyParams c = best.params;
    scan(std::max(0.0, c.theta - ht), std::min(kPi, c.theta + ht),
         std::max(0.0, c.phi - hp), std::min(kHalfPi, c.phi + hp), false);
  }
  return {best.params, best.payoff, best.payoff - current_payoff};
}

BestResponseResult best_response(const GameSpec& game, const Profile& profile,
                                 int player, const SearchConfig& config) {
  return best_response(PayoffEvaluator(game), profile, player, config);
}

NashReport epsilon_nash_check(const GameSpec& game, const Profile& profile,
                              double epsilon, const SearchConfig& config) {
  if (!(epsilon >= 0.0)) {
    throw DomainError("epsilon must be nonnegative");
  }
  const PayoffEvaluator eval(game);
  NashReport report;
  report.epsilon = epsilon;
  for (int p = 0; p < eval.n_players(); ++p) {
    report.per_player.push_back(best_response(eval, profile, p, config));
  }
  report.is_nash = report.max_gap() <= epsilon;
  return report;
}

std::vector<Profile> enumerate_equilibria(
    const GameSpec& game, std::span<const StrategyParams> candidates,
    double epsilon) {
  if (candidates.empty()) throw DomainError("candidate set is empty");
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be nonnegative");
  for (const auto& c : candidates) check_domain(c);

  const PayoffEvaluator eval(game);
  const int n = eval.n_players();
  const std::size_t m = candidates.size();
  std::size_t count = 1;
  for (int p = 0; p < n; ++p) count *= m;

  // Profile index: base-m digits, player 0 most significant.
  std::vector<std::size_t> place(static_cast<std::size_t>(n));
  for (int p = n - 1, w = 1; p >= 0; --p, w *= static_cast<int>(m)) {
    place[p] = static_cast<std::size_t>(w);
  }
  auto decode = [&](std::size_t idx) {
    Profile prof(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) prof[p] = candidates[(idx / place[p]) % m];
    return prof;
  };

  std::vector<PayoffVector> table(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    table[idx] = eval.payoffs(decode(idx));
  }

  std::vector<Profile> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    bool stable = true;
    for (int p = 0; p < n && stable; ++p) {
      const std::size_t digit = (idx / place[p]) % m;
      const std::size_t base = idx - digit * place[p];
      for (std::size_t alt = 0; alt < m; ++alt) {
        if (table[base + alt * place[p]][p] > table[idx][p] + epsilon) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(decode(idx));
  }
  return out;
}

SearchConfig pareto_grid() { return {9, 5, 0, 0.2}; }

ParetoReport pareto_check(const GameSpec& game, const Profile& profile,
                          const SearchConfig& config) {
  check_config(config);
  const PayoffEvaluator eval(game);
  const int n = eval.n_players();
  const PayoffVector reference = eval.payoffs(profile);

  std::vector<StrategyParams> grid;
  for (int i = 0; i < config.theta_points; ++i) {
    for (int j = 0; j < config.phi_points; ++j) {
      grid.push_back({node(0.0, kPi, i, config.theta_points),
                      node(0.0, kHalfPi, j, config.phi_points)});
    }
  }
  const std::size_t m = grid.size();
  std::size_t count = 1;
  for (int p = 0; p < n; ++p) {
    if (count > kMaxParetoProfiles / m) {
      throw DomainError("pareto grid has more than " +
                        std::to_string(kMaxParetoProfiles) + " profiles");
    }
    count *= m;
  }

  ParetoReport report;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  Profile trial(static_cast<std::size_t>(n), grid.front());
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (int p = 0; p < n; ++p) trial[p] = grid[digits[p]];
    ++report.profiles_checked;
    if (weakly_dominates(eval.payoffs(trial), reference)) {
      report.optimal = false;
      report.dominated_by = trial;
      return report;
    }
    for (int p = n - 1; p >= 0; --p) {
      if (++digits[p] < m) break;
      digits[p] = 0;
    }
  }
  return report;
}

std::vector<SweepPoint> payoff_sweep(const PayoffTable& table,
                                     const Profile& profile,
                                     std::span<const double> gamma_values) {
  for (double g : gamma_values) {
    if (!(g >= 0.0 && g <= kHalfPi)) {
      throw DomainError("gamma " + format_12g(g) + " outside [0, pi/2]");
    }
  }
  std::vector<SweepPoint> out;
  out.reserve(gamma_values.size());
  for (double g : gamma_values) {
    const PayoffEvaluator eval(GameSpec{table.n_players, g, table});
    out.push_back({g, eval.payoffs(profile)});
  }
  return out;
}

std::vector<double> uniform_gamma_nodes(int points) {
  if (points < 2) throw DomainError("need at least 2 gamma points");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[i] = node(0.0, kHalfPi, i, points);
  return out;
}

}  // namespace qgame
