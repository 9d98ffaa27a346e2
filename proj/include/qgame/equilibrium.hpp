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


#ifndef QGAME_EQUILIBRIUM_HPP_
#define QGAME_EQUILIBRIUM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qgame/gamespec.hpp"
#include "qgame/protocol.hpp"
#include "qgame/strategies.hpp"

namespace qgame {

// Grid-plus-refinement search over the (theta, phi) rectangle. The coarse
// pass covers the whole domain (corners included); each refinement round
// re-grids a window around the incumbent whose extent is the full range
// scaled by refine_shrink^round.
struct SearchConfig {
  int theta_points = 101;
  int phi_points = 51;
  int refine_rounds = 3;
  double refine_shrink = 0.2;
};

inline constexpr double kDefaultEpsilon = 1e-6;

// Throws DomainError when a grid has fewer than two points per axis, the
// round count is negative, or the shrink factor is outside (0, 1).
void check_config(const SearchConfig& config);

struct BestResponseResult {
  StrategyParams best_params;
  double best_payoff = 0.0;
  // best_payoff minus the payoff of the player's current strategy. The
  // current strategy is always a candidate, so gap >= 0.
  double gap = 0.0;
};

struct NashReport {
  bool is_nash = false;
  double epsilon = 0.0;
  std::vector<BestResponseResult> per_player;

  double max_gap() const;
};

// Scan order is theta ascending (outer), phi ascending (inner); the first
// candidate reaching the maximum wins ties.
BestResponseResult best_response(const PayoffEvaluator& eval,
                                 const Profile& profile, int player,
                                 const SearchConfig& config = {});
BestResponseResult best_response(const GameSpec& game, const Profile& profile,
                                 int player, const SearchConfig& config = {});

// is_nash holds exactly when every player's best-response gap is <= epsilon.
NashReport epsilon_nash_check(const GameSpec& game, const Profile& profile,
                              double epsilon = kDefaultEpsilon,
                              const SearchConfig& config = {});

// Every profile over candidates^N from which no player gains more than
// epsilon by switching to another member of `candidates`. Deviations are
// restricted to the set. Profiles are listed in lexicographic candidate-index
// order with player 0 varying slowest.
std::vector<Profile> enumerate_equilibria(
    const GameSpec& game, std::span<const StrategyParams> candidates,
    double epsilon = kDefaultEpsilon);

struct ParetoReport {
  // False when some sampled profile weakly improves every player and
  // strictly improves at least one. Relative to the sampled grid only.
  bool optimal = true;
  std::optional<Profile> dominated_by;
  std::size_t profiles_checked = 0;
};

inline constexpr std::size_t kMaxParetoProfiles = 4'000'000;

// Samples every profile on the product of per-player theta_points x
// phi_points grids (refinement settings are ignored). Throws DomainError if
// the product exceeds kMaxParetoProfiles.
ParetoReport pareto_check(const GameSpec& game, const Profile& profile,
                          const SearchConfig& config);

// A grid small enough for pareto_check on three players.
SearchConfig pareto_grid();

struct SweepPoint {
  double gamma;
  PayoffVector payoffs;
};

// expected payoffs of `profile` for each gamma in input order.
std::vector<SweepPoint> payoff_sweep(const PayoffTable& table,
                                     const Profile& profile,
                                     std::span<const double> gamma_values);

// `points` (>= 2) values spread uniformly over [0, pi/2], ends exact.
std::vector<double> uniform_gamma_nodes(int points);

}  // namespace qgame

#endif  // QGAME_EQUILIBRIUM_HPP_
