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


#include "qgame/protocol.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "qgame/angles.hpp"
#include "qgame/errors.hpp"

namespace qgame {
namespace {

void require_valid(const GameSpec& game) {
  const auto violations = validate(game);
  if (!violations.empty()) {
    throw ValidationError("invalid game: " + violations.front().message);
  }
}

}  // namespace

PayoffEvaluator::PayoffEvaluator(const GameSpec& game)
    : n_(game.n_players), gamma_(game.gamma) {
  require_valid(game);
  const std::size_t dim = std::size_t{1} << n_;
  dense_.resize(dim * static_cast<std::size_t>(n_));
  min_ = std::numeric_limits<double>::infinity();
  max_ = -min_;
  for (std::size_t k = 0; k < dim; ++k) {
    const auto& row = game.table.entries.at(outcome_string(k, n_));
    std::copy(row.begin(), row.end(),
              dense_.begin() + static_cast<std::ptrdiff_t>(k * n_));
    for (double x : row) {
      min_ = std::min(min_, x);
      max_ = std::max(max_, x);
    }
  }
}

qcore::StateVector PayoffEvaluator::final_state(const Profile& profile) const {
  if (profile.size() != static_cast<std::size_t>(n_)) {
    throw DimensionError("profile has " + std::to_string(profile.size()) +
                         " strategies for a " + std::to_string(n_) +
                         "-player game");
  }
  std::vector<qcore::LocalOperator> ops;
  ops.reserve(profile.size());
  for (const auto& s : profile) ops.push_back(unitary_of(s));

  qcore::StateVector psi(n_);
  psi = qcore::entangling_gate_apply(psi, gamma_, false);
  psi = qcore::tensor_apply(psi, ops);
  return qcore::entangling_gate_apply(psi, gamma_, true);
}

PayoffVector PayoffEvaluator::payoffs(const Profile& profile) const {
  const auto probs = qcore::probabilities(final_state(profile));
  PayoffVector out(static_cast<std::size_t>(n_), 0.0);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    for (int p = 0; p < n_; ++p) out[p] += probs[k] * table(k, p);
  }
#ifdef QGAME_PAYOFF_BOUND_CHECKS
  const double slack = 1e-9 * std::max(1.0, std::max(-min_, max_));
  for (double x : out) {
    if (x < min_ - slack || x > max_ + slack) {
      throw std::logic_error("expected payoff outside the table range");
    }
  }
#endif
  return out;
}

double PayoffEvaluator::payoff(const Profile& profile, int player) const {
  if (player < 0 || player >= n_) {
    throw IndexError("player " + std::to_string(player) + " out of range");
  }
  const auto probs = qcore::probabilities(final_state(profile));
  double v = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) v += probs[k] * table(k, player);
  return v;
}

qcore::StateVector final_state(const GameSpec& game, const Profile& profile) {
  return PayoffEvaluator(game).final_state(profile);
}

PayoffVector expected_payoffs(const GameSpec& game, const Profile& profile) {
  return PayoffEvaluator(game).payoffs(profile);
}

PayoffVector classical_payoff(const GameSpec& game, std::string_view outcome) {
  if (outcome.size() != static_cast<std::size_t>(game.n_players)) {
    throw LookupError("outcome '" + std::string(outcome) + "' is not a " +
                      std::to_string(game.n_players) + "-bit string");
  }
  const auto it = game.table.entries.find(std::string(outcome));
  if (it == game.table.entries.end()) {
    throw LookupError("unknown outcome '" + std::string(outcome) + "'");
  }
  return it->second;
}

PayoffVector classical_mixed_payoffs(const GameSpec& game,
                                     std::span<const double> coop_probs) {
  const PayoffEvaluator eval(game);
  const int n = eval.n_players();
  if (coop_probs.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("expected " + std::to_string(n) +
                         " cooperation probabilities, got " +
                         std::to_string(coop_probs.size()));
  }
  for (double q : coop_probs) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw DomainError("probability " + format_12g(q) + " outside [0, 1]");
    }
  }
  PayoffVector out(static_cast<std::size_t>(n), 0.0);
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t k = 0; k < dim; ++k) {
    double w = 1.0;
    for (int p = 0; p < n; ++p) {
      w *= qcore::outcome_bit(k, p, n) ? 1.0 - coop_probs[p] : coop_probs[p];
    }
    for (int p = 0; p < n; ++p) out[p] += w * eval.table(k, p);
  }
  return out;
}

}  // namespace qgame
