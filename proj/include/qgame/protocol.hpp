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


#ifndef QGAME_PROTOCOL_HPP_
#define QGAME_PROTOCOL_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "qgame/gamespec.hpp"
#include "qgame/qcore.hpp"
#include "qgame/strategies.hpp"

namespace qgame {

// Expected payoff per player, in register order.
using PayoffVector = std::vector<double>;

// A validated game prepared for repeated evaluation: the payoff table is laid
// out densely by outcome index. Construction throws ValidationError listing
// the first violation when `game` is not valid.
class PayoffEvaluator {
 public:
  explicit PayoffEvaluator(const GameSpec& game);

  int n_players() const { return n_; }
  double gamma() const { return gamma_; }

  // J^dagger (U_0 x ... x U_{n-1}) J |0...0>.
  qcore::StateVector final_state(const Profile& profile) const;
  PayoffVector payoffs(const Profile& profile) const;
  double payoff(const Profile& profile, int player) const;

  double min_payoff() const { return min_; }
  double max_payoff() const { return max_; }
  // payoff of `player` at outcome index k.
  double table(std::size_t k, int player) const {
    return dense_[k * static_cast<std::size_t>(n_) + player];
  }

 private:
  int n_;
  double gamma_;
  std::vector<double> dense_;
  double min_;
  double max_;
};

qcore::StateVector final_state(const GameSpec& game, const Profile& profile);

// sum over outcomes of P(outcome) * table[outcome][player].
PayoffVector expected_payoffs(const GameSpec& game, const Profile& profile);

// Direct lookup of a pure classical outcome. Throws LookupError when the
// outcome is not an N-bit string of the game.
PayoffVector classical_payoff(const GameSpec& game, std::string_view outcome);

// Expected table payoff when player p independently plays Cooperate with
// probability coop_probs[p] and Defect otherwise.
PayoffVector classical_mixed_payoffs(const GameSpec& game,
                                     std::span<const double> coop_probs);

}  // namespace qgame

#endif  // QGAME_PROTOCOL_HPP_
