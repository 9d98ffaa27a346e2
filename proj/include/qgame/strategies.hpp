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


#ifndef QGAME_STRATEGIES_HPP_
#define QGAME_STRATEGIES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "qgame/qcore.hpp"

namespace qgame {

// A point of the two-parameter strategy family, theta in [0, pi] and
// phi in [0, pi/2]. Bounds are closed and never wrapped.
struct StrategyParams {
  double theta = 0.0;
  double phi = 0.0;

  bool operator==(const StrategyParams&) const = default;
};

// One strategy per player, in register order.
using Profile = std::vector<StrategyParams>;

enum class NamedStrategy { kCooperate, kDefect, kQY };

bool in_domain(const StrategyParams& params);
// Throws DomainError when `params` is outside the rectangle.
void check_domain(const StrategyParams& params);

//   U(theta, phi) = [[ cos(theta/2),            e^{i phi} sin(theta/2) ],
//                    [ -e^{-i phi} sin(theta/2), cos(theta/2)          ]]
qcore::LocalOperator unitary_of(const StrategyParams& params);

// COOPERATE = U(0,0) = I, DEFECT = U(pi,pi/2) = i sigma_x,
// QY = U(pi,0) = i sigma_y.
StrategyParams named(NamedStrategy name);
// Accepts "COOPERATE"/"C", "DEFECT"/"D", "QY". Throws LookupError otherwise.
StrategyParams named(std::string_view name);

// Probability of Cooperate in the classical mixed strategy that U(theta, phi)
// reproduces in the unentangled game: cos^2(theta/2).
double classical_mix_prob(const StrategyParams& params);

// Strategy token syntax: C, D, QY, or U(<theta>,<phi>) where each angle is a
// decimal or pi, pi/2, pi/4. Malformed text throws FormatError; an angle
// outside the domain throws DomainError.
StrategyParams parse_strategy(std::string_view token);

// C, D or QY when `params` is exactly a named point, else U(theta,phi) with
// shortest round-trip reals.
std::string to_token(const StrategyParams& params);

}  // namespace qgame

#endif  // QGAME_STRATEGIES_HPP_
