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


#ifndef QGAME_GAMESPEC_HPP_
#define QGAME_GAMESPEC_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qgame {

// Outcome bitstrings are N characters of '0' (Cooperate) / '1' (Defect),
// player 0 first. Index form puts player 0 in the most significant bit.
std::string outcome_string(std::size_t index, int n_players);
// Throws FormatError for characters other than '0'/'1'.
std::size_t outcome_index(std::string_view bits);

// Per-outcome payoffs, one real per player, stored extensionally.
struct PayoffTable {
  int n_players = 0;
  std::map<std::string, std::vector<double>> entries;

  bool operator==(const PayoffTable&) const = default;
};

struct GameSpec {
  int n_players = 0;
  double gamma = 0.0;  // radians, [0, pi/2]
  PayoffTable table;

  bool operator==(const GameSpec&) const = default;
};

// The three-player Prisoner's Dilemma: all C -> 3 each, all D -> 1 each,
// a lone defector gets 5 against 2, a lone cooperator gets 0 against 4.
GameSpec prisoners_dilemma_3(double gamma);

struct Violation {
  enum class Kind {
    kPlayerCount,
    kGammaRange,
    kTableSize,
    kCompleteness,
    kBadOutcome,
    kPayoffArity,
    kNonFinite,
  };
  Kind kind;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

// All invariant violations of `spec`; empty when the spec is usable.
std::vector<Violation> validate(const GameSpec& spec);

// Parses the line-oriented game file format:
//
//   # comment
//   players = 3
//   gamma = pi/2
//   payoff 000 = 3 3 3
//   ...
//
// `players` must come before any payoff line; every outcome appears exactly
// once. Throws FormatError, CompletenessError or DomainError.
GameSpec parse_game_spec(std::string_view text);

// Inverse of parse_game_spec. Reals are written in shortest round-trip form.
std::string render(const GameSpec& spec);

}  // namespace qgame

#endif  // QGAME_GAMESPEC_HPP_
