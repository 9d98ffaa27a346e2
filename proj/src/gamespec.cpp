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


#include "qgame/gamespec.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "qgame/angles.hpp"
#include "qgame/errors.hpp"
#include "qgame/qcore.hpp"

namespace qgame {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

bool valid_gamma(double g) { return g >= 0.0 && g <= kHalfPi; }

bool valid_player_count(int n) {
  return n >= qcore::kMinQubits && n <= qcore::kMaxQubits;
}

}  // namespace

std::string outcome_string(std::size_t index, int n_players) {
  std::string s(static_cast<std::size_t>(n_players), '0');
  for (int p = 0; p < n_players; ++p) {
    if (qcore::outcome_bit(index, p, n_players)) s[p] = '1';
  }
  return s;
}

std::size_t outcome_index(std::string_view bits) {
  std::size_t k = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw FormatError("outcome '" + std::string(bits) +
                        "' must contain only '0' and '1'");
    }
    k = (k << 1) | static_cast<std::size_t>(c - '0');
  }
  return k;
}

GameSpec prisoners_dilemma_3(double gamma) {
  if (!valid_gamma(gamma)) {
    throw DomainError("gamma " + format_12g(gamma) + " outside [0, pi/2]");
  }
  GameSpec g;
  g.n_players = 3;
  g.gamma = gamma;
  g.table.n_players = 3;
  g.table.entries = {
      {"000", {3, 3, 3}}, {"001", {2, 2, 5}}, {"010", {2, 5, 2}},
      {"100", {5, 2, 2}}, {"011", {0, 4, 4}}, {"101", {4, 0, 4}},
      {"110", {4, 4, 0}}, {"111", {1, 1, 1}},
  };
  return g;
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kPlayerCount: return "player_count";
    case Violation::Kind::kGammaRange: return "gamma_range";
    case Violation::Kind::kTableSize: return "table_size";
    case Violation::Kind::kCompleteness: return "completeness";
    case Violation::Kind::kBadOutcome: return "bad_outcome";
    case Violation::Kind::kPayoffArity: return "payoff_arity";
    case Violation::Kind::kNonFinite: return "non_finite";
  }
  return "unknown";
}

std::vector<Violation> validate(const GameSpec& spec) {
  using K = Violation::Kind;
  std::vector<Violation> v;
  const int n = spec.n_players;
  if (!valid_player_count(n)) {
    v.push_back({K::kPlayerCount, "player count " + std::to_string(n) +
                                      " outside [2, 12]"});
  }
  if (!std::isfinite(spec.gamma) || !valid_gamma(spec.gamma)) {
    v.push_back({K::kGammaRange,
                 "gamma " + format_12g(spec.gamma) + " outside [0, pi/2]"});
  }
  if (spec.table.n_players != n) {
    v.push_back({K::kTableSize, "table declares " +
                                    std::to_string(spec.table.n_players) +
                                    " players, game has " + std::to_string(n)});
  }
  if (!valid_player_count(n)) return v;

  for (const auto& [bits, payoffs] : spec.table.entries) {
    const bool shape_ok =
        bits.size() == static_cast<std::size_t>(n) &&
        bits.find_first_not_of("01") == std::string::npos;
    if (!shape_ok) {
      v.push_back({K::kBadOutcome, "outcome '" + bits + "' is not a " +
                                       std::to_string(n) + "-bit string"});
      continue;
    }
    if (payoffs.size() != static_cast<std::size_t>(n)) {
      v.push_back({K::kPayoffArity, "outcome " + bits + " has " +
                                        std::to_string(payoffs.size()) +
                                        " payoffs, expected " +
                                        std::to_string(n)});
    }
    for (double x : payoffs) {
      if (!std::isfinite(x)) {
        v.push_back({K::kNonFinite, "outcome " + bits + " has a non-finite payoff"});
        break;
      }
    }
  }
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t k = 0; k < dim; ++k) {
    const std::string bits = outcome_string(k, n);
    if (!spec.table.entries.contains(bits)) {
      v.push_back({K::kCompleteness, "missing outcome " + bits});
    }
  }
  return v;
}

GameSpec parse_game_spec(std::string_view text) {
  std::optional<int> players;
  std::optional<double> gamma;
  PayoffTable table;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("expected '<key> = <value>'", line_no);
    }
    const auto key = split_ws(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw FormatError("missing key", line_no);

    if (key[0] == "players" && key.size() == 1) {
      if (players) throw FormatError("duplicate 'players'", line_no);
      int n = 0;
      const auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), n);
      if (value.empty() || ec != std::errc{} ||
          ptr != value.data() + value.size()) {
        throw FormatError("players must be an integer", line_no);
      }
      if (!valid_player_count(n)) {
        throw DomainError("line " + std::to_string(line_no) +
                          ": player count " + std::to_string(n) +
                          " outside [2, 12]");
      }
      players = n;
      table.n_players = n;
    } else if (key[0] == "gamma" && key.size() == 1) {
      if (gamma) throw FormatError("duplicate 'gamma'", line_no);
      double g = 0.0;
      try {
        g = parse_angle(value);
      } catch (const FormatError& e) {
        throw FormatError(e.what(), line_no);
      }
      if (!valid_gamma(g)) {
        throw DomainError("line " + std::to_string(line_no) + ": gamma " +
                          format_12g(g) + " outside [0, pi/2]");
      }
      gamma = g;
    } else if (key[0] == "payoff" && key.size() == 2) {
      if (!players) {
        throw FormatError("'players' must precede payoff lines", line_no);
      }
      const std::string bits(key[1]);
      if (bits.size() != static_cast<std::size_t>(*players) ||
          bits.find_first_not_of("01") != std::string::npos) {
        throw FormatError("outcome '" + bits + "' is not a " +
                              std::to_string(*players) + "-bit string",
                          line_no);
      }
      if (table.entries.contains(bits)) {
        throw CompletenessError("line " + std::to_string(line_no) +
                                    ": duplicate outcome " + bits,
                                bits);
      }
      const auto fields = split_ws(value);
      if (fields.size() != static_cast<std::size_t>(*players)) {
        throw FormatError("outcome " + bits + " lists " +
                              std::to_string(fields.size()) +
                              " payoffs, expected " + std::to_string(*players),
                          line_no);
      }
      std::vector<double> payoffs;
      payoffs.reserve(fields.size());
      for (auto f : fields) {
        try {
          payoffs.push_back(parse_real(f));
        } catch (const FormatError& e) {
          throw FormatError(e.what(), line_no);
        }
      }
      table.entries.emplace(bits, std::move(payoffs));
    } else {
      throw FormatError("unknown key '" + std::string(trim(line.substr(0, eq))) +
                            "'",
                        line_no);
    }
  }

  if (!players) throw FormatError("missing 'players'");
  if (!gamma) throw FormatError("missing 'gamma'");
  const std::size_t dim = std::size_t{1} << *players;
  for (std::size_t k = 0; k < dim; ++k) {
    const std::string bits = outcome_string(k, *players);
    if (!table.entries.contains(bits)) {
      throw CompletenessError("missing outcome " + bits, bits);
    }
  }
  return GameSpec{*players, *gamma, std::move(table)};
}

std::string render(const GameSpec& spec) {
  std::ostringstream out;
  out << "players = " << spec.n_players << '\n';
  out << "gamma = " << format_exact(spec.gamma) << '\n';
  // Equal-length bitstrings sort lexicographically in outcome-index order.
  for (const auto& [bits, payoffs] : spec.table.entries) {
    out << "payoff " << bits << " =";
    for (double x : payoffs) out << ' ' << format_exact(x);
    out << '\n';
  }
  return out.str();
}

}  // namespace qgame
