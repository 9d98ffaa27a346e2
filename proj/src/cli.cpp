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


#include "qgame/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "qgame/angles.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/errors.hpp"
#include "qgame/gamespec.hpp"
#include "qgame/protocol.hpp"
#include "qgame/strategies.hpp"

namespace qgame::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string game = "pd3";
  std::optional<std::string> gamma;
  std::vector<std::string> strategies;
  int points = 101;
  std::string epsilon;
  SearchConfig search;
  std::string set = "C,D,QY";
};

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_set(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void write_header(std::ostream& out, std::string_view lead, int n) {
  if (!lead.empty()) out << lead << ',';
  for (int p = 0; p < n; ++p) out << (p ? "," : "") << "payoff_" << p;
  out << '\n';
}

void write_payoffs(std::ostream& out, const PayoffVector& v) {
  for (std::size_t p = 0; p < v.size(); ++p) {
    out << (p ? "," : "") << format_12g(v[p]);
  }
  out << '\n';
}

double parse_angle_arg(const std::string& text, std::string_view flag) {
  try {
    return parse_angle(text);
  } catch (const FormatError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

StrategyParams parse_strategy_arg(const std::string& token) {
  try {
    return parse_strategy(token);
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  } catch (const LookupError& e) {
    throw UsageError(e.what());
  }
}

// The built-in game defaults to maximal entanglement; --gamma overrides the
// gamma of either source.
GameSpec read_game(const Options& opt) {
  GameSpec game;
  if (opt.game == "pd3") {
    game = prisoners_dilemma_3(kHalfPi);
  } else {
    std::ifstream in(opt.game, std::ios::binary);
    if (!in) throw UsageError("cannot read game file '" + opt.game + "'");
    std::ostringstream text;
    text << in.rdbuf();
    game = parse_game_spec(text.str());
  }
  if (opt.gamma) game.gamma = parse_angle_arg(*opt.gamma, "--gamma");
  return game;
}

GameSpec load_game(const Options& opt) {
  GameSpec game = read_game(opt);
  const auto violations = validate(game);
  if (!violations.empty()) {
    throw ValidationError("invalid game: " + violations.front().message);
  }
  return game;
}

Profile load_profile(const Options& opt, int n_players) {
  if (opt.strategies.size() != static_cast<std::size_t>(n_players)) {
    throw UsageError("--strategies needs " + std::to_string(n_players) +
                     " tokens, got " + std::to_string(opt.strategies.size()));
  }
  Profile profile;
  for (const auto& tok : opt.strategies) {
    profile.push_back(parse_strategy_arg(tok));
  }
  return profile;
}

double load_epsilon(const Options& opt) {
  if (opt.epsilon.empty()) return kDefaultEpsilon;
  try {
    return parse_real(opt.epsilon);
  } catch (const FormatError& e) {
    throw UsageError(std::string("--epsilon: ") + e.what());
  }
}

int cmd_payoff(const Options& opt, std::ostream& out) {
  const GameSpec game = load_game(opt);
  const Profile profile = load_profile(opt, game.n_players);
  write_header(out, "", game.n_players);
  write_payoffs(out, expected_payoffs(game, profile));
  return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const GameSpec game = load_game(opt);
  const Profile profile = load_profile(opt, game.n_players);
  if (opt.points < 2) throw UsageError("--points must be at least 2");
  const auto gammas = uniform_gamma_nodes(opt.points);
  write_header(out, "gamma", game.n_players);
  for (const auto& pt : payoff_sweep(game.table, profile, gammas)) {
    out << format_12g(pt.gamma) << ',';
    write_payoffs(out, pt.payoffs);
  }
  return kExitOk;
}

int cmd_nash(const Options& opt, std::ostream& out, std::ostream& err) {
  const GameSpec game = load_game(opt);
  const Profile profile = load_profile(opt, game.n_players);
  const NashReport report =
      epsilon_nash_check(game, profile, load_epsilon(opt), opt.search);
  out << "player,gap,best_theta,best_phi\n";
  for (std::size_t p = 0; p < report.per_player.size(); ++p) {
    const auto& r = report.per_player[p];
    out << p << ',' << format_12g(r.gap) << ','
        << format_12g(r.best_params.theta) << ','
        << format_12g(r.best_params.phi) << '\n';
  }
  const std::string verdict = report.is_nash ? "true" : "false";
  out << "# nash=" << verdict << '\n';
  err << "nash=" << verdict << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const GameSpec game = load_game(opt);
  std::vector<StrategyParams> candidates;
  for (const auto& tok : split_set(opt.set)) {
    candidates.push_back(parse_strategy_arg(tok));
  }
  const PayoffEvaluator eval(game);
  const auto equilibria =
      enumerate_equilibria(game, candidates, load_epsilon(opt));
  for (int p = 0; p < game.n_players; ++p) out << "strategy_" << p << ',';
  write_header(out, "", game.n_players);
  for (const auto& prof : equilibria) {
    for (const auto& s : prof) out << csv_field(to_token(s)) << ',';
    write_payoffs(out, eval.payoffs(prof));
  }
  out << "# equilibria=" << equilibria.size() << '\n';
  return kExitOk;
}

int cmd_classical_table(const Options& opt, std::ostream& out) {
  const GameSpec game = load_game(opt);
  write_header(out, "outcome", game.n_players);
  for (const auto& [bits, payoffs] : game.table.entries) {
    out << bits << ',';
    write_payoffs(out, payoffs);
  }
  return kExitOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const GameSpec game = read_game(opt);
  const auto violations = validate(game);
  out << "kind,message\n";
  for (const auto& v : violations) {
    out << to_string(v.kind) << ',' << csv_field(v.message) << '\n';
  }
  out << "# valid=" << (violations.empty() ? "true" : "false") << '\n';
  return violations.empty() ? kExitOk : kExitDomain;
}

void add_game_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--game", opt.game, "pd3 or path to a game file");
  sub->add_option("--gamma", opt.gamma, "entanglement angle in [0, pi/2]");
}

void add_strategy_flag(CLI::App* sub, Options& opt) {
  sub->add_option("--strategies", opt.strategies,
                  "one token per player: C, D, QY or U(theta,phi)")
      ->required();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Multiplayer quantum game simulator", "qgame"};
  app.require_subcommand(1);

  auto* payoff = app.add_subcommand("payoff", "expected payoffs of a profile");
  add_game_flags(payoff, opt);
  add_strategy_flag(payoff, opt);

  auto* nash = app.add_subcommand("nash-check", "epsilon-Nash verification");
  add_game_flags(nash, opt);
  add_strategy_flag(nash, opt);
  nash->add_option("--epsilon", opt.epsilon, "tolerance (default 1e-6)");
  nash->add_option("--theta-points", opt.search.theta_points);
  nash->add_option("--phi-points", opt.search.phi_points);
  nash->add_option("--refine-rounds", opt.search.refine_rounds);

  auto* enumerate =
      app.add_subcommand("enumerate", "equilibria over a finite strategy set");
  add_game_flags(enumerate, opt);
  enumerate->add_option("--set", opt.set, "comma-separated strategy tokens");
  enumerate->add_option("--epsilon", opt.epsilon, "tolerance (default 1e-6)");

  auto* sweep = app.add_subcommand("sweep", "payoffs over uniform gamma nodes");
  add_game_flags(sweep, opt);
  add_strategy_flag(sweep, opt);
  sweep->add_option("--points", opt.points, "gamma nodes on [0, pi/2]");

  auto* table = app.add_subcommand("classical-table", "the payoff table");
  add_game_flags(table, opt);

  auto* valid = app.add_subcommand("validate", "check a game definition");
  add_game_flags(valid, opt);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (payoff->parsed()) return cmd_payoff(opt, out);
    if (nash->parsed()) return cmd_nash(opt, out, err);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (sweep->parsed()) return cmd_sweep(opt, out);
    if (table->parsed()) return cmd_classical_table(opt, out);
    if (valid->parsed()) return cmd_validate(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace qgame::cli
