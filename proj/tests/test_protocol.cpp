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


#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qgame/angles.hpp"
#include "qgame/errors.hpp"
#include "qgame/protocol.hpp"

using qgame::Profile;
using qgame::StrategyParams;

namespace {

constexpr double kTol = 1e-9;
const StrategyParams C = qgame::named("C");
const StrategyParams D = qgame::named("D");
const StrategyParams QY = qgame::named("QY");

double theta_node(int i) { return i == 40 ? qgame::kPi : qgame::kPi * i / 40; }
double phi_node(int j) { return j == 20 ? qgame::kHalfPi : qgame::kHalfPi * j / 20; }
double gamma_node(int k) { return k == 10 ? qgame::kHalfPi : qgame::kHalfPi * k / 10; }

void check_payoffs(const qgame::PayoffVector& got,
                   std::initializer_list<double> want) {
  REQUIRE(got.size() == want.size());
  std::size_t i = 0;
  for (double w : want) CHECK(std::abs(got[i++] - w) < kTol);
}

}  // namespace

TEST_CASE("final states") {
  auto g = qgame::prisoners_dilemma_3(0.0);
  auto s = qgame::final_state(g, {C, C, C});
  CHECK(oracle::max_diff({1, 0, 0, 0, 0, 0, 0, 0}, s.amplitudes()) < 1e-12);

  // Hand expansion at gamma = pi/2: all D gives -i|111>, all QY gives i|000>.
  g = qgame::prisoners_dilemma_3(qgame::kHalfPi);
  s = qgame::final_state(g, {D, D, D});
  std::vector<oracle::Complex> want(8);
  want[7] = {0.0, -1.0};
  CHECK(oracle::max_diff(want, s.amplitudes()) < 1e-12);
  CHECK(oracle::max_diff(oracle::protocol_state({D, D, D}, qgame::kHalfPi),
                         s.amplitudes()) < 1e-12);

  s = qgame::final_state(g, {QY, QY, QY});
  want.assign(8, 0.0);
  want[0] = {0.0, 1.0};
  CHECK(oracle::max_diff(want, s.amplitudes()) < 1e-12);

  CHECK_THROWS_AS(qgame::final_state(g, {QY, QY}), qgame::DimensionError);
}

TEST_CASE("final state matches the dense protocol") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> gam(0.0, qgame::kHalfPi);
  for (int trial = 0; trial < 50; ++trial) {
    const Profile prof{oracle::random_params(rng), oracle::random_params(rng),
                       oracle::random_params(rng)};
    const double g = gam(rng);
    const auto s = qgame::final_state(qgame::prisoners_dilemma_3(g), prof);
    CHECK(oracle::max_diff(oracle::protocol_state(prof, g), s.amplitudes()) <
          1e-12);
    CHECK(std::abs(s.squared_norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("expected payoffs at the named profiles") {
  const auto max_ent = qgame::prisoners_dilemma_3(qgame::kHalfPi);
  check_payoffs(qgame::expected_payoffs(max_ent, {QY, QY, QY}), {3, 3, 3});
  CHECK(std::abs(qgame::expected_payoffs(max_ent, {C, D, QY})[0] - 5) < kTol);
  check_payoffs(qgame::expected_payoffs(qgame::prisoners_dilemma_3(0.0),
                                        {D, D, D}),
                {1, 1, 1});
}

TEST_CASE("classical payoff lookup") {
  const auto g = qgame::prisoners_dilemma_3(0.0);
  CHECK(qgame::classical_payoff(g, "000") == qgame::PayoffVector{3, 3, 3});
  CHECK(qgame::classical_payoff(g, "011") == qgame::PayoffVector{0, 4, 4});
  CHECK(qgame::classical_payoff(g, "110") == qgame::PayoffVector{4, 4, 0});
  CHECK_THROWS_AS(qgame::classical_payoff(g, "01"), qgame::LookupError);
  CHECK_THROWS_AS(qgame::classical_payoff(g, "0x1"), qgame::LookupError);
}

TEST_CASE("classical mixed payoffs") {
  const auto g = qgame::prisoners_dilemma_3(0.0);
  const std::array<double, 3> all_c{1, 1, 1}, all_d{0, 0, 0}, half{.5, .5, .5};
  check_payoffs(qgame::classical_mixed_payoffs(g, all_c), {3, 3, 3});
  check_payoffs(qgame::classical_mixed_payoffs(g, all_d), {1, 1, 1});

  // Oracle: with every choice a fair coin, each outcome has weight 1/8.
  std::array<double, 3> avg{};
  for (const auto& [bits, row] : g.table.entries) {
    for (int p = 0; p < 3; ++p) avg[p] += row[p] / 8.0;
  }
  CHECK(avg[0] == doctest::Approx(2.625));
  check_payoffs(qgame::classical_mixed_payoffs(g, half), {2.625, 2.625, 2.625});

  const std::array<double, 3> bad{0.5, 1.5, 0.5};
  CHECK_THROWS_AS(qgame::classical_mixed_payoffs(g, bad), qgame::DomainError);
  const std::array<double, 2> short_probs{0.5, 0.5};
  CHECK_THROWS_AS(qgame::classical_mixed_payoffs(g, short_probs),
                  qgame::DimensionError);
}

TEST_CASE("closed forms at maximal entanglement") {
  const auto g = qgame::prisoners_dilemma_3(qgame::kHalfPi);
  const qgame::PayoffEvaluator eval(g);
  double worst_dd = 0.0, worst_dqy = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const StrategyParams u{theta_node(i), phi_node(j)};
      worst_dd = std::max(worst_dd, std::abs(eval.payoff({u, D, D}, 0) -
                                             oracle::pd3_vs_dd(u.theta, u.phi)));
      worst_dqy =
          std::max(worst_dqy, std::abs(eval.payoff({u, D, QY}, 0) -
                                       oracle::pd3_vs_dqy(u.theta, u.phi)));
    }
  }
  CHECK(worst_dd < kTol);
  CHECK(worst_dqy < kTol);
}

TEST_CASE("closed form against two QY players for every gamma") {
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const qgame::PayoffEvaluator eval(qgame::prisoners_dilemma_3(gamma_node(k)));
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const StrategyParams u{theta_node(i), phi_node(j)};
        worst = std::max(worst,
                         std::abs(eval.payoff({u, QY, QY}, 0) -
                                  oracle::pd3_vs_qyqy(u.theta, u.phi,
                                                      gamma_node(k))));
      }
    }
  }
  CHECK(worst < kTol);
}

TEST_CASE("unentangled game reduces to classical mixed strategies") {
  std::mt19937_64 rng(3);
  const auto g = qgame::prisoners_dilemma_3(0.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile prof{oracle::random_params(rng), oracle::random_params(rng),
                       oracle::random_params(rng)};
    std::array<double, 3> q{};
    for (int p = 0; p < 3; ++p) q[p] = qgame::classical_mix_prob(prof[p]);
    const auto quantum = qgame::expected_payoffs(g, prof);
    const auto classical = qgame::classical_mixed_payoffs(g, q);
    Profile shifted = prof;
    for (auto& s : shifted) s.phi = qgame::kHalfPi - s.phi;
    const auto quantum_shifted = qgame::expected_payoffs(g, shifted);
    for (int p = 0; p < 3; ++p) {
      CHECK(std::abs(quantum[p] - classical[p]) < kTol);
      CHECK(std::abs(quantum_shifted[p] - classical[p]) < kTol);
    }
  }
}

TEST_CASE("permuting players permutes payoffs") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> gam(0.0, qgame::kHalfPi);
  for (int trial = 0; trial < 10; ++trial) {
    const qgame::PayoffEvaluator eval(qgame::prisoners_dilemma_3(gam(rng)));
    const Profile base{oracle::random_params(rng), oracle::random_params(rng),
                       oracle::random_params(rng)};
    const auto ref = eval.payoffs(base);
    std::array<int, 3> perm{0, 1, 2};
    do {
      const Profile permuted{base[perm[0]], base[perm[1]], base[perm[2]]};
      const auto got = eval.payoffs(permuted);
      for (int p = 0; p < 3; ++p) CHECK(std::abs(got[p] - ref[perm[p]]) < kTol);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("classical profiles are embedded faithfully at every gamma") {
  for (int k = 0; k <= 10; ++k) {
    const auto g = qgame::prisoners_dilemma_3(gamma_node(k));
    for (std::size_t idx = 0; idx < 8; ++idx) {
      const auto bits = qgame::outcome_string(idx, 3);
      Profile prof;
      for (char b : bits) prof.push_back(b == '1' ? D : C);
      const auto got = qgame::expected_payoffs(g, prof);
      const auto want = qgame::classical_payoff(g, bits);
      for (int p = 0; p < 3; ++p) CHECK(std::abs(got[p] - want[p]) < kTol);
    }
  }
}

TEST_CASE("payoffs stay inside the table range") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> gam(0.0, qgame::kHalfPi);
  for (int trial = 0; trial < 200; ++trial) {
    const qgame::PayoffEvaluator eval(qgame::prisoners_dilemma_3(gam(rng)));
    const auto v = eval.payoffs({oracle::random_params(rng),
                                 oracle::random_params(rng),
                                 oracle::random_params(rng)});
    for (double x : v) {
      CHECK(x >= eval.min_payoff() - kTol);
      CHECK(x <= eval.max_payoff() + kTol);
    }
  }
}

TEST_CASE("invalid games are refused") {
  auto g = qgame::prisoners_dilemma_3(0.0);
  g.table.entries.erase("000");
  CHECK_THROWS_AS(qgame::expected_payoffs(g, {C, C, C}), qgame::ValidationError);
  const auto ok = qgame::prisoners_dilemma_3(0.0);
  CHECK_THROWS_AS(qgame::expected_payoffs(ok, {C, C, {4.0, 0.0}}),
                  qgame::DomainError);
}

TEST_CASE("two-player games use the same pipeline") {
  qgame::GameSpec g{2, qgame::kHalfPi, {2, {{"00", {3, 3}},
                                            {"01", {0, 5}},
                                            {"10", {5, 0}},
                                            {"11", {1, 1}}}}};
  check_payoffs(qgame::expected_payoffs(g, {C, C}), {3, 3});
  check_payoffs(qgame::expected_payoffs(g, {D, D}), {1, 1});
  const auto s = qgame::final_state(g, {QY, D});
  CHECK(oracle::max_diff(oracle::protocol_state({QY, D}, qgame::kHalfPi),
                         s.amplitudes()) < 1e-12);
}
