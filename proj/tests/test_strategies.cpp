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

#include <cmath>
#include <complex>

#include "qgame/angles.hpp"
#include "qgame/errors.hpp"
#include "qgame/strategies.hpp"

using qgame::StrategyParams;
using qgame::qcore::Complex;
using qgame::qcore::LocalOperator;

namespace {

constexpr double kTol = 1e-12;

bool close(const LocalOperator& a, const LocalOperator& b) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a.m[i] - b.m[i]) > kTol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unitary_of at the named points") {
  CHECK(close(qgame::unitary_of({0, 0}), LocalOperator::identity()));
  CHECK(close(qgame::unitary_of({qgame::kPi, qgame::kHalfPi}),
              LocalOperator::i_sigma_x()));
  CHECK(close(qgame::unitary_of({qgame::kPi, 0}), LocalOperator::i_sigma_y()));

  CHECK_THROWS_AS(qgame::unitary_of({-0.01, 0}), qgame::DomainError);
  CHECK_THROWS_AS(qgame::unitary_of({0, qgame::kHalfPi + 1e-9}),
                  qgame::DomainError);
  CHECK_THROWS_AS(qgame::unitary_of({4.0, 0}), qgame::DomainError);
}

TEST_CASE("unitary and special over the whole domain") {
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 25; ++j) {
      const StrategyParams p{qgame::kPi * i / 49, qgame::kHalfPi * j / 24};
      const auto u = qgame::unitary_of(p);
      CHECK(u.is_unitary(kTol));
      CHECK(std::abs(u.determinant() - Complex{1.0, 0.0}) < kTol);
    }
  }
}

TEST_CASE("named strategies") {
  using qgame::NamedStrategy;
  CHECK(qgame::named(NamedStrategy::kCooperate) == StrategyParams{0, 0});
  CHECK(qgame::named(NamedStrategy::kDefect) ==
        StrategyParams{qgame::kPi, qgame::kHalfPi});
  CHECK(qgame::named(NamedStrategy::kQY) == StrategyParams{qgame::kPi, 0});
  CHECK(qgame::named("COOPERATE") == qgame::named("C"));
  CHECK(qgame::named("DEFECT") == qgame::named("D"));
  CHECK_THROWS_AS(qgame::named("QX"), qgame::LookupError);
}

TEST_CASE("classical mixing probability") {
  CHECK(qgame::classical_mix_prob({0, 0}) == 1.0);
  CHECK(qgame::classical_mix_prob({qgame::kPi, 0}) == doctest::Approx(0.0));
  CHECK(qgame::classical_mix_prob({qgame::kHalfPi, 0}) ==
        doctest::Approx(0.5).epsilon(kTol));
  for (double theta : {0.0, 0.3, 1.0, 2.5, qgame::kPi}) {
    const double a = qgame::classical_mix_prob({theta, 0});
    CHECK(qgame::classical_mix_prob({theta, qgame::kQuarterPi}) == a);
    CHECK(qgame::classical_mix_prob({theta, qgame::kHalfPi}) == a);
  }
  CHECK_THROWS_AS(qgame::classical_mix_prob({-1, 0}), qgame::DomainError);
}

TEST_CASE("strategy token syntax") {
  CHECK(qgame::parse_strategy("C") == qgame::named("C"));
  CHECK(qgame::parse_strategy("D") == qgame::named("D"));
  CHECK(qgame::parse_strategy("QY") == qgame::named("QY"));
  CHECK(qgame::parse_strategy("U(pi,pi/2)") == qgame::named("D"));
  CHECK(qgame::parse_strategy("U(1.5, pi/4)") ==
        StrategyParams{1.5, qgame::kQuarterPi});

  CHECK_THROWS_AS(qgame::parse_strategy("X"), qgame::FormatError);
  CHECK_THROWS_AS(qgame::parse_strategy("U(1)"), qgame::FormatError);
  CHECK_THROWS_AS(qgame::parse_strategy("U(1,2,3)"), qgame::FormatError);
  CHECK_THROWS_AS(qgame::parse_strategy("U(a,0)"), qgame::FormatError);
  CHECK_THROWS_AS(qgame::parse_strategy("U(0,pi)"), qgame::DomainError);

  for (const char* tok : {"C", "D", "QY"}) {
    CHECK(qgame::to_token(qgame::parse_strategy(tok)) == tok);
  }
  const StrategyParams p{0.1234567890123, 1.1};
  CHECK(qgame::parse_strategy(qgame::to_token(p)) == p);
}
