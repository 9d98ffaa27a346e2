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


#include "qgame/strategies.hpp"

#include <cmath>

#include "qgame/angles.hpp"
#include "qgame/errors.hpp"

namespace qgame {

bool in_domain(const StrategyParams& p) {
  return p.theta >= 0.0 && p.theta <= kPi && p.phi >= 0.0 && p.phi <= kHalfPi;
}

void check_domain(const StrategyParams& p) {
  if (!in_domain(p)) {
    throw DomainError("strategy (" + format_12g(p.theta) + ", " +
                      format_12g(p.phi) +
                      ") outside theta in [0, pi], phi in [0, pi/2]");
  }
}

qcore::LocalOperator unitary_of(const StrategyParams& params) {
  check_domain(params);
  const double c = std::cos(params.theta / 2);
  const double s = std::sin(params.theta / 2);
  const qcore::Complex e = std::polar(1.0, params.phi);
  return {{c, e * s, -std::conj(e) * s, c}};
}

StrategyParams named(NamedStrategy name) {
  switch (name) {
    case NamedStrategy::kCooperate: return {0.0, 0.0};
    case NamedStrategy::kDefect: return {kPi, kHalfPi};
    case NamedStrategy::kQY: return {kPi, 0.0};
  }
  throw LookupError("unknown named strategy");
}

StrategyParams named(std::string_view name) {
  if (name == "C" || name == "COOPERATE") return named(NamedStrategy::kCooperate);
  if (name == "D" || name == "DEFECT") return named(NamedStrategy::kDefect);
  if (name == "QY") return named(NamedStrategy::kQY);
  throw LookupError("unknown strategy name '" + std::string(name) + "'");
}

double classical_mix_prob(const StrategyParams& params) {
  check_domain(params);
  const double c = std::cos(params.theta / 2);
  return c * c;
}

StrategyParams parse_strategy(std::string_view token) {
  if (token == "C" || token == "D" || token == "QY") return named(token);
  if (token.size() < 5 || token.substr(0, 2) != "U(" || token.back() != ')') {
    throw FormatError("malformed strategy '" + std::string(token) +
                      "' (expected C, D, QY or U(theta,phi))");
  }
  const std::string_view inner = token.substr(2, token.size() - 3);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos ||
      inner.find(',', comma + 1) != std::string_view::npos) {
    throw FormatError("malformed strategy '" + std::string(token) +
                      "' (expected two angles)");
  }
  StrategyParams p{parse_angle(inner.substr(0, comma)),
                   parse_angle(inner.substr(comma + 1))};
  check_domain(p);
  return p;
}

std::string to_token(const StrategyParams& params) {
  if (params == named(NamedStrategy::kCooperate)) return "C";
  if (params == named(NamedStrategy::kDefect)) return "D";
  if (params == named(NamedStrategy::kQY)) return "QY";
  return "U(" + format_exact(params.theta) + "," + format_exact(params.phi) +
         ")";
}

}  // namespace qgame
