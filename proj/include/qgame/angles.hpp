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


#ifndef QGAME_ANGLES_HPP_
#define QGAME_ANGLES_HPP_

#include <numbers>
#include <string>
#include <string_view>

namespace qgame {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2;
inline constexpr double kQuarterPi = std::numbers::pi / 4;

// Parses a decimal real or one of the tokens "pi", "pi/2", "pi/4" (optional
// surrounding whitespace). Throws FormatError on anything else.
double parse_angle(std::string_view text);

// Parses a finite decimal real with no trailing characters.
double parse_real(std::string_view text);

// Shortest decimal that round-trips to the same double.
std::string format_exact(double x);

// Locale-independent decimal with 12 significant digits; "-0" prints as "0".
std::string format_12g(double x);

}  // namespace qgame

#endif  // QGAME_ANGLES_HPP_
