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


#include "qgame/angles.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "qgame/errors.hpp"

namespace qgame {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw FormatError("not a finite real: '" + std::string(s) + "'");
  }
  return value;
}

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "pi") return kPi;
  if (s == "pi/2") return kHalfPi;
  if (s == "pi/4") return kQuarterPi;
  return parse_real(s);
}

std::string format_exact(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string format_12g(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                       std::chars_format::general, 12);
  std::string out(buf.data(), ptr);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace qgame
