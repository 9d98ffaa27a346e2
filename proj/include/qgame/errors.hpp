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

#ifndef QGAME_ERRORS_HPP_
#define QGAME_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgame {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sizes that do not agree (operator count vs. players, profile length, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value is outside its closed domain (angles, gamma, probabilities).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An object violates a structural invariant (e.g. a non-unitary operator).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Unknown name or outcome.
class LookupError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based, or 0 when not tied to a line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A payoff table is missing an outcome or lists one twice.
class CompletenessError : public Error {
 public:
  CompletenessError(const std::string& what, std::string outcome)
      : Error(what), outcome_(std::move(outcome)) {}
  const std::string& outcome() const { return outcome_; }

 private:
  std::string outcome_;
};

}  // namespace qgame

#endif  // QGAME_ERRORS_HPP_
