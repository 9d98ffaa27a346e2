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


#ifndef QGAME_CLI_HPP_
#define QGAME_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace qgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. CSV goes to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on domain or validation
// errors and 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace qgame::cli

#endif  // QGAME_CLI_HPP_
