// Copyright 2026 The cachemarket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. RunCli is the whole program minus main(), so the
// tests can drive it in-process.
//
// Exit codes: 0 success, 2 configuration or argument error, 3 infeasible
// model, 4 numerical failure, 5 validation failure.

#ifndef CACHEMARKET_TOOLS_COMMANDS_H_
#define CACHEMARKET_TOOLS_COMMANDS_H_

#include <ostream>

namespace cachemarket::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitNumerical = 4;
inline constexpr int kExitValidation = 5;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_COMMANDS_H_
