// Copyright 2026 The spreadlab Authors
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

#ifndef SPREADLAB_TOOLS_CLI_HPP_
#define SPREADLAB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "spreadlab/harness.hpp"

namespace spreadlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kJsonSchemaVersion = 1;

// args excludes the program name. Input "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// The oracle subcommand with replaceable formulas; prints the deviation
// table and returns kExitOk iff every check passes.
int run_oracle(OracleSuite suite, const OracleFormulas& formulas, const OracleLimits& limits,
               std::ostream& out);

}  // namespace spreadlab::cli

#endif  // SPREADLAB_TOOLS_CLI_HPP_
