// Copyright 2026 The rdfstar2pg Authors
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

#ifndef RDFSTAR2PG_TOOLS_CLI_HPP_
#define RDFSTAR2PG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "rdfstar2pg/transform.hpp"

namespace rdfstar2pg::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // unreadable/unparsable input, failed conformance rows
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLossy = 3;

// `args` excludes the program name. `color` enables ANSI color in tables.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        bool color = false);

std::string report_json(const TransformReport& report);

}  // namespace rdfstar2pg::cli

#endif  // RDFSTAR2PG_TOOLS_CLI_HPP_
