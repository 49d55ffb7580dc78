/*
   Copyright 2026 The fibsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FIBSUM_CLI_HPP
#define FIBSUM_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string_view>

#include "fibsum/oracle.hpp"

namespace fibsum::cli {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// "7" or "3..9" (inclusive); nullopt when malformed or reversed.
std::optional<oracle::IndexRange> parse_range(std::string_view s);

/// Entry point behind the `fibsum` executable. Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibsum::cli

#endif  // FIBSUM_CLI_HPP
