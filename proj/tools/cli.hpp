/*
 * Copyright 2026 The wfk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WFK_TOOLS_CLI_HPP
#define WFK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wfk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the directory for outputs without --output.
inline constexpr const char* kOutputDirEnv = "WFK_OUTPUT_DIR";

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfk::cli

#endif  // WFK_TOOLS_CLI_HPP
