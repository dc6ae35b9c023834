/* Copyright (C) 2026 The nfiso Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef NFISO_CLI_HPP
#define NFISO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nfiso::cli {

enum ExitCode : int {
    kDecided = 0,
    kFailed = 1,  // timeout or internal error
    kUsage = 2,   // bad arguments, unreadable file, unparsable polynomial
};

/// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nfiso::cli

#endif  // NFISO_CLI_HPP
