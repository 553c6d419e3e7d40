/*
 * Copyright 2026 The pfrlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PFRLAB_TOOLS_CLI_H_
#define PFRLAB_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pfrlab::cli {

// Exit codes: 0 success, 1 the command ran but its check failed (a seed did
// not complete, a cover does not verify, a replay differs), 2 usage, parse or
// I/O error.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Lowercase hex SHA-256 of a byte string and of a file's contents.
std::string Sha256Hex(const std::string& bytes);
std::string Sha256File(const std::string& path);

}  // namespace pfrlab::cli

#endif  // PFRLAB_TOOLS_CLI_H_
