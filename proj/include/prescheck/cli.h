// Copyright 2026 The prescheck Authors
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


#ifndef PRESCHECK_CLI_H_
#define PRESCHECK_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace prescheck {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Returns 0 when the claim holds or the computation
// succeeded, 1 when the claim is refuted, 2 on usage or input errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// SHA-256 of the bytes, lowercase hex.
std::string Sha256Hex(const std::string& bytes);

}  // namespace prescheck

#endif  // PRESCHECK_CLI_H_
