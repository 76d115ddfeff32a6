// Copyright 2026 The klmapprox Authors
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
#ifndef KLMAPPROX_COMMANDS_H_
#define KLMAPPROX_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace klm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitSupportExplosion = 4;

// Runs the klmapprox command line. `args` includes the program name.
// Normal output goes to `out`, diagnostics to `err`; the return value is the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace klm::cli

#endif  // KLMAPPROX_COMMANDS_H_
