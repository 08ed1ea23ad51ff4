// Copyright 2026 The qudit-ib Authors
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

#pragma once

// The qudit-ib command line, callable in-process so tests can drive it.
//
// Exit codes: 0 success, 1 I/O or malformed input file, 2 usage,
// 3 numerical or structural integrity failure.

#include <iosfwd>
#include <string>
#include <vector>

#include "quditib/channels.hpp"

namespace quditib {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitIntegrity = 3,
};

/// Environment variable naming the default output directory of `simulate`.
inline constexpr const char* kOutputDirEnv = "QUDIT_IB_OUTPUT_DIR";

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Noise given on the command line: "identity", "depolarizing:<lambda>",
/// "random:<seed>:<fidelity>" or "file:<path>".
KrausSet parse_noise_spec(const std::string& spec, int d);

}  // namespace quditib
