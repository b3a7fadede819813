// Copyright 2026 The Ecdither Authors. All Rights Reserved.
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

#ifndef ECDITHER_TOOLS_CLI_H_
#define ECDITHER_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ecdither::cli {

// Process exit codes, one per failure class.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,     // bad flags or config
  kExitIo = 3,        // unreadable input or unwritable output
  kExitBadData = 4,   // malformed or unusable audio
  kExitPipeline = 5,  // processing failed, e.g. shaping diverged
};

// Runs `ecdither <args...>` (args excludes the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ecdither::cli

#endif  // ECDITHER_TOOLS_CLI_H_
