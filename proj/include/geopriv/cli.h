//
// Copyright 2026 The Geopriv Authors
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
//

#ifndef GEOPRIV_CLI_H_
#define GEOPRIV_CLI_H_

#include <ostream>

namespace geopriv {

// Exit statuses of RunCli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `geopriv` tool. Subcommands:
//
//   calibrate, sample, tradeoff, experiment decision, experiment gowalla,
//   verify, prior build
//
// Data goes to files named by --out (or to `out` when a command allows it);
// diagnostics go to `err`. `--config file.json` supplies any flag as a JSON
// field named like the flag without leading dashes; explicit flags win.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace geopriv

#endif  // GEOPRIV_CLI_H_
