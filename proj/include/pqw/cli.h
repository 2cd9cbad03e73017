// Copyright 2026 The PQW Authors
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

#ifndef PQW_CLI_H
#define PQW_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace pqw {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitResource = 3,
};

/// Entry point of the `pqw` tool. Reports go to `out` (unless --out names a
/// file), diagnostics to `err`. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Formats a value with 12 significant digits, as used in every CSV column.
std::string format_number(double value);

}  // namespace pqw

#endif
