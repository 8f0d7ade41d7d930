// Copyright 2026 The nlcnot Authors
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

#ifndef NLCNOT_CLI_APP_H
#define NLCNOT_CLI_APP_H

#include <ostream>
#include <string>
#include <vector>

namespace nlc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMaxAttempts = 3;

/// Whole command-line program: parse, run the selected mode, write the
/// report to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string> &arguments, std::ostream &out, std::ostream &err);

}  // namespace nlc::cli

#endif
