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

#ifndef NLCNOT_CLI_CONFIG_H
#define NLCNOT_CLI_CONFIG_H

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nlcnot/corrector.h"
#include "nlcnot/protocol.h"

namespace nlc::cli {

enum class Mode { Single, MonteCarlo, Purify, Validate, Exact };
enum class Format { Json, Csv };

std::string_view to_string(Mode mode);
std::string_view to_string(Format format);

struct RunConfig {
    /// Normalized on parse.
    double control[2] = {M_SQRT1_2, M_SQRT1_2};
    double target[2] = {1, 0};
    double alpha = M_SQRT1_2;
    CorrectorKind corrector = CorrectorKind::Cuo;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint32_t max_attempts = 64;
    Mode mode = Mode::Single;
    Format format = Format::Json;
    std::optional<std::string> trace_path;

    GateConfig gate_config() const;
    ChannelSpec channel() const;
};

/// Bad command line. `flag` names the offending option.
class UsageError : public std::runtime_error {
   public:
    UsageError(std::string flag, const std::string &message);
    const std::string &flag() const noexcept {
        return flag_;
    }

   private:
    std::string flag_;
};

/// Raised for --help; carries the rendered help text.
struct HelpRequested {
    std::string text;
};

/// Arguments exclude the program name. Unspecified flags keep the defaults
/// above. Throws UsageError or HelpRequested.
RunConfig parse_config(const std::vector<std::string> &arguments);

}  // namespace nlc::cli

#endif
