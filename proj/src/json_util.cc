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

#include "nlcnot/json_util.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace nlc {

double round_significant(double value, int digits) {
    if (!std::isfinite(value) || value == 0) {
        return value;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    double rounded = std::strtod(buf, nullptr);
    // Avoid "-0".
    return rounded == 0 ? 0.0 : rounded;
}

Json json_real(double value) {
    if (!std::isfinite(value)) {
        return nullptr;
    }
    return round_significant(value);
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", round_significant(value));
    return buf;
}

}  // namespace nlc
