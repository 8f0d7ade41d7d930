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

#ifndef NLCNOT_JSON_UTIL_H
#define NLCNOT_JSON_UTIL_H

#include <string>

#include "json.hpp"

namespace nlc {

using Json = nlohmann::ordered_json;

/// Rounds to `digits` significant decimal digits. nlohmann prints the
/// shortest round-tripping form, so rounded reals print with at most that
/// many digits.
double round_significant(double value, int digits = 15);

/// JSON number holding `value` rounded to 15 significant digits.
Json json_real(double value);

/// "%.15g"
std::string format_real(double value);

}  // namespace nlc

#endif
