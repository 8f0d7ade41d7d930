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

#include "nlcnot/draws.h"

#include <utility>

#include "nlcnot/error.h"

namespace nlc {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(trial),
        static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

SeededDraws::SeededDraws(std::uint64_t seed, std::uint64_t trial) : engine_(make_engine(seed, trial)) {
}

double SeededDraws::next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

ScriptedDraws::ScriptedDraws(std::vector<double> draws) : draws_(std::move(draws)) {
}

double ScriptedDraws::next() {
    if (position_ >= draws_.size()) {
        throw Error(ErrorCode::DrawsExhausted, "scripted draw stream ran out after " + std::to_string(position_));
    }
    return draws_[position_++];
}

}  // namespace nlc
