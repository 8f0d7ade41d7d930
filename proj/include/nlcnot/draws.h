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

#ifndef NLCNOT_DRAWS_H
#define NLCNOT_DRAWS_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace nlc {

/// Source of uniform draws in [0, 1). The engine itself never owns a
/// generator; every random choice consumes one draw from a stream.
class DrawStream {
   public:
    virtual ~DrawStream() = default;
    virtual double next() = 0;
};

/// Trial `trial` of root seed `seed`. The sub-stream is an mt19937_64 seeded
/// through std::seed_seq with the 32-bit halves of (seed, trial), so any
/// trial can be replayed on its own. Draws take the top 53 bits of each
/// 64-bit output.
class SeededDraws final : public DrawStream {
   public:
    SeededDraws(std::uint64_t seed, std::uint64_t trial);
    double next() override;

   private:
    std::mt19937_64 engine_;
};

/// Fixed list of draws; throws DrawsExhausted past the end.
class ScriptedDraws final : public DrawStream {
   public:
    explicit ScriptedDraws(std::vector<double> draws);
    double next() override;
    std::size_t consumed() const noexcept {
        return position_;
    }

   private:
    std::vector<double> draws_;
    std::size_t position_ = 0;
};

}  // namespace nlc

#endif
