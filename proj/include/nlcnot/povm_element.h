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

#ifndef NLCNOT_POVM_ELEMENT_H
#define NLCNOT_POVM_ELEMENT_H

#include <string_view>

#include "nlcnot/linalg.h"

namespace nlc {

enum class PovmLabel { Success, Failure };

std::string_view to_string(PovmLabel label);

/// Hermitian 2x2 measurement element. Positivity and E <= 1 are deliberately
/// not enforced here; see validate_povm for the physicality audit.
class PovmElement {
   public:
    /// Throws NotHermitian, NonFinite.
    PovmElement(const Eigen::Matrix2cd &entries, PovmLabel label);

    const Eigen::Matrix2cd &matrix() const noexcept {
        return entries_;
    }
    PovmLabel label() const noexcept {
        return label_;
    }

    /// k|v><v| with k > 0 and |v| = 1, when the element has numerical rank one.
    struct RankOne {
        double weight;
        Eigen::Vector2cd vector;
    };
    /// Throws NotRankOne.
    RankOne rank_one(double tol = kDecompositionTol) const;

   private:
    Eigen::Matrix2cd entries_;
    PovmLabel label_;
};

}  // namespace nlc

#endif
