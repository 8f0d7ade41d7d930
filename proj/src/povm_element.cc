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

#include "nlcnot/povm_element.h"

#include <algorithm>
#include <cmath>

#include "nlcnot/error.h"

namespace nlc {

std::string_view to_string(PovmLabel label) {
    return label == PovmLabel::Success ? "success" : "failure";
}

PovmElement::PovmElement(const Eigen::Matrix2cd &entries, PovmLabel label) : entries_(entries), label_(label) {
    if (!entries_.allFinite()) {
        throw Error(ErrorCode::NonFinite, "POVM element has non-finite entries");
    }
    if (hermiticity_residual(entries_) > kIdentityTol) {
        throw Error(ErrorCode::NotHermitian, "POVM element is not Hermitian");
    }
}

PovmElement::RankOne PovmElement::rank_one(double tol) const {
    HermitianEigen2 eig = eigen_hermitian2(entries_);
    double scale = std::max(1.0, std::abs(eig.high));
    if (eig.high <= tol || std::abs(eig.low) > tol * scale) {
        throw Error(
            ErrorCode::NotRankOne,
            "element eigenvalues (" + std::to_string(eig.low) + ", " + std::to_string(eig.high) + ") are not rank one");
    }
    return RankOne{eig.high, eig.high_vector};
}

}  // namespace nlc
