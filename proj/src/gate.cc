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

#include "nlcnot/gate.h"

#include <cmath>
#include <utility>

#include "nlcnot/error.h"

namespace nlc {

GateMatrix::GateMatrix(ComplexMatrix entries, std::string name, double tol)
    : entries_(std::move(entries)), name_(std::move(name)), arity_(0) {
    if (entries_.rows() == 2 && entries_.cols() == 2) {
        arity_ = 1;
    } else if (entries_.rows() == 4 && entries_.cols() == 4) {
        arity_ = 2;
    } else {
        throw Error(ErrorCode::ArityMismatch, "gate '" + name_ + "' must be 2x2 or 4x4");
    }
    if (!entries_.allFinite()) {
        throw Error(ErrorCode::NonFinite, "gate '" + name_ + "' has non-finite entries");
    }
    double residual = unitarity_residual(entries_);
    if (residual > tol) {
        throw Error(
            ErrorCode::NotUnitary, "gate '" + name_ + "' is not unitary (residual " + std::to_string(residual) + ")");
    }
}

namespace gates {

GateMatrix identity() {
    return GateMatrix(ComplexMatrix::Identity(2, 2), "I");
}

GateMatrix hadamard() {
    ComplexMatrix m(2, 2);
    double s = M_SQRT1_2;
    m << s, s, s, -s;
    return GateMatrix(std::move(m), "H");
}

GateMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return GateMatrix(std::move(m), "X");
}

GateMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return GateMatrix(std::move(m), "Z");
}

GateMatrix cnot() {
    ComplexMatrix m(4, 4);
    m << 1, 0, 0, 0,  //
        0, 1, 0, 0,   //
        0, 0, 0, 1,   //
        0, 0, 1, 0;
    return GateMatrix(std::move(m), "CNOT");
}

GateMatrix basis_change(const Eigen::Vector2cd &basis0, const Eigen::Vector2cd &basis1) {
    ComplexMatrix m(2, 2);
    m.row(0) = basis0.adjoint();
    m.row(1) = basis1.adjoint();
    return GateMatrix(std::move(m), "BASIS");
}

ComplexMatrix on_first(const ComplexMatrix &g) {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                out(2 * i + k, 2 * j + k) = g(i, j);
            }
        }
    }
    return out;
}

ComplexMatrix on_second(const ComplexMatrix &g) {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (int k = 0; k < 2; k++) {
        out.block(2 * k, 2 * k, 2, 2) = g;
    }
    return out;
}

}  // namespace gates

}  // namespace nlc
