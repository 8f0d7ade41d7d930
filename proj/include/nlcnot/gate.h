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

#ifndef NLCNOT_GATE_H
#define NLCNOT_GATE_H

#include <string>

#include "nlcnot/linalg.h"

namespace nlc {

/// A unitary on one or two qubits. Construction fails for anything that is
/// not unitary within kIdentityTol; raw (possibly non-unitary) matrices stay
/// as ComplexMatrix.
class GateMatrix {
   public:
    /// Throws ArityMismatch (not 2x2 or 4x4) or NotUnitary.
    GateMatrix(ComplexMatrix entries, std::string name, double tol = kIdentityTol);

    int arity() const noexcept {
        return arity_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return entries_;
    }
    const std::string &name() const noexcept {
        return name_;
    }

   private:
    ComplexMatrix entries_;
    std::string name_;
    int arity_;
};

namespace gates {

GateMatrix identity();
GateMatrix hadamard();
GateMatrix pauli_x();
GateMatrix pauli_z();
/// Control is the first target.
GateMatrix cnot();
/// Single-qubit gate whose rows are <basis0| and <basis1|; maps the basis
/// onto |0>, |1>. Throws NotUnitary when the basis is not orthonormal.
GateMatrix basis_change(const Eigen::Vector2cd &basis0, const Eigen::Vector2cd &basis1);
/// `g` acting on the first target while the second is untouched, or vice versa.
ComplexMatrix on_first(const ComplexMatrix &g);
ComplexMatrix on_second(const ComplexMatrix &g);

}  // namespace gates

}  // namespace nlc

#endif
