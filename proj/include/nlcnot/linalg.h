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

#ifndef NLCNOT_LINALG_H
#define NLCNOT_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace nlc {

using Amplitude = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Tolerances shared across the engine.
inline constexpr double kIdentityTol = 1e-12;       // algebraic identities
inline constexpr double kDecompositionTol = 1e-10;  // SVD / rank tests / circuit equivalence
inline constexpr double kNegligibleProbability = 1e-14;

/// Eigen-decomposition of a 2x2 Hermitian matrix in closed form.
/// `low <= high`; the vectors are normalized and mutually orthogonal.
struct HermitianEigen2 {
    double low;
    double high;
    Eigen::Vector2cd low_vector;
    Eigen::Vector2cd high_vector;
};

/// Only the Hermitian part of `m` is read (upper triangle and real diagonal).
HermitianEigen2 eigen_hermitian2(const Eigen::Matrix2cd &m);

/// Largest entrywise modulus of `m^dagger m - 1`.
double unitarity_residual(const ComplexMatrix &m);

/// Largest entrywise modulus of `m - m^dagger`.
double hermiticity_residual(const ComplexMatrix &m);

/// True iff `a = e^{i phi} b` entrywise within `tol` for some real phi.
bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

}  // namespace nlc

#endif
