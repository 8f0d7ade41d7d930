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

#include "nlcnot/linalg.h"

#include <random>

#include "gtest/gtest.h"

#include "nlcnot/gate.h"
#include "oracle.h"

using namespace nlc;

TEST(linalg, eigen_hermitian2_matches_iterative_solver) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 500; trial++) {
        Eigen::Matrix2cd m;
        double p = g(rng);
        double r = g(rng);
        Amplitude q(g(rng), g(rng));
        if (trial % 7 == 0) {
            q = 0;
        }
        m << p, q, std::conj(q), r;
        HermitianEigen2 closed = eigen_hermitian2(m);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> iterative(m);
        ASSERT_NEAR(closed.low, iterative.eigenvalues()(0), 1e-12);
        ASSERT_NEAR(closed.high, iterative.eigenvalues()(1), 1e-12);
        ASSERT_LT((m * closed.high_vector - closed.high * closed.high_vector).norm(), 1e-12);
        ASSERT_LT((m * closed.low_vector - closed.low * closed.low_vector).norm(), 1e-12);
        ASSERT_NEAR(closed.high_vector.norm(), 1, 1e-12);
        ASSERT_LT(std::abs(closed.high_vector.dot(closed.low_vector)), 1e-12);
    }
}

TEST(linalg, eigen_hermitian2_degenerate) {
    HermitianEigen2 e = eigen_hermitian2(Eigen::Matrix2cd::Identity() * 3.0);
    ASSERT_EQ(e.low, 3);
    ASSERT_EQ(e.high, 3);
}

TEST(linalg, equal_up_to_phase) {
    ComplexMatrix z = gates::pauli_z().matrix();
    ComplexMatrix x = gates::pauli_x().matrix();
    ASSERT_TRUE(equal_up_to_phase(z, -z, 1e-12));
    ASSERT_TRUE(equal_up_to_phase(z, std::polar(1.0, 0.3) * z, 1e-12));
    ASSERT_FALSE(equal_up_to_phase(z, x, 1e-12));
    ASSERT_FALSE(equal_up_to_phase(z, 2.0 * z, 1e-12));
    ASSERT_FALSE(equal_up_to_phase(z, gates::cnot().matrix(), 1e-12));
}

TEST(linalg, unitarity_residual) {
    ASSERT_LT(unitarity_residual(gates::hadamard().matrix()), 1e-15);
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 1) = 1;
    ASSERT_NEAR(unitarity_residual(m), 1, 1e-15);
}
