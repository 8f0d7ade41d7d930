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

// Test-only reference computations. Everything here works on dense
// matrices built entry by entry, independent of the engine's in-place
// index arithmetic.

#ifndef NLCNOT_TESTS_ORACLE_H
#define NLCNOT_TESTS_ORACLE_H

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "nlcnot/linalg.h"
#include "nlcnot/state_vector.h"

namespace nlc::oracle {

inline Eigen::VectorXcd as_vector(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); i++) {
        v(static_cast<Eigen::Index>(i)) = s.amplitude(i);
    }
    return v;
}

/// Bit of qubit `pos` (0 = most significant) in an n-qubit index.
inline std::size_t bit_at(std::size_t index, std::size_t pos, std::size_t n) {
    return (index >> (n - 1 - pos)) & 1;
}

/// Full 2^n x 2^n operator of `g` acting on qubit positions `targets`
/// (first target most significant in g's basis).
inline ComplexMatrix embed(const ComplexMatrix &g, const std::vector<std::size_t> &targets, std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    ComplexMatrix full = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            bool rest_equal = true;
            for (std::size_t p = 0; p < n; p++) {
                bool is_target = false;
                for (auto t : targets) {
                    is_target |= t == p;
                }
                if (!is_target && bit_at(i, p, n) != bit_at(j, p, n)) {
                    rest_equal = false;
                }
            }
            if (!rest_equal) {
                continue;
            }
            std::size_t gi = 0;
            std::size_t gj = 0;
            for (auto t : targets) {
                gi = (gi << 1) | bit_at(i, t, n);
                gj = (gj << 1) | bit_at(j, t, n);
            }
            full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                g(static_cast<Eigen::Index>(gi), static_cast<Eigen::Index>(gj));
        }
    }
    return full;
}

/// <psi| (1 (x) E on `pos`) |psi> by dense contraction.
inline double expectation(const StateVector &s, const Eigen::Matrix2cd &element, std::size_t pos) {
    ComplexMatrix e = element;
    Eigen::VectorXcd v = as_vector(s);
    ComplexMatrix full = embed(e, {pos}, s.qubit_count());
    return (v.adjoint() * full * v)(0, 0).real();
}

inline Amplitude random_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return Amplitude(g(rng), g(rng));
}

inline StateVector random_state(std::mt19937_64 &rng, std::vector<QubitLabel> labels) {
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    for (auto &a : amps) {
        a = random_complex(rng);
    }
    return StateVector(std::move(amps), std::move(labels));
}

/// Haar-ish random unitary from the QR decomposition of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64 &rng, int dim) {
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            m(i, j) = random_complex(rng);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

}  // namespace nlc::oracle

#endif
