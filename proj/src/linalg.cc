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

#include <cmath>

namespace nlc {

HermitianEigen2 eigen_hermitian2(const Eigen::Matrix2cd &m) {
    double p = m(0, 0).real();
    double r = m(1, 1).real();
    Amplitude q = m(0, 1);

    double mean = 0.5 * (p + r);
    double disc = std::hypot(0.5 * (p - r), std::abs(q));
    HermitianEigen2 out;
    out.low = mean - disc;
    out.high = mean + disc;

    if (disc == 0) {
        out.high_vector = Eigen::Vector2cd(1, 0);
        out.low_vector = Eigen::Vector2cd(0, 1);
        return out;
    }

    // Both (q, high - p) and (high - r, conj q) solve the eigen-equation;
    // take whichever is better conditioned.
    Eigen::Vector2cd v1(q, out.high - p);
    Eigen::Vector2cd v2(out.high - r, std::conj(q));
    Eigen::Vector2cd v = v1.norm() >= v2.norm() ? v1 : v2;
    v.normalize();
    out.high_vector = v;
    out.low_vector = Eigen::Vector2cd(-std::conj(v(1)), std::conj(v(0)));
    return out;
}

double unitarity_residual(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    ComplexMatrix d = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    ComplexMatrix d = m - m.adjoint();
    return d.cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    // Best phase in the least-squares sense is arg(<b, a>).
    Amplitude overlap = (b.conjugate().cwiseProduct(a)).sum();
    if (std::abs(overlap) == 0) {
        return a.cwiseAbs().maxCoeff() <= tol && b.cwiseAbs().maxCoeff() <= tol;
    }
    Amplitude phase = overlap / std::abs(overlap);
    return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace nlc
