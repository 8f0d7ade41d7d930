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

#include "nlcnot/analysis.h"

#include <algorithm>
#include <cmath>

#include "nlcnot/error.h"

namespace nlc {

OutcomeDistribution outcome_distribution(double a, double b, const ChannelSpec &spec) {
    if (std::abs(a * a + b * b - 1) > 1e-9) {
        throw Error(ErrorCode::NotNormalized, "control amplitudes must satisfy a^2 + b^2 = 1");
    }
    double al = spec.alpha();
    double be = spec.beta();
    return OutcomeDistribution{(a * al) * (a * al) + (b * be) * (b * be), (a * be) * (a * be) + (b * al) * (b * al)};
}

double joint_success_probability(const ChannelSpec &spec, CorrectorKind kind) {
    if (spec.is_perfect()) {
        return 0.5;
    }
    double b2 = spec.beta() * spec.beta();
    if (kind == CorrectorKind::Orthogonal) {
        return spec.alpha() * spec.alpha() * b2;
    }
    return b2;
}

double exact_success_probability(const ChannelSpec &spec, CorrectorKind kind) {
    if (spec.is_perfect()) {
        return 1.0;
    }
    return 2 * joint_success_probability(spec, kind);
}

std::optional<double> conditional_success_probability(
    double a, double b, const ChannelSpec &spec, CorrectorKind kind, int m) {
    OutcomeDistribution d = outcome_distribution(a, b, spec);
    double pm = m == 0 ? d.p0 : d.p1;
    if (pm < kNegligibleProbability) {
        return std::nullopt;
    }
    if (spec.is_perfect()) {
        return 1.0;
    }
    return joint_success_probability(spec, kind) / pm;
}

ValidationReport validate_povm(const PovmElement &success, const PovmElement &failure) {
    ValidationReport r{};
    Eigen::Matrix2cd sum = success.matrix() + failure.matrix() - Eigen::Matrix2cd::Identity();
    r.completeness_residual = sum.cwiseAbs().maxCoeff();
    HermitianEigen2 es = eigen_hermitian2(success.matrix());
    HermitianEigen2 ef = eigen_hermitian2(failure.matrix());
    r.min_eigen_success = es.low;
    r.max_eigen_success = es.high;
    r.min_eigen_failure = ef.low;
    r.max_eigen_failure = ef.high;

    bool positive = r.min_eigen_success >= -kIdentityTol && r.min_eigen_failure >= -kIdentityTol;
    bool bounded = r.max_eigen_success <= 1 + kIdentityTol;
    bool complete = r.completeness_residual <= kIdentityTol;
    r.is_physical = positive && bounded && complete;

    std::string notes;
    auto add = [&](const std::string &s) {
        notes += notes.empty() ? s : "; " + s;
    };
    if (!complete) {
        add("elements do not sum to the identity");
    }
    if (!bounded) {
        add("success element exceeds the identity (largest eigenvalue " + std::to_string(r.max_eigen_success) + ")");
    }
    if (r.min_eigen_failure < -kIdentityTol) {
        add("failure element has a negative eigenvalue (" + std::to_string(r.min_eigen_failure) + ")");
    }
    if (r.min_eigen_success < -kIdentityTol) {
        add("success element has a negative eigenvalue");
    }
    r.notes = notes.empty() ? "physical" : notes;
    return r;
}

ValidationReport validate_povm(const PovmPair &pair) {
    return validate_povm(pair.success, pair.failure);
}

double entanglement_entropy(const StateVector &state, std::span<const QubitLabel> left) {
    double h = 0;
    for (double s : schmidt_spectrum(state, left)) {
        double p = s * s;
        if (p > 0) {
            h -= p * std::log2(p);
        }
    }
    return std::max(0.0, h);
}

Stats summarize(std::uint64_t trials, std::uint64_t successes, double expected) {
    if (trials == 0) {
        throw Error(ErrorCode::InvalidInput, "at least one trial is required");
    }
    if (!(expected >= 0 && expected <= 1)) {
        throw Error(ErrorCode::InvalidInput, "expected rate must lie in [0, 1]");
    }
    Stats s{};
    s.trials = trials;
    s.successes = successes;
    s.rate = static_cast<double>(successes) / static_cast<double>(trials);
    s.expected = expected;
    s.sigma = std::sqrt(expected * (1 - expected) / static_cast<double>(trials));
    if (s.sigma > 0) {
        s.z_score = (s.rate - expected) / s.sigma;
        s.exact_match = s.rate == expected;
        s.suspicious = std::abs(*s.z_score) > kZScoreGate;
    } else {
        s.exact_match = s.rate == expected;
        s.suspicious = !s.exact_match;
    }
    return s;
}

Stats monte_carlo_summary(std::span<const RunResult> results, double expected) {
    std::uint64_t successes = static_cast<std::uint64_t>(
        std::count_if(results.begin(), results.end(), [](const RunResult &r) { return r.succeeded; }));
    return summarize(results.size(), successes, expected);
}

}  // namespace nlc
