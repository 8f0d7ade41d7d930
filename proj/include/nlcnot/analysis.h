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

#ifndef NLCNOT_ANALYSIS_H
#define NLCNOT_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "nlcnot/channel.h"
#include "nlcnot/corrector.h"
#include "nlcnot/protocol.h"

namespace nlc {

struct OutcomeDistribution {
    double p0;
    double p1;
};

/// ES outcome probabilities p0 = (a alpha)^2 + (b beta)^2 and
/// p1 = (a beta)^2 + (b alpha)^2. Throws NotNormalized unless
/// a^2 + b^2 = 1 within 1e-9.
OutcomeDistribution outcome_distribution(double a, double b, const ChannelSpec &spec);

/// Overall single-attempt success: 2 beta^2 (CUO, POVM) or
/// 2 alpha^2 beta^2 (orthogonal).
double exact_success_probability(const ChannelSpec &spec, CorrectorKind kind);

/// Joint probability of ES outcome m and corrector success. It does not
/// depend on the control amplitudes: beta^2, or alpha^2 beta^2 for the
/// orthogonal corrector.
double joint_success_probability(const ChannelSpec &spec, CorrectorKind kind);

/// joint / p_m; empty when p_m < 1e-14 (outcome unreachable).
std::optional<double> conditional_success_probability(
    double a, double b, const ChannelSpec &spec, CorrectorKind kind, int m);

struct ValidationReport {
    double completeness_residual;
    double min_eigen_success;
    double max_eigen_success;
    double min_eigen_failure;
    double max_eigen_failure;
    bool is_physical;
    std::string notes;
};

/// Eigenvalues of both elements (closed form) and |S + F - 1|. Physical
/// means both elements are positive semidefinite, S <= 1 and the pair is
/// complete, all within 1e-12.
ValidationReport validate_povm(const PovmElement &success, const PovmElement &failure);
ValidationReport validate_povm(const PovmPair &pair);

/// Von Neumann entropy in bits of the reduced state of `left`.
double entanglement_entropy(const StateVector &state, std::span<const QubitLabel> left);

struct Stats {
    std::uint64_t trials;
    std::uint64_t successes;
    double rate;
    double expected;
    double sigma;
    /// Empty when sigma is zero; the rate is then either an exact match or not.
    std::optional<double> z_score;
    bool exact_match;
    /// |z| > 4, or sigma = 0 and the rate differs from the expectation.
    bool suspicious;
};

Stats summarize(std::uint64_t trials, std::uint64_t successes, double expected);
Stats monte_carlo_summary(std::span<const RunResult> results, double expected);

/// Statistical gate used by the Monte Carlo checks.
inline constexpr double kZScoreGate = 4.0;

}  // namespace nlc

#endif
