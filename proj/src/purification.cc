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

#include "nlcnot/purification.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlc {

StateVector bell_pair_ab() {
    return StateVector({M_SQRT1_2, 0, 0, M_SQRT1_2}, {qubits::A, qubits::B});
}

PurificationReport purification_experiment(
    const ChannelSpec &channel,
    CorrectorKind corrector,
    std::uint64_t trials,
    std::uint64_t seed,
    const TraceSink &sink) {
    if (trials < 1) {
        throw Error(ErrorCode::InvalidInput, "at least one trial is required");
    }
    GateConfig config;
    config.control = QubitInput{M_SQRT1_2, M_SQRT1_2};
    config.target = QubitInput{1, 0};
    config.channel = channel;
    config.corrector = corrector;
    config.max_attempts = 1;

    const StateVector bell = bell_pair_ab();
    const QubitLabel left[] = {qubits::A};
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    PurificationReport report{channel, corrector, seed, exact_success_probability(channel, corrector), {}, nan, nan,
                              nan, nan, nan, 0, {}, {}};
    report.rows.reserve(trials);
    std::uint64_t successes = 0;
    double fid_sum = 0;
    double ent_sum = 0;
    for (std::uint64_t t = 0; t < trials; t++) {
        SeededDraws draws(seed, t);
        RunResult r = run_nonlocal_cnot(config, draws);
        TrialRow row{t, r.attempts, r.succeeded, r.es_outcome_bits, std::nullopt, std::nullopt};
        if (r.succeeded) {
            double f = fidelity(*r.final_state, bell);
            double h = entanglement_entropy(*r.final_state, left);
            row.fidelity = f;
            row.entropy = h;
            fid_sum += f;
            ent_sum += h;
            if (successes == 0) {
                report.min_fidelity = f;
                report.min_entropy = h;
                report.max_entropy = h;
            } else {
                report.min_fidelity = std::min(report.min_fidelity, f);
                report.min_entropy = std::min(report.min_entropy, h);
                report.max_entropy = std::max(report.max_entropy, h);
            }
            successes++;
        }
        report.cross_party_gate_events += count_cross_party_gates(r.trace);
        report.ledger += r.ledger;
        if (sink) {
            sink(t, r.trace);
        }
        report.rows.push_back(std::move(row));
    }
    report.stats = summarize(trials, successes, report.expected_rate);
    if (successes > 0) {
        report.mean_fidelity = fid_sum / static_cast<double>(successes);
        report.mean_entropy = ent_sum / static_cast<double>(successes);
    }
    return report;
}

MonteCarloReport monte_carlo_experiment(
    const GateConfig &config, std::uint64_t trials, std::uint64_t seed, const TraceSink &sink) {
    if (trials < 1) {
        throw Error(ErrorCode::InvalidInput, "at least one trial is required");
    }
    double p = exact_success_probability(config.channel, config.corrector);
    double expected = 1 - std::pow(1 - p, static_cast<double>(config.max_attempts));
    MonteCarloReport report{config, seed, expected, {}, 0, std::numeric_limits<double>::quiet_NaN(), 0, {}, {}};
    report.rows.reserve(trials);
    const StateVector wanted = direct_cnot(config.control, config.target);
    std::uint64_t successes = 0;
    std::uint64_t attempts = 0;
    for (std::uint64_t t = 0; t < trials; t++) {
        SeededDraws draws(seed, t);
        RunResult r = run_nonlocal_cnot(config, draws);
        TrialRow row{t, r.attempts, r.succeeded, r.es_outcome_bits, std::nullopt, std::nullopt};
        attempts += r.attempts;
        if (r.succeeded) {
            double f = fidelity(*r.final_state, wanted);
            row.fidelity = f;
            report.min_fidelity = successes == 0 ? f : std::min(report.min_fidelity, f);
            successes++;
        }
        report.cross_party_gate_events += count_cross_party_gates(r.trace);
        report.ledger += r.ledger;
        if (sink) {
            sink(t, r.trace);
        }
        report.rows.push_back(std::move(row));
    }
    report.stats = summarize(trials, successes, expected);
    report.mean_attempts = static_cast<double>(attempts) / static_cast<double>(trials);
    return report;
}

}  // namespace nlc
